#include "transguard/post_rules.h"

#include <algorithm>
#include <functional>

#include "transguard/parser.h"

namespace transguard {

std::string_view to_string(PruneMode mode) { return mode == PruneMode::kCount ? "count" : "match"; }

PruneMode prune_mode_from_string(std::string_view text) {
  if (text == "count") return PruneMode::kCount;
  if (text == "match") return PruneMode::kMatch;
  throw Error(ErrorKind::kConfig, "prune mode must be count or match, got '" + std::string(text) + "'");
}

namespace {

struct CondSite {
  const CondChain* chain;
  StmtKind kind;
};

void collect(const Block& block, std::vector<CondSite>& out);

void collect(const Stmt& s, std::vector<CondSite>& out) {
  switch (s.kind) {
    case StmtKind::kIf:
      out.push_back({&s.cond, s.kind});
      collect(s.body, out);
      if (s.else_body) collect(*s.else_body, out);
      break;
    case StmtKind::kWhile:
      out.push_back({&s.cond, s.kind});
      collect(s.body, out);
      break;
    case StmtKind::kFor:
    case StmtKind::kBlock:
      collect(s.body, out);
      break;
    default:
      break;
  }
}

void collect(const Block& block, std::vector<CondSite>& out) {
  for (const auto& s : block.stmts) collect(s, out);
}

std::string note_prefix(const CondPair& pair) {
  return std::string(to_string(pair.dst_kind)) + " (" + std::to_string(pair.src.count()) + " -> " +
         std::to_string(pair.dst.count()) + " clauses)";
}

const MethodUnit* pick_dst(const SyntaxUnit& unit, std::string_view name) {
  auto named = unit.methods_named(name);
  if (!named.empty()) return named[0];
  auto all = unit.methods();
  return all.empty() ? nullptr : all[0];
}

}  // namespace

CondAlignment align_conditionals(const MethodUnit& src, const MethodUnit& dst) {
  std::vector<CondSite> a;
  std::vector<CondSite> b;
  collect(src.body, a);
  collect(dst.body, b);
  CondAlignment alignment;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    alignment.pairs.push_back(CondPair{*a[i].chain, *b[i].chain, a[i].kind, b[i].kind});
  }
  alignment.unmatched_src = a.size() - n;
  alignment.unmatched_dst = b.size() - n;
  return alignment;
}

std::string normalize_clause(const TokenRun& clause, bool map_python) {
  std::string out;
  for (const auto& t : clause) {
    if (t.is_comment() || t.is_marker() || t.is("(") || t.is(")")) continue;
    std::string text = t.text;
    if (map_python && t.kind != TokenKind::kString) {
      if (text == "and") text = "&&";
      else if (text == "or") text = "||";
      else if (text == "not") text = "!";
      else if (text == "True") text = "true";
      else if (text == "False") text = "false";
      else if (text == "None") text = "null";
    }
    out += text;
  }
  return out;
}

PruneOutcome prune_extra_clauses(const CondPair& pair, const PrunePolicy& policy) {
  PruneOutcome outcome;
  outcome.chain = pair.dst;
  outcome.record.rule = RuleId::kR4Prune;
  for (std::size_t i = 0; i < pair.dst.count(); ++i) outcome.kept.push_back(i);
  std::size_t n = pair.src.count();
  std::size_t m = pair.dst.count();

  if (!pair.kind_match()) {
    outcome.record.notes = "kind mismatch: " + std::string(to_string(pair.src_kind)) + " vs " +
                           std::string(to_string(pair.dst_kind)) + ", not pruned";
    return outcome;
  }
  if (m <= n) {
    outcome.record.notes = note_prefix(pair) + ": nothing extra";
    return outcome;
  }
  if (pair.src.op != LogicalOp::kSingle && pair.src.op != pair.dst.op) {
    outcome.record.notes = note_prefix(pair) + ": operator mismatch, not pruned";
    return outcome;
  }
  outcome.record.applicable = true;

  std::vector<std::size_t> kept;
  if (policy.mode == PruneMode::kCount) {
    for (std::size_t i = 0; i < n; ++i) kept.push_back(i);
  } else {
    std::vector<std::string> pool;
    for (const auto& c : pair.src.clauses) pool.push_back(normalize_clause(c, policy.normalize));
    for (std::size_t i = 0; i < m; ++i) {
      auto it = std::find(pool.begin(), pool.end(), normalize_clause(pair.dst.clauses[i], policy.normalize));
      if (it == pool.end()) continue;
      pool.erase(it);
      kept.push_back(i);
    }
    if (kept.empty()) {
      outcome.record.notes = note_prefix(pair) + ": warning: no translated clause matches the source, not pruned";
      return outcome;
    }
  }

  outcome.kept = kept;
  outcome.chain.clauses.clear();
  for (std::size_t i : kept) outcome.chain.clauses.push_back(pair.dst.clauses[i]);
  if (outcome.chain.count() == 1) outcome.chain.op = LogicalOp::kSingle;
  outcome.record.applied = kept.size() < m;
  outcome.record.notes = note_prefix(pair) + ": kept " + std::to_string(kept.size());
  return outcome;
}

PostResult apply_post(std::string_view src_text, std::string_view dst_text, Direction direction,
                      const PrunePolicy& policy, std::string_view focal) {
  PostResult result;
  result.text = std::string(dst_text);
  MutationRecord record;
  record.rule = RuleId::kR4Prune;
  if (direction != Direction::kP2J) {
    record.notes = "not used for " + std::string(to_string(direction));
    result.records.push_back(record);
    return result;
  }

  SyntaxUnit src_unit = parse_source(src_text, source_language(direction));
  const MethodUnit* src = pick_dst(src_unit, focal);
  if (!src) {
    record.notes = "no method in source";
    result.records.push_back(record);
    return result;
  }

  std::optional<SyntaxUnit> dst_unit;
  try {
    dst_unit = parse_source(dst_text, target_language(direction), ParseOptions{.lenient = true});
  } catch (const Error& e) {
    record.notes = std::string("unparseable translation: ") + e.what();
    result.records.push_back(record);
    return result;
  }
  const MethodUnit* dst = pick_dst(*dst_unit, src->name);
  if (!dst) {
    record.notes = "unparseable translation: no method found";
    result.records.push_back(record);
    return result;
  }

  CondAlignment alignment = align_conditionals(*src, *dst);
  struct Edit {
    Span span;
    std::string text;
  };
  std::vector<Edit> edits;
  std::vector<std::string> notes;
  for (const auto& pair : alignment.pairs) {
    PruneOutcome outcome = prune_extra_clauses(pair, policy);
    record.applicable |= outcome.record.applicable;
    if (outcome.record.applicable) notes.push_back(outcome.record.notes);
    if (!outcome.record.applied) continue;
    const CondChain& chain = pair.dst;
    Span first = covering_span(chain.clauses.front());
    Span last = covering_span(chain.clauses.back());
    // Each kept clause brings the separator written before it, so a kept
    // prefix is a byte prefix of the original chain.
    auto sep_before = [&](std::size_t i) {
      std::size_t from = covering_span(chain.clauses[i - 1]).end;
      return std::string(dst_text.substr(from, covering_span(chain.clauses[i]).begin - from));
    };
    std::string joined;
    for (std::size_t k = 0; k < outcome.kept.size(); ++k) {
      std::size_t i = outcome.kept[k];
      Span s = covering_span(chain.clauses[i]);
      if (k > 0) joined += sep_before(i);
      joined += std::string(dst_text.substr(s.begin, s.size()));
    }
    edits.push_back(Edit{Span{first.begin, last.end}, joined});
  }
  std::sort(edits.begin(), edits.end(), [](const Edit& a, const Edit& b) { return a.span.begin > b.span.begin; });
  for (const auto& e : edits) result.text.replace(e.span.begin, e.span.size(), e.text);

  record.applied = !edits.empty();
  if (alignment.unmatched_src || alignment.unmatched_dst) {
    notes.push_back("unmatched conditionals: " + std::to_string(alignment.unmatched_src) + " source, " +
                    std::to_string(alignment.unmatched_dst) + " translation");
  }
  if (notes.empty()) notes.push_back(std::to_string(alignment.pairs.size()) + " aligned condition(s), nothing extra");
  for (std::size_t i = 0; i < notes.size(); ++i) record.notes += (i ? "; " : "") + notes[i];
  if (record.applied) set_diff_spans(record, dst_text, result.text);
  result.records.push_back(record);
  return result;
}

}  // namespace transguard
