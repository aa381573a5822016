#include "transguard/collapse.h"

#include <algorithm>
#include <unordered_map>

#include "transguard/parser.h"

namespace transguard {

std::string_view to_string(CollapseClass cls) {
  switch (cls) {
    case CollapseClass::kImportSpam: return "ImportSpam";
    case CollapseClass::kNumberSpam: return "NumberSpam";
    case CollapseClass::kCommaSpam: return "CommaSpam";
    case CollapseClass::kSpacetokenSpam: return "SpacetokenSpam";
    case CollapseClass::kStructural: return "Structural";
  }
  return "?";
}

std::string CollapseVerdict::summary() const {
  if (classes.empty()) return "clean";
  std::string out;
  for (auto cls : classes) {
    if (!out.empty()) out += ",";
    out += to_string(cls);
  }
  return out;
}

namespace {

constexpr std::string_view kSpacetoken = "SPACETOKEN";

// Token lines split at newlines in the source (markers carry no bytes, so
// line numbers come from the text itself).
std::vector<TokenRun> token_lines(const TokenRun& tokens, std::string_view text) {
  std::vector<TokenRun> lines;
  std::size_t line_start = 0;
  std::size_t line_end = text.find('\n');
  TokenRun current;
  for (const auto& t : tokens) {
    if (t.is_marker() || t.is_comment()) continue;
    while (line_end != std::string_view::npos && t.span.begin > line_end) {
      if (!current.empty()) lines.push_back(std::move(current));
      current.clear();
      line_start = line_end + 1;
      line_end = text.find('\n', line_start);
    }
    current.push_back(t);
  }
  if (!current.empty()) lines.push_back(std::move(current));
  return lines;
}

bool is_import_line(const TokenRun& line) { return !line.empty() && (line[0].is("import") || line[0].is("from")); }

// Dotted module names of an import line, aliases dropped.
std::vector<std::string> import_entries(const TokenRun& line) {
  std::vector<std::string> entries;
  std::string current;
  bool alias = false;
  for (std::size_t i = 1; i < line.size(); ++i) {
    const Token& t = line[i];
    if (t.is(",") || t.is(";") || t.is("import")) {
      if (!current.empty()) entries.push_back(current);
      current.clear();
      alias = false;
      continue;
    }
    if (t.is("as")) {
      alias = true;
      continue;
    }
    if (alias) continue;
    current += t.text;
  }
  if (!current.empty()) entries.push_back(current);
  return entries;
}

bool is_comma_piece(const Token& t) {
  if (t.is(",")) return true;
  if (t.kind != TokenKind::kString) return false;
  return t.text.find_first_not_of(",'\" ") == std::string::npos;
}

bool is_single_digit(const std::string& text) { return text.size() == 1 && text[0] >= '0' && text[0] <= '9'; }

// A line made only of spam material; excluded from the import-ratio
// denominator so that appended spam can't dilute the ratio.
bool is_spam_line(const TokenRun& line) {
  for (const auto& t : line) {
    bool spam = t.kind == TokenKind::kNumber || is_comma_piece(t) || t.is("-") || t.is("[") || t.is("]") ||
                t.is(".") || t.is("...") || (t.is_identifier() && t.text == kSpacetoken);
    if (!spam) return false;
  }
  return true;
}

void check_imports(const std::vector<TokenRun>& lines, const CollapseThresholds& th, CollapseVerdict& v) {
  std::size_t i = 0;
  while (i < lines.size()) {
    if (!is_import_line(lines[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    std::vector<std::string> entries;
    while (j < lines.size() && is_import_line(lines[j])) {
      auto e = import_entries(lines[j]);
      entries.insert(entries.end(), e.begin(), e.end());
      ++j;
    }
    std::vector<std::string> sorted = entries;
    std::sort(sorted.begin(), sorted.end());
    bool repeated = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    if (static_cast<int>(entries.size()) >= th.import_run && repeated) {
      v.classes.insert(CollapseClass::kImportSpam);
      v.evidence.push_back({CollapseClass::kImportSpam,
                            Span{lines[i].front().span.begin, lines[j - 1].back().span.end},
                            static_cast<int>(entries.size()), "consecutive import entries with repeats"});
      return;
    }
    i = j;
  }
  int imports = 0;
  int denominator = 0;
  for (const auto& line : lines) {
    if (is_import_line(line)) {
      ++imports;
      ++denominator;
    } else if (!is_spam_line(line)) {
      ++denominator;
    }
  }
  if (imports > 0 && denominator > 0 && static_cast<double>(imports) / denominator > th.import_ratio) {
    v.classes.insert(CollapseClass::kImportSpam);
    v.evidence.push_back({CollapseClass::kImportSpam, Span{}, imports,
                          std::to_string(imports) + " of " + std::to_string(denominator) + " lines are imports"});
  }
}

bool repetitive_window(const std::vector<std::string>& values, const CollapseThresholds& th, std::size_t& at,
                       std::size_t& length) {
  std::size_t n = values.size();
  std::size_t min_len = static_cast<std::size_t>(th.number_run);
  for (std::size_t i = 0; i + min_len <= n; ++i) {
    std::unordered_map<std::string, int> seen;
    bool all_single = true;
    for (std::size_t j = i; j < n; ++j) {
      ++seen[values[j]];
      all_single &= is_single_digit(values[j]);
      std::size_t len = j - i + 1;
      if (len < min_len) continue;
      double repeats = static_cast<double>(len - seen.size()) / static_cast<double>(len);
      if (all_single || repeats >= th.number_repeat) {
        at = i;
        length = len;
        return true;
      }
      if (!all_single && seen.size() * 4 > n) break;  // repeats can only recover by extending far
    }
  }
  return false;
}

void check_numbers(const TokenRun& toks, const CollapseThresholds& th, CollapseVerdict& v) {
  std::size_t i = 0;
  while (i < toks.size()) {
    // Parse a run: [-] NUM ( , [-] NUM )*
    std::vector<std::string> values;
    std::vector<Span> spans;
    std::size_t k = i;
    while (k < toks.size()) {
      std::size_t m = k;
      std::string value;
      if (toks[m].is("-") && m + 1 < toks.size() && toks[m + 1].kind == TokenKind::kNumber) {
        value = "-";
        ++m;
      }
      if (m >= toks.size() || toks[m].kind != TokenKind::kNumber) break;
      value += toks[m].text;
      values.push_back(value);
      spans.push_back(Span{toks[k].span.begin, toks[m].span.end});
      k = m + 1;
      if (k < toks.size() && toks[k].is(",")) {
        ++k;
      } else {
        break;
      }
    }
    if (static_cast<int>(values.size()) >= th.number_run) {
      std::size_t at = 0;
      std::size_t length = 0;
      if (repetitive_window(values, th, at, length)) {
        v.classes.insert(CollapseClass::kNumberSpam);
        v.evidence.push_back({CollapseClass::kNumberSpam, Span{spans[at].begin, spans[at + length - 1].end},
                              static_cast<int>(length), "repetitive comma-separated numbers"});
        return;
      }
    }
    i = values.empty() ? i + 1 : k;
  }
}

void check_commas(const TokenRun& toks, const CollapseThresholds& th, CollapseVerdict& v) {
  int run = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (is_comma_piece(toks[i])) {
      if (run == 0) start = toks[i].span.begin;
      if (++run >= th.comma_run) {
        std::size_t j = i;
        while (j + 1 < toks.size() && is_comma_piece(toks[j + 1])) ++j;
        v.classes.insert(CollapseClass::kCommaSpam);
        v.evidence.push_back({CollapseClass::kCommaSpam, Span{start, toks[j].span.end},
                              run + static_cast<int>(j - i), "consecutive comma tokens"});
        return;
      }
    } else {
      run = 0;
    }
  }
}

void check_spacetoken(const TokenRun& toks, const CollapseThresholds& th, CollapseVerdict& v) {
  int count = 0;
  Span span;
  for (const auto& t : toks) {
    if (!t.is_identifier() || t.text != kSpacetoken) continue;
    if (count == 0) span.begin = t.span.begin;
    span.end = t.span.end;
    ++count;
  }
  if (count >= th.spacetoken_count) {
    v.classes.insert(CollapseClass::kSpacetokenSpam);
    v.evidence.push_back({CollapseClass::kSpacetokenSpam, span, count, "SPACETOKEN occurrences"});
  }
}

void check_structure(std::string_view text, Language language, const MethodUnit& original, CollapseVerdict& v) {
  std::size_t functions = 0;
  try {
    SyntaxUnit unit = parse_source(text, language, ParseOptions{.lenient = true});
    for (const auto* m : unit.methods()) {
      ++functions;
      if (m->name == original.name || m->params.size() == original.params.size()) return;
    }
  } catch (const Error&) {
  }
  v.classes.insert(CollapseClass::kStructural);
  v.evidence.push_back({CollapseClass::kStructural, Span{0, text.size()}, static_cast<int>(functions),
                        "no function resembling " + original.name});
}

}  // namespace

CollapseVerdict classify(std::string_view text, Language language, const MethodUnit* original,
                         const CollapseThresholds& thresholds) {
  CollapseVerdict verdict;
  TokenRun tokens;
  try {
    tokens = tokenize(text, language, LexOptions{.lenient = true});
  } catch (const Error&) {
  }
  TokenRun flat;
  for (const auto& t : tokens) {
    if (!t.is_marker() && !t.is_comment()) flat.push_back(t);
  }
  check_imports(token_lines(tokens, text), thresholds, verdict);
  check_numbers(flat, thresholds, verdict);
  check_commas(flat, thresholds, verdict);
  check_spacetoken(flat, thresholds, verdict);
  if (original) check_structure(text, language, *original, verdict);
  return verdict;
}

}  // namespace transguard
