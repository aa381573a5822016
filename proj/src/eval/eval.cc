#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "transguard/eval.h"
#include "transguard/parser.h"

namespace transguard {

namespace {

using nlohmann::json;

const MethodUnit* pick(const SyntaxUnit& unit, std::string_view name) {
  auto named = unit.methods_named(name);
  if (!named.empty()) return named[0];
  auto all = unit.methods();
  return all.empty() ? nullptr : all[0];
}

bool has_extra_clauses(const MethodUnit& src, const MethodUnit& dst) {
  CondAlignment alignment = align_conditionals(src, dst);
  for (const auto& pair : alignment.pairs) {
    if (prune_extra_clauses(pair, PrunePolicy{}).record.applicable) return true;
  }
  return false;
}

bool any_applicable(const PipelineResult& result) {
  return std::any_of(result.records.begin(), result.records.end(),
                     [](const MutationRecord& r) { return r.applicable; });
}

Outcome judge_ranks(Rank before, Rank after, bool applicable) {
  if (!applicable) return Outcome::kNotApplicable;
  return static_cast<int>(after) < static_cast<int>(before) ? Outcome::kSuccess : Outcome::kFail;
}

std::optional<std::string> read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::set<Category> derive_categories(const PipelineResult& after, Rank before_rank) {
  std::set<Category> out;
  for (const auto& r : after.records) {
    if (!r.applicable) continue;
    switch (r.rule) {
      case RuleId::kR1Context: out.insert(Category::kAdditionalContext); break;
      case RuleId::kR2Loop: out.insert(Category::kLoopConversion); break;
      case RuleId::kR3aArrayList:
      case RuleId::kR3bArrRename: out.insert(Category::kTypeSensitivity); break;
      case RuleId::kR4Prune: out.insert(Category::kExtraConstraints); break;
    }
  }
  if (out.empty()) out.insert(before_rank == Rank::kOk ? Category::kMostlyCorrect : Category::kMiscellaneous);
  return out;
}

CaseRow evaluate(const CorpusCase& c, Direction direction, const PipelineConfig& base, const Translator& translator,
                 const Checker& checker) {
  CaseRow row;
  row.id = c.id;
  auto label = c.labels.find(direction);
  row.labeled = label != c.labels.end();
  auto categories = [&](std::set<Category> derived) { return row.labeled ? label->second : derived; };

  auto text = read_text(*c.source_path(direction));
  if (!text) {
    row.error = "unreadable source";
    row.outcome = Outcome::kCheckerError;
    row.categories = categories({Category::kMiscellaneous});
    return row;
  }
  PipelineConfig config = base;
  config.pre.direction = direction;
  config.pre.focal = c.focal;
  PipelineConfig vanilla = config;
  vanilla.pre.rules.clear();
  try {
    PipelineResult before = run_pipeline(*text, vanilla, translator);
    PipelineResult after = run_pipeline(*text, config, translator);
    row.before_verdict = before.translator_failed ? "translator_failure" : before.verdict.summary();
    row.after_verdict = after.translator_failed ? "translator_failure" : after.verdict.summary();
    for (const auto& r : after.records) {
      if (r.applicable) row.applicable_rules.insert(r.rule);
    }
    Rank before_rank = checker.rank(before, c.focal);
    Rank after_rank = checker.rank(after, c.focal);
    row.before_rank = static_cast<int>(before_rank);
    row.after_rank = static_cast<int>(after_rank);
    row.outcome = judge_ranks(before_rank, after_rank, any_applicable(after));
    row.categories = categories(derive_categories(after, before_rank));
    if (after.translator_failed) row.error = after.failure;
  } catch (const Error& e) {
    row.error = e.what();
    row.outcome = Outcome::kCheckerError;
    row.applicable_rules.clear();
    row.categories = categories({Category::kMiscellaneous});
  }
  return row;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string format_rate(const std::optional<double>& rate) {
  if (!rate) return "n/a";
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(2) << *rate;
  return ss.str();
}

}  // namespace

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kNotApplicable: return "not_applicable";
    case Outcome::kSuccess: return "success";
    case Outcome::kFail: return "fail";
    case Outcome::kCheckerError: return "checker_error";
  }
  return "?";
}

Rank DefaultChecker::rank(const PipelineResult& result, std::string_view focal) const {
  if (result.translator_failed || !result.output()) return Rank::kTranslatorFailure;
  if (!result.verdict.clean()) return Rank::kBroken;
  const std::string& text = *result.output();
  std::optional<SyntaxUnit> dst_unit;
  try {
    dst_unit = parse_source(text, target_language(result.direction));
  } catch (const Error&) {
    return Rank::kBroken;
  }
  SyntaxUnit src_unit = parse_source(*result.preprocessed, source_language(result.direction),
                                     ParseOptions{.lenient = true});
  const MethodUnit* src = pick(src_unit, focal);
  const MethodUnit* dst = src ? pick(*dst_unit, src->name) : nullptr;
  if (!src || !dst) return Rank::kBroken;
  return has_extra_clauses(*src, *dst) ? Rank::kExtraClauses : Rank::kOk;
}

ExternalChecker::ExternalChecker(std::string compile_cmd, std::string run_cmd, double timeout_s)
    : compile_cmd_(std::move(compile_cmd)), run_cmd_(std::move(run_cmd)), timeout_s_(timeout_s) {}

Rank ExternalChecker::rank(const PipelineResult& result, std::string_view focal) const {
  Rank base = DefaultChecker().rank(result, focal);
  if (base == Rank::kTranslatorFailure || !result.verdict.clean()) return base;
  const std::string& text = *result.output();
  auto run = [&](const std::string& cmd, Language language, const std::string& input) {
    CommandResult r = run_command(cmd, {std::string(to_string(language))}, input, timeout_s_);
    if (r.timed_out) throw Error(ErrorKind::kTranslatorFailure, "checker timed out: " + cmd);
    return r;
  };
  // The compile command replaces the internal parse as the validity test.
  Rank rank = base;
  if (!compile_cmd_.empty()) {
    if (run(compile_cmd_, target_language(result.direction), text).exit_code != 0) return Rank::kBroken;
    rank = base == Rank::kExtraClauses ? Rank::kExtraClauses : Rank::kOk;
  }
  if (rank == Rank::kBroken || run_cmd_.empty()) return rank;
  CommandResult want = run(run_cmd_, source_language(result.direction), result.input);
  if (want.exit_code != 0) throw Error(ErrorKind::kTranslatorFailure, "run command failed on the source");
  CommandResult got = run(run_cmd_, target_language(result.direction), text);
  return got.exit_code == 0 && got.out == want.out ? Rank::kOk : Rank::kExtraClauses;
}

Outcome judge_success(const PipelineResult& before, const PipelineResult& after, const Checker& checker,
                      std::string_view focal) {
  try {
    return judge_ranks(checker.rank(before, focal), checker.rank(after, focal), any_applicable(after));
  } catch (const Error&) {
    return Outcome::kCheckerError;
  }
}

int default_workers() {
  if (const char* env = std::getenv("TRANSGUARD_WORKERS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<int>(std::min(n, 256L));
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

EvalReport run_eval(const std::vector<CorpusCase>& cases, const PipelineConfig& config, const Translator& translator,
                    const EvalOptions& options) {
  DefaultChecker default_checker;
  const Checker& checker = options.checker ? *options.checker : default_checker;

  struct Job {
    std::size_t dir;
    const CorpusCase* c;
  };
  std::vector<Job> jobs;
  EvalReport report;
  for (std::size_t d = 0; d < options.directions.size(); ++d) {
    DirectionReport dr;
    dr.direction = options.directions[d];
    report.directions.push_back(dr);
    for (const auto& c : cases) {
      if (c.source_path(dr.direction)) jobs.push_back({d, &c});
    }
  }

  std::vector<CaseRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      rows[i] = evaluate(*jobs[i].c, report.directions[jobs[i].dir].direction, config, translator, checker);
    }
  };
  int workers = options.workers > 0 ? options.workers : default_workers();
  workers = std::max(1, std::min<int>(workers, static_cast<int>(jobs.size())));
  std::vector<std::thread> threads;
  for (int w = 1; w < workers; ++w) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();

  for (std::size_t i = 0; i < jobs.size(); ++i) report.directions[jobs[i].dir].case_rows.push_back(std::move(rows[i]));
  for (auto& dr : report.directions) {
    dr.cases = static_cast<int>(dr.case_rows.size());
    for (auto cat : all_categories()) {
      CategoryRow row{cat, 0, 0};
      for (const auto& r : dr.case_rows) row.count += r.categories.count(cat) ? 1 : 0;
      row.pct = dr.cases ? 100.0 * row.count / dr.cases : 0;
      dr.rows.push_back(row);
    }
    for (auto rule : all_rules()) {
      RuleRow row{rule, 0, 0, std::nullopt};
      for (const auto& r : dr.case_rows) {
        if (r.outcome == Outcome::kCheckerError || !r.applicable_rules.count(rule)) continue;
        ++row.applicable;
        if (r.outcome == Outcome::kSuccess) ++row.success;
      }
      if (row.applicable) row.rate = static_cast<double>(row.success) / row.applicable;
      dr.rules.push_back(row);
    }
  }
  return report;
}

std::string format_pct(double pct) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(2) << pct;
  std::string s = ss.str();
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

json to_json(const EvalReport& report) {
  json out = json::array();
  for (const auto& dr : report.directions) {
    json rows = json::array();
    for (const auto& r : dr.rows) {
      rows.push_back({{"category", std::string(to_string(r.category))},
                      {"label", std::string(display_name(r.category))},
                      {"count", r.count},
                      {"pct", r.pct}});
    }
    json rules = json::array();
    for (const auto& r : dr.rules) {
      rules.push_back({{"rule", std::string(to_string(r.rule))},
                       {"applicable", r.applicable},
                       {"success", r.success},
                       {"rate", r.rate ? json(*r.rate) : json("n/a")}});
    }
    json cases = json::array();
    for (const auto& c : dr.case_rows) {
      json cats = json::array();
      for (auto cat : c.categories) cats.push_back(std::string(to_string(cat)));
      json applicable = json::array();
      for (auto rule : c.applicable_rules) applicable.push_back(std::string(to_string(rule)));
      cases.push_back({{"id", c.id},
                       {"categories", cats},
                       {"labeled", c.labeled},
                       {"before_rank", c.before_rank ? json(*c.before_rank) : json(nullptr)},
                       {"after_rank", c.after_rank ? json(*c.after_rank) : json(nullptr)},
                       {"outcome", std::string(to_string(c.outcome))},
                       {"applicable_rules", applicable},
                       {"before_verdict", c.before_verdict},
                       {"after_verdict", c.after_verdict},
                       {"error", c.error}});
    }
    out.push_back({{"direction", std::string(to_string(dr.direction))},
                   {"cases_total", dr.cases},
                   {"rows", rows},
                   {"rules", rules},
                   {"cases", cases}});
  }
  return out;
}

std::string to_csv(const EvalReport& report) {
  std::ostringstream out;
  out << "direction,section,name,count,total,value\n";
  for (const auto& dr : report.directions) {
    std::string dir(to_string(dr.direction));
    for (const auto& r : dr.rows) {
      out << dir << ",category," << csv_field(std::string(display_name(r.category))) << "," << r.count << ","
          << dr.cases << "," << format_pct(r.pct) << "\n";
    }
    for (const auto& r : dr.rules) {
      out << dir << ",rule," << to_string(r.rule) << "," << r.success << "," << r.applicable << ","
          << format_rate(r.rate) << "\n";
    }
  }
  return out.str();
}

std::string to_markdown(const EvalReport& report) {
  std::ostringstream out;
  out << "| Error pattern |";
  for (const auto& dr : report.directions) out << " " << to_string(dr.direction) << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < report.directions.size(); ++i) out << "---:|";
  out << "\n";
  const auto& cats = all_categories();
  for (std::size_t k = 0; k < cats.size(); ++k) {
    std::string title(display_name(cats[k]));
    if (cats[k] != Category::kMostlyCorrect) title = std::to_string(k + 1) + ". " + title;
    out << "| " << title << " |";
    for (const auto& dr : report.directions) {
      const CategoryRow& r = dr.rows[k];
      out << " " << format_pct(r.pct) << "% (" << r.count << "/" << dr.cases << ") |";
    }
    out << "\n";
  }
  out << "\n| Rule | Direction | Applicable | Success | Rate |\n|---|---|---:|---:|---:|\n";
  for (const auto& dr : report.directions) {
    for (const auto& r : dr.rules) {
      out << "| " << to_string(r.rule) << " | " << to_string(dr.direction) << " | " << r.applicable << " | "
          << r.success << " | " << format_rate(r.rate) << " |\n";
    }
  }
  return out.str();
}

}  // namespace transguard
