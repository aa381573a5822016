#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "transguard/pipeline.h"

namespace transguard {

enum class Category {
  kAdditionalContext,
  kLoopConversion,
  kTypeSensitivity,
  kExtraConstraints,
  kMiscellaneous,
  kMostlyCorrect,
};

/// "AdditionalContext", ... (label spelling).
std::string_view to_string(Category category);
/// Row title as printed in the report, e.g. "Additional Context".
std::string_view display_name(Category category);
Category category_from_string(std::string_view text);
const std::vector<Category>& all_categories();

struct CorpusCase {
  std::string id;
  std::optional<std::filesystem::path> java_path;
  std::optional<std::filesystem::path> python_path;
  std::string focal = "f_gold";
  // Hand labels per direction; a direction without an entry is unlabeled.
  std::map<Direction, std::set<Category>> labels;

  const std::optional<std::filesystem::path>& source_path(Direction direction) const {
    return direction == Direction::kJ2P ? java_path : python_path;
  }
};

struct Corpus {
  std::vector<CorpusCase> cases;  // sorted by id
  std::vector<std::string> warnings;
};

/// Reads `<root>/{java,python}/<id>.<ext>` and an optional `<root>/labels.json`
/// of the form {"<id>": {"j2p": [..], "p2j": [..], "focal": ".."}}.
/// Throws EmptyCorpus when no case is found.
Corpus ingest(const std::filesystem::path& root);

/// Ground-truth table for the mock translator from the paired files.
MockFixtures fixtures_from_corpus(const Corpus& corpus);

/// Severity of a pipeline result: 3 translator failure, 2 collapse or
/// unusable output, 1 compiles but carries extra clauses (or behaves
/// differently under the run command), 0 fine.
enum class Rank { kOk = 0, kExtraClauses = 1, kBroken = 2, kTranslatorFailure = 3 };

class Checker {
 public:
  virtual ~Checker() = default;
  /// Throws Error when the check itself cannot be carried out.
  virtual Rank rank(const PipelineResult& result, std::string_view focal) const = 0;
};

/// Parse validity of the output plus a clean collapse verdict, and extra
/// clauses against the translated source.
class DefaultChecker : public Checker {
 public:
  Rank rank(const PipelineResult& result, std::string_view focal) const override;
};

/// Default checks, then `compile_cmd` (translation on stdin, target language
/// name as $1, exit 0 = compiles) and optionally `run_cmd` (stdout of the
/// translation must equal stdout of the source).
class ExternalChecker : public Checker {
 public:
  ExternalChecker(std::string compile_cmd, std::string run_cmd = "", double timeout_s = 60);
  Rank rank(const PipelineResult& result, std::string_view focal) const override;

 private:
  std::string compile_cmd_;
  std::string run_cmd_;
  double timeout_s_;
};

enum class Outcome { kNotApplicable, kSuccess, kFail, kCheckerError };

std::string_view to_string(Outcome outcome);

/// `before` is the vanilla run (rules off), `after` the run with rules on.
/// Not applicable when no rule applied to the case; success when the rank
/// improved; checker errors are reported separately.
Outcome judge_success(const PipelineResult& before, const PipelineResult& after, const Checker& checker,
                      std::string_view focal = "f_gold");

struct CategoryRow {
  Category category = Category::kMiscellaneous;
  int count = 0;
  double pct = 0;
};

struct RuleRow {
  RuleId rule = RuleId::kR1Context;
  int applicable = 0;
  int success = 0;
  std::optional<double> rate;  // absent when applicable == 0
};

struct CaseRow {
  std::string id;
  std::set<Category> categories;
  bool labeled = false;
  std::optional<int> before_rank;
  std::optional<int> after_rank;
  Outcome outcome = Outcome::kNotApplicable;
  std::set<RuleId> applicable_rules;
  std::string before_verdict;
  std::string after_verdict;
  std::string error;
};

struct DirectionReport {
  Direction direction = Direction::kJ2P;
  int cases = 0;
  std::vector<CategoryRow> rows;
  std::vector<RuleRow> rules;
  std::vector<CaseRow> case_rows;
};

struct EvalReport {
  std::vector<DirectionReport> directions;
};

struct EvalOptions {
  std::vector<Direction> directions = {Direction::kJ2P, Direction::kP2J};
  // 0: TRANSGUARD_WORKERS, else the hardware concurrency.
  int workers = 0;
  const Checker* checker = nullptr;  // DefaultChecker when null
};

/// Runs the vanilla and the mutated pipeline for every case and direction
/// with a source file. `config.pre.direction` is overridden per direction.
EvalReport run_eval(const std::vector<CorpusCase>& cases, const PipelineConfig& config, const Translator& translator,
                    const EvalOptions& options = {});

/// Worker bound from TRANSGUARD_WORKERS (unset or invalid: hardware concurrency).
int default_workers();

nlohmann::json to_json(const EvalReport& report);
std::string to_csv(const EvalReport& report);
std::string to_markdown(const EvalReport& report);
/// Percentages print without trailing zeros: 18, 12.5, 33.33.
std::string format_pct(double pct);

}  // namespace transguard
