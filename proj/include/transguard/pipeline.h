#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "transguard/collapse.h"
#include "transguard/post_rules.h"
#include "transguard/pre_rules.h"
#include "transguard/translator.h"

namespace transguard {

struct TranslatorConfig {
  std::string cmd;   // subprocess command, or "mock" / "mock:<profile>"
  std::string url;   // HTTP endpoint
  double timeout_s = 120;
  MockProfile mock_profile = MockProfile::kPerfect;
  std::uint64_t seed = 1;
  std::string fixtures;  // mock fixture JSON path
};

struct PipelineConfig {
  PreConfig pre;  // rules (R4 included), direction, focal, arr threshold, lenient
  PrunePolicy prune;
  CollapseThresholds thresholds;
  TranslatorConfig translator;
};

/// Reads config keys (`rules`, `direction`, `focal`, `translator.cmd`,
/// `translator.url`, `timeout_s`, `arr_threshold`, `prune.mode`,
/// `collapse.*`, ...) on top of `base`. Nested objects and dotted keys are
/// both accepted.
PipelineConfig config_from_json(const nlohmann::json& doc, PipelineConfig base = {});
PipelineConfig load_config(const std::string& path, PipelineConfig base = {});

/// Builds the configured adapter: url → HTTP, cmd "mock[:profile]" → mock,
/// other cmd → subprocess. Throws ConfigError when none is set.
std::unique_ptr<Translator> make_translator(const TranslatorConfig& config,
                                            std::shared_ptr<const MockFixtures> fixtures = nullptr,
                                            std::string_view focal = "f_gold");

struct StageTimings {
  double preprocess_ms = 0;
  double translate_ms = 0;
  double postprocess_ms = 0;
};

struct PipelineResult {
  Direction direction = Direction::kJ2P;
  std::string input;
  std::optional<std::string> preprocessed;
  std::optional<std::string> raw_translation;
  std::optional<std::string> postprocessed;
  std::vector<MutationRecord> records;
  CollapseVerdict raw_verdict;  // of the raw translation
  CollapseVerdict verdict;      // of the final text
  bool translator_failed = false;
  std::string failure;
  bool postprocess_skipped = false;
  StageTimings timings;

  /// The text handed back to the user: postprocessed, else raw.
  const std::optional<std::string>& output() const { return postprocessed ? postprocessed : raw_translation; }
};

/// preprocess → translate → postprocess. Parse and focal errors in the
/// source throw; translator failures are captured in the result.
PipelineResult run_pipeline(std::string_view source, const PipelineConfig& config, const Translator& translator);

nlohmann::json to_json(const MutationRecord& record);
nlohmann::json to_json(const std::vector<MutationRecord>& records);
nlohmann::json to_json(const CollapseVerdict& verdict);
/// Timings are left out unless asked for, so equal runs serialize equally.
nlohmann::json to_json(const PipelineResult& result, bool with_timings = false);

}  // namespace transguard
