#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "transguard/mutation.h"

namespace transguard {

enum class TranslatorKind { kSubprocess, kHttp, kMock };

std::string_view to_string(TranslatorKind kind);

/// Maps method text to translated text. Implementations are stateless
/// between calls and safe to call concurrently. Failures throw
/// Error(kTranslatorFailure) (or kFixtureMiss for the mock).
class Translator {
 public:
  virtual ~Translator() = default;
  virtual TranslatorKind kind() const = 0;
  virtual std::string translate(const std::string& text, Direction direction) const = 0;
};

struct CommandResult {
  int exit_code = -1;  // -1 when killed by a signal
  bool timed_out = false;
  std::string out;
  std::string err;
};

/// Runs `/bin/sh -c '<command> "$@"' sh <args...>` with `input` on stdin and
/// kills it with SIGKILL at the deadline. Throws TranslatorFailure only when
/// the shell cannot be spawned.
CommandResult run_command(const std::string& command, const std::vector<std::string>& args, const std::string& input,
                          double timeout_s);

/// Runs `/bin/sh -c '<command> "$1"' sh <j2p|p2j>` with the text on stdin.
/// Exit status 0 means success and stdout is the translation.
std::unique_ptr<Translator> subprocess_translator(std::string command, double timeout_s = 120);

/// POSTs the text to `url` with header `X-Direction`; 200 means success.
std::unique_ptr<Translator> http_translator(std::string url, double timeout_s = 120);

enum class MockProfile {
  kIdentity,
  kPerfect,
  kAdditionalContext,
  kLoopConversion,
  kTypeSensitivity,
  kExtraConstraints,
  kMiscellaneous,
  kCollapseImport,
  kCollapseNumber,
  kCollapseComma,
  kCollapseSpacetoken,
  kTable1,  // all five error categories at once
};

std::string_view to_string(MockProfile profile);
/// Accepts the names printed by to_string; "all" is an alias of "table1".
MockProfile mock_profile_from_string(std::string_view text);

/// Ground-truth translations, looked up by the canonical form of the input:
/// every pre-rule applied to the focal method, token spacing normalized.
class MockFixtures {
 public:
  void add(Direction direction, std::string_view source, std::string translation,
           std::string_view focal = "f_gold");
  /// Adds both directions for a Java/Python pair.
  void add_pair(std::string_view java, std::string_view python, std::string_view focal = "f_gold");
  const std::string* find(Direction direction, std::string_view source, std::string_view focal) const;
  std::size_t size() const { return table_.size(); }

  /// JSON array of {direction, source, translation[, focal]}.
  static MockFixtures from_json_file(const std::string& path);

 private:
  std::map<std::pair<Direction, std::string>, std::string> table_;
};

std::string canonical_key(std::string_view source, Direction direction, std::string_view focal = "f_gold");

struct MockOptions {
  MockProfile profile = MockProfile::kPerfect;
  std::uint64_t seed = 1;
  std::string focal = "f_gold";
  std::shared_ptr<const MockFixtures> fixtures;
};

/// Deterministic stand-in that reproduces the translator failure patterns:
/// context leakage, loop and array-triggered collapse, appended clauses and
/// truncation. Each error profile fires only when its trigger is present in
/// the input; otherwise the fixture translation is returned. Clauses are
/// appended in P2J only.
std::unique_ptr<Translator> mock_translator(MockOptions options);

/// Which error categories the mock would inject for `text`.
struct MockTriggers {
  bool additional_context = false;
  bool complex_loop = false;
  bool array_type = false;
  bool while_loop = false;
  bool library_call = false;
};
MockTriggers mock_triggers(std::string_view text, Direction direction, std::string_view focal = "f_gold");

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view text, std::uint64_t basis = 14695981039346656037ull);

}  // namespace transguard
