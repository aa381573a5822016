#pragma once

#include <set>
#include <string>
#include <vector>

#include "transguard/mutation.h"
#include "transguard/syntax.h"

namespace transguard {

struct PreConfig {
  std::set<RuleId> rules = all_rules();
  Direction direction = Direction::kJ2P;
  std::string focal = "f_gold";
  // ECMAScript regex matched against whole parameter names (R3b).
  std::string arr_pattern = "arr[0-9]*";
  // R3b fires when at least this many parameters match.
  int arr_threshold = 1;
  // R2 rewrites every classic for loop, not only complex ones.
  bool all_loops = false;
  bool lenient = false;
};

struct FocalResult {
  std::string text;
  MutationRecord record;
};

/// R1: the focal method alone. Text is unchanged (and the record not
/// applicable) when the unit holds nothing but the focal method.
FocalResult extract_focal(const SyntaxUnit& unit, std::string_view focal_name);

/// The unique method named `focal_name`; throws FocalNotFound or AmbiguousFocal.
const MethodUnit& find_focal(const SyntaxUnit& unit, std::string_view focal_name);

/// Multiple conditions, multiple variables, or a non-linear update.
bool detect_complex_for(const Stmt& loop);

/// R2 for one loop: init statements followed by the while loop. `live` holds
/// names already declared in scope; redeclaring one throws NameShadowError.
/// A `continue` hidden in an opaque region throws Unsupported.
std::vector<Stmt> for_to_while(const Stmt& loop, const std::set<std::string>& live = {});

struct MethodRewrite {
  MethodUnit method;
  MutationRecord record;
};

/// R2 over a whole method: every complex loop (or every classic loop with
/// `all_loops`), innermost first.
MethodRewrite convert_loops(const MethodUnit& method, bool all_loops);

/// R3a: 1-D array parameters become `List < W >` and their uses are rewritten.
MethodRewrite array_params_to_list(const MethodUnit& method);

/// R3b: parameters matching `pattern` are renamed arr -> list.
MethodRewrite rename_arr_params(const MethodUnit& method, const std::string& pattern = "arr[0-9]*",
                                int threshold = 1);

struct PreResult {
  std::string text;
  std::vector<MutationRecord> records;
};

/// Runs the enabled pre-rules in order R1, R2, R3a, R3b on the focal method.
/// Rules that do not fit the direction are recorded as not applicable.
PreResult apply_pre(const SyntaxUnit& unit, const PreConfig& config);

/// Java wrapper class for a primitive type name; other names map to themselves.
std::string wrapper_type(std::string_view type);

}  // namespace transguard
