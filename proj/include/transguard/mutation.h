#pragma once

#include <set>
#include <string>
#include <string_view>

#include "transguard/errors.h"
#include "transguard/token.h"

namespace transguard {

enum class RuleId { kR1Context, kR2Loop, kR3aArrayList, kR3bArrRename, kR4Prune };

/// "R1_context", "R2_loop", "R3a_array_list", "R3b_arr_rename", "R4_prune".
std::string_view to_string(RuleId rule);
/// Short flag names: r1, r2, r3a, r3b, r4 (case-insensitive).
RuleId rule_from_flag(std::string_view flag);
/// Parses "r1,r3a" or "all"; an empty string yields the empty set.
std::set<RuleId> parse_rule_list(std::string_view list);
const std::set<RuleId>& all_rules();

enum class Direction { kJ2P, kP2J };

std::string_view to_string(Direction direction);
Direction direction_from_string(std::string_view text);
Language source_language(Direction direction);
Language target_language(Direction direction);

struct MutationRecord {
  RuleId rule = RuleId::kR1Context;
  bool applicable = false;
  bool applied = false;
  std::string notes;
  Span before_span;  // bytes replaced in the rule's input text
  Span after_span;   // bytes produced in the rule's output text
};

/// Sets before/after spans to the region where `before` and `after` differ
/// (common prefix and suffix trimmed).
void set_diff_spans(MutationRecord& record, std::string_view before, std::string_view after);

}  // namespace transguard
