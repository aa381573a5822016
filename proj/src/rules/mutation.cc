#include "transguard/mutation.h"

#include <algorithm>
#include <cctype>

namespace transguard {

std::string_view to_string(RuleId rule) {
  switch (rule) {
    case RuleId::kR1Context: return "R1_context";
    case RuleId::kR2Loop: return "R2_loop";
    case RuleId::kR3aArrayList: return "R3a_array_list";
    case RuleId::kR3bArrRename: return "R3b_arr_rename";
    case RuleId::kR4Prune: return "R4_prune";
  }
  return "?";
}

RuleId rule_from_flag(std::string_view flag) {
  std::string lower(flag);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "r1" || lower == "r1_context") return RuleId::kR1Context;
  if (lower == "r2" || lower == "r2_loop") return RuleId::kR2Loop;
  if (lower == "r3a" || lower == "r3a_array_list") return RuleId::kR3aArrayList;
  if (lower == "r3b" || lower == "r3b_arr_rename") return RuleId::kR3bArrRename;
  if (lower == "r4" || lower == "r4_prune") return RuleId::kR4Prune;
  throw Error(ErrorKind::kConfig, "unknown rule '" + std::string(flag) + "'");
}

const std::set<RuleId>& all_rules() {
  static const std::set<RuleId> kAll{RuleId::kR1Context, RuleId::kR2Loop, RuleId::kR3aArrayList,
                                     RuleId::kR3bArrRename, RuleId::kR4Prune};
  return kAll;
}

std::set<RuleId> parse_rule_list(std::string_view list) {
  std::set<RuleId> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    std::string_view item = list.substr(start, comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item == "all") {
      out.insert(all_rules().begin(), all_rules().end());
    } else if (item == "none") {
    } else if (!item.empty()) {
      out.insert(rule_from_flag(item));
    }
    start = comma + 1;
  }
  return out;
}

std::string_view to_string(Direction direction) { return direction == Direction::kJ2P ? "j2p" : "p2j"; }

Direction direction_from_string(std::string_view text) {
  if (text == "j2p") return Direction::kJ2P;
  if (text == "p2j") return Direction::kP2J;
  throw Error(ErrorKind::kConfig, "direction must be j2p or p2j, got '" + std::string(text) + "'");
}

Language source_language(Direction direction) {
  return direction == Direction::kJ2P ? Language::kJava : Language::kPython;
}

Language target_language(Direction direction) {
  return direction == Direction::kJ2P ? Language::kPython : Language::kJava;
}

void set_diff_spans(MutationRecord& record, std::string_view before, std::string_view after) {
  std::size_t prefix = 0;
  std::size_t limit = std::min(before.size(), after.size());
  while (prefix < limit && before[prefix] == after[prefix]) ++prefix;
  std::size_t suffix = 0;
  while (suffix < limit - prefix && before[before.size() - 1 - suffix] == after[after.size() - 1 - suffix]) ++suffix;
  record.before_span = Span{prefix, before.size() - suffix};
  record.after_span = Span{prefix, after.size() - suffix};
}

}  // namespace transguard
