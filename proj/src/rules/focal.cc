#include "transguard/pre_rules.h"

namespace transguard {

const MethodUnit& find_focal(const SyntaxUnit& unit, std::string_view focal_name) {
  auto found = unit.methods_named(focal_name);
  if (found.empty()) throw Error(ErrorKind::kFocalNotFound, "no method named '" + std::string(focal_name) + "'");
  if (found.size() > 1) {
    throw Error(ErrorKind::kAmbiguousFocal,
                std::to_string(found.size()) + " methods named '" + std::string(focal_name) + "'", found[1]->span);
  }
  return *found[0];
}

namespace {

bool has_content(const TokenRun& run) {
  for (const auto& t : run) {
    if (!t.is_marker()) return true;
  }
  return false;
}

}  // namespace

FocalResult extract_focal(const SyntaxUnit& unit, std::string_view focal_name) {
  const MethodUnit& focal = find_focal(unit, focal_name);
  FocalResult result;
  result.record.rule = RuleId::kR1Context;

  std::vector<std::string> removed_methods;
  int removed_other = 0;
  for (const auto& item : unit.items) {
    if (const auto* m = std::get_if<MethodUnit>(&item)) {
      if (m != &focal) removed_methods.push_back(m->name);
    } else if (has_content(std::get<OtherItem>(item).tokens)) {
      ++removed_other;
    }
  }
  if (removed_methods.empty() && removed_other == 0) {
    result.text = unit.source;
    result.record.notes = "only the focal method is present";
    return result;
  }

  result.text = unit.source.substr(focal.span.begin, focal.span.size()) + "\n";
  result.record.applicable = true;
  result.record.applied = true;
  std::string notes = "removed";
  if (!removed_methods.empty()) {
    notes += " " + std::to_string(removed_methods.size()) + " method(s) (";
    for (std::size_t i = 0; i < removed_methods.size(); ++i) notes += (i ? ", " : "") + removed_methods[i];
    notes += ")";
  }
  if (removed_other > 0) {
    if (!removed_methods.empty()) notes += " and";
    notes += " " + std::to_string(removed_other) + " other item(s)";
  }
  result.record.notes = notes;
  set_diff_spans(result.record, unit.source, result.text);
  return result;
}

}  // namespace transguard
