#include <map>
#include <regex>

#include "transguard/pre_rules.h"
#include "transguard/visit.h"

namespace transguard {

namespace {

void collect_names(const TokenRun& run, std::set<std::string>& names) {
  for (const auto& t : run) {
    if (t.is_identifier()) names.insert(t.text);
  }
}

// Renames identifier occurrences, skipping attribute names (`x . arr`) and
// keyword-argument names (`f ( arr = 1 )`).
void rename_run(TokenRun& run, const std::map<std::string, std::string>& mapping) {
  int depth = 0;
  for (std::size_t i = 0; i < run.size(); ++i) {
    Token& t = run[i];
    if (t.is("(") || t.is("[") || t.is("{")) ++depth;
    if (t.is(")") || t.is("]") || t.is("}")) --depth;
    if (!t.is_identifier()) continue;
    auto it = mapping.find(t.text);
    if (it == mapping.end()) continue;
    if (i > 0 && run[i - 1].is(".")) continue;
    bool kwarg = depth > 0 && i > 0 && (run[i - 1].is("(") || run[i - 1].is(",")) && i + 1 < run.size() &&
                 run[i + 1].is("=");
    if (kwarg) continue;
    t.text = it->second;
  }
}

std::string digit_suffix(const std::string& name) {
  std::size_t k = name.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) --k;
  return k == 0 ? "" : name.substr(k);
}

}  // namespace

MethodRewrite rename_arr_params(const MethodUnit& method, const std::string& pattern, int threshold) {
  MethodRewrite result{method, {}};
  MutationRecord& record = result.record;
  record.rule = RuleId::kR3bArrRename;

  std::regex re;
  try {
    re = std::regex(pattern);
  } catch (const std::regex_error& e) {
    throw Error(ErrorKind::kConfig, "bad arr pattern '" + pattern + "': " + e.what());
  }
  std::vector<std::string> matched;
  for (const auto& p : method.params) {
    if (std::regex_match(p.name, re)) matched.push_back(p.name);
  }
  int needed = std::max(threshold, 1);
  if (static_cast<int>(matched.size()) < needed) {
    record.notes = std::to_string(matched.size()) + " matching parameter(s), threshold " + std::to_string(needed);
    return result;
  }
  record.applicable = true;

  std::set<std::string> bound;
  for (const auto& p : method.params) {
    bound.insert(p.name);
    collect_names(p.tokens, bound);
  }
  for_each_run(method.body, [&](const TokenRun& run) { collect_names(run, bound); });

  std::map<std::string, std::string> mapping;
  std::set<std::string> taken;
  for (const auto& name : matched) {
    std::string suffix = digit_suffix(name);
    if (!suffix.empty()) {
      mapping[name] = "list" + suffix;
      taken.insert(mapping[name]);
    }
  }
  for (const auto& name : matched) {
    if (mapping.count(name)) continue;
    for (int k = 1;; ++k) {
      std::string candidate = "list" + std::to_string(k);
      if (!bound.count(candidate) && !taken.count(candidate)) {
        mapping[name] = candidate;
        taken.insert(candidate);
        break;
      }
    }
  }
  for (const auto& [from, to] : mapping) {
    if (bound.count(to)) {
      record.notes = "CaptureError: '" + to + "' is already bound in " + method.name;
      return result;
    }
  }

  for (auto& p : result.method.params) {
    rename_run(p.tokens, mapping);
    auto it = mapping.find(p.name);
    if (it != mapping.end()) p.name = it->second;
  }
  for_each_run(result.method.body, [&](TokenRun& run) { rename_run(run, mapping); });

  record.applied = true;
  std::string notes = "renamed";
  for (const auto& name : matched) notes += " " + name + " -> " + mapping[name];
  record.notes = notes;
  return result;
}

}  // namespace transguard
