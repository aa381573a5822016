#include "transguard/parser.h"
#include "transguard/pre_rules.h"
#include "transguard/render.h"

namespace transguard {

namespace {

// Leading whitespace of the line containing `offset`, if only whitespace
// precedes it on that line.
std::string line_prefix(const std::string& text, std::size_t offset) {
  std::size_t start = text.rfind('\n', offset == 0 ? 0 : offset - 1);
  start = start == std::string::npos ? 0 : start + 1;
  if (offset < start) return "";
  std::string prefix = text.substr(start, offset - start);
  if (prefix.find_first_not_of(" \t") != std::string::npos) return "";
  return prefix;
}

MutationRecord off_direction(RuleId rule, Direction direction) {
  MutationRecord record;
  record.rule = rule;
  record.notes = "not used for " + std::string(to_string(direction));
  return record;
}

}  // namespace

PreResult apply_pre(const SyntaxUnit& unit, const PreConfig& config) {
  Language language = source_language(config.direction);
  if (unit.language != language) {
    throw Error(ErrorKind::kConfig, std::string(to_string(config.direction)) + " expects " +
                                        std::string(to_string(language)) + " source");
  }
  if (unit.items.empty()) throw Error(ErrorKind::kParse, "empty source");
  auto enabled = [&](RuleId rule) { return config.rules.count(rule) > 0; };
  PreResult result;
  std::string text = unit.source;

  if (enabled(RuleId::kR1Context)) {
    FocalResult focal = extract_focal(unit, config.focal);
    text = std::move(focal.text);
    result.records.push_back(std::move(focal.record));
  } else {
    find_focal(unit, config.focal);
  }

  auto step = [&](auto transform) {
    SyntaxUnit current = parse_source(text, language, ParseOptions{.lenient = config.lenient});
    const MethodUnit& method = find_focal(current, config.focal);
    MethodRewrite rewrite = transform(method);
    if (rewrite.record.applied) {
      std::string rendered = render(rewrite.method, language, line_prefix(text, method.span.begin));
      std::string next = text.substr(0, method.span.begin) + rendered + text.substr(method.span.end);
      set_diff_spans(rewrite.record, text, next);
      text = std::move(next);
    }
    result.records.push_back(std::move(rewrite.record));
  };

  bool j2p = config.direction == Direction::kJ2P;
  if (enabled(RuleId::kR2Loop)) {
    if (j2p) {
      step([&](const MethodUnit& m) { return convert_loops(m, config.all_loops); });
    } else {
      result.records.push_back(off_direction(RuleId::kR2Loop, config.direction));
    }
  }
  if (enabled(RuleId::kR3aArrayList)) {
    if (j2p) {
      step([&](const MethodUnit& m) { return array_params_to_list(m); });
    } else {
      result.records.push_back(off_direction(RuleId::kR3aArrayList, config.direction));
    }
  }
  if (enabled(RuleId::kR3bArrRename)) {
    if (!j2p) {
      step([&](const MethodUnit& m) { return rename_arr_params(m, config.arr_pattern, config.arr_threshold); });
    } else {
      result.records.push_back(off_direction(RuleId::kR3bArrRename, config.direction));
    }
  }
  result.text = std::move(text);
  return result;
}

}  // namespace transguard
