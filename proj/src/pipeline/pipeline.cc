#include "transguard/pipeline.h"

#include <chrono>
#include <fstream>

#include "transguard/parser.h"

namespace transguard {

namespace {

using nlohmann::json;

// `doc["a"]["b"]` or `doc["a.b"]`.
const json* lookup(const json& doc, const std::string& dotted) {
  if (doc.contains(dotted)) return &doc[dotted];
  auto dot = dotted.find('.');
  if (dot == std::string::npos) return nullptr;
  auto head = dotted.substr(0, dot);
  if (!doc.contains(head) || !doc[head].is_object()) return nullptr;
  return lookup(doc[head], dotted.substr(dot + 1));
}

template <typename T>
void read(const json& doc, const std::string& key, T& out) {
  if (const json* v = lookup(doc, key)) {
    try {
      out = v->get<T>();
    } catch (const json::exception& e) {
      throw Error(ErrorKind::kConfig, "config key '" + key + "': " + e.what());
    }
  }
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

json span_json(const Span& s) { return json::array({s.begin, s.end}); }

}  // namespace

PipelineConfig config_from_json(const json& doc, PipelineConfig base) {
  if (!doc.is_object()) throw Error(ErrorKind::kConfig, "config must be a JSON object");
  PipelineConfig c = std::move(base);
  if (const json* rules = lookup(doc, "rules")) {
    if (rules->is_string()) {
      c.pre.rules = parse_rule_list(rules->get<std::string>());
    } else if (rules->is_array()) {
      c.pre.rules.clear();
      for (const auto& r : *rules) c.pre.rules.insert(rule_from_flag(r.get<std::string>()));
    } else {
      throw Error(ErrorKind::kConfig, "config key 'rules' must be a string or an array");
    }
  }
  std::string text;
  if (lookup(doc, "direction")) {
    read(doc, "direction", text);
    c.pre.direction = direction_from_string(text);
  }
  read(doc, "focal", c.pre.focal);
  read(doc, "arr_threshold", c.pre.arr_threshold);
  read(doc, "arr_pattern", c.pre.arr_pattern);
  read(doc, "all_loops", c.pre.all_loops);
  read(doc, "lenient", c.pre.lenient);
  if (lookup(doc, "prune.mode")) {
    read(doc, "prune.mode", text);
    c.prune.mode = prune_mode_from_string(text);
  }
  read(doc, "prune.normalize", c.prune.normalize);
  read(doc, "collapse.import_run", c.thresholds.import_run);
  read(doc, "collapse.import_ratio", c.thresholds.import_ratio);
  read(doc, "collapse.number_run", c.thresholds.number_run);
  read(doc, "collapse.number_repeat", c.thresholds.number_repeat);
  read(doc, "collapse.comma_run", c.thresholds.comma_run);
  read(doc, "collapse.spacetoken_count", c.thresholds.spacetoken_count);
  read(doc, "translator.cmd", c.translator.cmd);
  read(doc, "translator.url", c.translator.url);
  read(doc, "timeout_s", c.translator.timeout_s);
  read(doc, "translator.timeout_s", c.translator.timeout_s);
  read(doc, "translator.seed", c.translator.seed);
  read(doc, "translator.fixtures", c.translator.fixtures);
  if (lookup(doc, "translator.profile")) {
    read(doc, "translator.profile", text);
    c.translator.mock_profile = mock_profile_from_string(text);
  }
  if (c.translator.timeout_s <= 0) throw Error(ErrorKind::kConfig, "timeout_s must be positive");
  return c;
}

PipelineConfig load_config(const std::string& path, PipelineConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kConfig, "cannot open config " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kConfig, path + ": " + e.what());
  }
  return config_from_json(doc, std::move(base));
}

std::unique_ptr<Translator> make_translator(const TranslatorConfig& config,
                                            std::shared_ptr<const MockFixtures> fixtures, std::string_view focal) {
  if (!config.url.empty()) return http_translator(config.url, config.timeout_s);
  if (config.cmd == "mock" || config.cmd.starts_with("mock:")) {
    MockOptions options;
    options.profile = config.cmd == "mock" ? config.mock_profile : mock_profile_from_string(config.cmd.substr(5));
    options.seed = config.seed;
    options.focal = std::string(focal);
    if (!fixtures && !config.fixtures.empty()) {
      fixtures = std::make_shared<MockFixtures>(MockFixtures::from_json_file(config.fixtures));
    }
    options.fixtures = std::move(fixtures);
    return mock_translator(std::move(options));
  }
  if (!config.cmd.empty()) return subprocess_translator(config.cmd, config.timeout_s);
  throw Error(ErrorKind::kConfig, "no translator configured (set translator.cmd or translator.url)");
}

PipelineResult run_pipeline(std::string_view source, const PipelineConfig& config, const Translator& translator) {
  PipelineResult result;
  result.direction = config.pre.direction;
  result.input = std::string(source);
  Language src_lang = source_language(config.pre.direction);
  Language dst_lang = target_language(config.pre.direction);

  auto start = std::chrono::steady_clock::now();
  SyntaxUnit unit = parse_source(source, src_lang, ParseOptions{.lenient = config.pre.lenient});
  PreResult pre = apply_pre(unit, config.pre);
  result.preprocessed = pre.text;
  result.records = std::move(pre.records);
  // Structural check compares against the focal method as preprocessed.
  SyntaxUnit focal_unit = parse_source(*result.preprocessed, src_lang, ParseOptions{.lenient = true});
  const MethodUnit& focal = find_focal(focal_unit, config.pre.focal);
  result.timings.preprocess_ms = ms_since(start);

  start = std::chrono::steady_clock::now();
  try {
    result.raw_translation = translator.translate(*result.preprocessed, config.pre.direction);
  } catch (const Error& e) {
    result.translator_failed = true;
    result.failure = e.what();
  }
  result.timings.translate_ms = ms_since(start);
  if (!result.raw_translation) return result;

  start = std::chrono::steady_clock::now();
  result.raw_verdict = classify(*result.raw_translation, dst_lang, &focal, config.thresholds);
  bool prune = config.pre.rules.count(RuleId::kR4Prune) > 0;
  if (prune && !result.raw_verdict.clean()) {
    result.postprocess_skipped = true;
    MutationRecord record;
    record.rule = RuleId::kR4Prune;
    record.notes = "skipped: translation is a collapse (" + result.raw_verdict.summary() + ")";
    result.records.push_back(record);
    result.postprocessed = result.raw_translation;
  } else if (prune) {
    PostResult post =
        apply_post(*result.preprocessed, *result.raw_translation, config.pre.direction, config.prune, config.pre.focal);
    result.postprocessed = std::move(post.text);
    for (auto& r : post.records) result.records.push_back(std::move(r));
  } else {
    result.postprocessed = result.raw_translation;
  }
  result.verdict = result.postprocessed == result.raw_translation
                       ? result.raw_verdict
                       : classify(*result.postprocessed, dst_lang, &focal, config.thresholds);
  result.timings.postprocess_ms = ms_since(start);
  return result;
}

json to_json(const MutationRecord& record) {
  return json{{"rule", std::string(to_string(record.rule))},
              {"applicable", record.applicable},
              {"applied", record.applied},
              {"notes", record.notes},
              {"before_span", span_json(record.before_span)},
              {"after_span", span_json(record.after_span)}};
}

json to_json(const std::vector<MutationRecord>& records) {
  json out = json::array();
  for (const auto& r : records) out.push_back(to_json(r));
  return out;
}

json to_json(const CollapseVerdict& verdict) {
  json classes = json::array();
  for (auto cls : verdict.classes) classes.push_back(std::string(to_string(cls)));
  json evidence = json::array();
  for (const auto& e : verdict.evidence) {
    evidence.push_back(json{{"class", std::string(to_string(e.cls))},
                            {"span", span_json(e.span)},
                            {"count", e.count},
                            {"detail", e.detail}});
  }
  return json{{"classes", classes}, {"clean", verdict.clean()}, {"evidence", evidence}};
}

json to_json(const PipelineResult& result, bool with_timings) {
  auto opt = [](const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); };
  json out{{"direction", std::string(to_string(result.direction))},
           {"stages",
            {{"input", result.input},
             {"preprocessed", opt(result.preprocessed)},
             {"raw_translation", opt(result.raw_translation)},
             {"postprocessed", opt(result.postprocessed)}}},
           {"records", to_json(result.records)},
           {"raw_verdict", to_json(result.raw_verdict)},
           {"verdict", to_json(result.verdict)},
           {"translator_failed", result.translator_failed},
           {"failure", result.failure},
           {"postprocess_skipped", result.postprocess_skipped}};
  if (with_timings) {
    out["timings_ms"] = {{"preprocess", result.timings.preprocess_ms},
                         {"translate", result.timings.translate_ms},
                         {"postprocess", result.timings.postprocess_ms}};
  }
  return out;
}

}  // namespace transguard
