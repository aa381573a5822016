#include "transguard/cli.h"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "transguard/eval.h"
#include "transguard/parser.h"
#include "transguard/pipeline.h"

namespace transguard {

namespace {

struct Flags {
  std::string direction;
  std::string lang;
  std::string focal;
  std::string rules;
  int arr_threshold = 1;
  std::string prune_mode;
  std::string config;
  bool lenient = false;
  bool all_loops = false;
  std::string output;
  std::string records;
  bool json = false;

  std::string translator_cmd;
  std::string translator_url;
  double timeout_s = 120;
  std::string mock_profile;
  std::uint64_t seed = 1;
  std::string fixtures;

  std::string input;
  std::string source;
  std::string original;

  std::string report = "md";
  int workers = 0;
  std::string directions;
  std::string compile_cmd;
  std::string run_cmd;
};

struct Options {
  CLI::Option* direction = nullptr;
  CLI::Option* focal = nullptr;
  CLI::Option* rules = nullptr;
  CLI::Option* arr_threshold = nullptr;
  CLI::Option* prune_mode = nullptr;
  CLI::Option* lenient = nullptr;
  CLI::Option* all_loops = nullptr;
  CLI::Option* translator_cmd = nullptr;
  CLI::Option* translator_url = nullptr;
  CLI::Option* timeout = nullptr;
  CLI::Option* mock_profile = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* fixtures = nullptr;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::kConfig, "cannot write " + path);
  file << text;
}

bool given(const CLI::Option* opt) { return opt && opt->count() > 0; }

// Config file first, then flags that were given on the command line.
PipelineConfig build_config(const Flags& f, const Options& o) {
  PipelineConfig c;
  if (!f.config.empty()) c = load_config(f.config, c);
  if (given(o.direction)) c.pre.direction = direction_from_string(f.direction);
  if (!f.lang.empty()) {
    Language lang = language_from_string(f.lang);
    if (!given(o.direction)) {
      c.pre.direction = lang == Language::kJava ? Direction::kJ2P : Direction::kP2J;
    } else if (source_language(c.pre.direction) != lang) {
      throw UsageError("--lang " + f.lang + " does not match --direction " + f.direction);
    }
  }
  if (given(o.focal)) c.pre.focal = f.focal;
  if (given(o.rules)) c.pre.rules = parse_rule_list(f.rules);
  if (given(o.arr_threshold)) c.pre.arr_threshold = f.arr_threshold;
  if (given(o.prune_mode)) c.prune.mode = prune_mode_from_string(f.prune_mode);
  if (given(o.lenient)) c.pre.lenient = true;
  if (given(o.all_loops)) c.pre.all_loops = true;
  if (given(o.translator_cmd)) c.translator.cmd = f.translator_cmd;
  if (given(o.translator_url)) c.translator.url = f.translator_url;
  if (given(o.timeout)) c.translator.timeout_s = f.timeout_s;
  if (given(o.mock_profile)) c.translator.mock_profile = mock_profile_from_string(f.mock_profile);
  if (given(o.seed)) c.translator.seed = f.seed;
  if (given(o.fixtures)) c.translator.fixtures = f.fixtures;
  return c;
}

void add_common(CLI::App* app, Flags& f, Options& o) {
  o.direction = app->add_option("--direction", f.direction, "j2p or p2j")->check(CLI::IsMember({"j2p", "p2j"}));
  o.focal = app->add_option("--focal", f.focal, "focal method name (default f_gold)");
  o.rules = app->add_option("--rules", f.rules, "r1,r2,r3a,r3b,r4 | all | none");
  o.arr_threshold = app->add_option("--arr-threshold", f.arr_threshold, "R3b fires at this many arr parameters");
  o.prune_mode =
      app->add_option("--prune-mode", f.prune_mode, "count or match")->check(CLI::IsMember({"count", "match"}));
  app->add_option("--config", f.config, "JSON config; flags override its keys");
  o.lenient = app->add_flag("--lenient", f.lenient, "recover from lexing and parsing errors");
}

void add_translator(CLI::App* app, Flags& f, Options& o) {
  o.translator_cmd = app->add_option("--translator-cmd", f.translator_cmd,
                                     "translator command, or mock / mock:<profile>");
  o.translator_url = app->add_option("--translator-url", f.translator_url, "HTTP translator endpoint");
  o.timeout = app->add_option("--timeout", f.timeout_s, "translator timeout in seconds");
  o.mock_profile = app->add_option("--mock-profile", f.mock_profile, "mock profile (with --translator-cmd mock)");
  o.seed = app->add_option("--seed", f.seed, "mock seed");
  o.fixtures = app->add_option("--fixtures", f.fixtures, "mock fixture JSON");
}

void write_records(const Flags& f, const std::vector<MutationRecord>& records) {
  if (!f.records.empty()) write_text(f.records, to_json(records).dump(2) + "\n", std::cout);
}

int preprocess(const Flags& f, const Options& o, std::ostream& out) {
  PipelineConfig c = build_config(f, o);
  std::string text = read_input(f.input);
  SyntaxUnit unit = parse_source(text, source_language(c.pre.direction), ParseOptions{.lenient = c.pre.lenient});
  PreResult pre = apply_pre(unit, c.pre);
  write_text(f.output, pre.text, out);
  write_records(f, pre.records);
  return kExitOk;
}

int postprocess(const Flags& f, const Options& o, std::ostream& out) {
  PipelineConfig c = build_config(f, o);
  PostResult post = apply_post(read_input(f.source), read_input(f.input), c.pre.direction, c.prune, c.pre.focal);
  write_text(f.output, post.text, out);
  write_records(f, post.records);
  return kExitOk;
}

int pipeline(const Flags& f, const Options& o, std::ostream& out, std::ostream& err) {
  PipelineConfig c = build_config(f, o);
  std::string text = read_input(f.input);
  auto translator = make_translator(c.translator, nullptr, c.pre.focal);
  PipelineResult r = run_pipeline(text, c, *translator);
  write_records(f, r.records);
  if (f.json) {
    write_text(f.output, to_json(r).dump(2) + "\n", out);
  } else if (r.output()) {
    write_text(f.output, *r.output(), out);
  }
  if (r.translator_failed) {
    err << "transguard: " << r.failure << "\n";
    return kExitTranslator;
  }
  if (!r.verdict.clean()) err << "transguard: translation is a collapse: " << r.verdict.summary() << "\n";
  return kExitOk;
}

int detect_collapse(const Flags& f, const Options& o, std::ostream& out) {
  PipelineConfig c = build_config(f, o);
  Language lang = f.lang.empty() ? (f.input.ends_with(".py") ? Language::kPython
                                    : f.input.ends_with(".java") ? Language::kJava
                                                                 : target_language(c.pre.direction))
                                 : language_from_string(f.lang);
  std::optional<SyntaxUnit> original;
  const MethodUnit* focal = nullptr;
  if (!f.original.empty()) {
    std::string src = read_input(f.original);
    Language src_lang = f.original.ends_with(".py") ? Language::kPython : Language::kJava;
    original = parse_source(src, src_lang, ParseOptions{.lenient = true});
    focal = &find_focal(*original, c.pre.focal);
  }
  CollapseVerdict v = classify(read_input(f.input), lang, focal, c.thresholds);
  write_text(f.output, f.json ? to_json(v).dump(2) + "\n" : v.summary() + "\n", out);
  return kExitOk;
}

int eval(const Flags& f, const Options& o, std::ostream& out, std::ostream& err) {
  PipelineConfig c = build_config(f, o);
  Corpus corpus = ingest(f.input);
  for (const auto& w : corpus.warnings) err << "transguard: warning: " << w << "\n";
  if (c.translator.cmd.empty() && c.translator.url.empty()) c.translator.cmd = "mock";
  std::shared_ptr<const MockFixtures> fixtures;
  if (c.translator.fixtures.empty()) fixtures = std::make_shared<MockFixtures>(fixtures_from_corpus(corpus));
  auto translator = make_translator(c.translator, fixtures, c.pre.focal);

  EvalOptions options;
  options.workers = f.workers;
  if (!f.directions.empty()) {
    options.directions.clear();
    std::stringstream ss(f.directions);
    std::string d;
    while (std::getline(ss, d, ',')) options.directions.push_back(direction_from_string(d));
  }
  std::unique_ptr<ExternalChecker> external;
  if (!f.compile_cmd.empty() || !f.run_cmd.empty()) {
    external = std::make_unique<ExternalChecker>(f.compile_cmd, f.run_cmd, c.translator.timeout_s);
    options.checker = external.get();
  }
  EvalReport report = run_eval(corpus.cases, c, *translator, options);
  std::string text = f.report == "json"  ? to_json(report).dump(2) + "\n"
                     : f.report == "csv" ? to_csv(report)
                                         : to_markdown(report);
  write_text(f.output, text, out);
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kConfig: return kExitUsage;
    case ErrorKind::kTranslatorFailure:
    case ErrorKind::kFixtureMiss: return kExitTranslator;
    default: return kExitDomain;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rule-based pre- and post-processing around a Java/Python code translator", "transguard"};
  app.require_subcommand(1);
  Flags f;
  // One set per subcommand: only the chosen one's options can be given.
  Options o_pre, o_post, o_pipe, o_detect, o_ev;

  auto* pre = app.add_subcommand("preprocess", "apply R1-R3 to a source file");
  add_common(pre, f, o_pre);
  pre->add_option("--lang", f.lang, "source language (java or python)")->check(CLI::IsMember({"java", "python"}));
  o_pre.all_loops = pre->add_flag("--all-loops", f.all_loops, "R2 rewrites every classic for loop");
  pre->add_option("file", f.input, "source file")->required();

  auto* post = app.add_subcommand("postprocess", "apply R4 to a translation");
  add_common(post, f, o_post);
  post->add_option("--source", f.source, "file that was translated")->required();
  post->add_option("file", f.input, "translation")->required();

  auto* pipe = app.add_subcommand("pipeline", "preprocess, translate, postprocess");
  add_common(pipe, f, o_pipe);
  add_translator(pipe, f, o_pipe);
  pipe->add_option("--lang", f.lang, "source language (java or python)")->check(CLI::IsMember({"java", "python"}));
  pipe->add_flag("--json", f.json, "print the whole result as JSON");
  pipe->add_option("file", f.input, "source file")->required();

  auto* detect = app.add_subcommand("detect-collapse", "classify translator output");
  add_common(detect, f, o_detect);
  detect->add_option("--lang", f.lang, "language of the text (default: from extension)")
      ->check(CLI::IsMember({"java", "python"}));
  detect->add_option("--original", f.original, "translated source, enables the structural check");
  detect->add_flag("--json", f.json, "print the verdict as JSON");
  detect->add_option("file", f.input, "translation")->required();

  auto* ev = app.add_subcommand("eval", "run the harness over a corpus");
  add_common(ev, f, o_ev);
  add_translator(ev, f, o_ev);
  ev->add_option("--report", f.report, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
  ev->add_option("--workers", f.workers, "parallel cases (default TRANSGUARD_WORKERS)");
  ev->add_option("--directions", f.directions, "j2p,p2j");
  ev->add_option("--compile-cmd", f.compile_cmd, "external compile check");
  ev->add_option("--run-cmd", f.run_cmd, "external run check");
  ev->add_option("corpus", f.input, "corpus root")->required();

  for (auto* sub : {pre, post, pipe, detect, ev}) {
    sub->add_option("-o,--output", f.output, "write the payload here instead of stdout");
    sub->add_option("--records", f.records, "write mutation records as JSON");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*pre) return preprocess(f, o_pre, out);
    if (*post) return postprocess(f, o_post, out);
    if (*pipe) return pipeline(f, o_pipe, out, err);
    if (*detect) return detect_collapse(f, o_detect, out);
    if (*ev) return eval(f, o_ev, out, err);
  } catch (const UsageError& e) {
    err << "transguard: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "transguard: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}

}  // namespace transguard
