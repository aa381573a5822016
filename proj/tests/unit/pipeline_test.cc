#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "transguard/parser.h"
#include "transguard/pipeline.h"
#include "transguard/render.h"
#include "transguard/visit.h"

using namespace transguard;

namespace {

class FnTranslator : public Translator {
 public:
  explicit FnTranslator(std::function<std::string(const std::string&)> fn) : fn_(std::move(fn)) {}
  TranslatorKind kind() const override { return TranslatorKind::kMock; }
  std::string translate(const std::string& text, Direction) const override { return fn_(text); }

 private:
  std::function<std::string(const std::string&)> fn_;
};

const char* kDigitsPy =
    "def f_gold ( x ) :\n"
    "    count = 0\n"
    "    while x != 0 :\n"
    "        x = x // 10\n"
    "        count += 1\n"
    "    return count\n";

const char* kDigitsJava =
    "static int f_gold ( int x ) {\n"
    "  int count = 0 ;\n"
    "  while ( x != 0 ) {\n"
    "    x = x / 10 ;\n"
    "    count ++ ;\n"
    "  }\n"
    "  return count ;\n"
    "}\n";

const char* kSumJava =
    "class GFG {\n"
    "  static int f_gold ( int arr [ ] , int n ) {\n"
    "    int s = 0 ;\n"
    "    for ( int i = 0 ;\n"
    "    i < n ;\n"
    "    i ++ ) s += arr [ i ] ;\n"
    "    return s ;\n"
    "  }\n"
    "  public static void main ( String args [ ] ) {\n"
    "    System . out . println ( f_gold ( new int [ ] { 1 } , 1 ) ) ;\n"
    "  }\n"
    "}\n";

const char* kSumPy =
    "def f_gold ( arr , n ) :\n"
    "    s = 0\n"
    "    for i in range ( n ) :\n"
    "        s += arr [ i ]\n"
    "    return s\n";

PipelineConfig config(Direction direction, std::string rules = "all") {
  PipelineConfig c;
  c.pre.direction = direction;
  c.pre.rules = parse_rule_list(rules);
  return c;
}

std::shared_ptr<MockFixtures> fixtures() {
  auto f = std::make_shared<MockFixtures>();
  f->add_pair(kDigitsJava, kDigitsPy);
  f->add_pair(kSumJava, kSumPy);
  return f;
}

std::unique_ptr<Translator> mock(MockProfile profile, std::uint64_t seed = 1) {
  return mock_translator(MockOptions{profile, seed, "f_gold", fixtures()});
}

std::size_t while_clauses(const std::string& text, Language language) {
  SyntaxUnit unit = parse_source(text, language, ParseOptions{.lenient = true});
  std::size_t n = 0;
  for_each_stmt(unit.methods()[0]->body, [&](const Stmt& s) {
    if (s.kind == StmtKind::kWhile) n = s.cond.count();
  });
  return n;
}

}  // namespace

TEST_CASE("identity adapter with nothing applicable returns the input") {
  auto id = mock_translator(MockOptions{MockProfile::kIdentity});
  PipelineResult r = run_pipeline(kDigitsJava, config(Direction::kJ2P), *id);
  REQUIRE(r.postprocessed);
  CHECK(*r.postprocessed == kDigitsJava);
  for (const auto& rec : r.records) CHECK_FALSE(rec.applied);
}

TEST_CASE("appended clause is pruned from the translation") {
  FnTranslator appender([](const std::string&) {
    std::string out = kDigitsJava;
    out.replace(out.find("x != 0"), 6, "x != 0 && ( x % 10 == 0 )");
    return out;
  });
  PipelineResult r = run_pipeline(kDigitsPy, config(Direction::kP2J), appender);
  REQUIRE(r.postprocessed);
  CHECK(normalize_spacing(*r.postprocessed, Language::kJava) == normalize_spacing(kDigitsJava, Language::kJava));
  CHECK(r.records.back().rule == RuleId::kR4Prune);
  CHECK(r.records.back().applied);
  CHECK(r.verdict.clean());
}

TEST_CASE("collapse skips postprocessing") {
  auto comma = mock(MockProfile::kCollapseComma);
  PipelineResult r = run_pipeline(kDigitsPy, config(Direction::kP2J), *comma);
  CHECK(r.raw_verdict.classes == std::set{CollapseClass::kCommaSpam, CollapseClass::kStructural});
  CHECK(r.postprocess_skipped);
  CHECK(r.records.back().notes.find("collapse") != std::string::npos);
  CHECK(r.postprocessed == r.raw_translation);
}

TEST_CASE("mock profiles") {
  SUBCASE("perfect returns the ground truth") {
    auto perfect = mock(MockProfile::kPerfect);
    CHECK(perfect->translate(kDigitsPy, Direction::kP2J) == kDigitsJava);
    // Raw input with context and the preprocessed focal share a key.
    std::string pre = apply_pre(parse_source(kSumJava, Language::kJava), PreConfig{}).text;
    CHECK(perfect->translate(kSumJava, Direction::kJ2P) == perfect->translate(pre, Direction::kJ2P));
  }
  SUBCASE("extra constraints adds one clause") {
    auto extra = mock(MockProfile::kExtraConstraints);
    std::string out = extra->translate(kDigitsPy, Direction::kP2J);
    CHECK(while_clauses(kDigitsPy, Language::kPython) == 1);
    CHECK(while_clauses(out, Language::kJava) == 2);
  }
  SUBCASE("collapse profiles match their class") {
    const std::pair<MockProfile, CollapseClass> cases[] = {
        {MockProfile::kCollapseImport, CollapseClass::kImportSpam},
        {MockProfile::kCollapseNumber, CollapseClass::kNumberSpam},
        {MockProfile::kCollapseComma, CollapseClass::kCommaSpam},
        {MockProfile::kCollapseSpacetoken, CollapseClass::kSpacetokenSpam}};
    for (auto [profile, cls] : cases) {
      for (auto dir : {Direction::kJ2P, Direction::kP2J}) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
          std::string src = dir == Direction::kJ2P ? kDigitsJava : kDigitsPy;
          std::string out = mock(profile, seed)->translate(src, dir);
          INFO(to_string(profile), " ", to_string(dir), " ", out);
          CHECK(classify(out, target_language(dir)).classes == std::set{cls});
        }
      }
    }
  }
  SUBCASE("triggers") {
    auto table = mock(MockProfile::kTable1);
    CollapseVerdict raw = classify(table->translate(kSumJava, Direction::kJ2P), Language::kPython);
    CHECK(raw.has(CollapseClass::kSpacetokenSpam));
    MockTriggers t = mock_triggers(kSumJava, Direction::kJ2P);
    CHECK(t.additional_context);
    CHECK(t.array_type);
    CHECK_FALSE(t.complex_loop);
    CHECK_FALSE(t.while_loop);
  }
  SUBCASE("unknown input is a fixture miss") {
    auto perfect = mock(MockProfile::kPerfect);
    try {
      perfect->translate("static int f_gold ( ) { return 7 ; }", Direction::kJ2P);
      FAIL("expected FixtureMiss");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kFixtureMiss);
    }
    CHECK_THROWS_AS(mock_profile_from_string("nope"), Error);
    CHECK(mock_profile_from_string("all") == MockProfile::kTable1);
  }
}

TEST_CASE("same seed gives byte-identical results") {
  for (auto profile : {MockProfile::kTable1, MockProfile::kCollapseNumber, MockProfile::kExtraConstraints}) {
    auto a = run_pipeline(kDigitsPy, config(Direction::kP2J), *mock(profile, 9));
    auto b = run_pipeline(kDigitsPy, config(Direction::kP2J), *mock(profile, 9));
    CHECK(to_json(a).dump() == to_json(b).dump());
  }
}

TEST_CASE("pipeline errors") {
  auto id = mock_translator(MockOptions{MockProfile::kIdentity});
  CHECK_THROWS_AS(run_pipeline("", config(Direction::kP2J), *id), Error);
  CHECK_THROWS_AS(run_pipeline("def g ( ) :\n    return 1\n", config(Direction::kP2J), *id), Error);
  FnTranslator broken([](const std::string&) -> std::string {
    throw Error(ErrorKind::kTranslatorFailure, "boom");
  });
  PipelineResult r = run_pipeline(kDigitsPy, config(Direction::kP2J), broken);
  CHECK(r.translator_failed);
  CHECK_FALSE(r.raw_translation);
  CHECK_FALSE(r.postprocessed);
  CHECK(r.preprocessed);
}

TEST_CASE("subprocess adapter") {
  // The direction arrives as "$1"; a shell function swallows it.
  auto cat = subprocess_translator("f() { cat; } ; f");
  CHECK(cat->translate("def f ( ) :\n    pass\n", Direction::kP2J) == "def f ( ) :\n    pass\n");
  CHECK(subprocess_translator("echo")->translate("", Direction::kP2J) == "p2j\n");
  std::string big(1 << 20, 'x');
  CHECK(cat->translate(big, Direction::kJ2P) == big);

  auto expect_failure = [](const Translator& t, const std::string& fragment) {
    try {
      t.translate("x", Direction::kJ2P);
      FAIL("expected TranslatorFailure");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kTranslatorFailure);
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_failure(*subprocess_translator("exit 3 ; true"), "exit status 3");
  expect_failure(*subprocess_translator("sleep 5 ;", 0.2), "timed out");
  expect_failure(*subprocess_translator("echo oops >&2 ; false"), "oops");
}

TEST_CASE("http adapter") {
  httplib::Server server;
  server.Post("/translate", [](const httplib::Request& req, httplib::Response& res) {
    if (req.get_header_value("X-Direction") == "p2j") {
      res.set_content(req.body + "// p2j", "text/plain");
    } else {
      res.status = 500;
    }
  });
  int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  std::string url = "http://127.0.0.1:" + std::to_string(port) + "/translate";
  auto http = http_translator(url, 5);
  CHECK(http->translate("abc", Direction::kP2J) == "abc// p2j");
  CHECK_THROWS_AS(http->translate("abc", Direction::kJ2P), Error);
  server.stop();
  thread.join();
  CHECK_THROWS_AS(http->translate("abc", Direction::kP2J), Error);
}

TEST_CASE("config keys") {
  nlohmann::json doc = {{"rules", "r1,r4"},
                        {"direction", "p2j"},
                        {"translator", {{"cmd", "mock:table1"}, {"seed", 4}}},
                        {"timeout_s", 3.5},
                        {"arr_threshold", 2},
                        {"prune.mode", "match"},
                        {"collapse", {{"comma_run", 12}}}};
  PipelineConfig c = config_from_json(doc);
  CHECK(c.pre.rules == std::set{RuleId::kR1Context, RuleId::kR4Prune});
  CHECK(c.pre.direction == Direction::kP2J);
  CHECK(c.translator.cmd == "mock:table1");
  CHECK(c.translator.seed == 4);
  CHECK(c.translator.timeout_s == 3.5);
  CHECK(c.pre.arr_threshold == 2);
  CHECK(c.prune.mode == PruneMode::kMatch);
  CHECK(c.thresholds.comma_run == 12);
  CHECK(make_translator(c.translator)->kind() == TranslatorKind::kMock);
  CHECK_THROWS_AS(config_from_json({{"direction", "x2y"}}), Error);
  CHECK_THROWS_AS(config_from_json({{"arr_threshold", "two"}}), Error);
  CHECK_THROWS_AS(make_translator(TranslatorConfig{}), Error);
}
