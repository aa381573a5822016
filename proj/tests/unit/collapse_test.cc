#include <random>

#include "doctest.h"
#include "fixtures.h"
#include "transguard/collapse.h"
#include "transguard/parser.h"

using namespace transguard;
using transguard::testing::fixture;

namespace {

std::set<CollapseClass> classes_of(const std::string& text, Language language = Language::kPython) {
  return classify(text, language).classes;
}

}  // namespace

TEST_CASE("definition figures classify to exactly their class") {
  CHECK(classes_of(fixture("collapse/fig1_import_spam.py")) == std::set{CollapseClass::kImportSpam});
  CHECK(classes_of(fixture("collapse/fig2_number_spam.py")) == std::set{CollapseClass::kNumberSpam});
  CHECK(classes_of(fixture("collapse/fig3_comma_spam.py")) == std::set{CollapseClass::kCommaSpam});
  CHECK(classes_of(fixture("collapse/fig4_spacetoken_spam.py")) == std::set{CollapseClass::kSpacetokenSpam});
}

TEST_CASE("clean methods have no verdict") {
  auto files = transguard::testing::source_files("clean");
  REQUIRE(files.size() == 20);
  for (const auto& path : files) {
    Language language = transguard::testing::language_of(path);
    std::string text = transguard::testing::read_file(path);
    SyntaxUnit unit = parse_source(text, language);
    CollapseVerdict v = classify(text, language, unit.methods()[0]);
    INFO(path.filename().string(), " ", v.summary());
    CHECK(v.clean());
  }
}

TEST_CASE("thresholds sit at their boundaries") {
  std::string numbers = "x = [ 1";
  for (int i = 1; i < 15; ++i) numbers += " , 1";
  CHECK(classes_of(numbers + " ]").empty());
  CHECK(classes_of(numbers + " , 1 ]") == std::set{CollapseClass::kNumberSpam});

  std::string commas = "s = ";
  for (int i = 0; i < 9; ++i) commas += "','";
  CHECK(classes_of(commas).empty());
  CHECK(classes_of(commas + "','") == std::set{CollapseClass::kCommaSpam});

  CHECK(classes_of("def SPACETOKEN f ( SPACETOKEN ) :\n    pass\n").empty());
  CHECK(classes_of("def SPACETOKEN f ( SPACETOKEN ) : SPACETOKEN\n") == std::set{CollapseClass::kSpacetokenSpam});

  // Distinct values with negatives: long but not repetitive.
  std::string distinct = "x = [ - 1";
  for (int i = 2; i < 30; ++i) distinct += " , " + std::to_string(i * 7);
  CHECK(classes_of(distinct + " ]").empty());
  // Single digits count as spam regardless of repetition.
  std::string digits = "x = [ 0";
  for (int i = 1; i < 16; ++i) digits += " , " + std::to_string(i % 10);
  CHECK(classes_of(digits + " ]") == std::set{CollapseClass::kNumberSpam});
}

TEST_CASE("import checks") {
  CHECK(classes_of("import numpy as np\nimport numpy.linalg\nimport sys\n"
                   "def f ( a ) :\n    x = 1\n    y = 2\n    z = 3\n    w = 4\n    v = 5\n    return a\n")
            .empty());
  CHECK(classes_of("def import ( ) :\n    import inspect\n    import inspect\n    ...\n") ==
        std::set{CollapseClass::kImportSpam});
  CHECK(classes_of("import java . util . * ;\nimport java . util . * ;\nimport java . io . * ;\n",
                   Language::kJava) == std::set{CollapseClass::kImportSpam});
}

TEST_CASE("structural check uses the original signature") {
  SyntaxUnit original = parse_source("static int f_gold ( int a , int b ) { return a + b ; }", Language::kJava);
  const MethodUnit* m = original.methods()[0];
  CHECK(classify("def f_gold ( a , b ) :\n    return a + b\n", Language::kPython, m).clean());
  CHECK(classify("def other ( a , b ) :\n    return a + b\n", Language::kPython, m).clean());
  CHECK(classify("def other ( a ) :\n    return a\n", Language::kPython, m).classes ==
        std::set{CollapseClass::kStructural});
  CHECK(classify(fixture("collapse/fig3_comma_spam.py"), Language::kPython, m).classes ==
        std::set{CollapseClass::kCommaSpam, CollapseClass::kStructural});
  CHECK(classify("", Language::kPython, m).has(CollapseClass::kStructural));
}

TEST_CASE("garbage never throws") {
  for (const char* text : {"", "'''", "\"", "def (((", "\t\t  \n   x\n\ty", "}}}}", "/* open", "@@@ $$$"}) {
    CHECK_NOTHROW(classify(text, Language::kPython));
    CHECK_NOTHROW(classify(text, Language::kJava));
  }
}

TEST_CASE("appending spam never removes a class") {
  std::mt19937 rng(7);
  const std::vector<std::string> figures = {"collapse/fig1_import_spam.py", "collapse/fig2_number_spam.py",
                                            "collapse/fig3_comma_spam.py", "collapse/fig4_spacetoken_spam.py"};
  const std::vector<std::string> spam = {" , 14", " 3 ,", "','", " SPACETOKEN", "\nimport numpy , numpy",
                                         "\n1 , 1 , 1 , 1", "\n,,,,", " ,"};
  for (const auto& name : figures) {
    std::string text = fixture(name);
    auto before = classes_of(text);
    for (int step = 0; step < 60; ++step) {
      text += spam[rng() % spam.size()];
      auto after = classes_of(text);
      for (auto cls : before) {
        INFO(name, " step ", step, " lost ", to_string(cls));
        CHECK(after.count(cls) == 1);
      }
      before = after;
    }
  }
}
