#include "doctest.h"
#include "transguard/parser.h"
#include "transguard/post_rules.h"
#include "transguard/render.h"

using namespace transguard;

namespace {

MethodUnit method(std::string_view text, Language language) {
  SyntaxUnit unit = parse_source(text, language);
  REQUIRE(unit.methods().size() == 1);
  return *unit.methods()[0];
}

CondChain chain(std::string_view text, Language language) {
  return parse_condition(tokenize(text, language), language);
}

const char* kFig12Src =
    "def f_gold ( n ) :\n"
    "    res = 0\n"
    "    x = 0\n"
    "    while ( x * x < n ) :\n"
    "        res += 1\n"
    "        x += 1\n"
    "    return res\n";

const char* kFig12Dst =
    "public static int f_gold ( int n ) {\n"
    "    int res = 0 ;\n"
    "    int x = 0 ;\n"
    "    while ( ( x * x < n ) && (x * x < n ) ) {\n"
    "        res ++ ;\n"
    "        x ++ ;\n"
    "    }\n"
    "    return res ;\n"
    "}\n";

}  // namespace

TEST_CASE("align_conditionals pairs by order") {
  MethodUnit src = method("def f ( n ) :\n    while n > 0 :\n        n -= 1\n    return n\n", Language::kPython);
  MethodUnit dst = method("int f ( int n ) { while ( n > 0 ) { n -- ; } return n ; }", Language::kJava);
  CondAlignment a = align_conditionals(src, dst);
  CHECK(a.pairs.size() == 1);
  CHECK(a.unmatched_src == 0);
  CHECK(a.unmatched_dst == 0);

  MethodUnit none = method("def f ( n ) :\n    return n\n", Language::kPython);
  MethodUnit two = method("int f ( int n ) { if ( n > 0 ) { } while ( n > 1 ) { } return n ; }", Language::kJava);
  CondAlignment b = align_conditionals(none, two);
  CHECK(b.pairs.empty());
  CHECK(b.unmatched_src == 0);
  CHECK(b.unmatched_dst == 2);

  MethodUnit if_while = method(
      "def f ( n ) :\n    if n > 0 :\n        n = 1\n    while n < 3 :\n        n += 1\n    return n\n",
      Language::kPython);
  MethodUnit while_if =
      method("int f ( int n ) { while ( n < 3 ) { n ++ ; } if ( n > 0 && n > 1 ) { n = 1 ; } return n ; }",
             Language::kJava);
  CondAlignment c = align_conditionals(if_while, while_if);
  REQUIRE(c.pairs.size() == 2);
  CHECK_FALSE(c.pairs[0].kind_match());
  CHECK_FALSE(c.pairs[1].kind_match());
  PruneOutcome skipped = prune_extra_clauses(c.pairs[1]);
  CHECK_FALSE(skipped.record.applicable);
  CHECK(skipped.record.notes.find("kind mismatch") != std::string::npos);
}

TEST_CASE("align_conditionals walks else-if chains in pre-order") {
  MethodUnit src = method(
      "def f ( n ) :\n    if n == 1 :\n        return 1\n    elif n == 2 :\n        while n :\n            n -= 1\n"
      "    return n\n",
      Language::kPython);
  MethodUnit dst = method(
      "int f ( int n ) { if ( n == 1 ) return 1 ; else if ( n == 2 && n > 0 ) { while ( n != 0 ) n -- ; } return n ; }",
      Language::kJava);
  CondAlignment a = align_conditionals(src, dst);
  REQUIRE(a.pairs.size() == 3);
  CHECK(a.pairs[1].dst.count() == 2);
  CHECK(a.pairs[2].dst_kind == StmtKind::kWhile);
}

TEST_CASE("prune duplicate clause") {
  CondPair pair{chain("x * x < n", Language::kPython), chain("( x * x < n ) && ( x * x < n )", Language::kJava),
                StmtKind::kWhile, StmtKind::kWhile};
  PruneOutcome out = prune_extra_clauses(pair);
  CHECK(out.record.applicable);
  CHECK(out.record.applied);
  CHECK(render(out.chain) == "( x * x < n )");
}

TEST_CASE("prune extra modulo clause") {
  CondPair pair{chain("x != 0", Language::kPython), chain("( x != 0 ) && ( x % 10 == 0 )", Language::kJava),
                StmtKind::kWhile, StmtKind::kWhile};
  CHECK(render(prune_extra_clauses(pair).chain) == "( x != 0 )");
  PruneOutcome matched = prune_extra_clauses(pair, PrunePolicy{PruneMode::kMatch, true});
  CHECK(render(matched.chain) == "( x != 0 )");
}

TEST_CASE("prune equal counts is identity") {
  CondPair pair{chain("a and b", Language::kPython), chain("a && b", Language::kJava), StmtKind::kIf, StmtKind::kIf};
  PruneOutcome out = prune_extra_clauses(pair);
  CHECK_FALSE(out.record.applicable);
  CHECK(out.chain.count() == 2);
}

TEST_CASE("match mode keeps order and warns when nothing matches") {
  CondPair pair{chain("a > 0 and not b", Language::kPython), chain("extra && a > 0 && ! b", Language::kJava),
                StmtKind::kIf, StmtKind::kIf};
  PruneOutcome out = prune_extra_clauses(pair, PrunePolicy{PruneMode::kMatch, true});
  CHECK(render(out.chain) == "a > 0 && ! b");
  CondPair miss{chain("q", Language::kPython), chain("r && s", Language::kJava), StmtKind::kIf, StmtKind::kIf};
  PruneOutcome warn = prune_extra_clauses(miss, PrunePolicy{PruneMode::kMatch, true});
  CHECK(warn.chain.count() == 2);
  CHECK(warn.record.notes.find("warning") != std::string::npos);
  CHECK_FALSE(warn.record.applied);
}

TEST_CASE("apply_post on the duplicated while condition") {
  PostResult out = apply_post(kFig12Src, kFig12Dst, Direction::kP2J);
  REQUIRE(out.records.size() == 1);
  CHECK(out.records[0].applied);
  CHECK(out.text.find("while ( ( x * x < n ) ) {") != std::string::npos);
  std::string dst = kFig12Dst;
  CHECK(out.text.substr(0, out.records[0].after_span.begin) == dst.substr(0, out.records[0].before_span.begin));
  PostResult again = apply_post(kFig12Src, out.text, Direction::kP2J);
  CHECK(again.text == out.text);
  CHECK_FALSE(again.records[0].applied);
}

TEST_CASE("apply_post leaves collapsed output alone") {
  std::string spam = "def ','','','','','','','','','','','','','',''";
  PostResult out = apply_post(kFig12Src, spam, Direction::kP2J);
  CHECK(out.text == spam);
  CHECK(out.records[0].notes.find("unparseable") != std::string::npos);
}

TEST_CASE("apply_post identical conditions") {
  const char* dst = "static int f_gold ( int n ) { int x = 0 ; while ( x * x < n ) { x ++ ; } return x ; }";
  PostResult out = apply_post(kFig12Src, dst, Direction::kP2J);
  CHECK(out.text == dst);
  CHECK_FALSE(out.records[0].applicable);
}

TEST_CASE("apply_post is not used for j2p") {
  PostResult out = apply_post("static int f_gold ( ) { return 0 ; }", "def f_gold ( ) :\n    return 0\n",
                              Direction::kJ2P);
  CHECK_FALSE(out.records[0].applicable);
}
