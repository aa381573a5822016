#include "doctest.h"
#include "prune_gen.h"
#include "transguard/parser.h"
#include "transguard/post_rules.h"
#include "transguard/pre_rules.h"

using namespace transguard;
using namespace transguard::testing;

TEST_CASE("prune laws hold on 600 generated conditionals") {
  PruneGen gen(4242);
  int pairs = 0;
  while (pairs < 600) {
    PruneInstance inst = gen.next();
    CAPTURE(inst.source);
    CAPTURE(inst.translation);
    auto once = apply_post(inst.source, inst.translation, Direction::kP2J);

    // Byte identity: kept clauses and the separators between them are
    // exactly the leading bytes of the original chain.
    CHECK(once.text == inst.expected);

    auto out = parse_source(once.text, Language::kJava);
    auto src = parse_source(inst.source, Language::kPython);
    auto align = align_conditionals(find_focal(src, "f_gold"), find_focal(out, "f_gold"));
    REQUIRE(align.pairs.size() == inst.conds.size());
    for (std::size_t i = 0; i < inst.conds.size(); ++i) {
      CHECK(align.pairs[i].dst.count() == std::min(inst.conds[i].src.size(), inst.conds[i].dst.size()));
    }
    pairs += static_cast<int>(inst.conds.size());

    auto twice = apply_post(inst.source, once.text, Direction::kP2J);
    CHECK(twice.text == once.text);
  }
}
