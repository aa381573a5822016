#pragma once

#include <random>
#include <sstream>
#include <string>

#include "mini_java.h"
#include "transguard/parser.h"
#include "transguard/pre_rules.h"
#include "transguard/visit.h"

namespace transguard::testing {

struct FuzzLoop {
  std::string java;
  long n = 0;
};

class LoopGen {
 public:
  explicit LoopGen(std::uint64_t seed) : rng_(seed) {}

  FuzzLoop next() {
    next_id_ = 0;
    std::ostringstream out;
    out << "static int f_gold ( int n ) {\n";
    out << "  int s = " << pick(0, 5) << " ;\n";
    out << "  int t = " << pick(0, 9) << " ;\n";
    loop(out, 0);
    if (chance(30)) loop(out, 0);
    out << "  return s ;\n}\n";
    return {out.str(), pick(0, 25)};
  }

 private:
  long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool chance(int pct) { return pick(0, 99) < pct; }

  void loop(std::ostringstream& out, int depth) {
    int id = next_id_++;
    std::string a = "a" + std::to_string(id), b = "b" + std::to_string(id);
    std::string pad(2 + depth * 2, ' ');
    std::string init;
    switch (pick(0, 2)) {
      case 0:
        init = "int " + a + " = " + std::to_string(pick(0, 3)) + " , " + b + " = n";
        break;
      case 1:
        out << pad << "int " << b << " = " << pick(5, 20) << " ;\n";
        init = "int " + a + " = " + std::to_string(pick(0, 3));
        break;
      default:
        out << pad << "int " << a << " = " << pick(0, 3) << " ;\n";
        out << pad << "int " << b << " = n ;\n";
        break;
    }

    const std::string clauses[] = {a + " < " + b, a + " < " + std::to_string(pick(8, 30)), "s < " + std::to_string(pick(50, 400)),
                                   b + " > 0", "( " + a + " + " + b + " ) % 7 != 3", a + " * " + a + " <= 400"};
    int k = static_cast<int>(pick(0, 3));
    std::string op = chance(75) ? " && " : " || ";
    std::string cond;
    for (int i = 0; i < k; ++i) {
      if (i) cond += op;
      std::string c = clauses[pick(0, 5)];
      cond += k > 1 && chance(50) ? "( " + c + " )" : c;
    }

    const std::string updates[] = {a + " ++", "++ " + a, a + " += 2", b + " --", b + " -= 3", "t = ( t * 3 + 1 ) % 101"};
    std::string update = updates[pick(0, 2)];
    if (chance(70)) update += " , " + updates[pick(3, 5)];

    out << pad << "for ( " << init << " ; " << cond << " ; " << update << " ) {\n";
    // Every update advances `a`, so this guard bounds the loop.
    out << pad << "  if ( " << a << " >= " << pick(10, 40) << " ) break ;\n";
    int stmts = static_cast<int>(pick(1, 4));
    for (int i = 0; i < stmts; ++i) body_stmt(out, depth, a, b);
    switch (pick(0, 5)) {
      case 0:
        out << pad << "  continue ;\n";
        break;
      case 1:
        out << pad << "  if ( s > " << pick(20, 200) << " ) break ;\n";
        break;
      default:
        break;
    }
    out << pad << "}\n";
  }

  void body_stmt(std::ostringstream& out, int depth, const std::string& a, const std::string& b) {
    std::string pad(4 + depth * 2, ' ');
    long m = pick(2, 5), r = pick(0, 1);
    switch (pick(0, 8)) {
      case 0:
        out << pad << "s += " << a << " ;\n";
        break;
      case 1:
        out << pad << "t = ( t + " << b << " ) % 97 ;\n";
        break;
      case 2:
        out << pad << "if ( " << a << " % " << m << " == " << r << " ) {\n"
            << pad << "  s += " << m << " ;\n" << pad << "  continue ;\n" << pad << "}\n";
        break;
      case 3:
        out << pad << "if ( " << a << " % " << m << " == " << r << " ) continue ;\n";
        break;
      case 4:
        out << pad << "if ( s > " << pick(30, 300) << " ) break ;\n";
        break;
      case 5:
        out << pad << "if ( t == " << pick(0, 20) << " ) {\n" << pad << "  return s ;\n" << pad << "}\n";
        break;
      case 6:
        out << pad << "if ( " << a << " > " << b << " ) {\n" << pad << "  t ++ ;\n" << pad << "}\n"
            << pad << "else {\n" << pad << "  s -= 1 ;\n" << pad << "  continue ;\n" << pad << "}\n";
        break;
      case 7: {
        std::string w = "w" + std::to_string(next_id_++);
        out << pad << "int " << w << " = 0 ;\n"
            << pad << "while ( " << w << " < 3 ) {\n" << pad << "  " << w << " ++ ;\n"
            << pad << "  if ( " << w << " == 2 ) continue ;\n" << pad << "  s += " << w << " ;\n" << pad << "}\n";
        break;
      }
      default:
        if (depth == 0) loop(out, depth + 1);
        else out << pad << "s = s + 1 ;\n";
        break;
    }
  }

  std::mt19937_64 rng_;
  int next_id_ = 0;
};

struct R2Check {
  bool converted = false;
  bool same_store = false;
  bool same_trace = false;
  std::string error;
  bool ok() const { return converted && same_store && same_trace && error.empty(); }
};

inline R2Check check_r2(const FuzzLoop& loop) {
  R2Check check;
  try {
    auto unit = parse_source(loop.java, Language::kJava);
    PreConfig cfg;
    cfg.rules = {RuleId::kR2Loop};
    cfg.all_loops = true;
    auto pre = apply_pre(unit, cfg);
    auto converted = parse_source(pre.text, Language::kJava);
    const MethodUnit& before = find_focal(unit, "f_gold");
    const MethodUnit& after = find_focal(converted, "f_gold");
    bool any_for = false;
    for_each_stmt(after.body, [&](const Stmt& s) { any_for |= s.kind == StmtKind::kFor; });
    check.converted = !any_for;

    MiniJava run_for, run_while;
    run_for.run(before, {{"n", loop.n}});
    run_while.run(after, {{"n", loop.n}});
    check.same_store = run_for.store() == run_while.store();
    check.same_trace = run_for.trace() == run_while.trace();
  } catch (const std::exception& e) {
    check.error = e.what();
  }
  return check;
}

}  // namespace transguard::testing
