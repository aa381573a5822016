#pragma once

#include <random>
#include <string>
#include <vector>

namespace transguard::testing {

struct CondSpec {
  bool is_while = false;
  bool use_or = false;
  std::vector<std::string> src;   // Python clauses
  std::vector<std::string> dst;   // Java clauses
  std::vector<std::string> seps;  // bytes between dst clauses, size dst - 1
};

// A Python source and Java translation whose conditionals line up one to
// one, with the Java text expected after keeping min(n, m) clauses of each.
struct PruneInstance {
  std::vector<CondSpec> conds;
  std::string source;
  std::string translation;
  std::string expected;
};

class PruneGen {
 public:
  explicit PruneGen(std::uint64_t seed) : rng_(seed) {}

  PruneInstance next() {
    PruneInstance inst;
    int count = static_cast<int>(pick(1, 3));
    for (int i = 0; i < count; ++i) inst.conds.push_back(spec());
    std::string py = "def f_gold ( x , y ) :\n";
    std::string java = "static int f_gold ( int x , int y ) {\n";
    std::string expected = java;
    for (const auto& c : inst.conds) {
      std::string kw = c.is_while ? "while" : "if";
      std::string py_op = c.use_or ? " or " : " and ";
      std::string py_chain;
      for (std::size_t k = 0; k < c.src.size(); ++k) py_chain += (k ? py_op : "") + c.src[k];
      py += "    " + kw + " " + py_chain + " :\n        x -= 1\n";
      std::size_t keep = std::min(c.src.size(), c.dst.size());
      std::string full, kept;
      for (std::size_t k = 0; k < c.dst.size(); ++k) {
        full += (k ? c.seps[k - 1] : "") + c.dst[k];
        if (k < keep) kept += (k ? c.seps[k - 1] : "") + c.dst[k];
      }
      java += "  " + kw + " ( " + full + " ) {\n    x -- ;\n  }\n";
      expected += "  " + kw + " ( " + kept + " ) {\n    x -- ;\n  }\n";
    }
    py += "    return x\n";
    java += "  return x ;\n}\n";
    expected += "  return x ;\n}\n";
    inst.source = py;
    inst.translation = java;
    inst.expected = expected;
    return inst;
  }

 private:
  long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  std::string java_clause() {
    std::string k = std::to_string(pick(0, 9));
    switch (pick(0, 5)) {
      case 0: return "x > " + k;
      case 1: return "( y % " + std::to_string(pick(2, 9)) + " == 0 )";
      case 2: return "x  !=  " + k;
      case 3: return "( x * x < y )";
      case 4: return "y >= x - " + k;
      default: return "( ( x + y ) % 10 != " + k + " )";
    }
  }

  std::string py_clause() {
    std::string k = std::to_string(pick(0, 9));
    switch (pick(0, 3)) {
      case 0: return "x > " + k;
      case 1: return "( y % 3 == 0 )";
      case 2: return "not x == " + k;
      default: return "x * x < y";
    }
  }

  CondSpec spec() {
    CondSpec c;
    c.is_while = pick(0, 1);
    c.use_or = pick(0, 3) == 0;
    long n = pick(1, 5), m = pick(1, 5);
    for (long i = 0; i < n; ++i) c.src.push_back(py_clause());
    for (long i = 0; i < m; ++i) c.dst.push_back(java_clause());
    const char* ands[] = {" && ", "&&", "  &&\n      ", " &&  "};
    const char* ors[] = {" || ", "||", "  ||\n      ", " ||  "};
    for (long i = 1; i < m; ++i) c.seps.push_back((c.use_or ? ors : ands)[pick(0, 3)]);
    return c;
  }

  std::mt19937_64 rng_;
};

}  // namespace transguard::testing
