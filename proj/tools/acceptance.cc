// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "goldens.h"
#include "loop_fuzz.h"
#include "prune_gen.h"
#include "roundtrip.h"
#include "transguard/collapse.h"
#include "transguard/eval.h"

using namespace transguard;
using namespace transguard::testing;

namespace {

// Time limits in seconds; 0 means no limit.
constexpr double kGoldenLimit = 1;
constexpr double kFuzzLimit = 10;
constexpr double kPruneLimit = 5;
constexpr double kSuccessLimit = 30;

constexpr int kFuzzLoops = 300;
constexpr std::uint64_t kFuzzSeed = 20240917;
constexpr int kPrunePairs = 600;
constexpr std::uint64_t kPruneSeed = 4242;
constexpr int kCleanMethods = 20;

// Expected category percentages, indexed by Category.
constexpr double kTable1J2P[] = {18, 12, 38, 0, 14, 22};
constexpr double kTable1P2J[] = {38, 0, 4, 50, 16, 18};
constexpr double kRateTolerance = 1e-9;

struct Check {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit, const std::function<Check()>& body) {
  auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    c = body();
  } catch (const std::exception& e) {
    c = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = limit <= 0 || secs < limit;
  bool pass = c.ok && in_time;
  failures += !pass;
  char timing[64];
  if (limit > 0) std::snprintf(timing, sizeof timing, "%.2fs < %gs", secs, limit);
  else std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << (pass ? "PASS" : "FAIL") << " " << id << " " << name << ": " << c.detail << " (" << timing
            << (in_time ? "" : ", too slow") << ")\n";
}

Check goldens() {
  auto all = load_goldens();
  int match = 0;
  std::string bad;
  for (const auto& g : all) {
    if (run_golden(g).match()) ++match;
    else bad += " " + g.name;
  }
  Check c{match == static_cast<int>(all.size()) && all.size() >= 6, ""};
  c.detail = std::to_string(match) + "/" + std::to_string(all.size()) + " figures match" +
             (bad.empty() ? "" : ", mismatched:" + bad);
  return c;
}

Check r2_fuzz() {
  LoopGen gen(kFuzzSeed);
  int ok = 0;
  for (int i = 0; i < kFuzzLoops; ++i) ok += check_r2(gen.next()).ok();
  return {ok == kFuzzLoops, std::to_string(ok) + "/" + std::to_string(kFuzzLoops) +
                                " loops with identical stores and traces"};
}

Check prune_laws() {
  PruneGen gen(kPruneSeed);
  int pairs = 0, count_ok = 0, bytes_ok = 0, idem_ok = 0, instances = 0;
  while (pairs < kPrunePairs) {
    PruneInstance inst = gen.next();
    ++instances;
    auto once = apply_post(inst.source, inst.translation, Direction::kP2J);
    bytes_ok += once.text == inst.expected;
    idem_ok += apply_post(inst.source, once.text, Direction::kP2J).text == once.text;
    auto out = parse_source(once.text, Language::kJava);
    auto src = parse_source(inst.source, Language::kPython);
    auto align = align_conditionals(find_focal(src, "f_gold"), find_focal(out, "f_gold"));
    for (std::size_t i = 0; i < inst.conds.size(); ++i) {
      std::size_t want = std::min(inst.conds[i].src.size(), inst.conds[i].dst.size());
      count_ok += i < align.pairs.size() && align.pairs[i].dst.count() == want;
    }
    pairs += static_cast<int>(inst.conds.size());
  }
  std::ostringstream d;
  d << pairs << " pairs: count " << count_ok << "/" << pairs << ", prefix bytes " << bytes_ok << "/" << instances
    << ", idempotent " << idem_ok << "/" << instances;
  return {count_ok == pairs && bytes_ok == instances && idem_ok == instances, d.str()};
}

Check collapse() {
  const std::pair<const char*, CollapseClass> figures[] = {
      {"collapse/fig1_import_spam.py", CollapseClass::kImportSpam},
      {"collapse/fig2_number_spam.py", CollapseClass::kNumberSpam},
      {"collapse/fig3_comma_spam.py", CollapseClass::kCommaSpam},
      {"collapse/fig4_spacetoken_spam.py", CollapseClass::kSpacetokenSpam},
  };
  int exact = 0;
  for (const auto& [file, cls] : figures) {
    exact += classify(fixture(file), Language::kPython).classes == std::set{cls};
  }
  auto clean = source_files("clean");
  int fp = 0;
  for (const auto& path : clean) {
    Language lang = language_of(path);
    std::string text = read_file(path);
    SyntaxUnit unit = parse_source(text, lang);
    fp += !classify(text, lang, unit.methods()[0]).clean();
  }
  std::ostringstream d;
  d << exact << "/4 figures exact, " << fp << " false positives over " << clean.size() << " clean methods";
  return {exact == 4 && fp == 0 && static_cast<int>(clean.size()) == kCleanMethods, d.str()};
}

EvalReport corpus_eval(int arr_threshold) {
  Corpus corpus = ingest(fixture_dir() / "corpus");
  auto fixtures = std::make_shared<MockFixtures>(fixtures_from_corpus(corpus));
  PipelineConfig config;
  config.pre.arr_threshold = arr_threshold;
  auto translator = mock_translator(MockOptions{MockProfile::kTable1, 1, "f_gold", fixtures});
  return run_eval(corpus.cases, config, *translator);
}

Check table1() {
  EvalReport report = corpus_eval(1);
  bool ok = report.directions.size() == 2;
  std::string d;
  for (const auto& dr : report.directions) {
    const double* want = dr.direction == Direction::kJ2P ? kTable1J2P : kTable1P2J;
    d += (d.empty() ? "" : "; ") + std::string(to_string(dr.direction));
    for (std::size_t i = 0; i < dr.rows.size(); ++i) {
      ok &= dr.cases == 50 && dr.rows[i].pct == want[static_cast<int>(dr.rows[i].category)];
      d += (i ? "/" : " ") + format_pct(dr.rows[i].pct);
    }
  }
  return {ok, d};
}

Check success_rate() {
  // Two arr parameters before R3b fires; see README.
  EvalReport report = corpus_eval(2);
  bool ok = true;
  std::string d;
  for (const auto& dr : report.directions) {
    d += (d.empty() ? "" : "; ") + std::string(to_string(dr.direction));
    for (const auto& r : dr.rules) {
      if (!r.applicable) continue;
      ok &= r.success == r.applicable && r.rate && std::abs(*r.rate - 1.0) < kRateTolerance;
      d += " " + std::string(to_string(r.rule)) + " " + std::to_string(r.success) + "/" + std::to_string(r.applicable);
    }
  }
  return {ok, d};
}

Check round_trips() {
  auto files = source_files("");
  int ok = 0;
  for (const auto& f : files) {
    RoundTrip rt = round_trip(f);
    ok += rt.equal && rt.error.empty();
  }
  return {ok == static_cast<int>(files.size()) && !files.empty(),
          std::to_string(ok) + "/" + std::to_string(files.size()) + " fixture files stable"};
}

}  // namespace

int main() {
  criterion(1, "figure goldens", kGoldenLimit, goldens);
  criterion(2, "R2 semantic preservation", kFuzzLimit, r2_fuzz);
  criterion(3, "clause-prune laws", kPruneLimit, prune_laws);
  criterion(4, "collapse detector", 0, collapse);
  criterion(5, "category table", 0, table1);
  criterion(6, "100% success rate", kSuccessLimit, success_rate);
  criterion(7, "round-trip parsing", 0, round_trips);
  return failures ? 1 : 0;
}
