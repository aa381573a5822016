#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "transguard/syntax.h"

namespace transguard {

enum class CollapseClass { kImportSpam, kNumberSpam, kCommaSpam, kSpacetokenSpam, kStructural };

std::string_view to_string(CollapseClass cls);

struct CollapseThresholds {
  // Consecutive import entries (modules across adjacent import lines)
  // containing a repeated module.
  int import_run = 3;
  // Fraction of non-empty lines that are imports (strictly greater).
  double import_ratio = 0.30;
  // Consecutive comma-separated numeric literals.
  int number_run = 16;
  // (length - distinct) / length at or above this counts as repetitive.
  double number_repeat = 0.75;
  // Consecutive `,` tokens or comma/quote-only string literals.
  int comma_run = 10;
  int spacetoken_count = 3;
};

struct CollapseEvidence {
  CollapseClass cls = CollapseClass::kStructural;
  Span span;
  int count = 0;
  std::string detail;
};

struct CollapseVerdict {
  std::set<CollapseClass> classes;
  std::vector<CollapseEvidence> evidence;

  bool clean() const { return classes.empty(); }
  bool has(CollapseClass cls) const { return classes.count(cls) > 0; }
  /// Class names joined by ",", or "clean".
  std::string summary() const;
};

/// Classifies translator output. Never throws; garbage is the expected input.
/// `original` enables the Structural check.
CollapseVerdict classify(std::string_view text, Language language, const MethodUnit* original = nullptr,
                         const CollapseThresholds& thresholds = {});

}  // namespace transguard
