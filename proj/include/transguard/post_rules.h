#pragma once

#include <string>
#include <vector>

#include "transguard/mutation.h"
#include "transguard/syntax.h"

namespace transguard {

enum class PruneMode { kCount, kMatch };

std::string_view to_string(PruneMode mode);
PruneMode prune_mode_from_string(std::string_view text);

struct PrunePolicy {
  PruneMode mode = PruneMode::kCount;
  // Match mode compares clauses after mapping Python spellings to Java ones
  // and dropping parentheses.
  bool normalize = true;
};

struct CondPair {
  CondChain src;
  CondChain dst;
  StmtKind src_kind = StmtKind::kIf;
  StmtKind dst_kind = StmtKind::kIf;

  bool kind_match() const { return src_kind == dst_kind; }
};

struct CondAlignment {
  std::vector<CondPair> pairs;
  std::size_t unmatched_src = 0;
  std::size_t unmatched_dst = 0;
};

/// Pairs the if / else-if / while conditions of two methods in pre-order.
CondAlignment align_conditionals(const MethodUnit& src, const MethodUnit& dst);

struct PruneOutcome {
  CondChain chain;          // the dst chain after pruning
  std::vector<std::size_t> kept;  // indices of kept dst clauses
  MutationRecord record;
};

/// R4 on one pair. Clauses are kept in order and never edited.
PruneOutcome prune_extra_clauses(const CondPair& pair, const PrunePolicy& policy = {});

/// Clause text used by match mode.
std::string normalize_clause(const TokenRun& clause, bool map_python = true);

struct PostResult {
  std::string text;
  std::vector<MutationRecord> records;
};

/// R4 over a whole translation: aligns the focal method of `src_text`
/// with the matching method of `dst_text` and splices pruned conditions
/// into `dst_text`. Only condition bytes change. A dst that does not parse
/// is returned unchanged with a note.
PostResult apply_post(std::string_view src_text, std::string_view dst_text, Direction direction,
                      const PrunePolicy& policy = {}, std::string_view focal = "f_gold");

}  // namespace transguard
