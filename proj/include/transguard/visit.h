#pragma once

#include <functional>

#include "transguard/syntax.h"

namespace transguard {

/// Calls `fn` on every token run a statement tree holds: simple statement
/// tokens, condition clauses, for-header parts and opaque runs.
void for_each_run(Block& block, const std::function<void(TokenRun&)>& fn);
void for_each_run(Stmt& stmt, const std::function<void(TokenRun&)>& fn);
void for_each_run(const Block& block, const std::function<void(const TokenRun&)>& fn);
void for_each_run(const Stmt& stmt, const std::function<void(const TokenRun&)>& fn);

/// Pre-order walk over statements, including for-header init/update.
void for_each_stmt(const Block& block, const std::function<void(const Stmt&)>& fn);

/// Re-derives Decl fields from `tokens` after a rewrite.
void refresh_decl(Stmt& stmt);

}  // namespace transguard
