#include "transguard/visit.h"

namespace transguard {

namespace {

template <typename BlockT, typename Fn>
void walk_block(BlockT& block, const Fn& fn);

template <typename StmtT, typename Fn>
void walk_stmt(StmtT& stmt, const Fn& fn) {
  switch (stmt.kind) {
    case StmtKind::kFor:
      if (stmt.header.is_each) {
        fn(stmt.header.each);
      } else {
        for (auto& init : stmt.header.init) fn(init.tokens);
        for (auto& clause : stmt.header.cond.clauses) fn(clause);
        for (auto& update : stmt.header.update) fn(update.tokens);
      }
      walk_block(stmt.body, fn);
      break;
    case StmtKind::kWhile:
      for (auto& clause : stmt.cond.clauses) fn(clause);
      walk_block(stmt.body, fn);
      break;
    case StmtKind::kIf:
      for (auto& clause : stmt.cond.clauses) fn(clause);
      walk_block(stmt.body, fn);
      if (stmt.else_body) walk_block(*stmt.else_body, fn);
      break;
    case StmtKind::kBlock:
      walk_block(stmt.body, fn);
      break;
    default:
      fn(stmt.tokens);
      break;
  }
}

template <typename BlockT, typename Fn>
void walk_block(BlockT& block, const Fn& fn) {
  for (auto& stmt : block.stmts) walk_stmt(stmt, fn);
}

void stmts_of(const Stmt& stmt, const std::function<void(const Stmt&)>& fn) {
  fn(stmt);
  switch (stmt.kind) {
    case StmtKind::kFor:
      for (const auto& init : stmt.header.init) fn(init);
      for (const auto& update : stmt.header.update) fn(update);
      for_each_stmt(stmt.body, fn);
      break;
    case StmtKind::kWhile:
    case StmtKind::kBlock:
      for_each_stmt(stmt.body, fn);
      break;
    case StmtKind::kIf:
      for_each_stmt(stmt.body, fn);
      if (stmt.else_body) for_each_stmt(*stmt.else_body, fn);
      break;
    default:
      break;
  }
}

}  // namespace

void for_each_run(Block& block, const std::function<void(TokenRun&)>& fn) {
  walk_block(block, fn);
}

void for_each_run(Stmt& stmt, const std::function<void(TokenRun&)>& fn) { walk_stmt(stmt, fn); }

void for_each_run(const Block& block, const std::function<void(const TokenRun&)>& fn) {
  walk_block(block, fn);
}

void for_each_run(const Stmt& stmt, const std::function<void(const TokenRun&)>& fn) {
  walk_stmt(stmt, fn);
}

void for_each_stmt(const Block& block, const std::function<void(const Stmt&)>& fn) {
  for (const auto& stmt : block.stmts) stmts_of(stmt, fn);
}

}  // namespace transguard
