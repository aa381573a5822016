#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "transguard/token.h"

namespace transguard {

enum class LogicalOp { kAnd, kOr, kSingle };

std::string_view to_string(LogicalOp op);

/// A condition split into its top-level homogeneous clause chain. Only a
/// chain made entirely of `&&` (or entirely of `||`; `and`/`or` in Python)
/// is decomposed; anything else is a single clause.
struct CondChain {
  LogicalOp op = LogicalOp::kSingle;
  std::vector<TokenRun> clauses;
  Language language = Language::kJava;
  // Bytes of the condition as written, including any redundant outer
  // parentheses that were stripped before splitting.
  Span span;
  // Redundant parentheses around the whole condition, re-emitted on render.
  int outer_parens = 0;

  std::size_t count() const { return clauses.size(); }
  bool empty() const { return clauses.empty(); }
};

struct Stmt;

struct Block {
  std::vector<Stmt> stmts;
  // Java: written with braces. An unbraced body holds exactly one statement.
  bool braced = true;
  // Python: suite written on the header line (`if x : return y`).
  bool inline_suite = false;
  TokenRun trailing_comments;
};

struct Declarator {
  std::string name;
  TokenRun init;  // empty when there is no initializer
};

struct ForHeader {
  // Enhanced for (`T x : xs`) in Java, every Python for loop.
  bool is_each = false;
  TokenRun each;
  std::vector<Stmt> init;
  CondChain cond;
  std::vector<Stmt> update;
};

enum class StmtKind {
  kFor,
  kWhile,
  kIf,
  kReturn,
  kBreak,
  kContinue,
  kDecl,
  kExpr,
  kBlock,
  kOpaque,
};

std::string_view to_string(StmtKind kind);

struct Stmt {
  StmtKind kind = StmtKind::kOpaque;
  TokenRun comments;
  // Simple statements: the statement's tokens without the Java `;`.
  // Opaque statements: the raw token run, markers included.
  TokenRun tokens;
  Span span;

  ForHeader header;      // kFor
  CondChain cond;        // kWhile, kIf
  Block body;            // kFor, kWhile, kIf (then-branch), kBlock
  std::optional<Block> else_body;  // kIf
  // The else branch is a single chained `else if` / `elif`.
  bool else_if = false;

  // kDecl
  TokenRun decl_type;
  std::vector<Declarator> declarators;
};

struct Param {
  std::string name;
  TokenRun tokens;      // the full parameter as written
  TokenRun type;        // declared type (Java), annotation (Python); may be empty
  int array_dims = 0;   // Java `[ ]` pairs on type or name
  bool varargs = false;
};

struct MethodUnit {
  std::string name;
  // Tokens before the name: modifiers and return type (Java), `def` (Python).
  TokenRun modifiers;
  std::vector<Param> params;
  // Tokens between `)` and the body: `throws ...` (Java), `-> T` (Python).
  TokenRun suffix;
  Block body;
  TokenRun comments;
  Span span;       // first to last token
  int depth = 0;   // nesting level (class members are 1)
};

struct OtherItem {
  TokenRun tokens;
  Span span;
  int depth = 0;
};

using Item = std::variant<MethodUnit, OtherItem>;

struct SyntaxUnit {
  Language language = Language::kJava;
  std::vector<Item> items;
  std::string source;
  // Byte ranges owned by each item; they partition `source`.
  std::vector<Span> ownership;

  std::vector<const MethodUnit*> methods() const;
  std::vector<const MethodUnit*> methods_named(std::string_view name) const;
};

}  // namespace transguard
