#include "transguard/parser.h"

#include <algorithm>

#include "transguard/visit.h"

namespace transguard {

std::string_view to_string(StmtKind kind) {
  switch (kind) {
    case StmtKind::kFor: return "for";
    case StmtKind::kWhile: return "while";
    case StmtKind::kIf: return "if";
    case StmtKind::kReturn: return "return";
    case StmtKind::kBreak: return "break";
    case StmtKind::kContinue: return "continue";
    case StmtKind::kDecl: return "decl";
    case StmtKind::kExpr: return "expr";
    case StmtKind::kBlock: return "block";
    case StmtKind::kOpaque: return "opaque";
  }
  return "?";
}

std::vector<const MethodUnit*> SyntaxUnit::methods() const {
  std::vector<const MethodUnit*> out;
  for (const auto& item : items) {
    if (const auto* method = std::get_if<MethodUnit>(&item)) out.push_back(method);
  }
  return out;
}

std::vector<const MethodUnit*> SyntaxUnit::methods_named(std::string_view name) const {
  std::vector<const MethodUnit*> out;
  for (const auto* method : methods()) {
    if (method->name == name) out.push_back(method);
  }
  return out;
}

namespace {

using Range = std::pair<std::size_t, std::size_t>;

bool opens(const Token& t) { return t.is("(") || t.is("[") || t.is("{"); }
bool closes(const Token& t) { return t.is(")") || t.is("]") || t.is("}"); }

TokenRun slice(const TokenRun& toks, std::size_t begin, std::size_t end) {
  end = std::min(end, toks.size());
  if (begin >= end) return {};
  return TokenRun(toks.begin() + static_cast<long>(begin), toks.begin() + static_cast<long>(end));
}

TokenRun without_comments(const TokenRun& run) {
  TokenRun out;
  for (const auto& t : run) {
    if (!t.is_comment()) out.push_back(t);
  }
  return out;
}

// Splits at depth-0 occurrences of `sep`, tracking (), [] and {}.
std::vector<TokenRun> split_top(const TokenRun& run, std::string_view sep) {
  std::vector<TokenRun> parts(1);
  int depth = 0;
  for (const auto& t : run) {
    if (opens(t)) ++depth;
    if (closes(t)) --depth;
    if (depth == 0 && t.is(sep)) {
      parts.emplace_back();
      continue;
    }
    parts.back().push_back(t);
  }
  return parts;
}

// Same as split_top but also treats `<` `>` as brackets (Java type lists).
std::vector<TokenRun> split_params(const TokenRun& run) {
  std::vector<TokenRun> parts;
  if (run.empty()) return parts;
  parts.emplace_back();
  int depth = 0;
  for (const auto& t : run) {
    if (opens(t) || t.is("<")) ++depth;
    if (closes(t) || t.is(">")) --depth;
    if (t.is(">>")) depth -= 2;
    if (t.is(">>>")) depth -= 3;
    if (depth == 0 && t.is(",")) {
      parts.emplace_back();
      continue;
    }
    parts.back().push_back(t);
  }
  return parts;
}

bool is_java_primitive(const Token& t) {
  static constexpr std::string_view kPrims[] = {"int",   "long",    "short", "byte",
                                                "char",  "boolean", "float", "double"};
  if (t.kind != TokenKind::kKeyword) return false;
  for (auto p : kPrims) {
    if (t.text == p) return true;
  }
  return false;
}

// Parses a Java type at run[i]; returns the index after it or npos.
std::size_t skip_java_type(const TokenRun& s, std::size_t i) {
  auto at = [&](std::size_t k) -> const Token* { return k < s.size() ? &s[k] : nullptr; };
  while (at(i) && (at(i)->is("final") || at(i)->is("@"))) {
    if (at(i)->is("@")) {
      i += 2;
      if (at(i) && at(i)->is("(")) {
        int depth = 0;
        for (; i < s.size(); ++i) {
          if (s[i].is("(")) ++depth;
          if (s[i].is(")") && --depth == 0) break;
        }
        ++i;
      }
    } else {
      ++i;
    }
  }
  if (!at(i)) return std::string::npos;
  if (is_java_primitive(*at(i))) {
    ++i;
  } else if (at(i)->is_identifier()) {
    ++i;
    while (at(i) && at(i)->is(".") && at(i + 1) && at(i + 1)->is_identifier()) i += 2;
    if (at(i) && at(i)->is("<")) {
      int depth = 0;
      for (; i < s.size(); ++i) {
        const Token& t = s[i];
        if (t.is("<")) ++depth;
        else if (t.is(">")) --depth;
        else if (t.is(">>")) depth -= 2;
        else if (t.is(">>>")) depth -= 3;
        else if (!(t.is_identifier() || t.is(",") || t.is(".") || t.is("?") || t.is("[") || t.is("]") ||
                   t.is("extends") || t.is("super") || is_java_primitive(t))) {
          return std::string::npos;
        }
        if (depth <= 0) break;
      }
      if (depth != 0) return std::string::npos;
      ++i;
    }
  } else {
    return std::string::npos;
  }
  while (at(i) && at(i)->is("[") && at(i + 1) && at(i + 1)->is("]")) i += 2;
  return i;
}

bool looks_like_java_decl(const TokenRun& s) {
  std::size_t i = skip_java_type(s, 0);
  if (i == std::string::npos || i >= s.size() || !s[i].is_identifier()) return false;
  if (i + 1 == s.size()) return true;
  const Token& next = s[i + 1];
  if (next.is("=") || next.is(",")) return true;
  return next.is("[") && i + 2 < s.size() && s[i + 2].is("]");
}

}  // namespace

void refresh_decl(Stmt& stmt) {
  stmt.decl_type.clear();
  stmt.declarators.clear();
  TokenRun s = without_comments(stmt.tokens);
  std::size_t type_end = skip_java_type(s, 0);
  if (type_end == std::string::npos) return;
  stmt.decl_type = slice(s, 0, type_end);
  for (auto& part : split_top(slice(s, type_end, s.size()), ",")) {
    if (part.empty() || !part[0].is_identifier()) continue;
    Declarator d;
    d.name = part[0].text;
    for (std::size_t k = 1; k < part.size(); ++k) {
      if (part[k].is("=")) {
        d.init = slice(part, k + 1, part.size());
        break;
      }
    }
    stmt.declarators.push_back(std::move(d));
  }
}

namespace {

// ---------------------------------------------------------------------------
// Java statements

class JavaStmtParser {
 public:
  JavaStmtParser(const TokenRun& toks, std::size_t begin, std::size_t end, bool lenient)
      : toks_(toks), pos_(begin), end_(end), lenient_(lenient) {}

  Block parse_statements() {
    Block block;
    while (true) {
      TokenRun comments = take_comments();
      if (at_end()) {
        block.trailing_comments = std::move(comments);
        break;
      }
      if (peek().is("}")) {
        if (!lenient_) throw Error(ErrorKind::kParse, "unexpected '}'", peek().span);
        ++pos_;
        continue;
      }
      Stmt stmt = parse_stmt();
      stmt.comments.insert(stmt.comments.begin(), comments.begin(), comments.end());
      block.stmts.push_back(std::move(stmt));
    }
    return block;
  }

  std::size_t position() const { return pos_; }

 private:
  bool at_end() const { return pos_ >= end_; }
  const Token& peek(std::size_t ahead = 0) const {
    static const Token kEnd{TokenKind::kPunctuation, "", Span{}};
    std::size_t i = pos_;
    while (i < end_ && toks_[i].is_comment()) ++i;
    for (std::size_t n = 0; n < ahead && i < end_; ++n) {
      ++i;
      while (i < end_ && toks_[i].is_comment()) ++i;
    }
    return i < end_ ? toks_[i] : kEnd;
  }

  TokenRun take_comments() {
    TokenRun out;
    while (pos_ < end_ && toks_[pos_].is_comment()) out.push_back(toks_[pos_++]);
    return out;
  }

  [[noreturn]] void fail(const std::string& message) const {
    Span span = pos_ < toks_.size() ? toks_[pos_].span : Span{};
    throw Error(ErrorKind::kParse, message, span);
  }

  void expect(std::string_view text) {
    take_comments();
    if (at_end() || !toks_[pos_].is(text)) fail("expected '" + std::string(text) + "'");
    ++pos_;
  }

  // Index of the bracket matching the opener at `open`, bounded by end_.
  std::size_t match(std::size_t open) const {
    int depth = 0;
    for (std::size_t i = open; i < end_; ++i) {
      if (opens(toks_[i])) ++depth;
      if (closes(toks_[i]) && --depth == 0) return i;
    }
    return std::string::npos;
  }

  // Consumes `( ... )`, returning the inner tokens.
  TokenRun paren_group() {
    take_comments();
    if (at_end() || !toks_[pos_].is("(")) fail("expected '('");
    std::size_t close = match(pos_);
    if (close == std::string::npos) {
      if (!lenient_) fail("unbalanced parentheses");
      close = end_;
    }
    TokenRun inner = slice(toks_, pos_ + 1, close);
    pos_ = std::min(close + 1, end_);
    return inner;
  }

  Block parse_body() {
    take_comments();
    if (!at_end() && toks_[pos_].is("{")) return parse_braced();
    Block block;
    block.braced = false;
    if (at_end()) {
      if (!lenient_) fail("expected statement");
      return block;
    }
    block.stmts.push_back(parse_stmt());
    return block;
  }

  Block parse_braced() {
    std::size_t close = match(pos_);
    if (close == std::string::npos) {
      if (!lenient_) fail("unbalanced braces");
      close = end_;
    }
    JavaStmtParser inner(toks_, pos_ + 1, close, lenient_);
    Block block = inner.parse_statements();
    block.braced = true;
    pos_ = std::min(close + 1, end_);
    return block;
  }

  // Consumes through the next depth-0 `;` (or a stray `}` in lenient mode).
  std::size_t simple_end() {
    int depth = 0;
    for (std::size_t i = pos_; i < end_; ++i) {
      const Token& t = toks_[i];
      if (opens(t)) ++depth;
      if (closes(t)) {
        if (depth == 0) {
          if (!lenient_) fail("expected ';'");
          return i;
        }
        --depth;
      }
      if (depth == 0 && t.is(";")) return i;
    }
    if (!lenient_) fail("expected ';'");
    return end_;
  }

  Stmt finish(Stmt stmt, std::size_t begin) {
    stmt.span = covering_span(slice(toks_, begin, pos_));
    return stmt;
  }

  Stmt opaque_from(std::size_t begin) {
    Stmt stmt;
    stmt.kind = StmtKind::kOpaque;
    stmt.tokens = slice(toks_, begin, pos_);
    return finish(std::move(stmt), begin);
  }

  Stmt parse_stmt() {
    take_comments();
    std::size_t begin = pos_;
    const Token& t = toks_[pos_];

    if (t.is("{")) {
      Stmt stmt;
      stmt.kind = StmtKind::kBlock;
      stmt.body = parse_braced();
      return finish(std::move(stmt), begin);
    }
    if (t.is("for")) return parse_for();
    if (t.is("while")) {
      ++pos_;
      Stmt stmt;
      stmt.kind = StmtKind::kWhile;
      stmt.cond = parse_condition(paren_group(), Language::kJava);
      stmt.body = parse_body();
      return finish(std::move(stmt), begin);
    }
    if (t.is("if")) return parse_if();
    if (t.is("do")) {
      ++pos_;
      parse_body();
      expect("while");
      paren_group();
      expect(";");
      return opaque_from(begin);
    }
    if (t.is("switch") || t.is("synchronized")) {
      ++pos_;
      paren_group();
      take_comments();
      if (!at_end() && toks_[pos_].is("{")) parse_braced();
      return opaque_from(begin);
    }
    if (t.is("try")) {
      ++pos_;
      if (peek().is("(")) paren_group();
      take_comments();
      if (!at_end() && toks_[pos_].is("{")) parse_braced();
      while (peek().is("catch")) {
        take_comments();
        ++pos_;
        paren_group();
        take_comments();
        if (!at_end() && toks_[pos_].is("{")) parse_braced();
      }
      if (peek().is("finally")) {
        take_comments();
        ++pos_;
        take_comments();
        if (!at_end() && toks_[pos_].is("{")) parse_braced();
      }
      return opaque_from(begin);
    }
    if (t.is_identifier() && peek(1).is(":")) {
      // labeled statement
      ++pos_;
      take_comments();
      ++pos_;
      if (!at_end()) parse_stmt();
      return opaque_from(begin);
    }
    if (t.is("class") || t.is("interface") || t.is("enum")) {
      while (!at_end() && !toks_[pos_].is("{")) ++pos_;
      if (!at_end()) parse_braced();
      return opaque_from(begin);
    }

    std::size_t semi = simple_end();
    TokenRun run = without_comments(slice(toks_, pos_, semi));
    pos_ = semi < end_ && toks_[semi].is(";") ? semi + 1 : semi;

    Stmt stmt;
    stmt.tokens = run;
    if (run.empty()) {
      stmt.kind = StmtKind::kOpaque;
      stmt.tokens = {toks_[semi < end_ ? semi : begin]};
    } else if (run[0].is("return")) {
      stmt.kind = StmtKind::kReturn;
    } else if (run[0].is("break")) {
      stmt.kind = StmtKind::kBreak;
    } else if (run[0].is("continue")) {
      stmt.kind = StmtKind::kContinue;
    } else if (looks_like_java_decl(run)) {
      stmt.kind = StmtKind::kDecl;
      refresh_decl(stmt);
    } else if (run[0].is("throw") || run[0].is("assert") || run[0].is("yield")) {
      stmt.kind = StmtKind::kOpaque;
      stmt.tokens.push_back(synthetic(TokenKind::kPunctuation, ";"));
    } else {
      stmt.kind = StmtKind::kExpr;
    }
    return finish(std::move(stmt), begin);
  }

  Stmt parse_if() {
    std::size_t begin = pos_;
    ++pos_;
    Stmt stmt;
    stmt.kind = StmtKind::kIf;
    stmt.cond = parse_condition(paren_group(), Language::kJava);
    stmt.body = parse_body();
    if (peek().is("else")) {
      take_comments();
      ++pos_;
      if (peek().is("if")) {
        take_comments();
        Block chained;
        chained.braced = false;
        chained.stmts.push_back(parse_if());
        stmt.else_body = std::move(chained);
        stmt.else_if = true;
      } else {
        stmt.else_body = parse_body();
      }
    }
    return finish(std::move(stmt), begin);
  }

  Stmt parse_for() {
    std::size_t begin = pos_;
    ++pos_;
    TokenRun inner = without_comments(paren_group());
    Stmt stmt;
    stmt.kind = StmtKind::kFor;

    std::vector<TokenRun> parts = split_top(inner, ";");
    if (parts.size() == 1) {
      stmt.header.is_each = true;
      stmt.header.each = inner;
    } else if (parts.size() == 3) {
      if (!parts[0].empty()) {
        if (looks_like_java_decl(parts[0])) {
          Stmt decl;
          decl.kind = StmtKind::kDecl;
          decl.tokens = parts[0];
          decl.span = covering_span(parts[0]);
          refresh_decl(decl);
          stmt.header.init.push_back(std::move(decl));
        } else {
          for (auto& expr : split_top(parts[0], ",")) {
            Stmt e;
            e.kind = StmtKind::kExpr;
            e.span = covering_span(expr);
            e.tokens = std::move(expr);
            stmt.header.init.push_back(std::move(e));
          }
        }
      }
      stmt.header.cond = parse_condition(parts[1], Language::kJava);
      if (!parts[2].empty()) {
        for (auto& expr : split_top(parts[2], ",")) {
          Stmt e;
          e.kind = StmtKind::kExpr;
          e.span = covering_span(expr);
          e.tokens = std::move(expr);
          stmt.header.update.push_back(std::move(e));
        }
      }
    } else {
      if (!lenient_) fail("malformed for header");
      parse_body();
      return opaque_from(begin);
    }
    stmt.body = parse_body();
    return finish(std::move(stmt), begin);
  }

  const TokenRun& toks_;
  std::size_t pos_;
  std::size_t end_;
  bool lenient_;
};

// ---------------------------------------------------------------------------
// Python statements

class PythonStmtParser {
 public:
  PythonStmtParser(const TokenRun& toks, std::size_t begin, std::size_t end, bool lenient)
      : toks_(toks), pos_(begin), end_(end), lenient_(lenient) {}

  // Statements until end_ or an unmatched DEDENT.
  Block parse_statements() {
    Block block;
    while (true) {
      take_comments();
      skip_stray_newlines();
      if (at_end() || toks_[pos_].is_marker(kDedent)) break;
      if (toks_[pos_].is_marker(kIndent)) {
        if (!lenient_) fail("unexpected indent");
        ++pos_;
        continue;
      }
      block.stmts.push_back(parse_stmt());
    }
    block.trailing_comments = std::move(pending_);
    pending_.clear();
    return block;
  }

 private:
  bool at_end() const { return pos_ >= end_; }

  [[noreturn]] void fail(const std::string& message) const {
    Span span = pos_ < toks_.size() ? toks_[pos_].span : Span{};
    throw Error(ErrorKind::kParse, message, span);
  }

  void take_comments() {
    while (pos_ < end_ && toks_[pos_].is_comment()) pending_.push_back(toks_[pos_++]);
  }

  void skip_stray_newlines() {
    while (pos_ < end_ && toks_[pos_].is_marker(kNewLine)) ++pos_;
  }

  const Token* peek_token() {
    take_comments();
    return at_end() ? nullptr : &toks_[pos_];
  }

  // Index after the logical line starting at pos_ (its NEW_LINE included).
  std::size_t line_end(std::size_t from) const {
    for (std::size_t i = from; i < end_; ++i) {
      if (toks_[i].is_marker(kNewLine)) return i + 1;
      if (toks_[i].is_marker(kIndent) || toks_[i].is_marker(kDedent)) return i;
    }
    return end_;
  }

  // Header tokens from pos_ up to the depth-0 `:`; pos_ lands after it.
  TokenRun header_until_colon() {
    TokenRun out;
    int depth = 0;
    while (!at_end()) {
      const Token& t = toks_[pos_];
      if (t.is_marker()) break;
      if (t.is_comment()) {
        pending_.push_back(t);
        ++pos_;
        continue;
      }
      if (opens(t)) ++depth;
      if (closes(t)) --depth;
      if (depth == 0 && t.is(":")) {
        ++pos_;
        return out;
      }
      out.push_back(t);
      ++pos_;
    }
    if (!lenient_) fail("expected ':'");
    return out;
  }

  std::size_t matching_dedent(std::size_t indent) const {
    int depth = 0;
    for (std::size_t i = indent; i < end_; ++i) {
      if (toks_[i].is_marker(kIndent)) ++depth;
      if (toks_[i].is_marker(kDedent) && --depth == 0) return i;
    }
    return end_;
  }

  Block parse_suite() {
    take_comments();
    Block block;
    if (!at_end() && toks_[pos_].is_marker(kNewLine)) {
      ++pos_;
      take_comments();
      if (at_end() || !toks_[pos_].is_marker(kIndent)) {
        if (!lenient_) fail("expected an indented block");
        return block;
      }
      std::size_t close = matching_dedent(pos_);
      PythonStmtParser inner(toks_, pos_ + 1, close, lenient_);
      inner.pending_ = std::move(pending_);
      pending_.clear();
      block = inner.parse_statements();
      pos_ = std::min(close + 1, end_);
      return block;
    }
    block.inline_suite = true;
    std::size_t stop = line_end(pos_);
    Stmt stmt = simple_stmt(stop);
    block.stmts.push_back(std::move(stmt));
    return block;
  }

  Stmt simple_stmt(std::size_t stop) {
    Stmt stmt;
    stmt.comments = std::move(pending_);
    pending_.clear();
    std::size_t begin = pos_;
    for (; pos_ < stop; ++pos_) {
      const Token& t = toks_[pos_];
      if (t.is_marker()) continue;
      if (t.is_comment()) {
        pending_.push_back(t);
        continue;
      }
      stmt.tokens.push_back(t);
    }
    stmt.span = covering_span(slice(toks_, begin, stop));
    if (stmt.tokens.empty()) {
      stmt.kind = StmtKind::kOpaque;
    } else if (stmt.tokens[0].is("return")) {
      stmt.kind = StmtKind::kReturn;
    } else if (stmt.tokens[0].is("break")) {
      stmt.kind = StmtKind::kBreak;
    } else if (stmt.tokens[0].is("continue")) {
      stmt.kind = StmtKind::kContinue;
    } else {
      stmt.kind = StmtKind::kExpr;
    }
    return stmt;
  }

  // Header line + suite + continuation clauses, kept as one raw run.
  Stmt opaque_compound() {
    Stmt stmt;
    stmt.kind = StmtKind::kOpaque;
    stmt.comments = std::move(pending_);
    pending_.clear();
    std::size_t begin = pos_;
    bool first = true;
    while (!at_end()) {
      const Token& head = toks_[pos_];
      bool continuation = head.is("elif") || head.is("else") || head.is("except") || head.is("finally");
      if (!first && !continuation) break;
      first = false;
      bool decorator = head.is("@");
      std::size_t stop = line_end(pos_);
      pos_ = stop;
      if (!at_end() && toks_[pos_].is_marker(kIndent)) {
        pos_ = std::min(matching_dedent(pos_) + 1, end_);
      }
      if (decorator) first = true;  // the decorated def follows
    }
    stmt.tokens = slice(toks_, begin, pos_);
    stmt.span = covering_span(stmt.tokens);
    return stmt;
  }

  Stmt parse_stmt() {
    const Token* t = peek_token();
    if (t->is("if")) return parse_if();
    if (t->is("while") || t->is("for")) {
      std::size_t begin = pos_;
      TokenRun comments = std::move(pending_);
      pending_.clear();
      bool is_for = t->is("for");
      ++pos_;
      Stmt stmt;
      TokenRun header = header_until_colon();
      if (is_for) {
        stmt.kind = StmtKind::kFor;
        stmt.header.is_each = true;
        stmt.header.each = std::move(header);
      } else {
        stmt.kind = StmtKind::kWhile;
        stmt.cond = parse_condition(header, Language::kPython);
      }
      stmt.body = parse_suite();
      take_comments();
      if (!at_end() && toks_[pos_].is("else")) {
        // loop-else has no counterpart in the statement model
        pos_ = begin;
        pending_ = std::move(comments);
        return opaque_compound();
      }
      stmt.comments = std::move(comments);
      stmt.span = covering_span(slice(toks_, begin, pos_));
      return stmt;
    }
    if (t->is("def") || t->is("class") || t->is("try") || t->is("with") || t->is("async") ||
        t->is("@") || t->is("match")) {
      if (t->is("match") && !line_is_compound(pos_)) return simple_stmt(line_end(pos_));
      return opaque_compound();
    }
    return simple_stmt(line_end(pos_));
  }

  bool line_is_compound(std::size_t from) const {
    std::size_t stop = line_end(from);
    return stop < end_ && toks_[stop].is_marker(kIndent);
  }

  Stmt parse_if() {
    std::size_t begin = pos_;
    Stmt stmt;
    stmt.kind = StmtKind::kIf;
    stmt.comments = std::move(pending_);
    pending_.clear();
    ++pos_;
    stmt.cond = parse_condition(header_until_colon(), Language::kPython);
    stmt.body = parse_suite();
    take_comments();
    if (!at_end() && toks_[pos_].is("elif")) {
      Block chained;
      chained.stmts.push_back(parse_if());
      stmt.else_body = std::move(chained);
      stmt.else_if = true;
    } else if (!at_end() && toks_[pos_].is("else")) {
      ++pos_;
      header_until_colon();
      stmt.else_body = parse_suite();
    }
    stmt.span = covering_span(slice(toks_, begin, pos_));
    return stmt;
  }

  const TokenRun& toks_;
  std::size_t pos_;
  std::size_t end_;
  bool lenient_;
  TokenRun pending_;
};

// ---------------------------------------------------------------------------
// Item segmentation

struct RawItem {
  bool method = false;
  std::size_t begin = 0;
  std::size_t end = 0;
  int depth = 0;
};

class Segmenter {
 public:
  Segmenter(const TokenRun& toks, Language language, bool lenient)
      : toks_(toks), language_(language), lenient_(lenient) {}

  std::vector<RawItem> run() {
    if (language_ == Language::kJava) {
      java(0, toks_.size(), 0);
    } else {
      python(0, toks_.size(), 0);
    }
    return std::move(items_);
  }

 private:
  void add(bool method, std::size_t begin, std::size_t end, int depth) {
    if (begin < end) items_.push_back(RawItem{method, begin, end, depth});
  }

  std::size_t match_brace(std::size_t open, std::size_t end) const {
    int depth = 0;
    for (std::size_t i = open; i < end; ++i) {
      if (toks_[i].is("{")) ++depth;
      if (toks_[i].is("}") && --depth == 0) return i;
    }
    return std::string::npos;
  }

  static bool is_class_header(const TokenRun& header) {
    bool type_kw = false;
    for (const auto& t : header) {
      if (t.is("new") || t.is("=")) return false;
      if (t.is("class") || t.is("interface") || t.is("enum")) type_kw = true;
    }
    return type_kw;
  }

  void java(std::size_t begin, std::size_t end, int depth) {
    std::size_t i = begin;
    while (i < end) {
      std::size_t start = i;
      std::size_t j = i;
      int paren = 0;
      bool saw_eq = false;
      bool done = false;
      while (j < end && !done) {
        const Token& t = toks_[j];
        if (t.is_comment()) {
          ++j;
          continue;
        }
        if (t.is("(") || t.is("[")) ++paren;
        if ((t.is(")") || t.is("]")) && paren > 0) --paren;
        if (paren == 0) {
          if (t.is(";")) {
            add(false, start, j + 1, depth);
            i = j + 1;
            done = true;
            break;
          }
          if (t.is("=")) saw_eq = true;
          if (t.is("{")) {
            std::size_t close = match_brace(j, end);
            if (close == std::string::npos) {
              if (!lenient_) throw Error(ErrorKind::kParse, "unbalanced braces", t.span);
              close = end;
            }
            if (saw_eq) {
              j = std::min(close + 1, end);
              continue;
            }
            TokenRun header = without_comments(slice(toks_, start, j));
            if (is_class_header(header)) {
              add(false, start, j + 1, depth);
              java(j + 1, close, depth + 1);
              add(false, close, std::min(close + 1, end), depth);
            } else {
              add(is_java_method_header(header), start, std::min(close + 1, end), depth);
            }
            i = std::min(close + 1, end);
            done = true;
            break;
          }
          if (t.is("}")) {
            if (!lenient_) throw Error(ErrorKind::kParse, "unbalanced braces: unexpected '}'", t.span);
            add(false, start, j + 1, depth);
            i = j + 1;
            done = true;
            break;
          }
        }
        ++j;
      }
      if (!done) {
        add(false, start, end, depth);
        i = end;
      }
    }
  }

  void python(std::size_t begin, std::size_t end, int depth) {
    std::size_t i = begin;
    while (i < end) {
      std::size_t start = i;
      while (i < end && toks_[i].is_comment()) ++i;
      if (i >= end) {
        add(false, start, end, depth);
        break;
      }
      const Token& t = toks_[i];
      if (t.is_marker(kIndent) || t.is_marker(kDedent) || t.is_marker(kNewLine)) {
        add(false, start, i + 1, depth);
        i = i + 1;
        continue;
      }
      std::size_t stop = line_end(i, end);
      bool compound = stop < end && toks_[stop].is_marker(kIndent);
      std::size_t after = compound ? std::min(matching_dedent(stop, end) + 1, end) : stop;

      if (t.is("def") && i + 2 < end && toks_[i + 1].is_identifier() && toks_[i + 2].is("(")) {
        add(true, start, after, depth);
        i = after;
        continue;
      }
      if (t.is("class") && compound) {
        std::size_t close = matching_dedent(stop, end);
        add(false, start, stop + 1, depth);
        python(stop + 1, close, depth + 1);
        add(false, close, std::min(close + 1, end), depth);
        i = std::min(close + 1, end);
        continue;
      }
      // Other statements, with continuation clauses of compounds.
      while (compound && after < end &&
             (toks_[after].is("elif") || toks_[after].is("else") || toks_[after].is("except") ||
              toks_[after].is("finally"))) {
        std::size_t s2 = line_end(after, end);
        bool c2 = s2 < end && toks_[s2].is_marker(kIndent);
        after = c2 ? std::min(matching_dedent(s2, end) + 1, end) : s2;
      }
      add(false, start, after, depth);
      i = after;
    }
  }

  std::size_t line_end(std::size_t from, std::size_t end) const {
    for (std::size_t i = from; i < end; ++i) {
      if (toks_[i].is_marker(kNewLine)) return i + 1;
      if (toks_[i].is_marker(kIndent) || toks_[i].is_marker(kDedent)) return i;
    }
    return end;
  }

  std::size_t matching_dedent(std::size_t indent, std::size_t end) const {
    int depth = 0;
    for (std::size_t i = indent; i < end; ++i) {
      if (toks_[i].is_marker(kIndent)) ++depth;
      if (toks_[i].is_marker(kDedent) && --depth == 0) return i;
    }
    return end;
  }

 public:
  static bool is_java_method_header(const TokenRun& header) {
    std::size_t n = header.size();
    std::size_t throws_at = n;
    int depth = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (header[k].is("(")) ++depth;
      if (header[k].is(")")) --depth;
      if (depth == 0 && header[k].is("throws")) {
        throws_at = k;
        break;
      }
    }
    if (throws_at == 0 || !header[throws_at - 1].is(")")) return false;
    depth = 0;
    std::size_t open = std::string::npos;
    for (std::size_t k = throws_at; k-- > 0;) {
      if (header[k].is(")")) ++depth;
      if (header[k].is("(") && --depth == 0) {
        open = k;
        break;
      }
    }
    if (open == std::string::npos || open == 0 || !header[open - 1].is_identifier()) return false;
    for (std::size_t k = 0; k + 1 < open; ++k) {
      const Token& t = header[k];
      if (t.is("new") || t.is("=") || t.is("return") || t.is(";") || t.is("if") || t.is("while") ||
          t.is("for") || t.is("(") || t.is("{")) {
        // annotations with arguments are the one legal `(` here
        if (t.is("(") && k > 0 && header[k - 1].is_identifier() && k > 1 && header[k - 2].is("@")) continue;
        if (t.is("(")) {
          bool in_annotation = false;
          for (std::size_t m = k; m-- > 0;) {
            if (header[m].is("@")) {
              in_annotation = true;
              break;
            }
            if (!header[m].is_identifier() && !header[m].is(".")) break;
          }
          if (in_annotation) continue;
        }
        return false;
      }
    }
    return true;
  }

 private:
  const TokenRun& toks_;
  Language language_;
  bool lenient_;
  std::vector<RawItem> items_;
};

std::vector<Param> parse_java_params(const TokenRun& inner) {
  std::vector<Param> params;
  for (auto& part : split_params(inner)) {
    if (part.empty()) continue;
    Param p;
    p.tokens = part;
    std::size_t last = part.size();
    int trailing_dims = 0;
    while (last >= 2 && part[last - 1].is("]") && part[last - 2].is("[")) {
      last -= 2;
      ++trailing_dims;
    }
    std::size_t name_at = last > 0 ? last - 1 : 0;
    p.name = part[name_at].text;
    p.type = slice(part, 0, name_at);
    for (std::size_t k = name_at + 1; k < part.size(); ++k) p.type.push_back(part[k]);
    for (std::size_t k = 0; k + 1 < p.type.size(); ++k) {
      if (p.type[k].is("[") && p.type[k + 1].is("]")) ++p.array_dims;
    }
    for (const auto& t : p.type) {
      if (t.is("...")) p.varargs = true;
    }
    params.push_back(std::move(p));
  }
  return params;
}

std::vector<Param> parse_python_params(const TokenRun& inner) {
  std::vector<Param> params;
  for (auto& part : split_top(inner, ",")) {
    if (part.empty()) continue;
    Param p;
    p.tokens = part;
    std::size_t k = 0;
    while (k < part.size() && (part[k].is("*") || part[k].is("**"))) ++k;
    if (k < part.size() && part[k].is_identifier()) {
      p.name = part[k].text;
    } else {
      p.name = part[0].text;  // bare `*` or `/`
    }
    if (k + 1 < part.size() && part[k + 1].is(":")) {
      for (std::size_t m = k + 2; m < part.size() && !part[m].is("="); ++m) p.type.push_back(part[m]);
    }
    params.push_back(std::move(p));
  }
  return params;
}

MethodUnit build_java_method(const TokenRun& toks, const RawItem& raw, bool lenient) {
  MethodUnit m;
  m.depth = raw.depth;
  std::size_t i = raw.begin;
  while (i < raw.end && toks[i].is_comment()) m.comments.push_back(toks[i++]);
  std::size_t brace = i;
  int depth = 0;
  for (; brace < raw.end; ++brace) {
    if (toks[brace].is("(")) ++depth;
    if (toks[brace].is(")")) --depth;
    if (depth == 0 && toks[brace].is("{")) break;
  }
  TokenRun header = without_comments(slice(toks, i, brace));
  std::size_t throws_at = header.size();
  depth = 0;
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (header[k].is("(")) ++depth;
    if (header[k].is(")")) --depth;
    if (depth == 0 && header[k].is("throws")) {
      throws_at = k;
      break;
    }
  }
  std::size_t close = throws_at - 1;
  std::size_t open = close;
  depth = 0;
  for (std::size_t k = close + 1; k-- > 0;) {
    if (header[k].is(")")) ++depth;
    if (header[k].is("(") && --depth == 0) {
      open = k;
      break;
    }
  }
  m.name = header[open - 1].text;
  m.modifiers = slice(header, 0, open - 1);
  m.params = parse_java_params(slice(header, open + 1, close));
  m.suffix = slice(header, throws_at, header.size());
  std::size_t body_end = raw.end;
  if (body_end > brace + 1 && toks[body_end - 1].is("}")) --body_end;
  JavaStmtParser body(toks, brace + 1, body_end, lenient);
  m.body = body.parse_statements();
  m.body.braced = true;
  m.span = covering_span(slice(toks, raw.begin, raw.end));
  return m;
}

MethodUnit build_python_method(const TokenRun& toks, const RawItem& raw, bool lenient) {
  MethodUnit m;
  m.depth = raw.depth;
  std::size_t i = raw.begin;
  while (i < raw.end && toks[i].is_comment()) m.comments.push_back(toks[i++]);
  m.modifiers.push_back(toks[i]);  // def
  m.name = toks[i + 1].text;
  std::size_t open = i + 2;
  int depth = 0;
  std::size_t close = open;
  for (std::size_t k = open; k < raw.end; ++k) {
    if (opens(toks[k])) ++depth;
    if (closes(toks[k]) && --depth == 0) {
      close = k;
      break;
    }
  }
  if (close == open) throw Error(ErrorKind::kParse, "unbalanced parentheses in parameters", toks[open].span);
  m.params = parse_python_params(without_comments(slice(toks, open + 1, close)));
  std::size_t colon = close + 1;
  depth = 0;
  for (; colon < raw.end; ++colon) {
    const Token& t = toks[colon];
    if (t.is_marker()) break;
    if (opens(t)) ++depth;
    if (closes(t)) --depth;
    if (depth == 0 && t.is(":")) break;
  }
  if (colon >= raw.end || !toks[colon].is(":")) {
    if (!lenient) throw Error(ErrorKind::kParse, "expected ':' after parameters", toks[close].span);
  }
  m.suffix = without_comments(slice(toks, close + 1, colon));
  std::size_t body_begin = std::min(colon + 1, raw.end);
  if (body_begin < raw.end && toks[body_begin].is_marker(kNewLine)) {
    std::size_t indent = body_begin + 1;
    while (indent < raw.end && toks[indent].is_comment()) ++indent;
    if (indent >= raw.end || !toks[indent].is_marker(kIndent)) {
      if (!lenient) throw Error(ErrorKind::kParse, "expected an indented block", toks[close].span);
    } else {
      std::size_t body_end = raw.end;
      if (toks[body_end - 1].is_marker(kDedent)) --body_end;
      PythonStmtParser inner(toks, indent + 1, body_end, lenient);
      m.body = inner.parse_statements();
    }
  } else {
    PythonStmtParser inline_parser(toks, body_begin, raw.end, lenient);
    m.body = inline_parser.parse_statements();
    m.body.inline_suite = true;
  }
  m.span = covering_span(slice(toks, raw.begin, raw.end));
  return m;
}

Block python_suite(const TokenRun& toks, std::size_t begin, std::size_t end, bool lenient) {
  PythonStmtParser parser(toks, begin, end, lenient);
  return parser.parse_statements();
}
}  // namespace

SyntaxUnit parse_unit(const TokenRun& tokens, Language language, std::string source, ParseOptions options) {
  SyntaxUnit unit;
  unit.language = language;
  unit.source = std::move(source);

  auto build = [&](bool lenient) {
    unit.items.clear();
    Segmenter segmenter(tokens, language, lenient);
    for (const RawItem& raw : segmenter.run()) {
      if (raw.method) {
        MethodUnit method = language == Language::kJava ? build_java_method(tokens, raw, lenient)
                                                        : build_python_method(tokens, raw, lenient);
        unit.items.emplace_back(std::move(method));
      } else {
        OtherItem other;
        other.tokens = slice(tokens, raw.begin, raw.end);
        other.span = covering_span(other.tokens);
        other.depth = raw.depth;
        unit.items.emplace_back(std::move(other));
      }
    }
  };

  if (!options.lenient) {
    build(false);
  } else {
    try {
      build(true);
    } catch (const Error&) {
      unit.items.clear();
      OtherItem whole;
      whole.tokens = tokens;
      whole.span = covering_span(tokens);
      unit.items.emplace_back(std::move(whole));
    }
  }

  // Ownership: each item owns from the previous item's end to its last byte.
  std::size_t cursor = 0;
  for (std::size_t k = 0; k < unit.items.size(); ++k) {
    Span item_span = std::visit([](const auto& item) { return item.span; }, unit.items[k]);
    std::size_t end = item_span.empty() ? cursor : std::max(cursor, item_span.end);
    if (k + 1 == unit.items.size()) end = unit.source.size();
    unit.ownership.push_back(Span{cursor, end});
    cursor = end;
  }
  return unit;
}

SyntaxUnit parse_source(std::string_view text, Language language, ParseOptions options) {
  TokenRun tokens = tokenize(text, language, LexOptions{.lenient = options.lenient});
  return parse_unit(tokens, language, std::string(text), options);
}

Block parse_block_text(std::string_view text, Language language) {
  TokenRun tokens = tokenize(text, language);
  if (language == Language::kJava) {
    JavaStmtParser parser(tokens, 0, tokens.size(), false);
    return parser.parse_statements();
  }
  return python_suite(tokens, 0, tokens.size(), false);
}

}  // namespace transguard
