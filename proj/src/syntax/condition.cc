#include "transguard/parser.h"

namespace transguard {

std::string_view to_string(LogicalOp op) {
  switch (op) {
    case LogicalOp::kAnd: return "and";
    case LogicalOp::kOr: return "or";
    case LogicalOp::kSingle: return "single";
  }
  return "?";
}

namespace {

bool opens(const Token& t) { return t.is("(") || t.is("[") || t.is("{"); }
bool closes(const Token& t) { return t.is(")") || t.is("]") || t.is("}"); }

// Index of the bracket closing the one at `open`, or npos.
std::size_t matching_close(const TokenRun& run, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < run.size(); ++i) {
    if (opens(run[i])) ++depth;
    if (closes(run[i]) && --depth == 0) return i;
  }
  return std::string::npos;
}

bool is_and(const Token& t, Language language) {
  return language == Language::kJava ? t.is("&&") : (t.kind == TokenKind::kKeyword && t.text == "and");
}

bool is_or(const Token& t, Language language) {
  return language == Language::kJava ? t.is("||") : (t.kind == TokenKind::kKeyword && t.text == "or");
}

// Operators binding looser than && / || at the top level make the whole
// condition a single clause.
bool is_looser(const Token& t, Language language) {
  if (language == Language::kJava) {
    if (t.kind != TokenKind::kOperator) return false;
    static constexpr std::string_view kLoose[] = {"?",  "=",  "+=", "-=", "*=", "/=",  "%=",   "&=",
                                                 "|=", "^=", "<<=", ">>=", ">>>=", "->", ":"};
    for (auto op : kLoose) {
      if (t.text == op) return true;
    }
    return false;
  }
  if (t.kind == TokenKind::kKeyword) return t.text == "if" || t.text == "else" || t.text == "lambda";
  return t.is(":=");
}

}  // namespace

CondChain parse_condition(const TokenRun& input, Language language) {
  TokenRun run;
  for (const auto& token : input) {
    if (!token.is_comment() && !token.is_marker()) run.push_back(token);
  }
  CondChain chain;
  chain.language = language;
  chain.span = covering_span(run);

  int depth = 0;
  for (const auto& token : run) {
    if (opens(token)) ++depth;
    if (closes(token) && --depth < 0) {
      throw Error(ErrorKind::kParse, "unbalanced parentheses in condition", token.span);
    }
  }
  if (depth != 0) throw Error(ErrorKind::kParse, "unbalanced parentheses in condition", chain.span);

  std::size_t begin = 0;
  std::size_t end = run.size();
  while (end - begin >= 2 && run[begin].is("(") && matching_close(run, begin) == end - 1) {
    ++begin;
    --end;
    ++chain.outer_parens;
  }
  if (begin == end) return chain;

  bool saw_and = false;
  bool saw_or = false;
  bool loose = false;
  depth = 0;
  for (std::size_t i = begin; i < end; ++i) {
    const Token& t = run[i];
    if (opens(t)) ++depth;
    if (closes(t)) --depth;
    if (depth != 0) continue;
    saw_and |= is_and(t, language);
    saw_or |= is_or(t, language);
    loose |= is_looser(t, language);
  }

  TokenRun whole(run.begin() + static_cast<long>(begin), run.begin() + static_cast<long>(end));
  if (loose || saw_and == saw_or) {
    chain.clauses.push_back(std::move(whole));
    return chain;
  }

  std::vector<TokenRun> clauses(1);
  depth = 0;
  for (const auto& t : whole) {
    if (opens(t)) ++depth;
    if (closes(t)) --depth;
    if (depth == 0 && (is_and(t, language) || is_or(t, language))) {
      clauses.emplace_back();
      continue;
    }
    clauses.back().push_back(t);
  }
  for (const auto& clause : clauses) {
    if (clause.empty()) {
      // `a && && b` and friends: not a chain we can reason about.
      chain.clauses = {std::move(whole)};
      return chain;
    }
  }
  chain.op = saw_and ? LogicalOp::kAnd : LogicalOp::kOr;
  chain.clauses = std::move(clauses);
  return chain;
}

}  // namespace transguard
