#include <algorithm>
#include <map>

#include "transguard/pre_rules.h"
#include "transguard/visit.h"

namespace transguard {

std::string wrapper_type(std::string_view type) {
  static const std::map<std::string_view, std::string_view> kWrappers{
      {"int", "Integer"}, {"double", "Double"}, {"long", "Long"},   {"char", "Character"},
      {"boolean", "Boolean"}, {"float", "Float"}, {"short", "Short"}, {"byte", "Byte"}};
  auto it = kWrappers.find(type);
  return std::string(it == kWrappers.end() ? type : it->second);
}

namespace {

bool is_assign_op(const Token& t) {
  static constexpr std::string_view kOps[] = {"=",  "+=", "-=", "*=",  "/=",  "%=",
                                              "&=", "|=", "^=", "<<=", ">>=", ">>>="};
  if (t.kind != TokenKind::kOperator) return false;
  return std::find(std::begin(kOps), std::end(kOps), t.text) != std::end(kOps);
}

bool is_step(const Token& t) { return t.is("++") || t.is("--"); }

Token punct(std::string text) { return synthetic(TokenKind::kPunctuation, std::move(text)); }
Token op(std::string text) { return synthetic(TokenKind::kOperator, std::move(text)); }
Token ident(std::string text) { return synthetic(TokenKind::kIdentifier, std::move(text)); }

void append(TokenRun& out, const TokenRun& more) { out.insert(out.end(), more.begin(), more.end()); }

std::size_t match(const TokenRun& run, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < run.size(); ++i) {
    const Token& t = run[i];
    if (t.is("(") || t.is("[") || t.is("{")) ++depth;
    if ((t.is(")") || t.is("]") || t.is("}")) && --depth == 0) return i;
  }
  return std::string::npos;
}

TokenRun sub(const TokenRun& run, std::size_t begin, std::size_t end) {
  return TokenRun(run.begin() + static_cast<long>(begin), run.begin() + static_cast<long>(end));
}

std::vector<TokenRun> split_args(const TokenRun& run) {
  std::vector<TokenRun> parts;
  if (run.empty()) return parts;
  parts.emplace_back();
  int depth = 0;
  for (const auto& t : run) {
    if (t.is("(") || t.is("[") || t.is("{")) ++depth;
    if (t.is(")") || t.is("]") || t.is("}")) --depth;
    if (depth == 0 && t.is(",")) {
      parts.emplace_back();
      continue;
    }
    parts.back().push_back(t);
  }
  return parts;
}

class ArrayRewriter {
 public:
  explicit ArrayRewriter(std::map<std::string, std::string> elements) : elements_(std::move(elements)) {}

  void block(Block& b) {
    for (auto& s : b.stmts) stmt(s);
  }

 private:
  bool converted(const Token& t) const { return t.is_identifier() && elements_.count(t.text); }

  void stmt(Stmt& s) {
    switch (s.kind) {
      case StmtKind::kExpr:
        s.tokens = rewrite(s.tokens, true);
        break;
      case StmtKind::kDecl:
        s.tokens = rewrite(s.tokens, false);
        refresh_decl(s);
        break;
      case StmtKind::kReturn:
      case StmtKind::kOpaque:
        s.tokens = rewrite(s.tokens, false);
        break;
      case StmtKind::kFor:
        if (s.header.is_each) {
          s.header.each = rewrite(widen(s.header.each), false);
        } else {
          for (auto& init : s.header.init) {
            bool decl = init.kind == StmtKind::kDecl;
            init.tokens = rewrite(init.tokens, !decl);
            if (decl) refresh_decl(init);
          }
          for (auto& clause : s.header.cond.clauses) clause = rewrite(clause, false);
          for (auto& update : s.header.update) update.tokens = rewrite(update.tokens, true);
        }
        block(s.body);
        break;
      case StmtKind::kWhile:
      case StmtKind::kIf:
        for (auto& clause : s.cond.clauses) clause = rewrite(clause, false);
        block(s.body);
        if (s.else_body) block(*s.else_body);
        break;
      case StmtKind::kBlock:
        block(s.body);
        break;
      default:
        break;
    }
  }

  // `T x : p` -> `W x : p`
  TokenRun widen(const TokenRun& each) {
    std::size_t colon = std::string::npos;
    int depth = 0;
    for (std::size_t i = 0; i < each.size(); ++i) {
      if (each[i].is("(") || each[i].is("[") || each[i].is("<")) ++depth;
      if (each[i].is(")") || each[i].is("]") || each[i].is(">")) --depth;
      if (depth == 0 && each[i].is(":")) {
        colon = i;
        break;
      }
    }
    if (colon == std::string::npos || colon < 2 || colon + 2 != each.size() || !converted(each[colon + 1])) {
      return each;
    }
    TokenRun out;
    std::size_t k = 0;
    while (k < colon - 1 && (each[k].is("final") || each[k].is("@"))) {
      out.push_back(each[k]);
      if (each[k].is("@") && k + 1 < colon - 1) out.push_back(each[++k]);
      ++k;
    }
    for (const auto& t : synthetic_run(elements_.at(each[colon + 1].text), Language::kJava)) out.push_back(t);
    out.insert(out.end(), each.begin() + static_cast<long>(colon - 1), each.end());
    return out;
  }

  static void check_index(const TokenRun& index) {
    for (const auto& t : index) {
      if (is_step(t) || is_assign_op(t)) {
        throw Error(ErrorKind::kUnsupported, "index expression with side effects", t.span);
      }
    }
  }

  TokenRun get(const Token& name, const TokenRun& index) {
    TokenRun out{name, punct("."), ident("get"), punct("(")};
    append(out, index);
    out.push_back(punct(")"));
    return out;
  }

  // `p . set ( index , value )`
  TokenRun set(const Token& name, const TokenRun& index, const TokenRun& value) {
    TokenRun out{name, punct("."), ident("set"), punct("(")};
    append(out, index);
    out.push_back(punct(","));
    append(out, value);
    out.push_back(punct(")"));
    return out;
  }

  TokenRun rewrite(const TokenRun& run, bool statement_level) {
    if (statement_level) {
      if (auto whole = rewrite_statement(run)) return *whole;
    }
    TokenRun out;
    std::size_t n = run.size();
    for (std::size_t i = 0; i < n;) {
      const Token& t = run[i];
      bool member = i > 0 && run[i - 1].is(".");
      if (converted(t) && !member) {
        if (i + 1 < n && run[i + 1].is("[")) {
          std::size_t close = match(run, i + 1);
          if (close == std::string::npos) throw Error(ErrorKind::kUnsupported, "unbalanced index", t.span);
          TokenRun index = sub(run, i + 2, close);
          check_index(index);
          bool written = (close + 1 < n && (is_assign_op(run[close + 1]) || is_step(run[close + 1]))) ||
                         (i > 0 && is_step(run[i - 1]));
          if (written) {
            throw Error(ErrorKind::kUnsupported, "element of '" + t.text + "' written inside an expression", t.span);
          }
          append(out, get(t, rewrite(index, false)));
          i = close + 1;
          continue;
        }
        if (i + 2 < n && run[i + 1].is(".") && run[i + 2].is("length") && !(i + 3 < n && run[i + 3].is("("))) {
          append(out, {t, punct("."), ident("size"), punct("("), punct(")")});
          i += 3;
          continue;
        }
        if (i + 1 < n && is_assign_op(run[i + 1])) {
          throw Error(ErrorKind::kUnsupported, "parameter '" + t.text + "' is reassigned", t.span);
        }
      }
      if (t.is("Arrays") && i + 4 < n && run[i + 1].is(".") && (run[i + 2].is("sort") || run[i + 2].is("fill")) &&
          run[i + 3].is("(") && converted(run[i + 4])) {
        std::size_t close = match(run, i + 3);
        if (close == std::string::npos) throw Error(ErrorKind::kUnsupported, "unbalanced call", t.span);
        std::vector<TokenRun> args = split_args(sub(run, i + 4, close));
        bool sort = run[i + 2].is("sort");
        if (args[0].size() != 1 || args.size() != (sort ? 1u : 2u)) {
          throw Error(ErrorKind::kUnsupported, "Arrays." + run[i + 2].text + " over a range", t.span);
        }
        append(out, {ident("Collections"), punct("."), run[i + 2], punct("("), args[0][0]});
        if (!sort) {
          out.push_back(punct(","));
          append(out, rewrite(args[1], false));
        }
        out.push_back(punct(")"));
        i = close + 1;
        continue;
      }
      out.push_back(t);
      ++i;
    }
    return out;
  }

  // Whole-statement element writes: `p [ e ] = v`, `p [ e ] op= v`,
  // `p [ e ] ++`, `++ p [ e ]`.
  std::optional<TokenRun> rewrite_statement(const TokenRun& run) {
    std::size_t n = run.size();
    std::size_t at = 0;
    bool prefix = false;
    if (n >= 2 && is_step(run[0])) {
      at = 1;
      prefix = true;
    }
    if (at + 1 >= n || !converted(run[at]) || !run[at + 1].is("[")) return std::nullopt;
    std::size_t close = match(run, at + 1);
    if (close == std::string::npos) return std::nullopt;
    const Token& name = run[at];
    TokenRun index = sub(run, at + 2, close);
    check_index(index);
    index = rewrite(index, false);

    auto stepped = [&](const Token& step) {
      TokenRun value = get(name, index);
      value.push_back(op(step.is("++") ? "+" : "-"));
      value.push_back(synthetic(TokenKind::kNumber, "1"));
      return set(name, index, value);
    };
    if (prefix) {
      if (close + 1 != n) return std::nullopt;
      return stepped(run[0]);
    }
    if (close + 2 == n && is_step(run[close + 1])) return stepped(run[close + 1]);
    if (close + 1 < n && is_assign_op(run[close + 1])) {
      TokenRun value = rewrite(sub(run, close + 2, n), false);
      const Token& assign = run[close + 1];
      if (assign.is("=")) return set(name, index, value);
      TokenRun combined = get(name, index);
      combined.push_back(op(assign.text.substr(0, assign.text.size() - 1)));
      if (value.size() > 1) {
        combined.push_back(punct("("));
        append(combined, value);
        combined.push_back(punct(")"));
      } else {
        append(combined, value);
      }
      return set(name, index, combined);
    }
    return std::nullopt;
  }

  std::map<std::string, std::string> elements_;  // parameter -> wrapper element type
};

// Element type of a 1-D array parameter, as text (`int`, `String`).
std::string element_type(const Param& p) {
  TokenRun type;
  for (std::size_t k = 0; k < p.type.size(); ++k) {
    const Token& t = p.type[k];
    if (t.is("[") || t.is("]") || t.is("final")) continue;
    if (t.is("@")) {
      ++k;
      continue;
    }
    type.push_back(t);
  }
  if (type.size() == 1) return wrapper_type(type[0].text);
  return joined_text(type);
}

}  // namespace

MethodRewrite array_params_to_list(const MethodUnit& method) {
  MethodRewrite result{method, {}};
  MutationRecord& record = result.record;
  record.rule = RuleId::kR3aArrayList;

  std::vector<std::size_t> targets;
  std::vector<std::string> multi;
  for (std::size_t k = 0; k < method.params.size(); ++k) {
    const Param& p = method.params[k];
    if (p.varargs) continue;
    if (p.array_dims == 1) targets.push_back(k);
    if (p.array_dims > 1) multi.push_back(p.name);
  }
  if (targets.empty()) {
    record.notes = multi.empty() ? "no array parameter" : "only multi-dimensional array parameters";
    return result;
  }
  record.applicable = true;
  if (!multi.empty()) {
    record.notes = "Unsupported: multi-dimensional array parameter '" + multi[0] + "'";
    return result;
  }

  std::map<std::string, std::string> elements;
  for (std::size_t k : targets) {
    Param& p = result.method.params[k];
    std::string element = element_type(p);
    elements[p.name] = element;
    TokenRun tokens;
    if (!p.tokens.empty() && p.tokens[0].is("final")) tokens.push_back(p.tokens[0]);
    append(tokens, {ident("List"), op("<")});
    append(tokens, synthetic_run(element, Language::kJava));
    tokens.push_back(op(">"));
    Token name = ident(p.name);
    for (const auto& t : p.tokens) {
      if (t.is_identifier() && t.text == p.name) name = t;
    }
    tokens.push_back(name);
    p.tokens = tokens;
    p.type = TokenRun(tokens.begin(), tokens.end() - 1);
    p.array_dims = 0;
  }

  try {
    ArrayRewriter rewriter(elements);
    rewriter.block(result.method.body);
  } catch (const Error& e) {
    result.method = method;
    record.notes = e.what();
    return result;
  }
  record.applied = true;
  std::string notes = "converted";
  for (const auto& [name, element] : elements) notes += " " + name + " -> List < " + element + " >";
  record.notes = notes;
  return result;
}

}  // namespace transguard
