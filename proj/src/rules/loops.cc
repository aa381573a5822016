#include <algorithm>

#include "transguard/pre_rules.h"
#include "transguard/visit.h"

namespace transguard {

namespace {

bool is_assign_op(const Token& t) {
  static constexpr std::string_view kOps[] = {"=",  "+=", "-=", "*=",  "/=",  "%=",
                                              "&=", "|=", "^=", "<<=", ">>=", ">>>="};
  if (t.kind != TokenKind::kOperator) return false;
  return std::find(std::begin(kOps), std::end(kOps), t.text) != std::end(kOps);
}

bool is_step(const Token& t) { return t.is("++") || t.is("--"); }

bool is_primitive(const Token& t) {
  static constexpr std::string_view kPrims[] = {"int",   "long",    "short", "byte",
                                                "char",  "boolean", "float", "double"};
  return t.kind == TokenKind::kKeyword && std::find(std::begin(kPrims), std::end(kPrims), t.text) != std::end(kPrims);
}

// Variable written by a simple expression statement, or "" if none.
std::string written_var(const TokenRun& run) {
  if (run.size() >= 2 && run[0].is_identifier() && (is_step(run[1]) || is_assign_op(run[1]))) return run[0].text;
  if (run.size() >= 2 && is_step(run[0]) && run[1].is_identifier()) return run[1].text;
  return "";
}

// `v ++`, `v --`, `++ v`, `-- v`, `v += c`, `v -= c` with literal c.
bool is_linear_update(const TokenRun& run) {
  if (run.size() == 2) {
    return (run[0].is_identifier() && is_step(run[1])) || (is_step(run[0]) && run[1].is_identifier());
  }
  return run.size() == 3 && run[0].is_identifier() && (run[1].is("+=") || run[1].is("-=")) &&
         run[2].kind == TokenKind::kNumber;
}

std::vector<std::string> init_names(const Stmt& loop) {
  std::vector<std::string> names;
  for (const auto& init : loop.header.init) {
    if (init.kind != StmtKind::kDecl) continue;
    for (const auto& d : init.declarators) names.push_back(d.name);
  }
  return names;
}

// Identifier bound by an enhanced-for header `T x : xs`.
std::string each_var(const TokenRun& each) {
  int depth = 0;
  for (std::size_t i = 0; i < each.size(); ++i) {
    if (each[i].is("(") || each[i].is("[")) ++depth;
    if (each[i].is(")") || each[i].is("]")) --depth;
    if (depth == 0 && each[i].is(":") && i > 0) return each[i - 1].text;
  }
  return "";
}

bool contains_token(const TokenRun& run, std::string_view text) {
  return std::any_of(run.begin(), run.end(), [&](const Token& t) { return t.is(text); });
}

bool ends_abruptly(const Block& block);

bool ends_abruptly(const Stmt& s) {
  switch (s.kind) {
    case StmtKind::kReturn:
    case StmtKind::kBreak:
    case StmtKind::kContinue:
      return true;
    case StmtKind::kOpaque:
      return !s.tokens.empty() && s.tokens[0].is("throw");
    case StmtKind::kBlock:
      return ends_abruptly(s.body);
    case StmtKind::kIf:
      return s.else_body && ends_abruptly(s.body) && ends_abruptly(*s.else_body);
    default:
      return false;
  }
}

bool ends_abruptly(const Block& block) { return !block.stmts.empty() && ends_abruptly(block.stmts.back()); }

// Inserts `updates` before every unlabeled `continue` that binds to the
// enclosing loop.
void insert_updates(Block& block, const std::vector<Stmt>& updates) {
  std::vector<Stmt> result;
  for (auto& s : block.stmts) {
    switch (s.kind) {
      case StmtKind::kContinue:
        if (s.tokens.size() == 1) result.insert(result.end(), updates.begin(), updates.end());
        break;
      case StmtKind::kIf:
        insert_updates(s.body, updates);
        if (s.else_body) insert_updates(*s.else_body, updates);
        break;
      case StmtKind::kBlock:
        insert_updates(s.body, updates);
        break;
      case StmtKind::kOpaque:
        if (contains_token(s.tokens, "continue")) {
          throw Error(ErrorKind::kUnsupported, "continue inside an unparsed statement", s.span);
        }
        break;
      default:
        break;
    }
    result.push_back(std::move(s));
  }
  if (!block.braced && result.size() > 1) block.braced = true;
  block.stmts = std::move(result);
}

// Whether any statement in `stmts` declares one of `names`.
bool declares_any(const std::vector<Stmt>& stmts, std::size_t from, const std::vector<std::string>& names) {
  if (names.empty()) return false;
  auto named = [&](const std::string& n) { return std::find(names.begin(), names.end(), n) != names.end(); };
  Block rest;
  rest.stmts.assign(stmts.begin() + static_cast<long>(std::min(from, stmts.size())), stmts.end());
  bool found = false;
  for_each_stmt(rest, [&](const Stmt& s) {
    if (s.kind == StmtKind::kDecl) {
      for (const auto& d : s.declarators) found |= named(d.name);
    } else if (s.kind == StmtKind::kFor && s.header.is_each) {
      found |= named(each_var(s.header.each));
    } else if (s.kind == StmtKind::kOpaque) {
      for (std::size_t i = 1; i < s.tokens.size(); ++i) {
        const Token& prev = s.tokens[i - 1];
        if (s.tokens[i].is_identifier() && named(s.tokens[i].text) &&
            (prev.is_identifier() || is_primitive(prev) || prev.is("]"))) {
          found = true;
        }
      }
    }
  });
  return found;
}

class LoopWalker {
 public:
  explicit LoopWalker(bool all_loops) : all_loops_(all_loops) {}

  void block(Block& b, std::set<std::string> live) {
    for (std::size_t i = 0; i < b.stmts.size(); ++i) {
      Stmt& s = b.stmts[i];
      if (s.kind == StmtKind::kFor && !s.header.is_each) {
        std::set<std::string> inner = live;
        for (const auto& n : init_names(s)) inner.insert(n);
        block(s.body, inner);
        if (all_loops_ || detect_complex_for(s)) {
          ++candidates_;
          try {
            std::vector<Stmt> out = for_to_while(s, live);
            std::vector<std::string> names = init_names(s);
            if (declares_any(b.stmts, i + 1, names)) {
              Stmt wrapper;
              wrapper.kind = StmtKind::kBlock;
              wrapper.body.stmts = std::move(out);
              b.stmts[i] = std::move(wrapper);
            } else {
              if (out.size() > 1) b.braced = true;
              b.stmts.erase(b.stmts.begin() + static_cast<long>(i));
              b.stmts.insert(b.stmts.begin() + static_cast<long>(i), out.begin(), out.end());
              i += out.size() - 1;
              for (const auto& n : names) live.insert(n);
            }
            ++converted_;
          } catch (const Error& e) {
            skipped_.push_back(e.what());
          }
        }
        continue;
      }
      switch (s.kind) {
        case StmtKind::kFor: {
          std::set<std::string> inner = live;
          inner.insert(each_var(s.header.each));
          block(s.body, inner);
          break;
        }
        case StmtKind::kWhile:
        case StmtKind::kBlock:
          block(s.body, live);
          break;
        case StmtKind::kIf:
          block(s.body, live);
          if (s.else_body) block(*s.else_body, live);
          break;
        case StmtKind::kDecl:
          for (const auto& d : s.declarators) live.insert(d.name);
          break;
        default:
          break;
      }
    }
  }

  int candidates() const { return candidates_; }
  int converted() const { return converted_; }
  const std::vector<std::string>& skipped() const { return skipped_; }

 private:
  bool all_loops_;
  int candidates_ = 0;
  int converted_ = 0;
  std::vector<std::string> skipped_;
};

}  // namespace

bool detect_complex_for(const Stmt& loop) {
  if (loop.kind != StmtKind::kFor || loop.header.is_each) return false;
  if (loop.header.cond.count() > 1) return true;
  std::set<std::string> vars;
  for (const auto& init : loop.header.init) {
    if (init.kind == StmtKind::kDecl) {
      for (const auto& d : init.declarators) vars.insert(d.name);
    } else {
      std::string v = written_var(init.tokens);
      if (v.empty()) return true;
      vars.insert(v);
    }
  }
  for (const auto& update : loop.header.update) {
    if (!is_linear_update(update.tokens)) return true;
    vars.insert(written_var(update.tokens));
  }
  return vars.size() > 1;
}

std::vector<Stmt> for_to_while(const Stmt& loop, const std::set<std::string>& live) {
  if (loop.kind != StmtKind::kFor || loop.header.is_each) {
    throw Error(ErrorKind::kUnsupported, "not a classic for loop", loop.span);
  }
  for (const auto& name : init_names(loop)) {
    if (live.count(name)) {
      throw Error(ErrorKind::kNameShadow, "'" + name + "' is already declared in the enclosing scope", loop.span);
    }
  }

  std::vector<Stmt> out;
  for (const auto& init : loop.header.init) out.push_back(init);

  Stmt w;
  w.kind = StmtKind::kWhile;
  w.cond = loop.header.cond;
  if (w.cond.empty()) {
    w.cond.op = LogicalOp::kSingle;
    w.cond.clauses = {synthetic_run("true", Language::kJava)};
  }
  w.body = loop.body;
  w.body.braced = true;
  insert_updates(w.body, loop.header.update);
  if (!ends_abruptly(w.body)) {
    w.body.stmts.insert(w.body.stmts.end(), loop.header.update.begin(), loop.header.update.end());
  }
  w.span = loop.span;
  out.push_back(std::move(w));
  out.front().comments.insert(out.front().comments.begin(), loop.comments.begin(), loop.comments.end());
  return out;
}

MethodRewrite convert_loops(const MethodUnit& method, bool all_loops) {
  MethodRewrite result{method, {}};
  result.record.rule = RuleId::kR2Loop;
  std::set<std::string> live;
  for (const auto& p : method.params) live.insert(p.name);
  LoopWalker walker(all_loops);
  walker.block(result.method.body, live);

  result.record.applicable = walker.candidates() > 0;
  result.record.applied = walker.converted() > 0;
  if (!result.record.applicable) {
    result.record.notes = all_loops ? "no for loop" : "no complex for loop";
    return result;
  }
  std::string notes = "converted " + std::to_string(walker.converted()) + " of " +
                      std::to_string(walker.candidates()) + " loop(s)";
  for (const auto& s : walker.skipped()) notes += "; skipped: " + s;
  result.record.notes = notes;
  return result;
}

}  // namespace transguard
