#include "transguard/render.h"

#include <sstream>

namespace transguard {

namespace {

std::string pad(int indent) { return std::string(static_cast<std::size_t>(std::max(indent, 0)) * 4, ' '); }

bool is_line_comment(const Token& t) {
  return t.is_comment() && (t.text.starts_with("//") || t.text.starts_with("#"));
}

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (w.empty()) continue;
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

// Collects output lines; the caller decides how they are joined.
struct Lines {
  std::vector<std::string> lines;

  void add(int indent, const std::string& text) { lines.push_back(pad(indent) + text); }
  void append(Lines other) {
    for (auto& l : other.lines) lines.push_back(std::move(l));
  }
  std::string joined(const std::string& base) const {
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (i > 0) out += '\n' + base;
      out += lines[i];
    }
    return out;
  }
};

Lines token_lines(const TokenRun& run, Language language, int indent) {
  Lines out;
  std::string current;
  int level = indent;
  auto flush = [&] {
    if (!current.empty()) out.add(level, current);
    current.clear();
  };
  auto word = [&](const std::string& w) {
    if (!current.empty()) current += ' ';
    current += w;
  };

  if (language == Language::kPython) {
    for (std::size_t i = 0; i < run.size(); ++i) {
      const Token& t = run[i];
      if (t.is_marker(kNewLine)) {
        flush();
      } else if (t.is_marker(kIndent)) {
        flush();
        ++level;
      } else if (t.is_marker(kDedent)) {
        flush();
        --level;
      } else {
        word(t.text);
        if (t.is_comment() && i + 1 < run.size() && !run[i + 1].is_marker(kNewLine)) flush();
      }
    }
    flush();
    return out;
  }

  int paren = 0;
  for (std::size_t i = 0; i < run.size(); ++i) {
    const Token& t = run[i];
    const Token* next = i + 1 < run.size() ? &run[i + 1] : nullptr;
    if (t.is("(") || t.is("[")) ++paren;
    if ((t.is(")") || t.is("]")) && paren > 0) --paren;
    if (paren == 0 && t.is("{")) {
      if (next && next->is("}")) {
        word("{ }");
        ++i;
        const Token* after = i + 1 < run.size() ? &run[i + 1] : nullptr;
        if (!after || !(after->is(";") || after->is(")") || after->is(",") || after->is("else") ||
                        after->is("catch") || after->is("finally") || after->is("while"))) {
          flush();
        }
        continue;
      }
      word("{");
      flush();
      ++level;
      continue;
    }
    if (paren == 0 && t.is("}")) {
      flush();
      --level;
      word("}");
      if (!next || !(next->is(";") || next->is(")") || next->is(",") || next->is("else") || next->is("catch") ||
                     next->is("finally") || next->is("while"))) {
        flush();
      }
      continue;
    }
    word(t.text);
    if ((paren == 0 && t.is(";")) || is_line_comment(t)) flush();
  }
  flush();
  return out;
}

std::string cond_text(const CondChain& chain) {
  std::string sep;
  if (chain.op == LogicalOp::kAnd) sep = chain.language == Language::kJava ? " && " : " and ";
  if (chain.op == LogicalOp::kOr) sep = chain.language == Language::kJava ? " || " : " or ";
  std::string out;
  for (std::size_t i = 0; i < chain.clauses.size(); ++i) {
    if (i > 0) out += sep;
    out += joined_text(chain.clauses[i]);
  }
  for (int k = 0; k < chain.outer_parens && !out.empty(); ++k) out = "( " + out + " )";
  return out;
}

std::string simple_text(const Stmt& stmt) { return joined_text(stmt.tokens); }

class Renderer {
 public:
  explicit Renderer(Language language) : language_(language) {}

  Lines block(const Block& b, int indent) {
    Lines out;
    for (const auto& s : b.stmts) out.append(stmt(s, indent));
    for (const auto& c : b.trailing_comments) out.add(indent, c.text);
    return out;
  }

  Lines stmt(const Stmt& s, int indent, bool with_comments = true) {
    Lines out;
    if (with_comments) {
      for (const auto& c : s.comments) out.add(indent, c.text);
    }
    return language_ == Language::kJava ? java(std::move(out), s, indent) : python(std::move(out), s, indent);
  }

  Lines method(const MethodUnit& m, int indent) {
    Lines out;
    for (const auto& c : m.comments) out.add(indent, c.text);
    std::vector<std::string> words{joined_text(m.modifiers), m.name, "("};
    for (std::size_t i = 0; i < m.params.size(); ++i) {
      if (i > 0) words.emplace_back(",");
      words.push_back(joined_text(m.params[i].tokens));
    }
    words.emplace_back(")");
    words.push_back(joined_text(m.suffix));
    if (language_ == Language::kJava) {
      java_body(out, join_words(words), m.body, indent, true);
    } else {
      words.emplace_back(":");
      python_suite(out, join_words(words), m.body, indent);
    }
    return out;
  }

 private:
  // `header {` body `}`; an unbraced body goes on the next line.
  void java_body(Lines& out, const std::string& header, const Block& body, int indent, bool force_braces = false) {
    if (!body.braced && !force_braces && body.stmts.size() == 1 && body.trailing_comments.empty()) {
      out.add(indent, header);
      out.append(stmt(body.stmts[0], indent + 1));
      return;
    }
    if (body.stmts.empty() && body.trailing_comments.empty()) {
      out.add(indent, header.empty() ? "{ }" : header + " { }");
      return;
    }
    out.add(indent, header.empty() ? "{" : header + " {");
    out.append(block(body, indent + 1));
    out.add(indent, "}");
  }

  void python_suite(Lines& out, const std::string& header, const Block& body, int indent) {
    if (body.inline_suite && body.stmts.size() == 1 && body.trailing_comments.empty() &&
        body.stmts[0].comments.empty() && is_simple(body.stmts[0])) {
      out.add(indent, header + " " + simple_text(body.stmts[0]));
      return;
    }
    out.add(indent, header);
    if (body.stmts.empty()) {
      for (const auto& c : body.trailing_comments) out.add(indent + 1, c.text);
      out.add(indent + 1, "pass");
      return;
    }
    out.append(block(body, indent + 1));
  }

  static bool is_simple(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::kReturn:
      case StmtKind::kBreak:
      case StmtKind::kContinue:
      case StmtKind::kDecl:
      case StmtKind::kExpr:
        return true;
      default:
        return false;
    }
  }

  std::string java_for_header(const Stmt& s) {
    if (s.header.is_each) return "for ( " + joined_text(s.header.each) + " )";
    std::vector<std::string> words{"for", "("};
    for (std::size_t i = 0; i < s.header.init.size(); ++i) {
      if (i > 0) words.emplace_back(",");
      words.push_back(simple_text(s.header.init[i]));
    }
    words.emplace_back(";");
    words.push_back(cond_text(s.header.cond));
    words.emplace_back(";");
    for (std::size_t i = 0; i < s.header.update.size(); ++i) {
      if (i > 0) words.emplace_back(",");
      words.push_back(simple_text(s.header.update[i]));
    }
    words.emplace_back(")");
    return join_words(words);
  }

  Lines java(Lines out, const Stmt& s, int indent) {
    switch (s.kind) {
      case StmtKind::kBlock:
        java_body(out, "", s.body, indent, true);
        break;
      case StmtKind::kFor:
        java_body(out, java_for_header(s), s.body, indent);
        break;
      case StmtKind::kWhile:
        java_body(out, "while ( " + cond_text(s.cond) + " )", s.body, indent);
        break;
      case StmtKind::kIf: {
        java_body(out, "if ( " + cond_text(s.cond) + " )", s.body, indent);
        if (!s.else_body) break;
        bool closed = !out.lines.empty() && out.lines.back() == pad(indent) + "}";
        std::string lead = closed ? "} else" : "else";
        if (closed) out.lines.pop_back();
        if (s.else_if && s.else_body->stmts.size() == 1) {
          const Stmt& chained = s.else_body->stmts[0];
          if (chained.comments.empty()) {
            Lines rest = stmt(chained, indent);
            rest.lines[0] = pad(indent) + lead + " " + rest.lines[0].substr(pad(indent).size());
            out.append(std::move(rest));
          } else {
            out.add(indent, lead);
            out.append(stmt(chained, indent));
          }
        } else {
          java_body(out, lead, *s.else_body, indent);
        }
        break;
      }
      case StmtKind::kOpaque:
        out.append(token_lines(s.tokens, Language::kJava, indent));
        break;
      default:
        out.add(indent, simple_text(s) + " ;");
        break;
    }
    return out;
  }

  Lines python(Lines out, const Stmt& s, int indent) {
    switch (s.kind) {
      case StmtKind::kFor:
        python_suite(out, "for " + joined_text(s.header.each) + " :", s.body, indent);
        break;
      case StmtKind::kWhile:
        python_suite(out, "while " + cond_text(s.cond) + " :", s.body, indent);
        break;
      case StmtKind::kIf: {
        python_suite(out, "if " + cond_text(s.cond) + " :", s.body, indent);
        if (!s.else_body) break;
        if (s.else_if && s.else_body->stmts.size() == 1) {
          const Stmt& chained = s.else_body->stmts[0];
          for (const auto& c : chained.comments) out.add(indent, c.text);
          Lines rest = stmt(chained, indent, false);
          // "if ..." becomes "elif ..."
          rest.lines[0] = pad(indent) + "el" + rest.lines[0].substr(pad(indent).size());
          out.append(std::move(rest));
        } else {
          python_suite(out, "else :", *s.else_body, indent);
        }
        break;
      }
      case StmtKind::kBlock:
        out.append(block(s.body, indent));
        break;
      case StmtKind::kOpaque:
        out.append(token_lines(s.tokens, Language::kPython, indent));
        break;
      default:
        out.add(indent, simple_text(s));
        break;
    }
    return out;
  }

  Language language_;
};

// ---------------------------------------------------------------------------

void dump_run(std::ostream& os, const TokenRun& run) {
  os << '[';
  bool first = true;
  for (const auto& t : run) {
    if (t.is_comment()) continue;
    if (!first) os << ' ';
    first = false;
    os << t.text;
  }
  os << ']';
}

void dump_block(std::ostream& os, const Block& block);

void dump_cond(std::ostream& os, const CondChain& chain) {
  os << to_string(chain.op) << '{';
  for (const auto& c : chain.clauses) dump_run(os, c);
  os << '}';
}

void dump_stmt(std::ostream& os, const Stmt& s) {
  os << '(' << to_string(s.kind);
  switch (s.kind) {
    case StmtKind::kFor:
      if (s.header.is_each) {
        os << " each=";
        dump_run(os, s.header.each);
      } else {
        os << " init=";
        for (const auto& i : s.header.init) dump_stmt(os, i);
        os << " cond=";
        dump_cond(os, s.header.cond);
        os << " update=";
        for (const auto& u : s.header.update) dump_stmt(os, u);
      }
      os << ' ';
      dump_block(os, s.body);
      break;
    case StmtKind::kWhile:
      os << ' ';
      dump_cond(os, s.cond);
      os << ' ';
      dump_block(os, s.body);
      break;
    case StmtKind::kIf:
      os << ' ';
      dump_cond(os, s.cond);
      os << ' ';
      dump_block(os, s.body);
      if (s.else_body) {
        os << " else ";
        dump_block(os, *s.else_body);
      }
      break;
    case StmtKind::kBlock:
      os << ' ';
      dump_block(os, s.body);
      break;
    default:
      os << ' ';
      dump_run(os, s.tokens);
      break;
  }
  os << ')';
}

void dump_block(std::ostream& os, const Block& block) {
  os << '{';
  for (const auto& s : block.stmts) dump_stmt(os, s);
  os << '}';
}

void dump_method(std::ostream& os, const MethodUnit& m) {
  os << "(method " << m.name << " mods=";
  dump_run(os, m.modifiers);
  os << " params=";
  for (const auto& p : m.params) dump_run(os, p.tokens);
  os << " suffix=";
  dump_run(os, m.suffix);
  os << ' ';
  dump_block(os, m.body);
  os << ')';
}

}  // namespace

std::string render(const SyntaxUnit& unit) {
  Renderer renderer(unit.language);
  std::string out;
  for (const auto& item : unit.items) {
    Lines lines;
    if (const auto* m = std::get_if<MethodUnit>(&item)) {
      lines = renderer.method(*m, m->depth);
    } else {
      const auto& other = std::get<OtherItem>(item);
      lines = token_lines(other.tokens, unit.language, other.depth);
    }
    if (lines.lines.empty()) continue;
    out += lines.joined("");
    out += '\n';
  }
  return out;
}

std::string render(const MethodUnit& method, Language language, const std::string& base) {
  return Renderer(language).method(method, 0).joined(base);
}

std::string render(const Block& block, Language language, int indent) {
  return Renderer(language).block(block, indent).joined("");
}

std::string render(const Stmt& stmt, Language language, int indent) {
  return Renderer(language).stmt(stmt, indent).joined("");
}

std::string render(const CondChain& chain) { return cond_text(chain); }

std::string render_tokens(const TokenRun& run, Language language, int indent) {
  return token_lines(run, language, indent).joined("");
}

std::string dump(const SyntaxUnit& unit) {
  std::ostringstream os;
  for (const auto& item : unit.items) {
    if (const auto* m = std::get_if<MethodUnit>(&item)) {
      dump_method(os, *m);
    } else {
      os << "(other ";
      TokenRun run;
      for (const auto& t : std::get<OtherItem>(item).tokens) {
        if (!t.is_marker()) run.push_back(t);
      }
      dump_run(os, run);
      os << ')';
    }
    os << '\n';
  }
  return os.str();
}

std::string dump(const MethodUnit& method) {
  std::ostringstream os;
  dump_method(os, method);
  return os.str();
}

std::string dump(const Block& block) {
  std::ostringstream os;
  dump_block(os, block);
  return os.str();
}

std::string dump(const Stmt& stmt) {
  std::ostringstream os;
  dump_stmt(os, stmt);
  return os.str();
}

bool structurally_equal(const SyntaxUnit& a, const SyntaxUnit& b) {
  return a.language == b.language && dump(a) == dump(b);
}

std::string normalize_spacing(std::string_view text, Language language) {
  TokenRun tokens = tokenize(text, language, LexOptions{.lenient = true});
  std::string out;
  for (const auto& t : tokens) {
    if (t.is_comment()) continue;
    if (!out.empty()) out += ' ';
    out += t.text;
  }
  return out;
}

}  // namespace transguard
