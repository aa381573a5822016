#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

#include "transguard/token.h"

namespace transguard {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kLex: return "LexError";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kFocalNotFound: return "FocalNotFound";
    case ErrorKind::kAmbiguousFocal: return "AmbiguousFocal";
    case ErrorKind::kNameShadow: return "NameShadowError";
    case ErrorKind::kUnsupported: return "Unsupported";
    case ErrorKind::kCapture: return "CaptureError";
    case ErrorKind::kTranslatorFailure: return "TranslatorFailure";
    case ErrorKind::kFixtureMiss: return "FixtureMiss";
    case ErrorKind::kEmptyCorpus: return "EmptyCorpus";
    case ErrorKind::kConfig: return "ConfigError";
  }
  return "Error";
}

std::string_view to_string(Language language) {
  return language == Language::kJava ? "java" : "python";
}

Language language_from_string(std::string_view text) {
  if (text == "java") return Language::kJava;
  if (text == "python" || text == "py") return Language::kPython;
  throw Error(ErrorKind::kConfig, "unknown language '" + std::string(text) + "'");
}

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kKeyword: return "keyword";
    case TokenKind::kNumber: return "numeric-literal";
    case TokenKind::kString: return "string-literal";
    case TokenKind::kOperator: return "operator";
    case TokenKind::kPunctuation: return "punctuation";
    case TokenKind::kComment: return "comment";
    case TokenKind::kIndentMarker: return "indent-marker";
  }
  return "?";
}

bool is_java_keyword(std::string_view word) {
  static const std::unordered_set<std::string_view> kWords = {
      "abstract", "assert",     "boolean",   "break",     "byte",         "case",
      "catch",    "char",       "class",     "const",     "continue",     "default",
      "do",       "double",     "else",      "enum",      "extends",      "final",
      "finally",  "float",      "for",       "goto",      "if",           "implements",
      "import",   "instanceof", "int",       "interface", "long",         "native",
      "new",      "package",    "private",   "protected", "public",       "return",
      "short",    "static",     "strictfp",  "super",     "switch",       "synchronized",
      "this",     "throw",      "throws",    "transient", "try",          "void",
      "volatile", "while",      "true",      "false",     "null"};
  return kWords.count(word) > 0;
}

bool is_python_keyword(std::string_view word) {
  static const std::unordered_set<std::string_view> kWords = {
      "False", "None",   "True",  "and",      "as",     "assert", "async",
      "await", "break",  "class", "continue", "def",    "del",    "elif",
      "else",  "except", "finally", "for",    "from",   "global", "if",
      "import", "in",    "is",    "lambda",   "nonlocal", "not",  "or",
      "pass",  "raise",  "return", "try",     "while",  "with",   "yield"};
  return kWords.count(word) > 0;
}

Token synthetic(TokenKind kind, std::string text) {
  return Token{kind, std::move(text), Span{}};
}

TokenRun synthetic_run(std::string_view text, Language language) {
  TokenRun run = tokenize(text, language, LexOptions{.lenient = true});
  TokenRun out;
  for (auto& token : run) {
    if (token.is_marker()) continue;
    token.span = Span{};
    out.push_back(std::move(token));
  }
  return out;
}

Span covering_span(const TokenRun& run) {
  Span span;
  bool found = false;
  for (const auto& token : run) {
    if (token.span.empty()) continue;
    if (!found) {
      span = token.span;
      found = true;
    } else {
      span.begin = std::min(span.begin, token.span.begin);
      span.end = std::max(span.end, token.span.end);
    }
  }
  return span;
}

std::string joined_text(const TokenRun& run) {
  std::string out;
  for (const auto& token : run) {
    if (token.is_marker() || token.is_comment()) continue;
    if (!out.empty()) out += ' ';
    out += token.text;
  }
  return out;
}

namespace {

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80; }

constexpr std::array<std::string_view, 27> kJavaOps = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=",
    ">=",   "+=",  "-=",  "*=",  "/=",  "%=", "&=", "|=", "^=", "<<", ">>", "@",  "?"};

constexpr std::array<std::string_view, 24> kPythonOps = {
    "**=", "//=", ">>=", "<<=", "...", "->", ":=", "**", "//", "==", "!=", "<=",
    ">=",  "+=",  "-=",  "*=",  "/=",  "%=", "&=", "|=", "^=", "@=", "<<", ">>"};

class Lexer {
 public:
  Lexer(std::string_view text, Language language, LexOptions options)
      : text_(text), language_(language), options_(options) {}

  TokenRun run() {
    if (language_ == Language::kJava) {
      lex_java();
    } else {
      lex_python();
    }
    return std::move(out_);
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void emit(TokenKind kind, std::size_t begin, std::size_t end) {
    out_.push_back(Token{kind, std::string(text_.substr(begin, end - begin)), Span{begin, end}});
  }

  void emit_marker(std::string_view text) {
    out_.push_back(Token{TokenKind::kIndentMarker, std::string(text), Span{pos_, pos_}});
  }

  void lex_identifier() {
    std::size_t begin = pos_;
    while (pos_ < text_.size() && ident_char(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view word = text_.substr(begin, pos_ - begin);
    bool keyword = language_ == Language::kJava ? is_java_keyword(word) : is_python_keyword(word);
    emit(keyword ? TokenKind::kKeyword : TokenKind::kIdentifier, begin, pos_);
  }

  void lex_number() {
    std::size_t begin = pos_;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X' || peek(1) == 'b' || peek(1) == 'B' ||
                          peek(1) == 'o' || peek(1) == 'O')) {
      pos_ += 2;
      while (std::isxdigit(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    } else {
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      } else if (peek() == '.' && !std::isalpha(static_cast<unsigned char>(peek(1))) && peek(1) != '.') {
        ++pos_;  // `1.` literal
      }
      if ((peek() == 'e' || peek() == 'E') &&
          (std::isdigit(static_cast<unsigned char>(peek(1))) ||
           ((peek(1) == '+' || peek(1) == '-') && std::isdigit(static_cast<unsigned char>(peek(2)))))) {
        pos_ += 2;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
    }
    while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;  // L, f, d, j suffixes
    emit(TokenKind::kNumber, begin, pos_);
  }

  // Lexes a quoted literal starting at pos_ (after any prefix letters, which
  // begin at `begin`).
  void lex_string(std::size_t begin) {
    char quote = peek();
    bool triple = language_ == Language::kPython && peek(1) == quote && peek(2) == quote;
    pos_ += triple ? 3 : 1;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\\') {
        pos_ += 2;
        continue;
      }
      if (triple) {
        if (c == quote && peek(1) == quote && peek(2) == quote) {
          pos_ += 3;
          emit(TokenKind::kString, begin, pos_);
          return;
        }
      } else {
        if (c == quote) {
          ++pos_;
          emit(TokenKind::kString, begin, pos_);
          return;
        }
        if (c == '\n') break;
      }
      ++pos_;
    }
    pos_ = std::min(pos_, text_.size());
    if (!options_.lenient) {
      throw Error(ErrorKind::kLex, "unterminated string literal", Span{begin, pos_});
    }
    emit(TokenKind::kString, begin, pos_);
  }

  bool lex_operator() {
    auto try_ops = [&](auto& ops) {
      for (std::string_view op : ops) {
        if (text_.substr(pos_, op.size()) == op) {
          emit(TokenKind::kOperator, pos_, pos_ + op.size());
          pos_ += op.size();
          return true;
        }
      }
      return false;
    };
    if (language_ == Language::kJava ? try_ops(kJavaOps) : try_ops(kPythonOps)) return true;
    char c = peek();
    std::string_view punct = language_ == Language::kJava ? "()[]{};,." : "()[]{};,.:";
    if (punct.find(c) != std::string_view::npos) {
      emit(TokenKind::kPunctuation, pos_, pos_ + 1);
    } else {
      // Anything else is a one-character operator; lexing never stops on an
      // unexpected byte.
      emit(TokenKind::kOperator, pos_, pos_ + 1);
    }
    ++pos_;
    return true;
  }

  void lex_java() {
    while (pos_ < text_.size()) {
      unsigned char c = static_cast<unsigned char>(peek());
      if (std::isspace(c)) {
        ++pos_;
      } else if (c == '/' && peek(1) == '/') {
        std::size_t begin = pos_;
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        emit(TokenKind::kComment, begin, pos_);
      } else if (c == '/' && peek(1) == '*') {
        std::size_t begin = pos_;
        std::size_t close = text_.find("*/", pos_ + 2);
        if (close == std::string_view::npos) {
          if (!options_.lenient) throw Error(ErrorKind::kLex, "unterminated comment", Span{begin, text_.size()});
          pos_ = text_.size();
        } else {
          pos_ = close + 2;
        }
        emit(TokenKind::kComment, begin, pos_);
      } else if (c == '"' || c == '\'') {
        lex_string(pos_);
      } else if (std::isdigit(c) || (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
        lex_number();
      } else if (ident_start(c)) {
        lex_identifier();
      } else {
        lex_operator();
      }
    }
  }

  bool string_prefix_at(std::size_t& prefix_len) const {
    std::size_t i = 0;
    while (i < 2 && pos_ + i < text_.size() &&
           std::string_view("rRbBuUfF").find(text_[pos_ + i]) != std::string_view::npos) {
      ++i;
    }
    if (i > 0 && pos_ + i < text_.size() && (text_[pos_ + i] == '"' || text_[pos_ + i] == '\'')) {
      prefix_len = i;
      return true;
    }
    return false;
  }

  // Measures the indentation of the line starting at pos_; returns false for
  // blank and comment-only lines.
  bool measure_indent(int& width) {
    width = 0;
    std::size_t p = pos_;
    while (p < text_.size() && (text_[p] == ' ' || text_[p] == '\t' || text_[p] == '\f')) {
      if (text_[p] == '\t') {
        width = (width / options_.tab_width + 1) * options_.tab_width;
      } else if (text_[p] == ' ') {
        ++width;
      }
      ++p;
    }
    pos_ = p;
    if (p >= text_.size()) return false;
    char c = text_[p];
    return c != '\n' && c != '\r' && c != '#';
  }

  void lex_python() {
    std::vector<int> levels{0};
    std::vector<Token> pending_comments;
    int depth = 0;  // bracket nesting; newlines inside brackets are joins
    bool at_line_start = true;
    bool line_has_tokens = false;

    auto flush_comments = [&] {
      for (auto& comment : pending_comments) out_.push_back(std::move(comment));
      pending_comments.clear();
    };

    while (pos_ < text_.size() || at_line_start) {
      if (at_line_start) {
        at_line_start = false;
        int width = 0;
        if (!measure_indent(width)) {
          // Blank or comment-only line: no layout tokens.
          if (pos_ < text_.size() && text_[pos_] == '#') {
            std::size_t begin = pos_;
            while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            pending_comments.push_back(
                Token{TokenKind::kComment, std::string(text_.substr(begin, pos_ - begin)), Span{begin, pos_}});
          }
          if (pos_ < text_.size()) {
            while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            ++pos_;
            at_line_start = true;
          }
          continue;
        }
        if (width > levels.back()) {
          levels.push_back(width);
          emit_marker(kIndent);
        } else {
          while (width < levels.back()) {
            levels.pop_back();
            emit_marker(kDedent);
          }
          if (width != levels.back()) {
            if (!options_.lenient) {
              throw Error(ErrorKind::kParse, "inconsistent indentation", Span{pos_, pos_});
            }
            levels.push_back(width);
            emit_marker(kIndent);
          }
        }
        flush_comments();
        line_has_tokens = false;
      }
      if (pos_ >= text_.size()) break;

      char c = peek();
      if (c == '\n') {
        ++pos_;
        if (depth == 0) {
          if (line_has_tokens) {
            out_.push_back(Token{TokenKind::kIndentMarker, std::string(kNewLine), Span{pos_ - 1, pos_ - 1}});
          }
          line_has_tokens = false;
          at_line_start = true;
        }
        continue;
      }
      if (c == '\\' && (peek(1) == '\n' || (peek(1) == '\r' && peek(2) == '\n'))) {
        pos_ += peek(1) == '\n' ? 2 : 3;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f') {
        ++pos_;
        continue;
      }
      line_has_tokens = true;
      if (c == '#') {
        std::size_t begin = pos_;
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        emit(TokenKind::kComment, begin, pos_);
        continue;
      }
      std::size_t prefix = 0;
      if (c == '"' || c == '\'') {
        lex_string(pos_);
      } else if (string_prefix_at(prefix)) {
        std::size_t begin = pos_;
        pos_ += prefix;
        lex_string(begin);
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
        lex_number();
      } else if (ident_start(static_cast<unsigned char>(c))) {
        lex_identifier();
      } else {
        if (c == '(' || c == '[' || c == '{') ++depth;
        if ((c == ')' || c == ']' || c == '}') && depth > 0) --depth;
        lex_operator();
      }
    }
    if (line_has_tokens) emit_marker(kNewLine);
    while (levels.size() > 1) {
      levels.pop_back();
      emit_marker(kDedent);
    }
    flush_comments();
  }

  std::string_view text_;
  Language language_;
  LexOptions options_;
  std::size_t pos_ = 0;
  TokenRun out_;
};

}  // namespace

TokenRun tokenize(std::string_view text, Language language, LexOptions options) {
  return Lexer(text, language, options).run();
}

}  // namespace transguard
