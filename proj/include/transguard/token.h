#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "transguard/errors.h"

namespace transguard {

enum class Language { kJava, kPython };

std::string_view to_string(Language language);
Language language_from_string(std::string_view text);

enum class TokenKind {
  kIdentifier,
  kKeyword,
  kNumber,
  kString,
  kOperator,
  kPunctuation,
  kComment,
  kIndentMarker,
};

std::string_view to_string(TokenKind kind);

// Python layout markers. They carry no source bytes.
inline constexpr std::string_view kNewLine = "NEW_LINE";
inline constexpr std::string_view kIndent = "INDENT";
inline constexpr std::string_view kDedent = "DEDENT";

struct Token {
  TokenKind kind = TokenKind::kIdentifier;
  std::string text;
  Span span;

  bool is(std::string_view t) const { return text == t && kind != TokenKind::kString && kind != TokenKind::kComment; }
  bool is_marker() const { return kind == TokenKind::kIndentMarker; }
  bool is_marker(std::string_view t) const { return kind == TokenKind::kIndentMarker && text == t; }
  bool is_identifier() const { return kind == TokenKind::kIdentifier; }
  bool is_comment() const { return kind == TokenKind::kComment; }
};

using TokenRun = std::vector<Token>;

/// Builds a token that does not originate from any source text.
Token synthetic(TokenKind kind, std::string text);

/// Tokens for a space-separated snippet, e.g. "p . get (". Kinds are
/// recovered by lexing the snippet.
TokenRun synthetic_run(std::string_view text, Language language);

struct LexOptions {
  // Unterminated strings end at end of line instead of raising, and
  // inconsistent dedents snap to the nearest enclosing level.
  bool lenient = false;
  int tab_width = 4;
};

/// Lexes Java or Python source. Python output carries NEW_LINE / INDENT /
/// DEDENT markers; comment-only lines are emitted after the markers of
/// the next logical line so that they precede the statement they annotate.
TokenRun tokenize(std::string_view text, Language language, LexOptions options = {});

bool is_java_keyword(std::string_view word);
bool is_python_keyword(std::string_view word);

/// Span from the first to the last source-backed token of the run.
Span covering_span(const TokenRun& run);

/// Token texts joined by single spaces (markers and comments dropped).
std::string joined_text(const TokenRun& run);

}  // namespace transguard
