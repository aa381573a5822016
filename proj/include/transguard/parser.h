#pragma once

#include <string>
#include <string_view>

#include "transguard/syntax.h"

namespace transguard {

struct ParseOptions {
  // Recover from unbalanced braces and bad indentation instead of raising.
  // When recovery is impossible the whole input becomes one opaque item.
  bool lenient = false;
};

/// Segments a token stream into methods and other items, then parses each
/// method body into statements. `source` is the text the tokens came from.
SyntaxUnit parse_unit(const TokenRun& tokens, Language language, std::string source,
                      ParseOptions options = {});

/// tokenize + parse_unit.
SyntaxUnit parse_source(std::string_view text, Language language, ParseOptions options = {});

/// Decomposes a bracket-balanced expression into a homogeneous clause chain.
CondChain parse_condition(const TokenRun& run, Language language);

/// Parses a statement sequence in isolation (Java: no surrounding braces).
Block parse_block_text(std::string_view text, Language language);

}  // namespace transguard
