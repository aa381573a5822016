#pragma once

#include <string>

#include "transguard/syntax.h"

namespace transguard {

// Single-space token style. Java statements go one per line, Python suites
// get four spaces per level. `indent` is a nesting level, `base` is a prefix
// prepended to every line after the first.

std::string render(const SyntaxUnit& unit);
std::string render(const MethodUnit& method, Language language, const std::string& base = {});
std::string render(const Block& block, Language language, int indent = 0);
std::string render(const Stmt& stmt, Language language, int indent = 0);
std::string render(const CondChain& chain);
std::string render_tokens(const TokenRun& run, Language language, int indent = 0);

/// Canonical structural dump: statement kinds, header parts and token
/// texts, without spans or layout flags. Two trees are structurally equal
/// iff their dumps are equal.
std::string dump(const SyntaxUnit& unit);
std::string dump(const MethodUnit& method);
std::string dump(const Block& block);
std::string dump(const Stmt& stmt);

bool structurally_equal(const SyntaxUnit& a, const SyntaxUnit& b);

/// Token texts joined by single spaces, comments and markers dropped; the
/// "modulo token spacing" form used to compare texts.
std::string normalize_spacing(std::string_view text, Language language);

}  // namespace transguard
