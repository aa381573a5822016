#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace transguard {

/// Half-open byte range [begin, end) into some source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return end <= begin; }
  friend bool operator==(const Span&, const Span&) = default;
};

enum class ErrorKind {
  kLex,
  kParse,
  kFocalNotFound,
  kAmbiguousFocal,
  kNameShadow,
  kUnsupported,
  kCapture,
  kTranslatorFailure,
  kFixtureMiss,
  kEmptyCorpus,
  kConfig,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, Span span = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        span_(span) {}

  ErrorKind kind() const { return kind_; }
  const Span& span() const { return span_; }

 private:
  ErrorKind kind_;
  Span span_;
};

}  // namespace transguard
