#pragma once

// Text form of Seifert data:
//
//   manifold := "MO" "(" integer ";" pairlist? ")"
//   pairlist := pair ("," pair)*
//   pair     := "(" integer "," integer ")"
//
// Whitespace may appear between any two tokens.

#include "dwcount/error.hpp"
#include "dwcount/seifert.hpp"

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dwcount {

namespace detail {

class SeifertParser {
 public:
  explicit SeifertParser(std::string_view text) : text_(text) {}

  SeifertData parse() {
    expect("MO");
    expect("(");
    const std::int64_t genus = integer();
    expect(";");
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    skip_space();
    if (peek() == '(') {
      pairs.push_back(pair());
      while (try_consume(',')) pairs.push_back(pair());
    }
    expect(")");
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "end of input");
    return validate_seifert(genus, std::move(pairs));
  }

 private:
  std::pair<std::int64_t, std::int64_t> pair() {
    expect("(");
    const std::int64_t a = integer();
    expect(",");
    const std::int64_t b = integer();
    expect(")");
    return {a, b};
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "integer");
    // Accumulate as a negative number so INT64_MIN is representable.
    std::int64_t value = 0;
    constexpr std::int64_t lo = std::numeric_limits<std::int64_t>::min();
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const int digit = peek() - '0';
      if (value < (lo + digit) / 10) throw ParseError(start, "integer within 64-bit range");
      value = value * 10 - digit;
      ++pos_;
    }
    if (!negative) {
      if (value == lo) throw ParseError(start, "integer within 64-bit range");
      value = -value;
    }
    return value;
  }

  void expect(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) throw ParseError(pos_, "'" + std::string(token) + "'");
    pos_ += token.size();
  }

  bool try_consume(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses "MO(g; (a1,b1), ...)". Throws ParseError with a byte offset, or
/// the domain errors of validate_seifert.
inline SeifertData parse_seifert(std::string_view text) { return detail::SeifertParser(text).parse(); }

}  // namespace dwcount
