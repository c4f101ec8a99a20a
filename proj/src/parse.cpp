#include <cctype>
#include <string>

#include "galoiskit/analysis.hpp"

namespace galoiskit {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::invalid_argument("parse error at column " + std::to_string(position + 1) + ": " + message),
      position_(position),
      message_(message) {}

namespace {

constexpr unsigned long kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Poly parse() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty expression");
    Poly p = expr();
    skip_space();
    if (!at_end()) {
      if (starts_base(peek())) throw ParseError(pos_, "implicit multiplication is not allowed; use '*'");
      if (peek() == ')') throw ParseError(pos_, "unbalanced ')'");
      throw ParseError(pos_, std::string("unexpected '") + peek() + "'");
    }
    return p;
  }

 private:
  Poly expr() {
    skip_space();
    bool negate = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negate = peek() == '-';
      ++pos_;
    }
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      if (at_end() || (peek() != '+' && peek() != '-')) return acc;
      const char op = peek();
      ++pos_;
      Poly t = term();
      acc = op == '+' ? acc + t : acc - t;
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip_space();
      if (at_end()) return acc;
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
        continue;
      }
      if (starts_base(peek())) throw ParseError(pos_, "implicit multiplication is not allowed; use '*'");
      return acc;
    }
  }

  Poly factor() {
    Poly b = base();
    skip_space();
    if (at_end() || peek() != '^') return b;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    if (at_end()) throw ParseError(pos_, "missing exponent after '^'");
    if (peek() == '-') throw ParseError(pos_, "negative exponents are not allowed");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError(pos_, "exponent must be a nonnegative integer literal");
    }
    const std::string digits = take_digits();
    if (!at_end() && (peek() == '.' || peek() == '/')) throw ParseError(start, "exponent must be an integer");
    if (digits.size() > 5 || std::stoul(digits) > kMaxExponent) {
      throw ParseError(start, "exponent larger than " + std::to_string(kMaxExponent));
    }
    return pow(b, std::stoul(digits));
  }

  Poly base() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "unexpected end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(number());
    if (c == 'x') {
      ++pos_;
      return Poly::x();
    }
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      Poly inner = expr();
      skip_space();
      if (at_end()) throw ParseError(open, "unclosed '('");
      if (peek() != ')') {
        if (starts_base(peek())) throw ParseError(pos_, "implicit multiplication is not allowed; use '*'");
        throw ParseError(pos_, std::string("expected ')' but found '") + peek() + "'");
      }
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      throw ParseError(pos_, std::string("unknown variable '") + c + "'; only x is allowed");
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  Rational number() {
    const std::size_t start = pos_;
    const std::string num = take_digits();
    if (!at_end() && peek() == '.') throw ParseError(pos_, "decimal numbers are not supported; write a/b");
    if (at_end() || peek() != '/') return Rational(Integer(num));
    ++pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError(pos_, "expected a denominator after '/'");
    }
    const std::string den = take_digits();
    if (Integer(den) == 0) throw ParseError(start, "zero denominator");
    return Rational(Integer(num), Integer(den));
  }

  std::string take_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool starts_base(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace galoiskit
