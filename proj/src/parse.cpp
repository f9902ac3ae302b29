#include "fb/parse.hpp"

#include <cctype>

#include "fb/error.hpp"

namespace fb {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const PrimeField& field, std::span<const std::string> names,
             std::size_t line)
      : text_(text), field_(field), names_(names), line_(line) {}

  Polynomial parse() {
    Polynomial f = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  Polynomial expression() {
    skip_space();
    Polynomial acc(field_, names_.size());
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    Polynomial base = primary();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent after '^'");
      std::uint64_t e = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
        if (e > 0xffffffffull) fail("exponent too large");
      }
      return base.pow(e);
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      const std::uint64_t p = field_.characteristic();
      while (std::isdigit(static_cast<unsigned char>(peek())))
        v = (v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0')) % p;
      return Polynomial::constant(field_, names_.size(), static_cast<Coeff>(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return Polynomial::variable(field_, names_.size(), i);
      throw ParseError("line " + std::to_string(line_) + ", column " + std::to_string(start + 1) +
                           ": unknown variable '" + std::string(name) + "'",
                       line_, start + 1, ErrorKind::UnknownVariable);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_) + ", column " + std::to_string(pos_ + 1) +
                         ": " + what,
                     line_, pos_ + 1);
  }

  std::string_view text_;
  const PrimeField& field_;
  std::span<const std::string> names_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PrimeField& field,
                            std::span<const std::string> names, std::size_t line) {
  return PolyParser(text, field, names, line).parse();
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace fb
