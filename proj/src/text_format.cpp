#include "bargmann/text_format.hpp"

#include <cctype>

namespace bargmann {

VariableNamer cartesian_names(int dims) {
  return [dims](VariableId v) {
    if (dims <= 3 && v.axis < 3) {
      return std::string(1, "tuv"[v.axis]) + std::to_string(v.particle);
    }
    return "x" + std::to_string(v.axis) + "_" + std::to_string(v.particle);
  };
}

std::string format_polynomial(const Polynomial& p, const VariableNamer& name) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string term = c.to_string();
    for (const auto& [v, e] : m.factors()) {
      term += "*" + name(v);
      if (e > 1) term += "^" + std::to_string(e);
    }
    if (!first && term.front() != '-') out += "+";
    out += term;
    first = false;
  }
  return out;
}

std::string format_polynomial(const Polynomial& p, int dims) {
  return format_polynomial(p, cartesian_names(dims));
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    if (text_.empty()) fail("empty input");
    Polynomial out;
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = (take() == '-') ? -1 : 1;
    out += term() * GaussianRational(sign);
    while (!done()) {
      const char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      sign = (take() == '-') ? -1 : 1;
      if (peek() == '+' || peek() == '-') sign *= (take() == '-') ? -1 : 1;
      out += term() * GaussianRational(sign);
    }
    return out;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  char take() { return done() ? '\0' : text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  static bool is_variable_start(char c) { return c == 't' || c == 'u' || c == 'v' || c == 'x'; }

  std::string digits() {
    std::string out;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) out += take();
    if (out.empty()) fail("expected digits");
    return out;
  }

  Rational rational() {
    std::string num = digits();
    if (peek() == '/') {
      take();
      const std::size_t at = pos_;
      std::string den = digits();
      if (mpz_class(den) == 0) throw ParseError("zero denominator", at);
      return Rational(mpz_class(num), mpz_class(den));
    }
    return Rational(mpz_class(num), mpz_class(1));
  }

  // rational ['i'] | 'i'
  GaussianRational real_or_imaginary() {
    if (peek() == 'i') {
      take();
      return GaussianRational::i();
    }
    Rational r = rational();
    if (peek() == 'i') {
      take();
      return {Rational(0), r};
    }
    return r;
  }

  GaussianRational complex_literal() {
    take();  // '('
    GaussianRational value;
    bool first = true;
    while (peek() != ')') {
      if (done()) fail("unterminated '('");
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (take() == '-') ? -1 : 1;
      } else if (!first) {
        fail("expected sign inside complex literal");
      }
      value += real_or_imaginary() * GaussianRational(sign);
      first = false;
    }
    if (first) fail("empty complex literal");
    take();  // ')'
    return value;
  }

  Monomial factor() {
    const std::size_t at = pos_;
    const char letter = take();
    VariableId v;
    if (letter == 'x') {
      v.axis = std::stoi(digits());
      if (take() != '_') throw ParseError("expected '_' in variable name", pos_ - 1);
      v.particle = std::stoi(digits());
    } else {
      v.axis = letter == 't' ? 0 : (letter == 'u' ? 1 : 2);
      v.particle = std::stoi(digits());
    }
    if (v.particle < 1) throw ParseError("particle index must be >= 1", at);
    int exponent = 1;
    if (peek() == '^') {
      take();
      exponent = std::stoi(digits());
    }
    return Monomial::of(v, exponent);
  }

  Polynomial term() {
    GaussianRational coefficient(1);
    Monomial monomial;
    if (peek() == '(') {
      coefficient = complex_literal();
    } else if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == 'i') {
      coefficient = real_or_imaginary();
    } else if (is_variable_start(peek())) {
      monomial = factor();
    } else {
      fail(done() ? "unexpected end of input" : std::string("unexpected '") + peek() + "'");
    }
    while (peek() == '*') {
      take();
      if (!is_variable_start(peek())) fail("expected variable after '*'");
      monomial = monomial * factor();
    }
    return {monomial, coefficient};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace bargmann
