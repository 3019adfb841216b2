#include "bargmann/rational.hpp"

#include <array>
#include <stdexcept>

namespace bargmann {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty integer");
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("Rational: bad integer");
    for (std::size_t k = start; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("Rational: bad integer");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text), mpz_class(1));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::string Rational::to_fraction_string() const {
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

namespace {

constexpr unsigned kFactorialTableSize = 65;

const std::array<mpz_class, kFactorialTableSize>& factorial_table() {
  static const auto table = [] {
    std::array<mpz_class, kFactorialTableSize> t;
    t[0] = 1;
    for (unsigned n = 1; n < kFactorialTableSize; ++n) t[n] = t[n - 1] * n;
    return t;
  }();
  return table;
}

}  // namespace

mpz_class factorial(unsigned n) {
  if (n < kFactorialTableSize) return factorial_table()[n];
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational denom = o.abs_sq();
  *this *= o.conj();
  re_ /= denom;
  im_ /= denom;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  if (re_.is_zero()) return im_.to_string() + "i";
  std::string out = "(" + re_.to_string();
  if (im_.sign() > 0) out += "+";
  out += im_.to_string() + "i)";
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace bargmann
