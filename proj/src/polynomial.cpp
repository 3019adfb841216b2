#include "bargmann/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace bargmann {

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (auto& f : factors) {
    if (f.second < 0) throw std::invalid_argument("Monomial: negative exponent");
    if (f.second == 0) continue;
    if (!factors_.empty() && factors_.back().first == f.first) {
      factors_.back().second += f.second;
    } else {
      factors_.push_back(f);
    }
    degree_ += f.second;
  }
}

Monomial Monomial::of(VariableId v, int exponent) { return Monomial({{v, exponent}}); }

int Monomial::exponent(VariableId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const VariableId& x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

std::vector<int> Monomial::axis_degrees(int dims) const {
  std::vector<int> out(static_cast<std::size_t>(dims), 0);
  for (const auto& [v, e] : factors_) {
    if (v.axis >= dims) throw std::out_of_range("Monomial: axis beyond dims");
    out[static_cast<std::size_t>(v.axis)] += e;
  }
  return out;
}

mpz_class Monomial::factorial_weight() const {
  mpz_class w = 1;
  for (const auto& f : factors_) w *= factorial(static_cast<unsigned>(f.second));
  return w;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  auto x = a.factors_.begin();
  auto y = b.factors_.begin();
  for (; x != a.factors_.end() && y != b.factors_.end(); ++x, ++y) {
    // The monomial holding the earlier variable has the larger exponent there.
    if (x->first != y->first) {
      return x->first < y->first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (x->second != y->second) return x->second <=> y->second;
  }
  // Equal degrees force both sequences to end together.
  return std::strong_ordering::equal;
}

Polynomial::Polynomial(GaussianRational constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, std::move(constant));
}

Polynomial::Polynomial(const Monomial& m, GaussianRational coefficient) {
  if (!coefficient.is_zero()) terms_.emplace(m, std::move(coefficient));
}

int Polynomial::degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.degree());
  return deg;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("Polynomial: zero has no leading term");
  return terms_.begin()->first;
}

const GaussianRational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("Polynomial: zero has no leading term");
  return terms_.begin()->second;
}

GaussianRational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::homogeneous_component(int degree) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (m.degree() == degree) out.terms_.emplace(m, c);
  }
  return out;
}

std::map<std::vector<int>, Polynomial> Polynomial::split_by_axis_degrees(int dims) const {
  return split_by<std::vector<int>>([dims](const Monomial& m) { return m.axis_degrees(dims); });
}

int Polynomial::max_axis() const {
  int out = -1;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out = std::max(out, f.first.axis);
  }
  return out;
}

int Polynomial::max_particle() const {
  int out = 0;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out = std::max(out, f.first.particle);
  }
  return out;
}

Polynomial Polynomial::relabel(const std::function<VariableId(VariableId)>& rename) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Factor> factors;
    factors.reserve(m.factors().size());
    for (const auto& [v, e] : m.factors()) factors.emplace_back(rename(v), e);
    out.add_term(Monomial(std::move(factors)), c);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial pow(const Polynomial& p, int exponent) {
  if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
  Polynomial result(1);
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

GaussianRational inner_product(const Polynomial& p, const Polynomial& q) {
  const auto& small = p.size() <= q.size() ? p : q;
  const auto& large = p.size() <= q.size() ? q : p;
  GaussianRational sum;
  for (const auto& [m, c] : small.terms()) {
    auto it = large.terms().find(m);
    if (it == large.terms().end()) continue;
    const GaussianRational& cp = (&small == &p) ? c : it->second;
    const GaussianRational& cq = (&small == &p) ? it->second : c;
    sum += cp.conj() * cq * GaussianRational(Rational(mpq_class(m.factorial_weight())));
  }
  return sum;
}

Rational norm_sq(const Polynomial& p) {
  Rational sum;
  for (const auto& [m, c] : p.terms()) {
    sum += c.abs_sq() * Rational(mpq_class(m.factorial_weight()));
  }
  return sum;
}

namespace {

struct GaussianInteger {
  mpz_class re;
  mpz_class im;

  bool is_zero() const { return re == 0 && im == 0; }
};

// Nearest integer to n / d for d > 0, ties rounded up.
mpz_class round_div(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  const mpz_class num = 2 * n + d;
  const mpz_class den = 2 * d;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

GaussianInteger gaussian_mod(const GaussianInteger& a, const GaussianInteger& b) {
  const mpz_class norm = b.re * b.re + b.im * b.im;
  // a * conj(b)
  const mpz_class xr = a.re * b.re + a.im * b.im;
  const mpz_class xi = a.im * b.re - a.re * b.im;
  const mpz_class qr = round_div(xr, norm);
  const mpz_class qi = round_div(xi, norm);
  return {a.re - (qr * b.re - qi * b.im), a.im - (qr * b.im + qi * b.re)};
}

GaussianInteger gaussian_gcd(GaussianInteger a, GaussianInteger b) {
  while (!b.is_zero()) {
    GaussianInteger r = gaussian_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

GaussianRational to_rational(const GaussianInteger& z) {
  return GaussianRational(Rational(z.re, 1), Rational(z.im, 1));
}

}  // namespace

GaussianRational canonical_scale(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("canonical_form: zero polynomial");
  mpz_class denominators = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), c.re().raw().get_den_mpz_t());
    mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), c.im().raw().get_den_mpz_t());
  }
  GaussianInteger content{0, 0};
  for (const auto& [m, c] : p.terms()) {
    const GaussianInteger z{c.re().numerator() * (denominators / c.re().denominator()),
                            c.im().numerator() * (denominators / c.im().denominator())};
    content = gaussian_gcd(std::move(content), z);
  }
  // p = (content / denominators) * canonical, up to a unit fixed below
  const GaussianRational scale = to_rational(content) / GaussianRational(Rational(denominators, 1));
  const GaussianRational lead = p.leading_coefficient() / scale;
  // Rotate the leading coefficient into the half-open quadrant re > 0, im >= 0.
  GaussianRational unit(1);
  if (lead.re().sign() > 0 && lead.im().sign() >= 0) {
    unit = 1;
  } else if (lead.re().sign() <= 0 && lead.im().sign() > 0) {
    unit = GaussianRational::i();
  } else if (lead.re().sign() < 0 && lead.im().sign() <= 0) {
    unit = -1;
  } else {
    unit = -GaussianRational::i();
  }
  return scale * unit;
}

Polynomial canonical_form(const Polynomial& p) {
  const GaussianRational scale = canonical_scale(p);
  return p * (GaussianRational(1) / scale);
}

bool equal_up_to_unit(const Polynomial& p, const Polynomial& q) {
  for (const GaussianRational& u :
       {GaussianRational(1), GaussianRational(-1), GaussianRational::i(), -GaussianRational::i()}) {
    if (p == u * q) return true;
  }
  return false;
}

bool proportional(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return false;
  if (p.leading_monomial() != q.leading_monomial()) return false;
  const GaussianRational ratio = p.leading_coefficient() / q.leading_coefficient();
  return p == ratio * q;
}

Polynomial substitute(const Polynomial& p, const std::function<Polynomial(VariableId)>& image) {
  std::map<VariableId, std::vector<Polynomial>> powers;  // powers[v][k] = image(v)^k
  auto power_of = [&](VariableId v, int e) -> const Polynomial& {
    auto& table = powers[v];
    if (table.empty()) {
      table.emplace_back(1);
      table.push_back(image(v));
    }
    while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * table[1]);
    return table[static_cast<std::size_t>(e)];
  };
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial term(c);
    for (const auto& [v, e] : m.factors()) term = term * power_of(v, e);
    out += term;
  }
  return out;
}

}  // namespace bargmann
