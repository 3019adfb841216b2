#pragma once

// Sparse multivariate polynomials over the Gaussian rationals, in the
// variables a_j (axis a, particle j) of the Bargmann image of N particles in
// d dimensions. Axis 0, 1, 2 are printed t, u, v.

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bargmann/rational.hpp"

namespace bargmann {

/// One Bargmann variable. Ordering is axis-major, then particle; that is the
/// variable order of the monomial order.
struct VariableId {
  int axis = 0;
  int particle = 1;  // 1-based

  friend auto operator<=>(const VariableId&, const VariableId&) = default;
};

/// Product of variable powers. Exponents stored are always >= 1 and the
/// factors are sorted by variable.
class Monomial {
 public:
  using Factor = std::pair<VariableId, int>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(VariableId v, int exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const { return degree_; }
  int exponent(VariableId v) const;

  /// Per-axis degree vector of length `dims`.
  std::vector<int> axis_degrees(int dims) const;

  /// Product of factorials of all exponents; the Bargmann norm of the monomial.
  mpz_class factorial_weight() const;

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

  /// Graded lexicographic: higher total degree is greater; ties broken by the
  /// exponent of the earliest variable where the two differ.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;
  int degree_ = 0;
};

/// Orders maps so that iteration starts at the leading (largest) monomial.
struct LeadingFirst {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, GaussianRational, LeadingFirst>;

  Polynomial() = default;
  Polynomial(GaussianRational constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(GaussianRational(constant)) {}  // NOLINT
  Polynomial(const Monomial& m, GaussianRational coefficient);

  static Polynomial variable(VariableId v) { return {Monomial::of(v), GaussianRational(1)}; }
  static Polynomial variable(int axis, int particle) { return variable(VariableId{axis, particle}); }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  const Monomial& leading_monomial() const;
  const GaussianRational& leading_coefficient() const;
  GaussianRational coefficient(const Monomial& m) const;

  /// Adds c * m in place; zero results are dropped.
  void add_term(const Monomial& m, const GaussianRational& c);

  Polynomial homogeneous_component(int degree) const;
  /// Splits into pieces keyed by a grading of monomials (e.g. total or per-axis degree).
  template <typename Key>
  std::map<Key, Polynomial> split_by(const std::function<Key(const Monomial&)>& key) const {
    std::map<Key, Polynomial> out;
    for (const auto& [m, c] : terms_) out[key(m)].terms_.emplace(m, c);
    return out;
  }
  std::map<std::vector<int>, Polynomial> split_by_axis_degrees(int dims) const;

  /// Largest axis / particle index mentioned; -1 / 0 when constant.
  int max_axis() const;
  int max_particle() const;

  /// Replaces every variable by `rename(v)`; `rename` must be injective.
  Polynomial relabel(const std::function<VariableId(VariableId)>& rename) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, int exponent);

/// Bargmann scalar product: sum over shared monomials of conj(p_m) q_m m!.
/// Antilinear in the first argument.
GaussianRational inner_product(const Polynomial& p, const Polynomial& q);

/// <p,p> as a nonnegative rational.
Rational norm_sq(const Polynomial& p);

/// The unique multiple of p with Gaussian-integer coefficients of content 1
/// whose leading coefficient has positive real part and nonnegative
/// imaginary part. Throws std::invalid_argument for p == 0.
Polynomial canonical_form(const Polynomial& p);

/// Scalar c with p == c * canonical_form(p).
GaussianRational canonical_scale(const Polynomial& p);

/// True when p == c * q for some unit c in {1, -1, i, -i}.
bool equal_up_to_unit(const Polynomial& p, const Polynomial& q);

/// True when p == c * q for some nonzero Gaussian rational c (both nonzero).
bool proportional(const Polynomial& p, const Polynomial& q);

/// Ring homomorphism fixing scalars and sending each variable v to image(v).
Polynomial substitute(const Polynomial& p, const std::function<Polynomial(VariableId)>& image);

}  // namespace bargmann
