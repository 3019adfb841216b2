#include "bargmann/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace bargmann {

Polynomial differentiate(const Polynomial& p, VariableId v) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    std::vector<Monomial::Factor> factors = m.factors();
    for (auto& f : factors) {
      if (f.first == v) f.second -= 1;
    }
    out.add_term(Monomial(std::move(factors)), c * GaussianRational(e));
  }
  return out;
}

Polynomial multiply_by_variable(const Polynomial& p, VariableId v) {
  Polynomial out;
  const Monomial x = Monomial::of(v);
  for (const auto& [m, c] : p.terms()) out.add_term(m * x, c);
  return out;
}

LinearOperator LinearOperator::identity() { return scalar(1); }

LinearOperator LinearOperator::scalar(const GaussianRational& c) {
  LinearOperator op;
  if (!c.is_zero()) op.terms_.push_back({c, {}});
  return op;
}

LinearOperator LinearOperator::multiply(VariableId v) {
  LinearOperator op;
  op.terms_.push_back({1, {{Generator::Kind::kMultiply, v}}});
  return op;
}

LinearOperator LinearOperator::derivative(VariableId v) {
  LinearOperator op;
  op.terms_.push_back({1, {{Generator::Kind::kDifferentiate, v}}});
  return op;
}

Polynomial LinearOperator::apply(const Polynomial& p) const {
  Polynomial out;
  for (const auto& term : terms_) {
    Polynomial q = p;
    for (auto it = term.factors.rbegin(); it != term.factors.rend() && !q.is_zero(); ++it) {
      q = it->kind == Generator::Kind::kMultiply ? multiply_by_variable(q, it->variable)
                                                 : differentiate(q, it->variable);
    }
    out += q * term.coefficient;
  }
  return out;
}

LinearOperator& LinearOperator::operator+=(const LinearOperator& o) {
  for (const auto& t : o.terms_) {
    auto same = std::find_if(terms_.begin(), terms_.end(),
                             [&](const OperatorTerm& x) { return x.factors == t.factors; });
    if (same == terms_.end()) {
      terms_.push_back(t);
    } else {
      same->coefficient += t.coefficient;
      if (same->coefficient.is_zero()) terms_.erase(same);
    }
  }
  return *this;
}

LinearOperator& LinearOperator::operator-=(const LinearOperator& o) {
  return *this += o * GaussianRational(-1);
}

LinearOperator& LinearOperator::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) {
  LinearOperator out;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      OperatorTerm t{ta.coefficient * tb.coefficient, ta.factors};
      t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
      LinearOperator single;
      single.terms_.push_back(std::move(t));
      out += single;
    }
  }
  return out;
}

LinearOperator commutator(const LinearOperator& a, const LinearOperator& b) { return a * b - b * a; }

namespace {

void require_three_dims(int dims) {
  if (dims != 3) throw std::invalid_argument("angular momentum requires d = 3");
}

}  // namespace

LinearOperator angular_momentum(int axis, int particles, std::optional<int> particle, int dims) {
  require_three_dims(dims);
  if (axis < 0 || axis > 2) throw std::invalid_argument("angular_momentum: axis out of range");
  if (particles < 1) throw std::invalid_argument("angular_momentum: need N >= 1");
  if (particle && (*particle < 1 || *particle > particles)) {
    throw std::invalid_argument("angular_momentum: particle out of range");
  }
  // L_a = -i (b d/dc - c d/db) with (a, b, c) cyclic.
  const int b = (axis + 1) % 3;
  const int c = (axis + 2) % 3;
  LinearOperator op;
  for (int j = 1; j <= particles; ++j) {
    if (particle && *particle != j) continue;
    const VariableId vb{b, j};
    const VariableId vc{c, j};
    op += LinearOperator::multiply(vb) * LinearOperator::derivative(vc);
    op -= LinearOperator::multiply(vc) * LinearOperator::derivative(vb);
  }
  return op * (-GaussianRational::i());
}

LinearOperator lz(int particles, int dims) { return angular_momentum(2, particles, std::nullopt, dims); }

LinearOperator ladder(LadderDirection direction, int particles, int dims) {
  require_three_dims(dims);
  const GaussianRational phase =
      direction == LadderDirection::kRaise ? GaussianRational::i() : -GaussianRational::i();
  return angular_momentum(0, particles, std::nullopt, dims) +
         angular_momentum(1, particles, std::nullopt, dims) * phase;
}

LinearOperator casimir(int particles, int dims) {
  const LinearOperator z = lz(particles, dims);
  return ladder(LadderDirection::kLower, particles, dims) *
             ladder(LadderDirection::kRaise, particles, dims) +
         z * z + z;
}

Permutation Permutation::identity(int particles) {
  std::vector<int> images(static_cast<std::size_t>(particles));
  for (int k = 0; k < particles; ++k) images[static_cast<std::size_t>(k)] = k + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int particles, int i, int j) {
  if (i < 1 || j < 1 || i > particles || j > particles) {
    throw std::invalid_argument("Permutation: transposition index out of range");
  }
  Permutation p = identity(particles);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(j - 1)]);
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size() + 1, false);
  for (int x : images) {
    if (x < 1 || x > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("Permutation: not a bijection");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
  return Permutation(std::move(images));
}

int Permutation::operator()(int particle) const {
  if (particle < 1 || particle > size()) return particle;  // acts as identity outside 1..N
  return images_[static_cast<std::size_t>(particle - 1)];
}

int Permutation::sign() const {
  int inversions = 0;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    for (std::size_t b = a + 1; b < images_.size(); ++b) inversions += images_[a] > images_[b];
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Polynomial apply_permutation(const Polynomial& p, const Permutation& sigma) {
  return p.relabel([&](VariableId v) { return VariableId{v.axis, sigma(v.particle)}; });
}

bool is_antisymmetric(const Polynomial& p, int particles) {
  for (int i = 1; i <= particles; ++i) {
    for (int j = i + 1; j <= particles; ++j) {
      if (apply_permutation(p, Permutation::transposition(particles, i, j)) != -p) return false;
    }
  }
  return true;
}

bool is_antisymmetric(const Polynomial& p) { return is_antisymmetric(p, p.max_particle()); }

bool is_symmetric(const Polynomial& p, int particles) {
  for (int i = 1; i <= particles; ++i) {
    for (int j = i + 1; j <= particles; ++j) {
      if (apply_permutation(p, Permutation::transposition(particles, i, j)) != p) return false;
    }
  }
  return true;
}

}  // namespace bargmann
