#include "bargmann/fock.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace bargmann {

namespace {

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int orbital_degree(const Orbital& o) { return std::accumulate(o.begin(), o.end(), 0); }

// All orbitals of degree <= max_degree, largest first.
std::vector<Orbital> orbitals_up_to(int dims, int max_degree) {
  std::vector<Orbital> out;
  Orbital current(static_cast<std::size_t>(dims), 0);
  std::function<void(int, int)> fill = [&](int axis, int remaining) {
    if (axis == dims - 1) {
      current[static_cast<std::size_t>(axis)] = remaining;
      out.push_back(current);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      current[static_cast<std::size_t>(axis)] = e;
      fill(axis + 1, remaining - e);
    }
  };
  for (int deg = max_degree; deg >= 0; --deg) fill(0, deg);
  std::stable_sort(out.begin(), out.end(), orbital_precedes);
  return out;
}

// Visits every strictly decreasing N-tuple of orbitals with total degree E.
void for_each_configuration(const ShellSpec& spec,
                            const std::function<void(const std::vector<Orbital>&)>& visit) {
  const int energy = spec.total_degree();
  const std::vector<Orbital> orbitals = orbitals_up_to(spec.dims, energy);
  std::vector<Orbital> chosen;
  std::function<void(std::size_t, int)> pick = [&](std::size_t start, int sum) {
    const int remaining = spec.particles - static_cast<int>(chosen.size());
    if (remaining == 0) {
      if (sum == energy) visit(chosen);
      return;
    }
    for (std::size_t i = start; i < orbitals.size(); ++i) {
      const int deg = orbital_degree(orbitals[i]);
      if (sum + deg > energy) continue;
      if (sum + deg * remaining < energy) break;  // later orbitals are no larger
      chosen.push_back(orbitals[i]);
      pick(i + 1, sum + deg);
      chosen.pop_back();
    }
  };
  pick(0, 0);
}

Monomial orbital_on(const Orbital& o, int particle) {
  std::vector<Monomial::Factor> factors;
  for (std::size_t a = 0; a < o.size(); ++a) {
    if (o[a] > 0) factors.push_back({VariableId{static_cast<int>(a), particle}, o[a]});
  }
  return Monomial(std::move(factors));
}

std::string axis_name(int axis, int dims) {
  if (dims <= 3 && axis < 3) return std::string(1, "tuv"[axis]);
  return "x" + std::to_string(axis);
}

// Exponent vectors over k = 1..N with sum k * e_k == degree, e_1 largest first.
std::vector<std::vector<int>> partitions(int degree, int particles) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(particles), 0);
  std::function<void(int, int)> fill = [&](int k, int remaining) {
    if (k > particles) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    for (int e = remaining / k; e >= 0; --e) {
      current[static_cast<std::size_t>(k - 1)] = e;
      fill(k + 1, remaining - e * k);
    }
    current[static_cast<std::size_t>(k - 1)] = 0;
  };
  fill(1, degree);
  return out;
}

// Compositions of `degree` into `dims` nonnegative parts, lexicographically largest first.
std::vector<std::vector<int>> compositions(int degree, int dims) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(dims), 0);
  std::function<void(int, int)> fill = [&](int axis, int remaining) {
    if (axis == dims - 1) {
      current[static_cast<std::size_t>(axis)] = remaining;
      out.push_back(current);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      current[static_cast<std::size_t>(axis)] = e;
      fill(axis + 1, remaining - e);
    }
  };
  fill(0, degree);
  return out;
}

}  // namespace

int minimal_degree(int particles, int dims) {
  if (particles < 1 || dims < 1) throw std::invalid_argument("minimal_degree: need N, d >= 1");
  long long remaining = particles;
  long long energy = 0;
  for (int level = 0; remaining > 0; ++level) {
    const long long take = std::min(remaining, binomial(level + dims - 1, dims - 1));
    energy += take * level;
    remaining -= take;
  }
  return static_cast<int>(energy);
}

long long shape_count(int particles, int dims) {
  long long nfact = 1;
  for (int k = 2; k <= particles; ++k) nfact *= k;
  long long out = 1;
  for (int a = 1; a < dims; ++a) out *= nfact;
  return out;
}

void ShellSpec::validate() const {
  if (particles < 1) throw std::invalid_argument("ShellSpec: N must be >= 1");
  if (dims < 1) throw std::invalid_argument("ShellSpec: d must be >= 1");
  if (shell < 0) throw std::invalid_argument("ShellSpec: shell must be >= 0");
}

bool orbital_precedes(const Orbital& a, const Orbital& b) {
  const int da = orbital_degree(a);
  const int db = orbital_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial slater_determinant(const std::vector<Orbital>& occupied) {
  const int n = static_cast<int>(occupied.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial out;
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) inversions += perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)];
    }
    Monomial m;
    for (int k = 0; k < n; ++k) {
      m = m * orbital_on(occupied[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(k)] + 1);
    }
    out.add_term(m, GaussianRational(inversions % 2 == 0 ? 1 : -1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<SlaterState> slater_basis(const ShellSpec& spec) {
  spec.validate();
  std::vector<SlaterState> out;
  for_each_configuration(spec, [&](const std::vector<Orbital>& occupied) {
    out.push_back({occupied, slater_determinant(occupied), spec.total_degree()});
  });
  return out;
}

long long shell_dimension(const ShellSpec& spec) {
  spec.validate();
  long long count = 0;
  for_each_configuration(spec, [&](const std::vector<Orbital>&) { ++count; });
  return count;
}

Polynomial elementary_symmetric(int axis, int k, int particles) {
  if (k < 1 || k > particles) throw std::invalid_argument("elementary_symmetric: need 1 <= k <= N");
  Polynomial out;
  std::vector<int> chosen;
  std::function<void(int)> pick = [&](int next) {
    if (static_cast<int>(chosen.size()) == k) {
      std::vector<Monomial::Factor> factors;
      for (int j : chosen) factors.push_back({VariableId{axis, j}, 1});
      out.add_term(Monomial(std::move(factors)), 1);
      return;
    }
    for (int j = next; j <= particles; ++j) {
      chosen.push_back(j);
      pick(j + 1);
      chosen.pop_back();
    }
  };
  pick(1);
  return out;
}

Polynomial spherical_component(const Polynomial& x, const Polynomial& y, const Polynomial& z,
                               int m) {
  const GaussianRational i = GaussianRational::i();
  switch (m) {
    case 1:
      return -x - y * i;
    case 0:
      return z;
    case -1:
      return x - y * i;
    default:
      throw std::invalid_argument("spherical_component: m must be -1, 0 or 1");
  }
}

Polynomial spherical_boson(int m, int particles, int dims) {
  if (dims != 3) throw std::invalid_argument("spherical_boson requires d = 3");
  return spherical_component(elementary_symmetric(0, 1, particles),
                             elementary_symmetric(1, 1, particles),
                             elementary_symmetric(2, 1, particles), m);
}

Polynomial particle_difference(int axis) {
  return Polynomial::variable(axis, 1) - Polynomial::variable(axis, 2);
}

Polynomial spherical_ground(int m) {
  return spherical_component(particle_difference(0), particle_difference(1),
                             particle_difference(2), m);
}

std::string EulerBosonMonomial::label(int dims) const {
  if (powers.empty()) return "1";
  std::string out;
  for (const auto& [gen, e] : powers) {
    if (!out.empty()) out += "*";
    out += "e" + std::to_string(gen.second) + "(" + axis_name(gen.first, dims) + ")";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::vector<EulerBosonMonomial> euler_monomials_with_axis_degrees(
    int particles, const std::vector<int>& axis_degrees) {
  std::map<std::pair<int, int>, Polynomial> generators;
  auto generator = [&](int axis, int k) -> const Polynomial& {
    auto it = generators.find({axis, k});
    if (it == generators.end()) {
      it = generators.emplace(std::make_pair(axis, k), elementary_symmetric(axis, k, particles)).first;
    }
    return it->second;
  };

  std::vector<EulerBosonMonomial> out{EulerBosonMonomial{{}, 0, Polynomial(1)}};
  for (std::size_t a = 0; a < axis_degrees.size(); ++a) {
    if (axis_degrees[a] < 0) return {};
    const int axis = static_cast<int>(a);
    std::vector<EulerBosonMonomial> next;
    for (const auto& prefix : out) {
      for (const auto& exps : partitions(axis_degrees[a], particles)) {
        EulerBosonMonomial b = prefix;
        for (int k = 1; k <= particles; ++k) {
          const int e = exps[static_cast<std::size_t>(k - 1)];
          if (e == 0) continue;
          b.powers[{axis, k}] = e;
          b.degree += e * k;
          b.polynomial = b.polynomial * pow(generator(axis, k), e);
        }
        next.push_back(std::move(b));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<EulerBosonMonomial> euler_monomials(int particles, int dims, int degree) {
  if (degree < 0) throw std::invalid_argument("euler_monomials: negative degree");
  std::vector<EulerBosonMonomial> out;
  for (const auto& split : compositions(degree, dims)) {
    auto part = euler_monomials_with_axis_degrees(particles, split);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

Polynomial discriminant(int axis, int particles) {
  if (particles != 2) throw std::invalid_argument("discriminant: only N = 2 is supported");
  return pow(particle_difference(axis), 2);
}

}  // namespace bargmann
