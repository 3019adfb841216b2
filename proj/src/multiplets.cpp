#include "bargmann/multiplets.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bargmann/linalg.hpp"
#include "bargmann/operators.hpp"
#include "bargmann/shapes.hpp"

namespace bargmann {

namespace {

int axis_of_m(int m) {
  if (m < -1 || m > 1) throw std::invalid_argument("alphabet: m must be -1, 0 or 1");
  return 1 - m;
}

Polynomial e1(int m) { return alphabet_variable(AlphabetKind::kBoson, m); }
Polynomial psi1(int m) { return alphabet_variable(AlphabetKind::kGround, m); }

void require_two_particles_3d(const Polynomial& p, const char* who) {
  if (p.max_particle() > 2 || p.max_axis() > 2) {
    throw std::invalid_argument(std::string(who) + ": expects a two-particle d = 3 polynomial");
  }
}

Polynomial dot(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  Polynomial out;
  for (std::size_t k = 0; k < a.size(); ++k) out += a[k] * b[k];
  return out;
}

std::vector<Polynomial> cartesian_e1() {
  return {elementary_symmetric(0, 1, 2), elementary_symmetric(1, 1, 2), elementary_symmetric(2, 1, 2)};
}

std::vector<Polynomial> cartesian_psi() {
  return {particle_difference(0), particle_difference(1), particle_difference(2)};
}

bool is_lz_eigenvector(const Polynomial& p, int m, int particles) {
  return lz(particles)(p) == p * GaussianRational(m);
}

Polynomial lower_and_normalize(const Polynomial& p, int particles) {
  return normalize_state(ladder(LadderDirection::kLower, particles)(p), particles);
}

}  // namespace

VariableId alphabet_symbol(AlphabetKind kind, int m) {
  return VariableId{axis_of_m(m), static_cast<int>(kind)};
}

Polynomial alphabet_variable(AlphabetKind kind, int m) {
  return Polynomial::variable(alphabet_symbol(kind, m));
}

VariableNamer alphabet_names() {
  return [](VariableId v) {
    const int m = 1 - v.axis;
    const std::string stem = v.particle == 1 ? "e1" : v.particle == 2 ? "Psi1" : "?";
    return stem + std::to_string(m);
  };
}

Polynomial to_alphabet(const Polynomial& p) {
  require_two_particles_3d(p, "to_alphabet");
  const GaussianRational half(Rational(1, 2));
  const GaussianRational i = GaussianRational::i();
  // Cartesian centre-of-mass (C) and relative (R) components in the alphabet.
  auto cartesian = [&](AlphabetKind kind, int axis) {
    const Polynomial plus = alphabet_variable(kind, 1);
    const Polynomial minus = alphabet_variable(kind, -1);
    switch (axis) {
      case 0:
        return (minus - plus) * half;
      case 1:
        return (plus + minus) * (i * half);
      default:
        return alphabet_variable(kind, 0);
    }
  };
  return substitute(p, [&](VariableId v) {
    const Polynomial c = cartesian(AlphabetKind::kBoson, v.axis);
    const Polynomial r = cartesian(AlphabetKind::kGround, v.axis);
    return v.particle == 1 ? (c + r) * half : (c - r) * half;
  });
}

Polynomial from_alphabet(const Polynomial& a) {
  require_two_particles_3d(a, "from_alphabet");
  return substitute(a, [](VariableId v) {
    const int m = 1 - v.axis;
    return v.particle == 1 ? spherical_boson(m, 2) : spherical_ground(m);
  });
}

Polynomial normalize_state(const Polynomial& p, int particles) {
  if (particles == 2 && p.max_axis() <= 2) return from_alphabet(canonical_form(to_alphabet(p)));
  return canonical_form(p);
}

std::string roman(int n) {
  if (n <= 0) throw std::invalid_argument("roman: n must be positive");
  static const std::pair<int, const char*> table[] = {{1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"},
                                                      {100, "C"},  {90, "XC"},  {50, "L"},  {40, "XL"},
                                                      {10, "X"},   {9, "IX"},   {5, "V"},   {4, "IV"},
                                                      {1, "I"}};
  std::string out;
  for (const auto& [value, glyph] : table) {
    while (n >= value) {
      out += glyph;
      n -= value;
    }
  }
  return out;
}

std::string Multiplet::state_name(int m) const {
  std::string out = std::to_string(shell) + std::to_string(l);
  out += m < 0 ? "," + std::to_string(m) : std::to_string(m);
  if (family > 0) out += "-" + roman(family);
  return out;
}

std::vector<int> ShellResolution::l_content() const {
  std::vector<int> out;
  for (const auto& mp : multiplets) out.push_back(mp.l);
  return out;
}

std::pair<const Multiplet*, int> ShellResolution::find_state(const std::string& name) const {
  for (const auto& mp : multiplets) {
    for (int m = mp.l; m >= -mp.l; --m) {
      if (mp.state_name(m) == name) return {&mp, m};
    }
  }
  throw std::out_of_range("no state named " + name);
}

SeedHints conventional_seed_hints(const ShellSpec& spec) {
  SeedHints hints;
  if (spec.particles != 2 || spec.dims != 3) return hints;
  const auto e = cartesian_e1();
  const auto psi = cartesian_psi();
  switch (spec.shell) {
    case 0:
      hints[1] = {psi1(1)};
      break;
    case 1:
      hints[2] = {e1(1) * psi1(1)};
      hints[1] = {e1(0) * psi1(1) - e1(1) * psi1(0)};
      hints[0] = {to_alphabet(dot(e, psi))};
      break;
    case 2: {
      hints[3] = {pow(e1(1), 2) * psi1(1), pow(psi1(1), 3)};
      // e x (e x Psi) = e (e.Psi) - Psi (e.e)
      const Polynomial ee = dot(e, e);
      const Polynomial epsi = dot(e, psi);
      std::vector<Polynomial> triple;
      for (int a = 0; a < 3; ++a) triple.push_back(e[a] * epsi - psi[a] * ee);
      hints[1] = {pow(psi1(0), 2) * psi1(1),
                  to_alphabet(spherical_component(triple[0], triple[1], triple[2], 1)),
                  to_alphabet(ee * spherical_ground(1))};
      break;
    }
    default:
      break;
  }
  for (auto& [m, list] : hints) {
    for (auto& h : list) h = from_alphabet(h);
  }
  return hints;
}

std::vector<Polynomial> lz_sector(const std::vector<Polynomial>& states, int m, int particles) {
  const LinearOperator shifted = lz(particles) - LinearOperator::scalar(GaussianRational(m));
  std::vector<Polynomial> image;
  image.reserve(states.size());
  for (const auto& s : states) image.push_back(shifted(s));
  return preimage_kernel(states, image);
}

std::vector<Polynomial> highest_weight_vectors(const std::vector<Polynomial>& states, int m,
                                               int particles) {
  const auto sector = lz_sector(states, m, particles);
  const LinearOperator raise = ladder(LadderDirection::kRaise, particles);
  std::vector<Polynomial> image;
  for (const auto& s : sector) image.push_back(raise(s));
  std::vector<Polynomial> out;
  for (auto& v : gram_schmidt(preimage_kernel(sector, image))) {
    out.push_back(normalize_state(v, particles));
  }
  return out;
}

ShellResolution resolve_shell(const ShellSpec& spec, const SeedHints& hints) {
  spec.validate();
  if (spec.dims != 3) throw std::invalid_argument("resolve_shell requires d = 3");
  const int n = spec.particles;

  std::vector<Polynomial> basis;
  for (auto& s : slater_basis(spec)) basis.push_back(std::move(s.polynomial));

  ShellResolution out;
  out.spec = spec;
  out.dimension = static_cast<long long>(basis.size());
  if (basis.empty()) return out;

  const LinearOperator raise = ladder(LadderDirection::kRaise, n);
  const LinearOperator lzop = lz(n);
  std::vector<Polynomial> lz_images;
  for (const auto& b : basis) lz_images.push_back(lzop(b));

  // |m| is bounded by the degree: every variable carries |m| <= 1.
  const int top = spec.total_degree();
  for (const auto& [m, list] : hints) {
    for (const auto& h : list) {
      if (!is_lz_eigenvector(h, m, n)) {
        throw std::invalid_argument("resolve_shell: seed hint is not an Lz = " + std::to_string(m) +
                                    " eigenvector");
      }
    }
  }

  std::vector<Multiplet> found;
  std::map<int, int> per_l;
  for (int m = top; m >= 0; --m) {
    std::vector<Polynomial> image;
    for (std::size_t j = 0; j < basis.size(); ++j) image.push_back(lz_images[j] - basis[j] * GaussianRational(m));
    const auto sector = preimage_kernel(basis, image);
    if (sector.empty()) continue;

    std::vector<Polynomial> taken;
    for (const auto& mp : found) taken.push_back(mp.state(m));
    const std::size_t existing = taken.size();
    if (sector.size() < existing) throw std::logic_error("resolve_shell: Lz sector smaller than lowered states");
    const std::size_t wanted = sector.size() - existing;

    std::vector<Polynomial> candidates;
    if (auto it = hints.find(m); it != hints.end()) candidates = it->second;
    candidates.insert(candidates.end(), sector.begin(), sector.end());

    std::vector<Polynomial> fresh;
    for (const auto& c : candidates) {
      if (fresh.size() == wanted) break;
      const Polynomial r = orthogonal_residual(c, taken);
      if (r.is_zero()) continue;
      Polynomial top_state = normalize_state(r, n);
      if (!raise(top_state).is_zero()) {
        throw std::logic_error("resolve_shell: new highest weight is not annihilated by L+");
      }
      taken.push_back(top_state);
      fresh.push_back(std::move(top_state));
    }
    if (fresh.size() != wanted) throw std::logic_error("resolve_shell: could not complete the Lz sector");

    for (auto& hw : fresh) {
      Multiplet mp;
      mp.shell = spec.shell;
      mp.l = m;
      mp.family = ++per_l[m];
      mp.states.push_back(std::move(hw));
      for (int k = m - 1; k >= -m; --k) mp.states.push_back(lower_and_normalize(mp.states.back(), n));
      for (const auto& s : mp.states) mp.norms_sq.push_back(norm_sq(s));
      found.push_back(std::move(mp));
    }
  }

  long long total = 0;
  for (auto& mp : found) {
    if (per_l[mp.l] == 1) mp.family = 0;
    total += 2 * mp.l + 1;
  }
  if (total != out.dimension) throw std::logic_error("resolve_shell: multiplets do not fill the shell");
  std::stable_sort(found.begin(), found.end(), [](const Multiplet& a, const Multiplet& b) {
    return a.l != b.l ? a.l > b.l : a.family < b.family;
  });
  out.multiplets = std::move(found);
  return out;
}

ShellResolution resolve_shell(const ShellSpec& spec) {
  return resolve_shell(spec, conventional_seed_hints(spec));
}

std::vector<Table1Entry> table1_report() {
  struct Row {
    const char* name;
    Polynomial alphabet;
    long norm;
  };
  const Polynomial e11 = e1(1), e10 = e1(0), e1m = e1(-1);
  const Polynomial p11 = psi1(1), p10 = psi1(0), p1m = psi1(-1);
  const Polynomial two(2), four(4), eight(8);
  const std::vector<Row> rows = {
      {"233-I", e11 * e11 * p11, 128},
      {"232-I", two * e11 * e10 * p11 + e11 * e11 * p10, 192},
      {"231-I", two * (two * e10 * e10 + e11 * e1m) * p11 + eight * e11 * e10 * p10 + e11 * e11 * p1m, 1920},
      {"233-II", p11 * p11 * p11, 384},
      {"232-II", p11 * p11 * p10, 64},
      {"231-II", four * p10 * p10 * p11 + p11 * p11 * p1m, 640},
      {"222", e11 * e10 * p11 - e11 * e11 * p10, 96},
      {"221", (two * e10 * e10 + e11 * e1m) * p11 - two * e11 * e10 * p10 - e11 * e11 * p1m, 384},
      {"211-I", p10 * p10 * p11 - p11 * p11 * p1m, 160},
      {"211-II", (Polynomial(-2) * e10 * e10 + e11 * e1m) * p11 + two * e11 * e10 * p10 - e11 * e11 * p1m, 384},
      {"211-III", (e10 * e10 - two * e11 * e1m) * p11 + two * e11 * e10 * p10 - e11 * e11 * p1m, 480},
  };

  const ShellResolution shell = resolve_shell({2, 3, 2});
  std::vector<Table1Entry> out;
  for (const auto& row : rows) {
    Table1Entry entry;
    entry.name = row.name;
    entry.key = "psi_" + entry.name;
    std::replace(entry.key.begin(), entry.key.end(), '-', '_');
    entry.expected_alphabet = row.alphabet;
    entry.expected_norm_sq = Rational(row.norm);
    const auto [mp, m] = shell.find_state(entry.name);
    entry.computed = mp->state(m);
    entry.computed_alphabet = to_alphabet(entry.computed);
    entry.computed_norm_sq = mp->norm_sq(m);
    entry.polynomial_matches = equal_up_to_unit(entry.computed, from_alphabet(row.alphabet));
    entry.norm_matches = entry.computed_norm_sq == entry.expected_norm_sq;
    out.push_back(std::move(entry));
  }
  return out;
}

Psi4Check psi4_identity_check() {
  Psi4Check out;
  std::ostringstream diff;

  const auto shapes = shape_subspace({2, 3, 2});
  if (shapes.size() != 1) {
    diff << "expected one shape in shell 2, found " << shapes.size() << "\n";
    out.diff = diff.str();
    return out;
  }
  const Polynomial psi4 = shapes.front().polynomial;
  const Polynomial p11 = spherical_ground(1), p10 = spherical_ground(0), p1m = spherical_ground(-1);
  const Polynomial a = p11 * p11 * p10;
  const Polynomial b = p1m * p1m * p10;
  const Polynomial lhs = (a - b) * GaussianRational(Rational(1, 4));
  const Polynomial rhs = psi4 * GaussianRational::i();
  out.identity_holds = lhs == rhs;
  if (!out.identity_holds) {
    diff << "identity: lhs - rhs = " << format_polynomial(lhs - rhs) << "\n";
  }

  const ShellResolution shell = resolve_shell({2, 3, 2});
  const auto [up, m_up] = shell.find_state("232-II");
  const auto [down, m_down] = shell.find_state("23,-2-II");
  const Polynomial& s_up = up->state(m_up);
  const Polynomial& s_down = down->state(m_down);
  out.family_matches = proportional(s_up, a) && proportional(s_down, b);
  if (!out.family_matches) diff << "232-II / 23,-2-II are not Psi11^2 Psi10 / Psi1-1^2 Psi10\n";

  const Rational n4 = norm_sq(psi4);
  auto weight = [&](const Polynomial& x) { return inner_product(psi4, x).abs_sq() / (n4 * norm_sq(x)); };
  const Rational w_up = weight(s_up);
  const Rational w_down = weight(s_down);
  out.equal_weights = w_up == Rational(1, 2) && w_down == Rational(1, 2);
  if (!out.equal_weights) {
    diff << "weights: " << w_up.to_string() << " and " << w_down.to_string() << "\n";
  }

  out.orthogonal_elsewhere = true;
  for (const auto& mp : shell.multiplets) {
    for (int m = mp.l; m >= -mp.l; --m) {
      if (inner_product(psi4, mp.state(m)).is_zero()) continue;
      const std::string name = mp.state_name(m);
      out.overlapping_states.push_back(name);
      if (name != "232-II" && name != "23,-2-II") {
        out.orthogonal_elsewhere = false;
        diff << "unexpected overlap with " << name << "\n";
      }
    }
  }
  out.diff = diff.str();
  return out;
}

}  // namespace bargmann
