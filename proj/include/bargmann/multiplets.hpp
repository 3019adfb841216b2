#pragma once

// Angular-momentum multiplets of a d = 3 shell.
//
// Each shell is resolved top-down in the projection m: at every m, the
// highest-weight vectors (the kernel of L+ in the m-sector) are the sector
// directions orthogonal to states lowered from above. New highest weights
// are chosen from an ordered list of seed hints first, then from the sector
// basis; the order decides how degenerate multiplets are orthogonalized.
// Each seed is lowered to m = -l with the unnormalized L-.
//
// For two particles every state is also written in the spherical alphabet
// {e_1m, Psi_1m} (m = 1, 0, -1): the Euler bosons e_1m = spherical component
// of (e1(t), e1(u), e1(v)) and the ground-state shapes Psi_1m = spherical
// component of (t1-t2, u1-u2, v1-v2). The alphabet is a linear change of
// variables, so coordinates in it are unique, and states are scaled to
// Gaussian-integer content 1 in it. Elsewhere states use canonical_form.

#include <map>
#include <string>
#include <vector>

#include "bargmann/fock.hpp"
#include "bargmann/polynomial.hpp"
#include "bargmann/text_format.hpp"

namespace bargmann {

// ---- Spherical alphabet (N = 2, d = 3) ---------------------------------

enum class AlphabetKind { kBoson = 1, kGround = 2 };

/// Alphabet symbols are stored as VariableIds: axis 0/1/2 <-> m = 1/0/-1,
/// particle 1 <-> e_1m, particle 2 <-> Psi_1m.
VariableId alphabet_symbol(AlphabetKind kind, int m);
Polynomial alphabet_variable(AlphabetKind kind, int m);

/// Names e11, e10, e1-1, Psi11, Psi10, Psi1-1.
VariableNamer alphabet_names();

/// Rewrites a two-particle d = 3 polynomial in the alphabet.
Polynomial to_alphabet(const Polynomial& p);
/// Expands an alphabet polynomial back into t, u, v variables.
Polynomial from_alphabet(const Polynomial& a);

/// Scales a state to the report convention: content 1 and canonical phase in
/// the alphabet for N = 2, canonical_form otherwise.
Polynomial normalize_state(const Polynomial& p, int particles);

// ---- Multiplets -------------------------------------------------------

struct Multiplet {
  int shell = 0;
  int l = 0;
  int family = 0;  // 1-based rank among multiplets of equal l; 0 when unique
  std::vector<Polynomial> states;  // states[k] has m = l - k
  std::vector<Rational> norms_sq;

  const Polynomial& state(int m) const { return states.at(static_cast<std::size_t>(l - m)); }
  const Rational& norm_sq(int m) const { return norms_sq.at(static_cast<std::size_t>(l - m)); }
  /// e.g. "233-I", "222", "23,-2-II".
  std::string state_name(int m) const;
  std::string label() const { return state_name(l); }
};

/// Roman numeral for family numbers (1 -> "I").
std::string roman(int n);

struct ShellResolution {
  ShellSpec spec;
  long long dimension = 0;
  std::vector<Multiplet> multiplets;  // by l descending, then family

  /// l values, one per multiplet, in multiplet order.
  std::vector<int> l_content() const;
  /// Looks up a state by name ("233-II"); throws std::out_of_range.
  std::pair<const Multiplet*, int> find_state(const std::string& name) const;
};

/// Seed hints: candidate highest-weight vectors per projection m, tried in order.
using SeedHints = std::map<int, std::vector<Polynomial>>;

/// Hints reproducing the conventional forms for N = 2, d = 3 shells 0..2:
/// m = 3: e11^2 Psi11, Psi11^3; m = 1: Psi10^2 Psi11, the m = 1 component of
/// e x (e x Psi), and (e.e) Psi11. Empty for other shells.
SeedHints conventional_seed_hints(const ShellSpec& spec);

/// Basis of the Lz = m eigenspace inside span(states).
std::vector<Polynomial> lz_sector(const std::vector<Polynomial>& states, int m, int particles);

/// Basis of ker L+ inside the Lz = m eigenspace of span(states), orthogonal
/// and scaled per normalize_state.
std::vector<Polynomial> highest_weight_vectors(const std::vector<Polynomial>& states, int m,
                                               int particles);

/// Resolves the shell into multiplets. Requires d = 3.
ShellResolution resolve_shell(const ShellSpec& spec, const SeedHints& hints);
/// Uses conventional_seed_hints(spec).
ShellResolution resolve_shell(const ShellSpec& spec);

// ---- The second-shell table --------------------------------------------

struct Table1Entry {
  std::string key;   // JSON key, e.g. "psi_233_I"
  std::string name;  // state name, e.g. "233-I"
  Polynomial expected_alphabet;
  Rational expected_norm_sq;

  Polynomial computed;  // state from resolve_shell
  Polynomial computed_alphabet;
  Rational computed_norm_sq;
  bool polynomial_matches = false;  // equal up to a unit phase
  bool norm_matches = false;

  bool matches() const { return polynomial_matches && norm_matches; }
};

/// The eleven m >= 1 states of the second shell (N = 2, d = 3) with their
/// published forms and squared norms, compared against resolve_shell.
std::vector<Table1Entry> table1_report();

struct Psi4Check {
  bool identity_holds = false;      // (Psi11^2 Psi10 - Psi1-1^2 Psi10) / 4 == i Psi4
  bool family_matches = false;      // those two products are the 232-II and 23,-2-II states
  bool equal_weights = false;       // Psi4 overlaps both with equal normalized weight 1/2
  bool orthogonal_elsewhere = false;
  std::vector<std::string> overlapping_states;  // states with nonzero <Psi4, x>
  std::string diff;                             // empty when everything holds

  bool ok() const { return identity_holds && family_matches && equal_weights && orthogonal_elsewhere; }
};

Psi4Check psi4_identity_check();

}  // namespace bargmann
