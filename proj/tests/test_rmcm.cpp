#include <gtest/gtest.h>

#include "bargmann/multiplets.hpp"
#include "bargmann/rmcm.hpp"
#include "bargmann/shapes.hpp"
#include "support/generators.hpp"

namespace bargmann {
namespace {

using testing::diff_component;
using testing::Gen;
using testing::ref_e1;
using testing::ref_psi1;
using testing::var;

Polynomial centre(int axis) { return Polynomial::variable(axis, 1); }
Polynomial relative(int axis) { return Polynomial::variable(axis, 2); }

Polynomial psi4() { return diff_component(0) * diff_component(1) * diff_component(2); }

const ShapeBasis& basis() {
  static const ShapeBasis b = complete_shape_basis(2, 3);
  return b;
}

TEST(CmRm, Substitution) {
  EXPECT_EQ(cm_rm_substitute(var(0, 1) + var(0, 2)), centre(0));
  EXPECT_EQ(cm_rm_substitute(diff_component(0)), relative(0));
  EXPECT_EQ(cm_rm_substitute(discriminant(0)), relative(0) * relative(0));
  EXPECT_THROW(cm_rm_substitute(var(0, 3)), std::invalid_argument);
  EXPECT_EQ(format_polynomial(relative(1) + centre(2), cm_rm_names()), "1*R_u+1*C_v");
}

TEST(CmRm, RoundTripOnRandomPolynomials) {
  Gen g(301);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial p = g.polynomial(2, 3, 4, 5);
    EXPECT_EQ(cm_rm_restore(cm_rm_substitute(p)), p);
    EXPECT_EQ(cm_rm_substitute(cm_rm_restore(p)), p);
  }
}

TEST(CmRm, AntisymmetricStatesAreOddInRelativeVariables) {
  for (int shell = 0; shell <= 2; ++shell) {
    for (const auto& s : slater_basis({2, 3, shell})) {
      const Polynomial q = cm_rm_substitute(s.polynomial);
      const Polynomial flipped = substitute(q, [](VariableId v) {
        return v.particle == 2 ? -Polynomial::variable(v) : Polynomial::variable(v);
      });
      EXPECT_EQ(flipped, -q);
    }
  }
}

TEST(CmRm, PureRelativeMotion) {
  EXPECT_TRUE(is_pure_rm(pow(ref_psi1(1), 3)));
  EXPECT_FALSE(is_pure_rm(ref_e1(1) * ref_e1(1) * ref_psi1(1)));
  EXPECT_TRUE(is_pure_rm(ref_psi1(0) * ref_psi1(0) * ref_psi1(1) - ref_psi1(1) * ref_psi1(1) * ref_psi1(-1)));
  EXPECT_TRUE(is_pure_rm(psi4()));
}

TEST(CmRm, TenPureStatesInTheSecondShell) {
  const ShellResolution r = resolve_shell({2, 3, 2});
  int pure = 0;
  std::vector<std::string> pure_families;
  for (const auto& mp : r.multiplets) {
    int count = 0;
    for (const auto& s : mp.states) count += is_pure_rm(s);
    EXPECT_TRUE(count == 0 || count == static_cast<int>(mp.states.size())) << mp.label();
    pure += count;
    if (count > 0) pure_families.push_back(mp.label());
  }
  EXPECT_EQ(pure, 10);
  EXPECT_EQ(pure_families, (std::vector<std::string>{"233-II", "211-I"}));
}

TEST(RmForm, Examples) {
  const RmForm f4 = rm_form(psi4());
  EXPECT_TRUE(f4.linear[0].is_zero() && f4.linear[1].is_zero() && f4.linear[2].is_zero());
  EXPECT_EQ(f4.triple, Polynomial(1));

  const RmForm f1 = rm_form(diff_component(0));
  EXPECT_EQ(f1.linear[0], Polynomial(1));
  EXPECT_TRUE(f1.linear[1].is_zero() && f1.linear[2].is_zero() && f1.triple.is_zero());

  // (-t - iu)^3 = -t^3 - 3i t^2 u + 3 t u^2 + i u^3: P = -t^2 + 3u^2, Q = -3i t^2 + i u^2.
  const Polynomial cubic = pow(ref_psi1(1), 3);
  const RmForm f3 = rm_form(cubic);
  const GaussianRational i = GaussianRational::i();
  const Polynomial t2 = relative(0) * relative(0);
  const Polynomial u2 = relative(1) * relative(1);
  EXPECT_EQ(f3.linear[0], -t2 + u2 * GaussianRational(3));
  EXPECT_EQ(f3.linear[1], t2 * (i * GaussianRational(-3)) + u2 * i);
  EXPECT_TRUE(f3.linear[2].is_zero());
  EXPECT_TRUE(f3.triple.is_zero());
  EXPECT_EQ(cm_rm_restore(f3.assemble()), cubic);
}

TEST(RmForm, EvenExponentsOnlyAndReassembly) {
  const ShellResolution r = resolve_shell({2, 3, 2});
  for (const auto& mp : r.multiplets) {
    for (const auto& s : mp.states) {
      if (!is_pure_rm(s)) continue;
      const RmForm f = rm_form(s);
      for (const Polynomial* slot : {&f.linear[0], &f.linear[1], &f.linear[2], &f.triple}) {
        for (const auto& [m, c] : slot->terms()) {
          for (const auto& [v, e] : m.factors()) EXPECT_EQ(e % 2, 0);
        }
      }
      EXPECT_EQ(cm_rm_restore(f.assemble()), s);
    }
  }
}

TEST(RmForm, Rejections) {
  EXPECT_THROW(rm_form(ref_e1(1) * ref_psi1(1)), std::invalid_argument);
  EXPECT_THROW(rm_form(discriminant(0)), std::invalid_argument);  // even
}

TEST(RmQuanta, RadialQuanta) {
  const ShellResolution r2 = resolve_shell({2, 3, 2});
  const auto [sept, m7] = r2.find_state("233-II");
  const RmQuanta q7 = rm_quanta(*sept);
  EXPECT_EQ(q7.total_quanta, 3);
  EXPECT_EQ(q7.l, 3);
  EXPECT_EQ(q7.n_r, 0);
  const auto [trip, m3] = r2.find_state("211-I");
  const RmQuanta q3 = rm_quanta(*trip);
  EXPECT_EQ(q3.l, 1);
  EXPECT_EQ(q3.n_r, 1);
  EXPECT_EQ(2 * q3.n_r + q3.l, 3);
  const ShellResolution r0 = resolve_shell({2, 3, 0});
  EXPECT_EQ(rm_quanta(r0.multiplets[0]).n_r, 0);
  const auto [cm, mc] = r2.find_state("233-I");
  EXPECT_THROW(rm_quanta(*cm), std::invalid_argument);

  Multiplet odd;  // a deliberately mislabelled multiplet
  odd.l = 0;
  odd.states = {pow(ref_psi1(1), 3)};
  EXPECT_THROW(rm_quanta(odd), std::logic_error);
}

TEST(RmQuanta, ParityHoldsThroughShellThree) {
  for (int shell = 0; shell <= 3; ++shell) {
    for (const auto& mp : resolve_shell({2, 3, shell}).multiplets) {
      if (!is_pure_rm(mp.states.front())) continue;
      const RmQuanta q = rm_quanta(mp);
      EXPECT_EQ(q.total_quanta, 2 * q.n_r + q.l);
    }
  }
}

TEST(Bands, Examples) {
  const ShellResolution r = resolve_shell({2, 3, 2});
  const auto [a, ma] = r.find_state("232-II");
  EXPECT_EQ(band_assign(a->state(ma), basis()).band, Band::kRotational);
  const auto [b, mb] = r.find_state("211-I");
  EXPECT_EQ(band_assign(b->state(mb), basis()).band, Band::kVibrational);
  EXPECT_EQ(band_assign(*b, basis()).band, Band::kVibrational);
  EXPECT_EQ(band_assign(psi4() * discriminant(0), basis()).band, Band::kRotational);
  const auto [c, mc] = r.find_state("233-II");
  EXPECT_EQ(band_assign(c->state(mc), basis()).band, Band::kVibrational);  // m = 3 cannot reach Psi4
  EXPECT_EQ(band_assign(*c, basis()).band, Band::kRotational);
  EXPECT_EQ(to_string(Band::kRotational), "rotational");
  EXPECT_THROW(band_assign(Polynomial(var(0, 1)), complete_shape_basis(2, 2)), std::invalid_argument);
}

TEST(Bands, NeitherBandTerminates) {
  const ShellResolution r = resolve_shell({2, 3, 2});
  const auto [trip, m] = r.find_state("211-I");
  Polynomial boson(1);
  for (int k = 1; k <= 4; ++k) {
    boson = boson * discriminant(0);
    const Polynomial rot = psi4() * boson;
    ASSERT_TRUE(is_antisymmetric(rot, 2));
    EXPECT_EQ(band_assign(rot, basis()).band, Band::kRotational) << k;
    const Polynomial vib = trip->state(m) * boson;
    EXPECT_EQ(band_assign(vib, basis()).band, Band::kVibrational) << k;
  }
}

}  // namespace
}  // namespace bargmann
