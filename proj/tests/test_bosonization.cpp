#include <gtest/gtest.h>

#include "vir/bosonization.hpp"
#include "vir/exact/format.hpp"

using namespace vir;

namespace {

LaurentPoly L(const char* s) { return parse_laurent(s); }
APoly A() { return APoly::x(); }
APoly K(const Sqrt2Ext& x) { return APoly(x); }
Sqrt2Ext R(const char* s) { return Sqrt2Ext(parse_laurent(s)); }
Sqrt2Ext Rad(const char* s) { return Sqrt2Ext(LaurentPoly(), parse_laurent(s)); }

}  // namespace

TEST(FeiginFuchs, ZeroModeGivesWeight) {
  const auto v = ff_mode(0, fock_vacuum());
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.at(Partition()), ff_h());
}

TEST(FeiginFuchs, PositiveModesKillVacuum) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(ff_mode(n, fock_vacuum()).empty());
}

TEST(FeiginFuchs, LowWords) {
  EXPECT_EQ(ff_L(Partition()), fock_vacuum());
  const auto v1 = ff_L(Partition{1});
  ASSERT_EQ(v1.size(), 1u);
  EXPECT_EQ(v1.at(Partition{1}), A());
  const auto v2 = ff_L(Partition{2});
  ASSERT_EQ(v2.size(), 2u);
  EXPECT_EQ(v2.at(Partition{1, 1}), K(R("1/2")));
  EXPECT_EQ(v2.at(Partition{2}), A() + K(ff_rho()));
  EXPECT_EQ(v2.at(Partition{2}).degree(), 1);
}

TEST(FeiginFuchs, CentralChargeMatchesParametrization) {
  EXPECT_EQ(ff_c(), K(Sqrt2Ext(c_of_t())));
  EXPECT_EQ(ff_rho() * ff_rho(), R("(1/2)t^-1 - 1 + (1/2)t"));
}

TEST(FeiginFuchs, Intertwines) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : enumerate(n))
      for (int k = 1; k <= n; ++k) EXPECT_TRUE(intertwining_check(k, lambda)) << k << " " << lambda;
}

TEST(FeiginFuchs, HighestWeightFactorizes) {
  for (auto [r, s] : pairs_up_to(8)) EXPECT_TRUE(highest_weight_identity(r, s)) << r << "," << s;
}

TEST(Bosonize, LevelOne) {
  const auto v = bosonize_singular(1, 1);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.at(Partition{1}), A());
}

TEST(Bosonize, SingularIsAnnihilatedAtDegenerateMomentum) {
  for (auto [r, s] : pairs_up_to(4)) {
    const auto v = bosonize_singular(r, s);
    for (int k = 1; k <= 2; ++k) {
      const auto w = specialize(ff_mode(k, v), ff_alpha(r, s));
      EXPECT_TRUE(w.empty()) << r << "," << s;
    }
  }
}

TEST(Iota, Examples) {
  FockValue one{{Partition{1}, Sqrt2Ext(1L)}};
  const auto f = iota(one);
  EXPECT_EQ(f.coeff(Partition{1}), Rad("1/2t^{-1/2}"));  // 1/(√2 u)
  FockValue two{{Partition{2, 1}, Sqrt2Ext(1L)}};
  EXPECT_EQ(iota(two).coeff(Partition{2, 1}), R("1/2t^-1"));
  FockValue vac{{Partition(), Sqrt2Ext(1L)}};
  EXPECT_EQ(iota(vac).coeff(Partition()), Sqrt2Ext(1L));
  EXPECT_THROW(iota(ff_L(Partition{1})), std::invalid_argument);
}

TEST(Proportionality, ReferenceFactors) {
  const auto r11 = jack_proportionality_check(1, 1);
  EXPECT_TRUE(r11.pass);
  EXPECT_TRUE(r11.radical_vanished);
  EXPECT_EQ(r11.factor, L("t^-1 - 1"));
  EXPECT_EQ(jack_proportionality_check(2, 2).factor, L("t^-1 - 1") * L("t^-1 - 2") * L("2t^-1 - 1") * L("2t^-1 - 2"));
  EXPECT_EQ(jack_proportionality_check(3, 1).factor, L("t^-1 - 1") * L("2t^-1 - 1") * L("3t^-1 - 1"));
}

TEST(Proportionality, AllSmallPairs) {
  for (auto [r, s] : pairs_up_to(6)) EXPECT_TRUE(jack_proportionality_check(r, s).pass) << r << "," << s;
}

TEST(GDecomposition, LevelOne) {
  const auto g = g_decomposition(1, 1);
  ASSERT_TRUE(g.pass);
  ASSERT_EQ(g.g.size(), 1u);
  EXPECT_EQ(g.g[0], (FockValue{{Partition{1}, Sqrt2Ext(1L)}}));
}

TEST(GDecomposition, TwoOne) {
  const auto g = g_decomposition(2, 1);
  ASSERT_TRUE(g.pass);
  ASSERT_EQ(g.g.size(), 2u);
  // g_0 = (1 - t) t^{-1} (√2 u a_{-1}^2 - a_{-2}), g_1 = a_{-1}^2
  const FockValue g0{{Partition{1, 1}, Rad("t^{-1/2} - t^{1/2}")}, {Partition{2}, R("1 - t^-1")}};
  EXPECT_EQ(g.g[0], g0);
  EXPECT_EQ(g.g[1], (FockValue{{Partition{1, 1}, Sqrt2Ext(1L)}}));
}

TEST(GDecomposition, TopModeOnlyInFirstComponent) {
  const auto g = g_decomposition(4, 1);
  ASSERT_TRUE(g.pass);
  EXPECT_EQ(g.g[0].count(Partition{4}), 1u);
  for (std::size_t k = 1; k < g.g.size(); ++k) EXPECT_EQ(g.g[k].count(Partition{4}), 0u);
}

TEST(TopCoefficient, Formula) {
  EXPECT_EQ(a_top_formula(1, 1), L("1"));
  for (auto [r, s] : pairs_up_to(6)) EXPECT_TRUE(a_top_coefficient_check(r, s).pass) << r << "," << s;
}

TEST(DegreeOne, Words) {
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(degree_one_check(Partition{n}));
  EXPECT_TRUE(degree_one_check(Partition{1, 1}));
  EXPECT_TRUE(degree_one_check(Partition{2, 2, 1}));
}
