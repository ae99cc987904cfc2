#include <gtest/gtest.h>

#include "vir/exact/format.hpp"
#include "vir/virasoro/checks.hpp"
#include "vir/virasoro/kac.hpp"
#include "vir/virasoro/norm.hpp"
#include "vir/virasoro/singular.hpp"

using namespace vir;

namespace {

HCPoly H() { return HCPoly::x(); }
HCPoly C() { return HCPoly(QPoly::x()); }
HCPoly K(long v) { return HCPoly(QPoly(BigRat(v))); }
HCPoly K(long n, long d) { return HCPoly(QPoly(make_rat(n, d))); }
LaurentPoly L(const char* s) { return parse_laurent(s); }

HCPoly word_to_vacuum(const std::vector<int>& word) {
  const auto v = free_verma().normal_order_apply(word, 0);
  auto it = v.find(Partition());
  return it == v.end() ? HCPoly() : it->second;
}

}  // namespace

TEST(Verma, WordsOnHighestWeight) {
  EXPECT_EQ(word_to_vacuum({1, -1}), K(2) * H());
  EXPECT_EQ(word_to_vacuum({2, -2}), K(4) * H() + K(1, 2) * C());
  const auto v = free_verma().normal_order_apply({-1}, 1);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.begin()->first, Partition{1});
  EXPECT_EQ(v.begin()->second, K(1));
}

TEST(Verma, WordsAreReorderedToPbw) {
  // L_{-1} L_{-2} = L_{-2} L_{-1} + L_{-3}
  const auto v = free_verma().normal_order_apply({-1, -2}, 3);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v.at(Partition{2, 1}), K(1));
  EXPECT_EQ(v.at(Partition{3}), K(1));
}

TEST(Verma, Pairing) {
  EXPECT_EQ(free_verma().pairing(Partition{1, 1}, Partition{2}), K(6) * H());
  EXPECT_EQ(free_verma().pairing(Partition{3}, Partition{1, 1, 1}), K(24) * H());
  EXPECT_TRUE(free_verma().pairing(Partition{1}, Partition{2}).is_zero());
}

TEST(Verma, PairingIsSymmetric) {
  for (int n = 1; n <= 5; ++n) {
    const auto m = kac_matrix_hc(n);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(m[i][j], m[j][i]);
  }
}

TEST(KacMatrix, LowLevels) {
  EXPECT_TRUE(kac_matrix_hc(0).empty() || kac_matrix_hc(0)[0][0] == K(1));
  const auto k1 = kac_matrix_hc(1);
  ASSERT_EQ(k1.size(), 1u);
  EXPECT_EQ(k1[0][0], K(2) * H());
  const auto k2 = kac_matrix_hc(2);  // order (2), (1,1)
  ASSERT_EQ(k2.size(), 2u);
  EXPECT_EQ(k2[0][0], K(4) * H() + K(1, 2) * C());
  EXPECT_EQ(k2[0][1], K(6) * H());
  EXPECT_EQ(k2[1][1], K(4) * H() * (K(1) + K(2) * H()));
}

TEST(KacDeterminant, LevelOne) {
  const auto res = kac_det_check(1);
  EXPECT_TRUE(res.pass);
  EXPECT_EQ(res.det, HPoly(LaurentPoly(2)) * HPoly::x());
}

TEST(KacDeterminant, LevelTwoByHand) {
  // Direct 2x2 expansion with c = c(t), against 32 h (h - h_{1,2})(h - h_{2,1}).
  const HPoly h = HPoly::x();
  const HPoly c{c_of_t()};
  const HPoly a = HPoly(LaurentPoly(4)) * h * (HPoly(LaurentPoly(1)) + HPoly(LaurentPoly(2)) * h);
  const HPoly b = HPoly(LaurentPoly(6)) * h;
  const HPoly d = HPoly(LaurentPoly(4)) * h + HPoly(LaurentPoly(make_rat(1, 2))) * c;
  const HPoly by_hand = a * d - b * b;
  const HPoly product = HPoly(LaurentPoly(32)) * h * (h - HPoly(h_rs(1, 2))) * (h - HPoly(h_rs(2, 1)));
  EXPECT_EQ(by_hand, product);
  EXPECT_EQ(kac_det_check(2).det, by_hand);
}

TEST(KacDeterminant, ThroughLevelFive) {
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(kac_det_check(n).pass) << n;
}

TEST(KacDeterminant, DegreeInH) {
  // deg_h det K_n = Σ_{λ ⊢ n} ℓ(λ).
  for (int n = 1; n <= 5; ++n) {
    int total = 0;
    for (const auto& p : enumerate(n)) total += p.length();
    EXPECT_EQ(kac_det_formula(n).degree(), total);
  }
}

TEST(Weights, Degenerate) {
  EXPECT_TRUE(h_rs(1, 1).is_zero());
  EXPECT_EQ(h_rs(2, 1), h_rs(1, 2).inverted());
  EXPECT_EQ(c_of_t().inverted(), c_of_t());
}

TEST(Singular, ExplicitSmallVectors) {
  EXPECT_EQ(singular_vector(1, 1).expansion, (VirElement{{Partition{1}, L("1")}}));
  EXPECT_EQ(singular_vector(1, 2).expansion, (VirElement{{Partition{1, 1}, L("1")}, {Partition{2}, L("-t")}}));
  const VirElement p22{{Partition{1, 1, 1, 1}, L("1")},
                       {Partition{2, 1, 1}, L("-2t - 2t^-1")},
                       {Partition{2, 2}, L("t^2 - 2 + t^-2")},
                       {Partition{3, 1}, L("-2t + 6 - 2t^-1")},
                       {Partition{4}, L("-3t + 6 - 3t^-1")}};
  EXPECT_EQ(singular_vector(2, 2).expansion, p22);
}

TEST(Singular, TextForms) {
  EXPECT_EQ(to_latex(singular_vector(1, 2).expansion), "L_{-1}^2 - t L_{-2}");
  EXPECT_EQ(to_string(singular_vector(1, 1).expansion), "L_{-1}");
}

TEST(Singular, Verification) {
  EXPECT_TRUE(verify_singular(singular_vector(1, 2)));
  EXPECT_TRUE(verify_singular(singular_vector(2, 1)));
  EXPECT_EQ(singular_vector(2, 1).expansion, invert_t(singular_vector(1, 2).expansion));
  for (auto [r, s] : pairs_up_to(6)) {
    EXPECT_TRUE(verify_singular(singular_vector(r, s))) << r << "," << s;
    EXPECT_EQ(singular_vector(r, s).coeff(Partition::rectangle(1, r * s)), L("1"));
  }
}

TEST(Singular, CorruptedVectorFails) {
  SingularVector v = singular_vector(1, 3);
  v.expansion.begin()->second = -v.expansion.begin()->second;
  EXPECT_FALSE(verify_singular(v));
  SingularVector w = singular_vector(2, 2);
  w.expansion[Partition{4}] = w.expansion[Partition{4}] + L("1");
  EXPECT_FALSE(verify_singular(w));
}

TEST(Norm, SmallCases) {
  EXPECT_EQ(norm_logprimary(1, 1), HPoly(LaurentPoly(2)) * HPoly::x());
  const HPoly n12 = norm_in_delta(1, 2);
  EXPECT_EQ(n12.degree(), 2);
  EXPECT_TRUE(n12.coeff(0).is_zero());
  EXPECT_EQ(n12.coeff(1), L("4t^2 - 4"));
  EXPECT_EQ(n12.coeff(2), L("8"));
  EXPECT_EQ(extract_A(2, 2), L("-8") * L("t^2 - 1") * L("t^2 - 4") * L("t^-2 - 1") * L("t^-2 - 4"));
}

TEST(Norm, FirstCoefficient) {
  EXPECT_EQ(extract_A(1, 1), L("2"));
  EXPECT_EQ(extract_A(1, 3), L("24") * L("t^2 - 1") * L("4t^2 - 1"));
  EXPECT_EQ(extract_A(2, 1), extract_A(1, 2).inverted());
}

TEST(Norm, ConstantTermVanishes) {
  for (auto [r, s] : pairs_up_to(6)) EXPECT_TRUE(norm_in_delta(r, s).coeff(0).is_zero()) << r << "," << s;
}

TEST(ProductFormula, SmallCases) {
  EXPECT_EQ(rrs_formula(1, 1), L("2"));
  EXPECT_EQ(rrs_formula(1, 2), L("4t^2 - 4"));
  EXPECT_EQ(rrs_formula(2, 2), extract_A(2, 2));
}

TEST(ProductFormula, DirectProduct) {
  // Independent evaluation of the defining product at u = 3/2 (t = 9/4).
  for (auto [r, s] : pairs_up_to(6)) {
    const BigRat u(3, 2);
    BigRat acc = 2;
    for (int k = 1 - r; k <= r; ++k)
      for (int l = 1 - s; l <= s; ++l) {
        if ((k == 0 && l == 0) || (k == r && l == s)) continue;
        acc *= BigRat(k) / u + BigRat(l) * u;
      }
    EXPECT_EQ(rrs_formula(r, s).eval_u(u), acc) << r << "," << s;
  }
}

TEST(MainTheorem, ThroughLevelSix) {
  const auto recs = theorem_main_check(6);
  EXPECT_EQ(recs.size(), pairs_up_to(6).size());
  for (const auto& rec : recs) EXPECT_TRUE(rec.pass) << rec.r << "," << rec.s;
  EXPECT_THROW(theorem_main_check(0), std::invalid_argument);
}

TEST(MainTheorem, LevelOne) {
  const auto recs = theorem_main_check(1);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_TRUE(recs[0].pass);
}

TEST(Structure, EvennessAndDegrees) {
  for (auto [r, s] : pairs_up_to(5)) {
    const auto a = extract_A(r, s);
    EXPECT_TRUE(evenness_check(a).pass);
    EXPECT_TRUE(degree_bounds_check(r, s, a).pass) << degree_bounds_check(r, s, a).detail;
  }
  EXPECT_FALSE(evenness_check(L("t + 1")).pass);
}

TEST(Structure, LeadingTerms) {
  EXPECT_TRUE(leading_term_check(singular_vector(1, 1)).pass);
  EXPECT_TRUE(leading_term_check(singular_vector(1, 2)).pass);
  EXPECT_TRUE(leading_term_check(singular_vector(2, 2)).pass);
  for (auto [r, s] : pairs_up_to(6)) EXPECT_TRUE(leading_term_check(singular_vector(r, s)).pass);
}

TEST(Structure, TNegation) {
  EXPECT_TRUE(t_negation_check(singular_vector(1, 1)).pass);
  EXPECT_EQ(t_negation_image(singular_vector(1, 2).expansion), singular_vector(1, 2).expansion);
  EXPECT_TRUE(t_negation_check(singular_vector(2, 2)).pass);
  SingularVector bad = singular_vector(1, 2);
  bad.expansion[Partition{2}] = L("1");
  EXPECT_FALSE(t_negation_check(bad).pass);
}

TEST(Structure, RectangleNorms) {
  EXPECT_EQ(shapovalov_rectangle(1, 1), K(2) * H());
  EXPECT_EQ(shapovalov_rectangle(1, 2), K(4) * H() + K(1, 2) * C());
  EXPECT_EQ(shapovalov_rectangle(2, 2), word_to_vacuum({2, 2, -2, -2}));
  // <L_s L_{-s}> = 2sh + (s^3 - s)c/12
  for (int s = 1; s <= 6; ++s) EXPECT_EQ(shapovalov_rectangle(1, s), K(2 * s) * H() + K(s * s * s - s, 12) * C());
  for (auto [r, s] : pairs_up_to(6)) EXPECT_TRUE(shapovalov_closed_form_check(r, s).pass);
}
