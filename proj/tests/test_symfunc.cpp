#include <gtest/gtest.h>

#include <functional>

#include "vir/exact/format.hpp"
#include "vir/symfunc.hpp"

using namespace vir;

namespace {

using SF = SymFunc<LaurentFrac>;

LaurentPoly L(const char* s) { return parse_laurent(s); }
LaurentFrac F(const char* s) { return LaurentFrac(parse_laurent(s)); }

SF p(std::initializer_list<int> parts) { return SF::p(Partition(std::vector<int>(parts))); }

// m_λ(x) by summing over distinct placements of the parts on the variables.
BigRat monomial_value(const Partition& lambda, const std::vector<BigRat>& x) {
  std::vector<int> exps(x.size(), 0);
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) exps[i] = lambda.parts()[i];
  std::sort(exps.begin(), exps.end());
  BigRat total = 0;
  do {
    BigRat term = 1;
    for (std::size_t i = 0; i < x.size(); ++i) term *= pow(x[i], exps[i]);
    total += term;
  } while (std::next_permutation(exps.begin(), exps.end()));
  return total;
}

BigRat powersum_value(const Partition& mu, const std::vector<BigRat>& x) {
  BigRat acc = 1;
  for (int k : mu.parts()) {
    BigRat s = 0;
    for (const auto& xi : x) s += pow(xi, k);
    acc *= s;
  }
  return acc;
}

// ∂/∂p_k applied to p_μ.
std::optional<std::pair<long, Partition>> dp(int k, const Partition& mu) {
  const int m = mu.multiplicity(k);
  if (m == 0) return std::nullopt;
  return std::make_pair(static_cast<long>(m), mu.without_part(k));
}

// Laplace-Beltrami operator in power sums with α = t; Jack functions are its eigenvectors
// with eigenvalue t n(λ') - n(λ).
SF laplace_beltrami(const SF& f) {
  const LaurentFrac t = F("t");
  SF out(f.degree());
  for (const auto& [mu, c] : f.terms()) {
    const int n = mu.size();
    for (int i = 1; i < n; ++i)
      for (int j = 1; i + j <= n; ++j) {
        auto a = dp(j, mu);
        if (!a) continue;
        auto b = dp(i, a->second);
        if (!b) continue;
        out.add(b->second.with_part(i + j), c * t * LaurentFrac(make_rat(i * j * a->first * b->first, 2)));
      }
    for (int k : std::set<int>(mu.parts().begin(), mu.parts().end())) {
      const auto a = *dp(k, mu);
      for (int i = 1; i < k; ++i)
        out.add(a.second.with_part(i).with_part(k - i), c * LaurentFrac(make_rat(k * a.first, 2)));
      out.add(mu, c * (t - F("1")) * LaurentFrac(make_rat(k * (k - 1) * a.first, 2)));
    }
  }
  return out;
}

long n_of(const Partition& lambda) {
  long acc = 0;
  for (int i = 1; i <= lambda.length(); ++i) acc += (i - 1) * lambda.part(i);
  return acc;
}

}  // namespace

TEST(PowerSums, InnerProduct) {
  EXPECT_EQ(inner_product(p({1}), p({1})), F("t"));
  EXPECT_EQ(inner_product(p({2, 1}), p({2, 1})), F("2t^2"));
  EXPECT_TRUE(inner_product(p({2}), p({1, 1})).is_zero());
}

TEST(PowerSums, Product) { EXPECT_EQ(p({2}) * p({1}), p({2, 1})); }

TEST(Monomials, SmallCases) {
  EXPECT_EQ(lift(monomial_to_powersum(Partition{1})), p({1}));
  EXPECT_EQ(lift(monomial_to_powersum(Partition{2})), p({2}));
  EXPECT_EQ(lift(monomial_to_powersum(Partition{1, 1})), (p({1, 1}) - p({2})) * LaurentFrac(make_rat(1, 2)));
}

TEST(Monomials, AgreeWithVariableExpansion) {
  const std::vector<BigRat> x{BigRat(2), BigRat(-3), BigRat(1, 2), BigRat(5), BigRat(7, 3)};
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : enumerate(n)) {
      BigRat value = 0;
      const auto m = monomial_to_powersum(lambda);
      for (const auto& [mu, c] : m.terms()) value += c * powersum_value(mu, x);
      EXPECT_EQ(value, monomial_value(lambda, x)) << lambda;
    }
}

TEST(Jack, MonicSmallCases) {
  EXPECT_EQ(jack_monic(Partition{1}), p({1}));
  EXPECT_EQ(jack_monic(Partition{2}), (p({2}) * F("t") + p({1, 1})) * LaurentFrac(LaurentPoly(1), L("t + 1")));
  EXPECT_EQ(inner_product(jack_monic(Partition{1}), jack_monic(Partition{1})), F("t"));
}

TEST(Jack, EigenfunctionsOfLaplaceBeltrami) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : enumerate(n)) {
      const auto& pl = jack_monic(lambda);
      const LaurentFrac e(LaurentPoly::monomial(BigRat(n_of(conjugate(lambda))), 2) - LaurentPoly(n_of(lambda)));
      EXPECT_EQ(laplace_beltrami(pl), pl * e) << lambda;
    }
}

TEST(Jack, NormFormula) {
  EXPECT_TRUE(jack_norm_check(Partition{1}));
  EXPECT_TRUE(jack_norm_check(Partition{2, 2}));
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : enumerate(n)) EXPECT_TRUE(jack_norm_check(lambda)) << lambda;
}

TEST(Jack, Orthogonality) {
  for (int n = 2; n <= 5; ++n) {
    const auto parts = enumerate(n);
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        EXPECT_TRUE(inner_product(jack_monic(parts[i]), jack_monic(parts[j])).is_zero());
  }
}

TEST(Jack, Integral) {
  EXPECT_EQ(jack_integral(Partition{1}), SymFunc<LaurentPoly>::p(Partition{1}));
  SymFunc<LaurentPoly> j2(2);
  j2.add(Partition{1, 1}, L("1"));
  j2.add(Partition{2}, L("t"));
  EXPECT_EQ(jack_integral(Partition{2}), j2);
  SymFunc<LaurentPoly> j11(2);
  j11.add(Partition{1, 1}, L("1"));
  j11.add(Partition{2}, L("-1"));
  EXPECT_EQ(jack_integral(Partition{1, 1}), j11);
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : enumerate(n)) EXPECT_NO_THROW(jack_integral(lambda));
}

TEST(Theta, SmallCases) {
  EXPECT_EQ(theta_top_coeff(Partition{1}), L("1"));
  EXPECT_EQ(theta_top_coeff(Partition{2}), L("t"));
  EXPECT_EQ(theta_top_coeff(Partition{2, 2}), L("-t") * L("t - 1"));
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : enumerate(n)) EXPECT_EQ(jack_integral(lambda).coeff(Partition{n}), theta_top_coeff(lambda)) << lambda;
}

TEST(PowerSumExpansion, ByLinearAlgebra) {
  // p_2 = c1 P_(2) + c2 P_(1,1) solved directly.
  const auto& a = jack_monic(Partition{2});
  const auto& b = jack_monic(Partition{1, 1});
  const LaurentFrac c1 = inner_product(p({2}), a) / inner_product(a, a);
  const LaurentFrac c2 = inner_product(p({2}), b) / inner_product(b, b);
  EXPECT_EQ(a * c1 + b * c2, p({2}));
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(powersum_expansion_check(n)) << n;
}

TEST(Text, Rendering) {
  EXPECT_EQ(to_string(jack_integral(Partition{1, 1})), "(-1)p(2) + (1)p(1,1)");
  EXPECT_EQ(to_string(F("t")), "t");
}
