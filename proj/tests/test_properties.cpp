// Seeded randomized checks. Each test draws its inputs from a fixed seed so a
// failure reproduces exactly.
#include <gtest/gtest.h>

#include <random>

#include "vir/exact/format.hpp"
#include "vir/linalg.hpp"
#include "vir/nekrasov.hpp"
#include "vir/report.hpp"
#include "vir/virasoro/gaiotto.hpp"
#include "vir/virasoro/norm.hpp"
#include "vir/virasoro/singular.hpp"

using namespace vir;

namespace {

using Engine = std::mt19937_64;

long small_int(Engine& eng, long lo, long hi) { return lo + static_cast<long>(eng() % static_cast<unsigned long>(hi - lo + 1)); }

BigRat small_rat(Engine& eng) { return make_rat(small_int(eng, -9, 9), small_int(eng, 1, 9)); }

BigRat nonzero_rat(Engine& eng) {
  BigRat x;
  do x = small_rat(eng);
  while (is_zero(x));
  return x;
}

// Exponents are in u = t^{1/2}; in_t keeps them even.
LaurentPoly random_laurent(Engine& eng, bool in_t = false) {
  std::vector<LaurentPoly::Term> terms;
  const int n = static_cast<int>(small_int(eng, 0, 5));
  for (int i = 0; i < n; ++i) {
    const int e = static_cast<int>(small_int(eng, -6, 6));
    terms.push_back({in_t ? 2 * e : e, small_rat(eng)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

// Plain Gaussian elimination over Q.
BigRat gauss_det(Matrix<BigRat> m) {
  const std::size_t n = m.size();
  BigRat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(m[p][k])) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const BigRat f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

// f^λ from the hook length formula.
BigInt hook_count(const Partition& lambda) {
  BigInt den = 1;
  for (const auto& b : boxes(lambda)) {
    const auto al = arm_leg(lambda, b);
    den *= al.arm + al.leg + 1;
  }
  return factorial(lambda.size()) / den;
}

}  // namespace

TEST(Properties, LaurentRingAxioms) {
  Engine eng(101);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_laurent(eng), b = random_laurent(eng), c = random_laurent(eng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, LaurentPoly());
    EXPECT_EQ((a * b).inverted(), a.inverted() * b.inverted());
    const auto x = random_laurent(eng, true), y = random_laurent(eng, true);
    EXPECT_EQ((x * y).t_negated(), x.t_negated() * y.t_negated());
    if (!b.is_zero()) {
      EXPECT_EQ(divexact(a * b, b), a);
    }
  }
}

TEST(Properties, LaurentEvaluationIsHomomorphism) {
  Engine eng(102);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_laurent(eng), b = random_laurent(eng);
    const BigRat u = nonzero_rat(eng);
    EXPECT_EQ((a * b).eval_u(u), a.eval_u(u) * b.eval_u(u));
    EXPECT_EQ((a + b).eval_u(u), a.eval_u(u) + b.eval_u(u));
  }
}

TEST(Properties, SerializationRoundTrips) {
  Engine eng(103);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_laurent(eng);
    EXPECT_EQ(parse_laurent(to_string(a)), a) << to_string(a);
    EXPECT_EQ(laurent_from_json(Json::parse(laurent_to_json(a).dump())), a);
  }
}

TEST(Properties, BareissAgreesWithGauss) {
  Engine eng(104);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = static_cast<std::size_t>(small_int(eng, 1, 6));
    Matrix<BigRat> a(n, std::vector<BigRat>(n)), b(n, std::vector<BigRat>(n));
    for (auto* m : {&a, &b})
      for (auto& row : *m)
        for (auto& x : row) x = eng() % 4 == 0 ? BigRat(0) : small_rat(eng);
    Matrix<BigRat> ab(n, std::vector<BigRat>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < n; ++k) ab[r][c] += a[r][k] * b[k][c];
    EXPECT_EQ(bareiss_det(a), gauss_det(a));
    EXPECT_EQ(bareiss_det(ab), bareiss_det(a) * bareiss_det(b));
  }
}

TEST(Properties, PartitionCombinatorics) {
  for (int n = 1; n <= 9; ++n) {
    BigInt total = 0;
    for (const auto& p : enumerate(n)) {
      total += hook_count(p) * hook_count(p);
      EXPECT_EQ(conjugate(conjugate(p)), p);
      EXPECT_EQ(static_cast<int>(boxes(p).size()), n);
      EXPECT_EQ(hook_count(conjugate(p)), hook_count(p));
    }
    EXPECT_EQ(total, factorial(n));
  }
}

TEST(Properties, SingularVectorsAtRandomCentralCharge) {
  Engine eng(105);
  for (auto [r, s] : pairs_up_to(6)) {
    BigRat t0;
    do t0 = nonzero_rat(eng);
    while (t0 == 1);
    VermaModule<BigRat> m(c_of_t().eval_t(t0), h_rs(r, s).eval_t(t0));
    VermaModule<BigRat>::Vec v;
    for (const auto& [lambda, c] : singular_vector(r, s).expansion) v.emplace(lambda, c.eval_t(t0));
    for (int k = 1; k <= 2; ++k) {
      const auto w = m.apply(k, v);
      bool zero = true;
      for (const auto& [p, x] : w) zero = zero && is_zero(x);
      EXPECT_TRUE(zero) << r << "," << s << " at t = " << t0;
    }
  }
}

TEST(Properties, NormMatchesNumericPairing) {
  Engine eng(106);
  for (auto [r, s] : pairs_up_to(5)) {
    const BigRat t0 = make_rat(small_int(eng, 2, 9), small_int(eng, 1, 9)), h0 = small_rat(eng);
    const auto parts = enumerate(r * s);
    const auto k = kac_matrix_at(r * s, t0, h0);
    const auto& v = singular_vector(r, s);
    BigRat acc = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = 0; j < parts.size(); ++j) acc += v.coeff(parts[i]).eval_t(t0) * v.coeff(parts[j]).eval_t(t0) * k[i][j];
    EXPECT_EQ(eval_th(norm_logprimary(r, s), t0, h0), acc) << r << "," << s;
  }
}

TEST(Properties, NekrasovGenericMatchesPointwise) {
  Engine eng(107);
  const RatFunc z2 = nekrasov_Zn_generic(2, 2), z3 = nekrasov_Zn_generic(3, 2);
  int checked = 0;
  while (checked < 30) {
    const GaugePoint<BigRat> g{nonzero_rat(eng), nonzero_rat(eng), {small_rat(eng), small_rat(eng)}};
    try {
      EXPECT_EQ(z2.eval({g.e1, g.e2, g.a[0], g.a[1]}), nekrasov_Zn(2, g));
      EXPECT_EQ(z3.eval({g.e1, g.e2, g.a[0], g.a[1]}), nekrasov_Zn(3, g));
      const GaugePoint<BigRat> swapped{g.e2, g.e1, g.a};
      EXPECT_EQ(nekrasov_Zn(3, swapped), nekrasov_Zn(3, g));
      ++checked;
    } catch (const std::domain_error&) {
      // pole at this point; draw again
    }
  }
}

TEST(Properties, AgtAtRandomPoints) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto res = agt_check(4, agt_panel(seed, 5, 4));
    EXPECT_TRUE(res.pass) << seed;
  }
}
