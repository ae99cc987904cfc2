#pragma once

// Kac matrices at c = c(t) with h symbolic, and the Kac determinant factorization.

#include <string>
#include <vector>

#include "vir/exact/format.hpp"
#include "vir/exact/laurent.hpp"
#include "vir/exact/unipoly.hpp"
#include "vir/linalg.hpp"
#include "vir/partitions.hpp"
#include "vir/virasoro/verma.hpp"

namespace vir {

/// c(t) = 13 - 6(t + t^{-1}).
inline LaurentPoly c_of_t() { return LaurentPoly(13) - BigRat(6) * (LaurentPoly::t() + LaurentPoly::t_pow(-1)); }

/// h_{r,s}(t) = ((r - s t)^2 - (t - 1)^2) / (4t), valid for any integers r, s.
inline LaurentPoly h_rs(int r, int s) {
  std::vector<LaurentPoly::Term> terms{{-2, make_rat(r * r - 1, 4)}, {0, make_rat(1 - r * s, 2)}, {2, make_rat(s * s - 1, 4)}};
  return LaurentPoly::from_terms(std::move(terms));
}

/// The module M(c(t), h) with h the polynomial variable; shared process-wide.
inline VermaModule<HPoly>& symbolic_verma() {
  static VermaModule<HPoly> module(HPoly(c_of_t()), HPoly::x());
  return module;
}

inline Matrix<HPoly> kac_matrix(int n) { return symbolic_verma().kac_matrix(n); }

inline HPoly shapovalov(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) return HPoly();
  return symbolic_verma().pairing(mu, lambda);
}

/// p(q) = q(center + δ) re-expanded in δ.
inline HPoly hpoly_shift(const HPoly& p, const LaurentPoly& center) { return p.shift(center); }

/// ∏_λ 2^{ℓ(λ)} z_λ.
inline BigInt kac_det_constant(int n) {
  BigInt k = 1;
  for (const auto& lambda : enumerate(n)) {
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(lambda.length()));
    k *= two_pow * z_lambda(lambda);
  }
  return k;
}

/// ∏_λ 2^{ℓ(λ)} z_λ · ∏_{rs<=n} (h - h_{r,s}(t))^{p(n-rs)}.
inline HPoly kac_det_formula(int n) {
  HPoly out{LaurentPoly(BigRat(kac_det_constant(n)))};
  for (int r = 1; r <= n; ++r)
    for (int s = 1; r * s <= n; ++s) {
      const HPoly lin = HPoly::x() - HPoly(h_rs(r, s));
      const int mult = static_cast<int>(partition_count(n - r * s).get_si());
      for (int i = 0; i < mult; ++i) out *= lin;
    }
  return out;
}

struct KacDetResult {
  bool pass;
  HPoly det;
  HPoly formula;
};

inline KacDetResult kac_det_check(int n) {
  HPoly det = bareiss_det(kac_matrix(n));
  HPoly formula = kac_det_formula(n);
  return {det == formula, std::move(det), std::move(formula)};
}

/// Text form of an h-polynomial: "8h^2 + (4t^2 - 4)h" style, descending h-degree.
inline std::string to_string(const HPoly& p, const std::string& var = "h") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const LaurentPoly& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string cs = to_string(c);
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    bool neg = false;
    if (c.is_monomial() && sgn(c.leading_coef()) < 0) {
      neg = true;
      cs = to_string(-c);
    }
    if (k > 0 && cs == "1") {
      cs = "";
    } else if (!c.is_monomial() && p.degree() > 0) {
      cs = "(" + cs + ")";
    }
    std::string term = cs + mono;
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace vir
