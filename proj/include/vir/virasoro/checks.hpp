#pragma once

// Structural checks on singular vectors and on A_{r,s}(t).

#include <algorithm>
#include <mutex>
#include <sstream>
#include <string>

#include "vir/exact/format.hpp"
#include "vir/virasoro/norm.hpp"

namespace vir {

struct CheckResult {
  bool pass = false;
  std::string detail;
};

/// A_{r,s}(t) = A_{r,s}(-t).
inline CheckResult evenness_check(const LaurentPoly& a) {
  if (!a.is_even()) return {false, "half-integer powers of t"};
  const bool ok = a.t_negated() == a;
  return {ok, ok ? "A(t) = A(-t)" : "A(t) - A(-t) = " + to_string(a - a.t_negated())};
}

/// max deg A <= 2r(s-1) and min deg A >= -2(r-1)s.
inline CheckResult degree_bounds_check(int r, int s, const LaurentPoly& a) {
  if (a.is_zero()) return {false, "A is zero"};
  const auto d = maxmin_deg(a);
  if (!d.in_t) return {false, "half-integer powers of t"};
  const int hi = 2 * r * (s - 1), lo = -2 * (r - 1) * s;
  std::ostringstream os;
  os << "maxdeg " << d.max_deg << " (bound " << hi << "), mindeg " << d.min_deg << " (bound " << lo << ")";
  return {d.max_deg <= hi && d.min_deg >= lo, os.str()};
}

/// Extreme t-degrees of the expansion: (r^s) alone at -(r-1)s, (s^r) alone at r(s-1),
/// with coefficients (-1)^d [(r-1)!]^{2s} and (-1)^d [(s-1)!]^{2r}.
inline CheckResult leading_term_check(const SingularVector& v) {
  const int r = v.r, s = v.s;
  const int dmin = -(r - 1) * s, dmax = r * (s - 1);
  const Partition low = Partition::rectangle(r, s);
  const Partition high = Partition::rectangle(s, r);
  auto expected = [](int fact_arg, int power, int d) {
    BigInt f = factorial(fact_arg), p;
    mpz_pow_ui(p.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(power));
    return BigRat(d % 2 == 0 ? p : BigInt(-p));
  };
  std::ostringstream os;
  bool ok = true;
  for (const auto& [lambda, c] : v.expansion) {
    const auto d = maxmin_deg(c);
    if (d.min_deg < dmin || d.max_deg > dmax) {
      ok = false;
      os << lambda << " leaves the degree window; ";
    }
    if (lambda != low && !is_zero(c.coeff_t(dmin))) {
      ok = false;
      os << lambda << " reaches the minimal degree; ";
    }
    if (lambda != high && !is_zero(c.coeff_t(dmax))) {
      ok = false;
      os << lambda << " reaches the maximal degree; ";
    }
  }
  const BigRat lo_c = v.coeff(low).coeff_t(dmin);
  const BigRat hi_c = v.coeff(high).coeff_t(dmax);
  const BigRat lo_e = expected(r - 1, 2 * s, dmin);
  const BigRat hi_e = expected(s - 1, 2 * r, dmax);
  if (lo_c != lo_e) {
    ok = false;
    os << "coefficient of " << low << " at t^" << dmin << " is " << lo_c << ", expected " << lo_e << "; ";
  }
  if (hi_c != hi_e) {
    ok = false;
    os << "coefficient of " << high << " at t^" << dmax << " is " << hi_c << ", expected " << hi_e << "; ";
  }
  if (ok) os << low << " at t^" << dmin << ", " << high << " at t^" << dmax;
  return {ok, os.str()};
}

/// Normal ordering inside U(Vir_-) needs neither h nor c.
inline VermaModule<BigRat>& lowering_algebra() {
  static VermaModule<BigRat> module(BigRat(0), BigRat(0));
  return module;
}

/// Image under the anti-automorphism t -> -t, L_{-i} -> (-1)^{i-1} L_{-i}.
inline VirElement t_negation_image(const VirElement& e) {
  auto& alg = lowering_algebra();
  std::map<Partition, LaurentPoly> out;
  for (const auto& [lambda, c] : e) {
    const LaurentPoly cn = c.t_negated();
    int sign = 1;
    std::vector<int> word;
    for (int part : lambda.parts()) {
      if ((part - 1) % 2 != 0) sign = -sign;
      word.push_back(-part);
    }
    std::reverse(word.begin(), word.end());
    const auto ordered = alg.apply_word(word, VermaModule<BigRat>::basis(Partition()));
    for (const auto& [mu, x] : ordered) {
      LaurentPoly term = cn * BigRat(sign * x);
      auto [it, inserted] = out.try_emplace(mu, term);
      if (!inserted) {
        it->second += term;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

inline CheckResult t_negation_check(const SingularVector& v) {
  const bool ok = t_negation_image(v.expansion) == v.expansion;
  return {ok, ok ? "fixed by t -> -t" : "image differs: " + to_string(t_negation_image(v.expansion))};
}

/// (h, c) both free: C = Q[c][h].
using HCPoly = UniPoly<QPoly>;

/// M(c, h) with both c and h free.
inline VermaModule<HCPoly>& free_verma() {
  static VermaModule<HCPoly> module(HCPoly(QPoly::x()), HCPoly::x());
  return module;
}

/// K_n with c and h both free, canonical order.
inline Matrix<HCPoly> kac_matrix_hc(int n) { return free_verma().kac_matrix(n); }

inline HCPoly shapovalov_rectangle(int r, int s) {
  const Partition p = Partition::rectangle(s, r);
  return free_verma().pairing(p, p);
}

/// s^r r! ∏_{k=1}^{r} [2h + s(k-1) + (s^2-1)c/12].
inline HCPoly shapovalov_closed_form(int r, int s) {
  BigInt sr;
  mpz_ui_pow_ui(sr.get_mpz_t(), static_cast<unsigned long>(s), static_cast<unsigned long>(r));
  HCPoly acc{QPoly(BigRat(sr * factorial(r)))};
  for (int k = 1; k <= r; ++k) {
    QPoly constant(std::vector<BigRat>{BigRat(s * (k - 1)), make_rat(s * s - 1, 12)});
    HCPoly factor(std::vector<QPoly>{constant, QPoly(BigRat(2))});
    acc *= factor;
  }
  return acc;
}

inline CheckResult shapovalov_closed_form_check(int r, int s) {
  const bool ok = shapovalov_rectangle(r, s) == shapovalov_closed_form(r, s);
  return {ok, ok ? "matches closed form" : "closed form mismatch"};
}

/// Text for a polynomial in h with coefficients in Q[c].
inline std::string to_string(const HCPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const QPoly& ck = p.coeffs()[static_cast<std::size_t>(k)];
    for (int j = ck.degree(); j >= 0; --j) {
      const BigRat& x = ck.coeffs()[static_cast<std::size_t>(j)];
      if (is_zero(x)) continue;
      const bool neg = sgn(x) < 0;
      const BigRat a = neg ? BigRat(-x) : x;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      std::string mono;
      if (k > 0) mono += k == 1 ? "h" : "h^" + std::to_string(k);
      if (j > 0) mono += j == 1 ? "c" : "c^" + std::to_string(j);
      if (mono.empty() || a != 1) os << a.get_str();
      os << mono;
    }
  }
  return os.str();
}

}  // namespace vir
