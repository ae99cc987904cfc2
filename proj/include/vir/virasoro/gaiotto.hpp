#pragma once

// f_n = (K_n^{-1})_{(1^n),(1^n)} at c = c(t): symbolically as a reduced rational
// function of (t, h), and pointwise at rational (t0, h0).

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vir/exact/ratfunc.hpp"
#include "vir/linalg.hpp"
#include "vir/virasoro/kac.hpp"
#include "vir/virasoro/norm.hpp"

namespace vir {

/// Evaluates an h-polynomial with Laurent coefficients at (t0, h0).
inline BigRat eval_th(const HPoly& p, const BigRat& t0, const BigRat& h0) {
  BigRat acc(0);
  for (int k = p.degree(); k >= 0; --k) acc = acc * h0 + p.coeffs()[static_cast<std::size_t>(k)].eval_t(t0);
  return acc;
}

inline Matrix<BigRat> kac_matrix_at(int n, const BigRat& t0, const BigRat& h0) {
  const auto k = kac_matrix(n);
  Matrix<BigRat> m(k.size(), std::vector<BigRat>(k.size()));
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = 0; j < k.size(); ++j) m[i][j] = eval_th(k[i][j], t0, h0);
  return m;
}

/// f_n(t0, h0); nullopt when K_n is singular there.
inline std::optional<BigRat> gaiotto_coeff_at(int n, const BigRat& t0, const BigRat& h0) {
  if (n == 0) return BigRat(1);
  auto m = kac_matrix_at(n, t0, h0);
  std::vector<BigRat> rhs(m.size());
  rhs.back() = 1;  // (1^n) is last in canonical order
  auto x = solve(std::move(m), std::move(rhs));
  if (!x) return std::nullopt;
  return x->back();
}

inline std::shared_ptr<const std::vector<std::string>> th_vars() {
  static auto vars = std::make_shared<const std::vector<std::string>>(std::vector<std::string>{"t", "h"});
  return vars;
}

/// h-polynomial with Laurent-in-t coefficients, multiplied by t^shift, as a polynomial in (t, h).
inline MPoly to_mpoly_th(const HPoly& p, int shift) {
  MPoly out(2);
  for (int k = 0; k <= p.degree(); ++k)
    for (const auto& term : p.coeffs()[static_cast<std::size_t>(k)].terms()) {
      if (term.exp % 2 != 0) throw std::domain_error("half-integer power of t");
      const int e = term.exp / 2 + shift;
      if (e < 0) throw std::domain_error("negative power of t after clearing");
      out += MPoly::term({e, k}, term.coef);
    }
  return out;
}

inline int min_t_degree(const HPoly& p) {
  int m = 0;
  for (const auto& c : p.coeffs())
    if (!c.is_zero()) m = std::min(m, c.min_exp() / 2);
  return m;
}

/// f_n as a reduced fraction in (t, h): cofactor of the (1^n),(1^n) entry over det K_n.
/// The multivariate gcd makes this slow past n = 2; use gaiotto_coeff_at for numbers.
inline RatFunc gaiotto_coeff(int n) {
  auto vars = th_vars();
  if (n == 0) return RatFunc::constant(vars, BigRat(1));
  auto k = kac_matrix(n);
  HPoly det = bareiss_det(k);
  if (det.is_zero()) throw std::logic_error("Kac determinant vanishes identically");
  k.pop_back();
  for (auto& row : k) row.pop_back();
  HPoly cof = bareiss_det(k);
  const int shift = -std::min(min_t_degree(det), min_t_degree(cof));
  return RatFunc(vars, to_mpoly_th(cof, shift), to_mpoly_th(det, shift));
}

struct RecursionPoint {
  BigRat t0;
  BigRat h0;
};

/// Right side of the Virasoro recursion at (t0, h0) for level n, with the limit taken from A_{r,s}.
inline BigRat virasoro_recursion_rhs(int n, const BigRat& t0, const BigRat& h0) {
  BigRat acc(n == 0 ? 1 : 0);
  for (auto [r, s] : pairs_up_to(n)) {
    const BigRat hrs = h_rs(r, s).eval_t(t0);
    const BigRat a = extract_A(r, s).eval_t(t0);
    if (is_zero(a)) throw std::domain_error("A_{r,s}(t0) vanishes");
    if (h0 == hrs) throw std::domain_error("h0 sits on h_{r,s}(t0)");
    auto f = gaiotto_coeff_at(n - r * s, t0, hrs + r * s);
    if (!f) throw std::domain_error("K singular at shifted weight");
    acc += *f / (a * (h0 - hrs));
  }
  return acc;
}

}  // namespace vir
