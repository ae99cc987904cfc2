#pragma once

// Exact dense linear algebra: Bareiss determinants over integral domains,
// fraction-free kernels over the Laurent ring, and Gaussian solves over fields.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vir/exact/laurent.hpp"
#include "vir/exact/laurent_frac.hpp"

namespace vir {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Fraction-free Bareiss determinant. T needs exact divexact(T, T).
template <class T>
T bareiss_det(Matrix<T> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1L);
  bool negate = false;
  T prev(1L);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m[p][k])) ++p;
      if (p == n) return T();
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = k == 0 ? std::move(v) : divexact(v, prev);
      }
      m[i][k] = T();
    }
    prev = m[k][k];
  }
  T d = m[n - 1][n - 1];
  return negate ? T(-d) : d;
}

namespace detail {

inline std::size_t weight(const LaurentPoly& p) { return p.size(); }

/// Divides a row by the gcd of its entries (and a sign/scale unit).
inline void strip_row(std::vector<LaurentPoly>& row) {
  LaurentPoly g;
  for (const auto& x : row) {
    if (x.is_zero()) continue;
    g = gcd(g, x);
    if (g == LaurentPoly(1)) break;
  }
  if (g.is_zero()) return;
  // Also remove the monomial unit so rows stay centred and monic-ish.
  int low = 0;
  bool first = true;
  for (const auto& x : row)
    if (!x.is_zero()) {
      low = first ? x.min_exp() : std::min(low, x.min_exp());
      first = false;
    }
  LaurentPoly unit = LaurentPoly::u_pow(low);
  LaurentPoly div = g * unit;
  if (div == LaurentPoly(1)) return;
  for (auto& x : row)
    if (!x.is_zero()) x = divexact(x, div);
}

}  // namespace detail

/// Reduced row echelon data produced by fraction-free elimination.
struct LaurentEchelon {
  Matrix<LaurentPoly> rows;           // rank rows; row k has its pivot at pivot_cols[k], zeros in other pivot columns
  std::vector<std::size_t> pivot_cols;
  std::size_t cols = 0;
};

/// Gauss-Jordan elimination by cross-multiplication, stripping row content after every update.
inline LaurentEchelon laurent_echelon(Matrix<LaurentPoly> m) {
  LaurentEchelon out;
  if (m.empty()) return out;
  out.cols = m[0].size();
  for (auto& row : m) detail::strip_row(row);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < out.cols && rank < m.size(); ++c) {
    std::optional<std::size_t> best;
    for (std::size_t r = rank; r < m.size(); ++r)
      if (!m[r][c].is_zero() && (!best || detail::weight(m[r][c]) < detail::weight(m[*best][c]))) best = r;
    if (!best) continue;
    std::swap(m[rank], m[*best]);
    const auto& piv_row = m[rank];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c].is_zero()) continue;
      const LaurentPoly a = piv_row[c];
      const LaurentPoly b = m[i][c];
      LaurentPoly g = gcd(a, b);
      LaurentPoly fa = divexact(a, g), fb = divexact(b, g);
      for (std::size_t j = 0; j < out.cols; ++j) {
        if (piv_row[j].is_zero()) {
          if (!m[i][j].is_zero()) m[i][j] = fa * m[i][j];
          continue;
        }
        m[i][j] = fa * m[i][j] - fb * piv_row[j];
      }
      detail::strip_row(m[i]);
    }
    out.pivot_cols.push_back(c);
    ++rank;
  }
  m.resize(rank);
  out.rows = std::move(m);
  return out;
}

/// Kernel basis over Q(u); one vector per non-pivot column.
inline std::vector<std::vector<LaurentFrac>> laurent_kernel(const Matrix<LaurentPoly>& m, std::size_t cols) {
  Matrix<LaurentPoly> a = m;
  if (a.empty()) {
    std::vector<std::vector<LaurentFrac>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
      std::vector<LaurentFrac> v(cols);
      v[f] = LaurentFrac(1);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  LaurentEchelon e = laurent_echelon(std::move(a));
  std::vector<bool> is_pivot(e.cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<LaurentFrac>> basis;
  for (std::size_t f = 0; f < e.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<LaurentFrac> v(e.cols);
    v[f] = LaurentFrac(1);
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
      const auto pc = e.pivot_cols[k];
      if (!e.rows[k][f].is_zero()) v[pc] = LaurentFrac(-e.rows[k][f], e.rows[k][pc]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves A x = b over a field F (exact Gaussian elimination); nullopt when A is singular.
template <class F>
std::optional<std::vector<F>> solve(Matrix<F> a, std::vector<F> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a[p][c])) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[c], a[p]);
    std::swap(b[c], b[p]);
    const F inv = F(1L) / a[c][c];
    for (std::size_t j = c; j < n; ++j) a[c][j] = a[c][j] * inv;
    b[c] = b[c] * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(a[i][c])) continue;
      const F f = a[i][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] = a[i][j] - f * a[c][j];
      b[i] = b[i] - f * b[c];
    }
  }
  return b;
}

}  // namespace vir
