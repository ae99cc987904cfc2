#pragma once

// Norms of logarithmic primaries N_{r,s}(t,h), their first-order coefficient
// A_{r,s}(t), and the product R_{r,s}(t).

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vir/virasoro/kac.hpp"
#include "vir/virasoro/singular.hpp"

namespace vir {

/// <χ|χ> at generic h: Σ_{λ,μ} c_λ c_μ K_{λ,μ}(c(t), h).
inline HPoly norm_of(const VirElement& e, int level) {
  auto& m = symbolic_verma();
  HPoly acc;
  for (const auto& mu : enumerate(level)) {
    auto cm = e.find(mu);
    if (cm == e.end()) continue;
    HPoly w;
    for (const auto& [lambda, x] : e) w += m.pairing(mu, lambda) * x;
    acc += w * cm->second;
  }
  return acc;
}

inline const HPoly& norm_logprimary(int r, int s) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<HPoly>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({r, s});
    if (it != cache.end()) return *it->second;
  }
  auto v = std::make_unique<HPoly>(norm_of(singular_vector(r, s).expansion, r * s));
  std::lock_guard lock(mu);
  return *cache.try_emplace({r, s}, std::move(v)).first->second;
}

/// N_{r,s} re-expanded in δ = h - h_{r,s}(t).
inline HPoly norm_in_delta(int r, int s) { return hpoly_shift(norm_logprimary(r, s), h_rs(r, s)); }

/// Coefficient of δ^1 of an N re-expanded around its singular weight; the δ^0 term must vanish.
inline LaurentPoly first_order_coefficient(const HPoly& shifted) {
  if (!shifted.coeff(0).is_zero()) throw std::logic_error("norm does not vanish at the singular weight");
  LaurentPoly a = shifted.coeff(1);
  if (!a.is_even()) throw std::logic_error("first-order coefficient is not a Laurent polynomial in t");
  return a;
}

inline LaurentPoly extract_A(int r, int s) { return first_order_coefficient(norm_in_delta(r, s)); }

/// 2 ∏ (k u^{-1} + l u) over 1-r <= k <= r, 1-s <= l <= s, (k,l) ∉ {(0,0), (r,s)}.
inline LaurentPoly rrs_formula(int r, int s) {
  LaurentPoly acc(2);
  for (int k = 1 - r; k <= r; ++k)
    for (int l = 1 - s; l <= s; ++l) {
      if ((k == 0 && l == 0) || (k == r && l == s)) continue;
      acc *= LaurentPoly::from_terms({{-1, BigRat(k)}, {1, BigRat(l)}});
    }
  if (!acc.is_even()) throw std::logic_error("R_{r,s} has half-integer powers of t");
  return acc;
}

/// All (r,s) with 1 <= rs <= max_level, ordered by level then r.
inline std::vector<std::pair<int, int>> pairs_up_to(int max_level) {
  std::vector<std::pair<int, int>> out;
  for (int n = 1; n <= max_level; ++n)
    for (int r = 1; r <= n; ++r)
      if (n % r == 0) out.emplace_back(r, n / r);
  return out;
}

struct TheoremRecord {
  int r;
  int s;
  LaurentPoly a;
  LaurentPoly rr;
  bool pass;
  double seconds;
};

inline std::vector<TheoremRecord> theorem_main_check(int max_level) {
  if (max_level < 1) throw std::invalid_argument("max_level must be >= 1");
  std::vector<TheoremRecord> out;
  for (auto [r, s] : pairs_up_to(max_level)) {
    const auto t0 = std::chrono::steady_clock::now();
    LaurentPoly a = extract_A(r, s);
    LaurentPoly rr = rrs_formula(r, s);
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = a == rr;
    out.push_back({r, s, std::move(a), std::move(rr), pass, dt});
  }
  return out;
}

}  // namespace vir
