#pragma once

// Feigin-Fuchs bosonization L_n -> (1/2) Σ :a_m a_{n-m}: - (n+1) ρ a_n on the
// Fock space F_α, the map ι : a_{-λ}|α> -> p_λ / (sqrt(2t))^{ℓ(λ)}, and the
// checks built on them.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vir/exact/sqrt2.hpp"
#include "vir/exact/unipoly.hpp"
#include "vir/symfunc.hpp"
#include "vir/virasoro/checks.hpp"
#include "vir/virasoro/singular.hpp"

namespace vir {

/// Polynomials in α over Q(√2)[u^{±1}].
using APoly = UniPoly<Sqrt2Ext>;

/// Σ c_λ a_{-λ}|α>; coefficients polynomial in α.
using FockVector = std::map<Partition, APoly>;
using FockValue = std::map<Partition, Sqrt2Ext>;

/// ρ(t) = (t^{-1/2} - t^{1/2}) / √2.
inline Sqrt2Ext ff_rho() { return Sqrt2Ext(LaurentPoly(), LaurentPoly::from_terms({{-1, make_rat(1, 2)}, {1, make_rat(-1, 2)}})); }

/// α_{r,s}(t) = ((r+1) t^{-1/2} - (s+1) t^{1/2}) / √2.
inline Sqrt2Ext ff_alpha(int r, int s) {
  return Sqrt2Ext(LaurentPoly(), LaurentPoly::from_terms({{-1, make_rat(r + 1, 2)}, {1, make_rat(-(s + 1), 2)}}));
}

/// ε_{r,s} = α - α_{r,s}(t).
inline APoly ff_eps(int r, int s) { return APoly::x() - APoly(ff_alpha(r, s)); }
/// ε†_{r,s} = α - α_{-r,-s}(t).
inline APoly ff_eps_dagger(int r, int s) { return APoly::x() - APoly(ff_alpha(-r, -s)); }

/// h = α(α - 2ρ)/2 and c = 1 - 12ρ².
inline APoly ff_h() { return APoly::x() * (APoly::x() - APoly(ff_rho() * BigRat(2))) * BigRat(make_rat(1, 2)); }
inline APoly ff_c() { return APoly(Sqrt2Ext(1L) - ff_rho() * ff_rho() * BigRat(12)); }

/// 2(h - h_{r,s}(t)) = ε ε†, with h_{r,s} taken from the Kac parametrization.
inline bool highest_weight_identity(int r, int s) {
  const APoly lhs = (ff_h() - APoly(Sqrt2Ext(h_rs(r, s)))) * BigRat(2);
  return lhs == ff_eps(r, s) * ff_eps_dagger(r, s);
}

namespace detail {

inline void fock_add(FockVector& v, const Partition& p, const APoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

/// a_k on one basis state, k ∈ Z.
inline FockVector heis_mode(int k, const Partition& lambda, const APoly& c) {
  FockVector out;
  if (k < 0) {
    fock_add(out, lambda.with_part(-k), c);
  } else if (k == 0) {
    fock_add(out, lambda, c * APoly::x());
  } else {
    const int m = lambda.multiplicity(k);
    if (m > 0) fock_add(out, lambda.without_part(k), c * BigRat(k * m));
  }
  return out;
}

inline FockVector heis_mode(int k, const FockVector& v) {
  FockVector out;
  for (const auto& [p, c] : v)
    for (const auto& [q, d] : heis_mode(k, p, c)) fock_add(out, q, d);
  return out;
}

}  // namespace detail

/// 𝓛_n applied to a Fock vector.
inline FockVector ff_mode(int n, const FockVector& v) {
  FockVector out;
  const Sqrt2Ext rho = ff_rho();
  for (const auto& [lambda, c] : v) {
    const int level = lambda.size();
    if (level - n < 0) continue;
    FockVector basis{{lambda, c}};
    // :a_i a_j: applies the larger index first; terms with an index outside [n-L, L] vanish.
    for (int m = n - level; m <= level; ++m) {
      const int i = std::min(m, n - m), j = std::max(m, n - m);
      FockVector w = detail::heis_mode(i, detail::heis_mode(j, basis));
      for (auto& [q, d] : w) detail::fock_add(out, q, d * BigRat(make_rat(1, 2)));
    }
    if (n != -1) {
      const Sqrt2Ext k = rho * BigRat(-(n + 1));
      for (auto& [q, d] : detail::heis_mode(n, basis)) detail::fock_add(out, q, d * APoly(k));
    }
  }
  return out;
}

inline FockVector fock_vacuum() { return FockVector{{Partition(), APoly(1L)}}; }

/// φ(L_{-λ})|α> with L_{-λ} = L_{-λ_1} ··· L_{-λ_k} (rightmost applied first).
inline FockVector ff_L(const Partition& lambda) {
  FockVector v = fock_vacuum();
  const auto& parts = lambda.parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) v = ff_mode(-*it, v);
  return v;
}

/// φ of Σ c_λ L_{-λ} applied to |α>.
inline FockVector ff_apply(const VirElement& e) {
  FockVector out;
  for (const auto& [lambda, c] : e)
    for (const auto& [q, d] : ff_L(lambda)) detail::fock_add(out, q, d * Sqrt2Ext(c));
  return out;
}

/// φ(P_{r,s}(t))|α> at generic α.
inline FockVector bosonize_singular(int r, int s) { return ff_apply(singular_vector(r, s).expansion); }

inline FockValue specialize(const FockVector& v, const Sqrt2Ext& alpha) {
  FockValue out;
  for (const auto& [p, c] : v) {
    Sqrt2Ext x = c.eval(alpha);
    if (!x.is_zero()) out.emplace(p, std::move(x));
  }
  return out;
}

/// ι(a_{-λ}|α>) = p_λ / (√2 u)^{ℓ(λ)}.
inline SymFunc<Sqrt2Ext> iota(const FockValue& v) {
  int degree = v.empty() ? 0 : v.begin()->first.size();
  SymFunc<Sqrt2Ext> out(degree);
  const Sqrt2Ext step(LaurentPoly(), LaurentPoly::monomial(make_rat(1, 2), -1));  // 1/(√2 u)
  for (const auto& [p, c] : v) {
    Sqrt2Ext w = c;
    for (int i = 0; i < p.length(); ++i) w *= step;
    out.add(p, std::move(w));
  }
  return out;
}

inline SymFunc<Sqrt2Ext> iota(const FockVector& v) {
  FockValue fixed;
  for (const auto& [p, c] : v) {
    if (c.degree() > 0) throw std::invalid_argument("specialize α first");
    fixed.emplace(p, c.coeff(0));
  }
  return iota(fixed);
}

/// B_{r,s}(t) = ∏_{k=1}^{r} ∏_{l=1}^{s} (k t^{-1} - l).
inline LaurentPoly proportionality_factor(int r, int s) {
  LaurentPoly acc(1);
  for (int k = 1; k <= r; ++k)
    for (int l = 1; l <= s; ++l) acc *= LaurentPoly::monomial(BigRat(k), -2) - LaurentPoly(l);
  return acc;
}

struct ProportionalityResult {
  bool pass = false;
  bool radical_vanished = false;
  LaurentPoly factor;  // quotient read off at p_{(1^n)}
  std::string detail;
};

/// ι(φ(P_{r,s})|α_{r,s}>) against B_{r,s}(t) J_{(s^r)}.
inline ProportionalityResult jack_proportionality_check(int r, int s) {
  ProportionalityResult res;
  const auto image = iota(specialize(bosonize_singular(r, s), ff_alpha(r, s)));
  SymFunc<LaurentPoly> rational(r * s);
  res.radical_vanished = true;
  for (const auto& [p, c] : image.terms()) {
    if (!c.is_rational()) res.radical_vanished = false;
    rational.add(p, c.rational_part());
  }
  if (!res.radical_vanished) {
    res.detail = "radical part survives";
    return res;
  }
  const auto j = jack_integral(Partition::rectangle(s, r));
  res.factor = rational.coeff(Partition::rectangle(1, r * s));
  const auto residual = rational - j * res.factor;
  if (!residual.is_zero()) {
    res.detail = "not proportional, residual " + to_string(residual);
    return res;
  }
  const LaurentPoly b = proportionality_factor(r, s);
  res.pass = res.factor == b;
  res.detail = res.pass ? "factor " + to_string(res.factor) : "factor " + to_string(res.factor) + ", expected " + to_string(b);
  return res;
}

struct GDecomposition {
  bool pass = false;
  std::vector<FockValue> g;  // g[0], g[1], ...
  std::string detail;
};

/// φ(P_{r,s})|α> = ε†[g_0 + Σ_k ε^k g_k]|α>.
inline GDecomposition g_decomposition(int r, int s) {
  GDecomposition out;
  const APoly ed = ff_eps_dagger(r, s);
  const Sqrt2Ext center = ff_alpha(r, s);
  const Partition top{r * s};
  for (const auto& [p, c] : bosonize_singular(r, s)) {
    auto q = try_divide(c, ed);
    if (!q) {
      out.detail = "ε† does not divide the coefficient of " + p.to_string();
      return out;
    }
    const APoly shifted = q->shift(center);
    for (int k = 0; k <= shifted.degree(); ++k) {
      const Sqrt2Ext& x = shifted.coeffs()[static_cast<std::size_t>(k)];
      if (x.is_zero()) continue;
      if (out.g.size() <= static_cast<std::size_t>(k)) out.g.resize(static_cast<std::size_t>(k) + 1);
      out.g[static_cast<std::size_t>(k)].emplace(p, x);
    }
  }
  for (std::size_t k = 1; k < out.g.size(); ++k)
    if (out.g[k].count(top)) {
      out.detail = "a_{-" + std::to_string(r * s) + "} appears in g_" + std::to_string(k);
      return out;
    }
  out.pass = !out.g.empty() && out.g[0].count(top) == 1;
  out.detail = out.pass ? std::to_string(out.g.size()) + " components, a_{-rs} only in g_0" : "a_{-rs} missing from g_0";
  return out;
}

/// ∏_{1≤k≤r, 1≤l≤s, (k,l)≠(r,s)} (k t^{-1} - l) · ∏_{0≤k<r, 0≤l<s, (k,l)≠(0,0)} (l t - k).
inline LaurentPoly a_top_formula(int r, int s) {
  LaurentPoly acc(1);
  for (int k = 1; k <= r; ++k)
    for (int l = 1; l <= s; ++l)
      if (k != r || l != s) acc *= LaurentPoly::monomial(BigRat(k), -2) - LaurentPoly(l);
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < s; ++l)
      if (k != 0 || l != 0) acc *= LaurentPoly::monomial(BigRat(l), 2) - LaurentPoly(k);
  return acc;
}

inline CheckResult a_top_coefficient_check(int r, int s) {
  const auto g = g_decomposition(r, s);
  if (g.g.empty()) return {false, g.detail};
  auto it = g.g[0].find(Partition{r * s});
  const Sqrt2Ext got = it == g.g[0].end() ? Sqrt2Ext() : it->second;
  const Sqrt2Ext want(a_top_formula(r, s));
  const bool ok = got == want;
  return {ok, ok ? "coefficient " + to_string(want.rational_part()) : "coefficient mismatch"};
}

/// The a_{-n} coefficient of φ(L_{-λ})|α> has α-degree exactly one.
inline bool degree_one_check(const Partition& lambda) {
  const auto v = ff_L(lambda);
  auto it = v.find(Partition{lambda.size()});
  return it != v.end() && it->second.degree() == 1;
}

/// The Verma module at c = 1 - 12ρ², h = α(α - 2ρ)/2.
inline VermaModule<APoly>& fock_verma() {
  static VermaModule<APoly> module(ff_c(), ff_h());
  return module;
}

/// 𝓛_k φ(L_{-λ})|α> = φ(L_k L_{-λ})|α> with the Virasoro side reduced in M(c, h).
inline bool intertwining_check(int k, const Partition& lambda) {
  const FockVector lhs = ff_mode(k, ff_L(lambda));
  FockVector rhs;
  const auto& reduced = fock_verma().raise(k, lambda);
  for (const auto& [mu, c] : reduced)
    for (const auto& [q, d] : ff_L(mu)) detail::fock_add(rhs, q, d * c);
  return lhs == rhs;
}

inline std::string to_string(const Sqrt2Ext& x) {
  if (x.is_zero()) return "0";
  if (x.is_rational()) return to_string(x.rational_part());
  std::string rad = "sqrt2*(" + to_string(x.radical_part()) + ")";
  if (x.rational_part().is_zero()) return rad;
  return to_string(x.rational_part()) + " + " + rad;
}

inline std::string to_string(const APoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Sqrt2Ext& x = p.coeffs()[static_cast<std::size_t>(k)];
    if (x.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string mono = k == 0 ? "" : k == 1 ? "α" : "α^" + std::to_string(k);
    out += mono.empty() ? "(" + to_string(x) + ")" : "(" + to_string(x) + ")" + mono;
  }
  return out;
}

inline std::string fock_word(const Partition& p) {
  if (p.empty()) return "|α>";
  std::string out;
  const auto& parts = p.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    out += "a_{-" + std::to_string(parts[i]) + "}";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

template <class Map>
std::string fock_text(const Map& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : v) {
    if (!out.empty()) out += " + ";
    out += "[" + to_string(c) + "] " + fock_word(p);
  }
  return out;
}

}  // namespace vir
