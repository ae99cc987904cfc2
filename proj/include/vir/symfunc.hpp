#pragma once

// Symmetric functions in the power-sum basis, the deformed inner product
// <p_λ, p_μ> = δ z_λ t^{ℓ(λ)}, and monic / integral Jack functions.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vir/exact/format.hpp"
#include "vir/exact/laurent.hpp"
#include "vir/exact/laurent_frac.hpp"
#include "vir/linalg.hpp"
#include "vir/partitions.hpp"

namespace vir {

template <class C>
class SymFunc {
 public:
  using Terms = std::map<Partition, C>;

  SymFunc() = default;
  explicit SymFunc(int degree) : degree_(degree) {}
  SymFunc(int degree, Terms terms) : degree_(degree) {
    for (auto& [p, c] : terms) add(p, std::move(c));
  }
  static SymFunc p(const Partition& lambda) {
    SymFunc f(lambda.size());
    f.terms_.emplace(lambda, C(1L));
    return f;
  }

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  C coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? C() : it->second;
  }

  void add(const Partition& lambda, C c) {
    if (lambda.size() != degree_) throw std::invalid_argument("inhomogeneous symmetric function");
    if (vir::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (vir::is_zero(it->second)) terms_.erase(it);
    }
  }

  SymFunc& operator+=(const SymFunc& o) {
    check_degree(o);
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
  }
  SymFunc& operator-=(const SymFunc& o) {
    check_degree(o);
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
  }
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(const SymFunc& a, const C& s) {
    SymFunc r(a.degree_);
    for (const auto& [p, c] : a.terms_) r.add(p, c * s);
    return r;
  }
  friend SymFunc operator*(const C& s, const SymFunc& a) { return a * s; }
  /// Product of symmetric functions (p_λ p_μ = p_{λ∪μ}).
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    SymFunc r(a.degree_ + b.degree_);
    for (const auto& [pa, ca] : a.terms_)
      for (const auto& [pb, cb] : b.terms_) {
        std::vector<int> parts(pa.parts());
        parts.insert(parts.end(), pb.parts().begin(), pb.parts().end());
        r.add(Partition::from_unsorted(std::move(parts)), ca * cb);
      }
    return r;
  }
  friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.degree_ == b.degree_ && a.terms_ == b.terms_; }

  template <class F>
  auto map(F f) const -> SymFunc<decltype(f(std::declval<const C&>()))> {
    SymFunc<decltype(f(std::declval<const C&>()))> out(degree_);
    for (const auto& [p, c] : terms_) out.add(p, f(c));
    return out;
  }

 private:
  void check_degree(const SymFunc& o) {
    if (terms_.empty() && o.degree_ != degree_) degree_ = o.degree_;
    if (!o.terms_.empty() && o.degree_ != degree_) throw std::invalid_argument("degree mismatch");
  }

  int degree_ = 0;
  Terms terms_;
};

/// z_λ t^{ℓ(λ)} as a Laurent polynomial.
inline LaurentPoly p_norm(const Partition& lambda) {
  return LaurentPoly::monomial(BigRat(z_lambda(lambda)), 2 * lambda.length());
}

inline LaurentFrac inner_product(const SymFunc<LaurentFrac>& f, const SymFunc<LaurentFrac>& g) {
  LaurentFrac acc;
  for (const auto& [p, c] : f.terms()) {
    auto it = g.terms().find(p);
    if (it != g.terms().end()) acc += c * it->second * LaurentFrac(p_norm(p));
  }
  return acc;
}

inline LaurentPoly inner_product(const SymFunc<LaurentPoly>& f, const SymFunc<LaurentPoly>& g) {
  LaurentPoly acc;
  for (const auto& [p, c] : f.terms()) {
    auto it = g.terms().find(p);
    if (it != g.terms().end()) acc += c * it->second * p_norm(p);
  }
  return acc;
}

namespace detail {

/// Number of ways to distribute the parts of μ over d variables so that variable j receives ν_j in total.
inline BigInt count_assignments(const std::vector<int>& mu, std::size_t idx, std::vector<int>& room) {
  if (idx == mu.size()) {
    for (int x : room)
      if (x != 0) return 0;
    return 1;
  }
  BigInt total = 0;
  for (std::size_t j = 0; j < room.size(); ++j) {
    if (room[j] < mu[idx]) continue;
    room[j] -= mu[idx];
    total += count_assignments(mu, idx + 1, room);
    room[j] += mu[idx];
  }
  return total;
}

struct Transition {
  std::vector<Partition> parts;   // canonical order
  Matrix<BigRat> p_to_m;          // p_μ = Σ_ν p_to_m[μ][ν] m_ν
  Matrix<BigRat> m_to_p;          // m_μ = Σ_ν m_to_p[μ][ν] p_ν
};

inline Matrix<BigRat> invert(const Matrix<BigRat>& a) {
  const std::size_t n = a.size();
  Matrix<BigRat> inv(n, std::vector<BigRat>(n));
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<BigRat> e(n);
    e[c] = 1;
    auto col = solve(a, e);
    if (!col) throw std::logic_error("singular transition matrix");
    for (std::size_t r = 0; r < n; ++r) inv[r][c] = (*col)[r];
  }
  return inv;
}

inline const Transition& transition(int d) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Transition>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[d];
  if (slot) return *slot;
  auto t = std::make_unique<Transition>();
  t->parts = enumerate(d);
  const std::size_t n = t->parts.size();
  t->p_to_m.assign(n, std::vector<BigRat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<int> room(static_cast<std::size_t>(std::max(d, 1)), 0);
      const auto& nu = t->parts[j].parts();
      std::copy(nu.begin(), nu.end(), room.begin());
      t->p_to_m[i][j] = BigRat(count_assignments(t->parts[i].parts(), 0, room));
    }
  t->m_to_p = invert(t->p_to_m);
  slot = std::move(t);
  return *slot;
}

inline std::size_t index_of(const std::vector<Partition>& parts, const Partition& p) {
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] == p) return i;
  throw std::invalid_argument("partition not in list");
}

}  // namespace detail

/// m_λ expanded in power sums.
inline SymFunc<BigRat> monomial_to_powersum(const Partition& lambda) {
  const auto& tr = detail::transition(lambda.size());
  const std::size_t i = detail::index_of(tr.parts, lambda);
  SymFunc<BigRat> f(lambda.size());
  for (std::size_t j = 0; j < tr.parts.size(); ++j) f.add(tr.parts[j], tr.m_to_p[i][j]);
  return f;
}

/// Monomial-basis coefficients of a power-sum expansion.
inline std::map<Partition, LaurentFrac> to_monomial(const SymFunc<LaurentFrac>& f) {
  const auto& tr = detail::transition(f.degree());
  std::map<Partition, LaurentFrac> out;
  for (const auto& [mu, c] : f.terms()) {
    const std::size_t i = detail::index_of(tr.parts, mu);
    for (std::size_t j = 0; j < tr.parts.size(); ++j) {
      if (is_zero(tr.p_to_m[i][j])) continue;
      out[tr.parts[j]] += c * tr.p_to_m[i][j];
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

inline SymFunc<LaurentFrac> lift(const SymFunc<BigRat>& f) {
  return f.map([](const BigRat& x) { return LaurentFrac(x); });
}

namespace detail {

inline const std::map<Partition, SymFunc<LaurentFrac>>& jack_degree(int d) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::map<Partition, SymFunc<LaurentFrac>>>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return *it->second;
  }
  // Gram-Schmidt from (1^d) upward: the reverse of the canonical order extends dominance.
  auto parts = enumerate(d);
  std::reverse(parts.begin(), parts.end());
  auto out = std::make_unique<std::map<Partition, SymFunc<LaurentFrac>>>();
  std::vector<std::pair<SymFunc<LaurentFrac>, LaurentFrac>> done;  // (P_μ, <P_μ,P_μ>)
  for (const auto& lambda : parts) {
    SymFunc<LaurentFrac> m = lift(monomial_to_powersum(lambda));
    SymFunc<LaurentFrac> p = m;
    for (const auto& [q, nq] : done) p -= q * (inner_product(m, q) / nq);
    LaurentFrac np = inner_product(p, p);
    done.emplace_back(p, np);
    out->emplace(lambda, std::move(p));
  }
  std::lock_guard lock(mu);
  return *cache.try_emplace(d, std::move(out)).first->second;
}

}  // namespace detail

inline const SymFunc<LaurentFrac>& jack_monic(const Partition& lambda) {
  return detail::jack_degree(lambda.size()).at(lambda);
}

/// t·a + ℓ + shift for a box, as a Laurent polynomial in t.
inline LaurentPoly hook_factor(const ArmLeg& al, const LaurentPoly& shift) {
  return LaurentPoly::monomial(BigRat(al.arm), 2) + LaurentPoly(al.leg) + shift;
}

/// ∏_□ (t a + ℓ + t) / (t a + ℓ + 1).
inline LaurentFrac jack_norm_formula(const Partition& lambda) {
  LaurentPoly num(1), den(1);
  for (const auto& b : boxes(lambda)) {
    const ArmLeg al = arm_leg(lambda, b);
    num *= hook_factor(al, LaurentPoly::t());
    den *= hook_factor(al, LaurentPoly(1));
  }
  return LaurentFrac(num, den);
}

inline bool jack_norm_check(const Partition& lambda) {
  const auto& p = jack_monic(lambda);
  return inner_product(p, p) == jack_norm_formula(lambda);
}

/// ∏_□ (t a + ℓ + 1).
inline LaurentPoly jack_integral_factor(const Partition& lambda) {
  LaurentPoly acc(1);
  for (const auto& b : boxes(lambda)) acc *= hook_factor(arm_leg(lambda, b), LaurentPoly(1));
  return acc;
}

/// J_λ = P_λ ∏(t a + ℓ + 1); coefficients asserted to lie in Z[t] with p_{(1^n)} coefficient 1.
inline SymFunc<LaurentPoly> jack_integral(const Partition& lambda) {
  const LaurentFrac k(jack_integral_factor(lambda));
  SymFunc<LaurentPoly> out(lambda.size());
  for (const auto& [mu, c] : jack_monic(lambda).terms()) {
    LaurentFrac x = c * k;
    if (!x.is_laurent()) throw std::logic_error("integral Jack coefficient is not a polynomial in t");
    LaurentPoly p = x.to_laurent();
    if (!p.is_even() || (!p.is_zero() && p.min_exp() < 0))
      throw std::logic_error("integral Jack coefficient is not a polynomial in t");
    for (const auto& term : p.terms())
      if (term.coef.get_den() != 1) throw std::logic_error("integral Jack coefficient is not integral");
    out.add(mu, std::move(p));
  }
  const Partition ones = Partition::rectangle(1, lambda.size());
  if (!lambda.empty() && out.coeff(ones) != LaurentPoly(1))
    throw std::logic_error("integral Jack coefficient of p_(1^n) is not 1");
  return out;
}

/// θ_λ^{(n)} = ∏_{(i,j) ≠ (1,1)} ((j-1)t - (i-1)).
inline LaurentPoly theta_top_coeff(const Partition& lambda) {
  LaurentPoly acc(1);
  for (const auto& b : boxes(lambda)) {
    if (b.row == 1 && b.col == 1) continue;
    acc *= LaurentPoly::monomial(BigRat(b.col - 1), 2) - LaurentPoly(b.row - 1);
  }
  return acc;
}

/// p_n = n t Σ_λ [∏ 1/(t a + ℓ + t)] θ_λ P_λ, as an exact identity.
inline bool powersum_expansion_check(int n) {
  SymFunc<LaurentFrac> rhs(n);
  for (const auto& lambda : enumerate(n)) {
    LaurentPoly den(1);
    for (const auto& b : boxes(lambda)) den *= hook_factor(arm_leg(lambda, b), LaurentPoly::t());
    const LaurentFrac w = LaurentFrac(LaurentPoly::monomial(BigRat(n), 2) * theta_top_coeff(lambda), den);
    rhs += jack_monic(lambda) * w;
  }
  return rhs == SymFunc<LaurentFrac>::p(Partition{n});
}

template <class C>
std::string to_string(const SymFunc<C>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(it->second) + ")p" + it->first.to_string();
  }
  return out;
}

inline std::string to_string(const LaurentFrac& x) {
  if (x.is_laurent()) return to_string(x.num());
  return "(" + to_string(x.num()) + ")/(" + to_string(x.den()) + ")";
}

}  // namespace vir
