#pragma once

// Pure SU(r) Nekrasov partition function Z = Σ_Y x^{|Y|} / ∏ n_{α,β}^Y, its
// Virasoro-side dictionary, the AGT comparison with f_n and the two recursions.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "vir/exact/laurent_frac.hpp"
#include "vir/exact/mpoly.hpp"
#include "vir/exact/ratfunc.hpp"
#include "vir/partitions.hpp"
#include "vir/virasoro/gaiotto.hpp"
#include "vir/virasoro/norm.hpp"

namespace vir {

struct TuplePartition {
  std::vector<Partition> components;

  int total() const {
    int n = 0;
    for (const auto& y : components) n += y.size();
    return n;
  }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < components.size(); ++i) s += (i ? "," : "") + components[i].to_string();
    return s + ")";
  }
  /// Every component transposed.
  TuplePartition transposed() const {
    TuplePartition out;
    for (const auto& y : components) out.components.push_back(conjugate(y));
    return out;
  }
};

namespace detail {

inline void tuples_rec(int rank, int remaining, std::vector<Partition>& cur, std::vector<TuplePartition>& out) {
  if (static_cast<int>(cur.size()) == rank - 1) {
    for (const auto& y : enumerate(remaining)) {
      cur.push_back(y);
      out.push_back({cur});
      cur.pop_back();
    }
    return;
  }
  for (int k = remaining; k >= 0; --k)
    for (const auto& y : enumerate(k)) {
      cur.push_back(y);
      tuples_rec(rank, remaining - k, cur, out);
      cur.pop_back();
    }
}

}  // namespace detail

/// All r-tuples of partitions of total size n.
inline std::vector<TuplePartition> tuple_partitions(int rank, int n) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<TuplePartition> out;
  std::vector<Partition> cur;
  detail::tuples_rec(rank, n, cur, out);
  return out;
}

inline BigRat unit_like(const BigRat&) { return BigRat(1); }
inline LaurentPoly unit_like(const LaurentPoly&) { return LaurentPoly(1); }
inline MPoly unit_like(const MPoly& p) { return MPoly(p.nvars(), 1); }

inline BigRat reciprocal(const BigRat& w) { return BigRat(1) / w; }
inline LaurentFrac reciprocal(const LaurentPoly& w) { return LaurentFrac(LaurentPoly(1), w); }

/// (ε1, ε2, a_1..a_r) in some coefficient ring.
template <class R>
struct GaugePoint {
  R e1;
  R e2;
  std::vector<R> a;
};

/// The linear factors of n_{α,β}^Y (0-based component indices), box by box.
template <class R>
std::vector<R> pair_factor_terms(std::size_t alpha, std::size_t beta, const TuplePartition& y, const GaugePoint<R>& g) {
  const Partition& ya = y.components.at(alpha);
  const Partition& yb = y.components.at(beta);
  const R shift = g.a.at(beta) - g.a.at(alpha);
  std::vector<R> out;
  for (const auto& b : boxes(ya)) {
    const ArmLeg in_a = arm_leg(ya, b), in_b = arm_leg(yb, b);
    out.push_back(g.e1 * BigRat(-in_b.leg) + g.e2 * BigRat(in_a.arm + 1) + shift);
  }
  for (const auto& b : boxes(yb)) {
    const ArmLeg in_a = arm_leg(ya, b), in_b = arm_leg(yb, b);
    out.push_back(g.e1 * BigRat(in_a.leg + 1) - g.e2 * BigRat(in_b.arm) + shift);
  }
  return out;
}

/// n_{α,β}^Y.
template <class R>
R pair_factor(std::size_t alpha, std::size_t beta, const TuplePartition& y, const GaugePoint<R>& g) {
  R acc = unit_like(g.e1);
  for (const auto& f : pair_factor_terms(alpha, beta, y, g)) acc = acc * f;
  return acc;
}

/// ∏_{α,β} n_{α,β}^Y.
template <class R>
R tuple_weight(const TuplePartition& y, const GaugePoint<R>& g) {
  R acc = unit_like(g.e1);
  for (std::size_t i = 0; i < g.a.size(); ++i)
    for (std::size_t j = 0; j < g.a.size(); ++j) acc = acc * pair_factor(i, j, y, g);
  return acc;
}

/// Z_n = Σ_{|Y|=n} 1/∏ n_{α,β}^Y over a ring with a fraction type.
template <class R>
auto nekrasov_Zn(int n, const GaugePoint<R>& g) -> decltype(reciprocal(std::declval<R>())) {
  using F = decltype(reciprocal(std::declval<R>()));
  if (n < 0) throw std::invalid_argument("instanton number must be >= 0");
  F acc = reciprocal(unit_like(g.e1)) - reciprocal(unit_like(g.e1));
  for (const auto& y : tuple_partitions(static_cast<int>(g.a.size()), n)) {
    const R w = tuple_weight(y, g);
    if (is_zero(w)) throw std::domain_error("pole: n_{α,β} vanishes for Y = " + y.to_string());
    acc += reciprocal(w);
  }
  return acc;
}

/// Generic mode: variables e1, e2, a1..ar.
inline std::shared_ptr<const std::vector<std::string>> gauge_vars(int rank) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const std::vector<std::string>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[rank];
  if (!slot) {
    std::vector<std::string> v{"e1", "e2"};
    for (int i = 1; i <= rank; ++i) v.push_back("a" + std::to_string(i));
    slot = std::make_shared<const std::vector<std::string>>(std::move(v));
  }
  return slot;
}

inline GaugePoint<MPoly> generic_point(int rank) {
  const std::size_t nv = static_cast<std::size_t>(rank) + 2;
  GaugePoint<MPoly> g{MPoly::var(nv, 0), MPoly::var(nv, 1), {}};
  for (std::size_t i = 0; i < static_cast<std::size_t>(rank); ++i) g.a.push_back(MPoly::var(nv, i + 2));
  return g;
}

namespace detail {

/// Σ_Y 1/∏(linear factors) over the least common denominator; common factors are then
/// removed by trial division, which is complete because every denominator factor is linear.
inline RatFunc sum_of_reciprocals(const std::shared_ptr<const std::vector<std::string>>& vars,
                                  const std::vector<std::vector<MPoly>>& factor_lists) {
  const std::size_t nv = vars->size();
  std::vector<std::pair<BigRat, std::map<MPoly::TermMap, int>>> terms;
  std::map<MPoly::TermMap, int> lcm;
  std::map<MPoly::TermMap, MPoly> keys;
  for (const auto& list : factor_lists) {
    BigRat scale(1);
    std::map<MPoly::TermMap, int> mult;
    for (const auto& f : list) {
      if (f.is_zero()) throw std::domain_error("pole: vanishing linear factor");
      const BigRat lc = f.leading_coef();
      const MPoly key = f * (BigRat(1) / lc);
      scale *= lc;
      keys.try_emplace(key.terms(), key);
      ++mult[key.terms()];
    }
    for (const auto& [k, m] : mult) lcm[k] = std::max(lcm[k], m);
    terms.emplace_back(scale, std::move(mult));
  }
  MPoly num(nv);
  for (const auto& [scale, mult] : terms) {
    MPoly part(nv, BigRat(1) / scale);
    for (const auto& [k, m] : lcm) {
      auto it = mult.find(k);
      const int missing = m - (it == mult.end() ? 0 : it->second);
      for (int i = 0; i < missing; ++i) part = part * keys.at(k);
    }
    num += part;
  }
  MPoly den(nv, 1);
  for (auto& [k, m] : lcm) {
    const MPoly& key = keys.at(k);
    while (m > 0 && !num.is_zero()) {
      auto q = try_divide(num, key);
      if (!q) break;
      num = std::move(*q);
      --m;
    }
    for (int i = 0; i < m; ++i) den = den * key;
  }
  return RatFunc::from_reduced(vars, std::move(num), std::move(den));
}

template <class Point>
std::vector<MPoly> all_factors(const TuplePartition& y, const Point& g) {
  std::vector<MPoly> out;
  for (std::size_t i = 0; i < g.a.size(); ++i)
    for (std::size_t j = 0; j < g.a.size(); ++j)
      for (auto& f : pair_factor_terms(i, j, y, g)) out.push_back(std::move(f));
  return out;
}

}  // namespace detail

/// Z_n as a reduced rational function of (e1, e2, a1..ar).
inline RatFunc nekrasov_Zn_generic(int n, int rank) {
  const auto g = generic_point(rank);
  std::vector<std::vector<MPoly>> lists;
  for (const auto& y : tuple_partitions(rank, n)) lists.push_back(detail::all_factors(y, g));
  return detail::sum_of_reciprocals(gauge_vars(rank), lists);
}

/// Σ_Y 1/∏ n^{Y^T}(ε2, ε1, a): the ε-swapped, transposed sum, which must equal Z_n.
inline RatFunc nekrasov_Zn_swapped(int n, int rank) {
  auto g = generic_point(rank);
  std::swap(g.e1, g.e2);
  std::vector<std::vector<MPoly>> lists;
  for (const auto& y : tuple_partitions(rank, n)) lists.push_back(detail::all_factors(y.transposed(), g));
  return detail::sum_of_reciprocals(gauge_vars(rank), lists);
}

/// SU(2) with a1 = -a/2, a2 = a/2 over (e1, e2, a); sign = -1 gives the a -> -a image.
inline RatFunc nekrasov_Zn_su2(int n, int sign = 1) {
  static const auto vars = std::make_shared<const std::vector<std::string>>(std::vector<std::string>{"e1", "e2", "a"});
  const MPoly a = MPoly::var(3, 2) * BigRat(make_rat(sign, 2));
  GaugePoint<MPoly> g{MPoly::var(3, 0), MPoly::var(3, 1), {-a, a}};
  std::vector<std::vector<MPoly>> lists;
  for (const auto& y : tuple_partitions(2, n)) lists.push_back(detail::all_factors(y, g));
  return detail::sum_of_reciprocals(vars, lists);
}

/// Virasoro mode at rational points: ε2 = 1, ε1 = -t0, a1 = -a0/2, a2 = a0/2.
inline GaugePoint<BigRat> virasoro_point(const BigRat& t0, const BigRat& a0) {
  return {BigRat(-t0), BigRat(1), {BigRat(-a0 / 2), BigRat(a0 / 2)}};
}

/// Same with a symbolic: a is carried by the Laurent variable u.
inline GaugePoint<LaurentPoly> virasoro_point_symbolic(const BigRat& t0) {
  return {LaurentPoly(BigRat(-t0)), LaurentPoly(1),
          {LaurentPoly::monomial(make_rat(-1, 2), 1), LaurentPoly::monomial(make_rat(1, 2), 1)}};
}

/// h = ((ε1+ε2)² - (a2-a1)²) / (4 ε1 ε2).
inline BigRat dictionary_h(const BigRat& e1, const BigRat& e2, const BigRat& a_diff) {
  return ((e1 + e2) * (e1 + e2) - a_diff * a_diff) / (4 * e1 * e2);
}
inline BigRat dictionary_h(const BigRat& t0, const BigRat& a0) { return dictionary_h(BigRat(-t0), BigRat(1), a0); }
/// a² as a function of h in Virasoro mode.
inline BigRat dictionary_a_squared(const BigRat& t0, const BigRat& h0) { return (1 - t0) * (1 - t0) + 4 * t0 * h0; }

/// c = 13 + 6(ε1/ε2 + ε2/ε1).
inline BigRat dictionary_c(const BigRat& e1, const BigRat& e2) { return 13 + 6 * (e1 / e2 + e2 / e1); }

/// (ε1 ε2)^{E n} Z_n at a rational Virasoro point.
inline BigRat gauge_side_at(int n, int exponent, const BigRat& t0, const BigRat& a0) {
  const auto g = virasoro_point(t0, a0);
  return pow(g.e1 * g.e2, exponent * n) * nekrasov_Zn(n, g);
}

/// z_n = (ε1 ε2)^{E n} Z_n as a function of a at fixed t0 (a ↔ u); even in a.
inline const LaurentFrac& gauge_z_symbolic(int n, int exponent, const BigRat& t0) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, std::string>, std::unique_ptr<LaurentFrac>> cache;
  const auto key = std::make_tuple(n, exponent, t0.get_str());
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto z = std::make_unique<LaurentFrac>(nekrasov_Zn(n, virasoro_point_symbolic(t0)) * pow(BigRat(-t0), exponent * n));
  if (!z->num().is_even() || !z->den().is_even()) throw std::logic_error("Z_n is not even in a");
  std::lock_guard lock(mu);
  return *cache.try_emplace(key, std::move(z)).first->second;
}

/// z_n(t0, h0): the even function of a evaluated at a² = (1-t0)² + 4 t0 h0.
inline BigRat gauge_z_at(int n, int exponent, const BigRat& t0, const BigRat& h0) {
  if (n == 0) return BigRat(1);
  return gauge_z_symbolic(n, exponent, t0).eval_t(dictionary_a_squared(t0, h0));
}

/// Right side of the gauge recursion with R_{r,s} from the closed product.
inline BigRat gauge_recursion_rhs(int n, int exponent, const BigRat& t0, const BigRat& h0) {
  BigRat acc(n == 0 ? 1 : 0);
  for (auto [r, s] : pairs_up_to(n)) {
    const BigRat hrs = h_rs(r, s).eval_t(t0);
    const BigRat rr = rrs_formula(r, s).eval_t(t0);
    if (is_zero(rr)) throw std::domain_error("R_{r,s}(t0) vanishes");
    if (h0 == hrs) throw std::domain_error("h0 sits on h_{r,s}(t0)");
    acc += gauge_z_at(n - r * s, exponent, t0, hrs + r * s) / (rr * (h0 - hrs));
  }
  return acc;
}

// ---- sample panels ----

struct SamplePoint {
  BigRat t0;
  BigRat a0;  // empty meaning when drawn in (t, h)
  BigRat h0;
};

namespace detail {

/// p/q with 1 <= p, q <= 9 from raw engine output (portable across standard libraries).
inline BigRat small_rational(std::mt19937_64& eng) { return make_rat(static_cast<long>(eng() % 9 + 1), static_cast<long>(eng() % 9 + 1)); }

/// Rejects points where either side has a pole or where the recursions hit a degenerate weight.
inline std::optional<std::string> panel_reject(const BigRat& t0, const BigRat& h0, int n_max) {
  if (t0 == 1) return "t0 = 1";
  for (auto [r, s] : pairs_up_to(n_max)) {
    const BigRat hrs = h_rs(r, s).eval_t(t0);
    if (is_zero(rrs_formula(r, s).eval_t(t0))) return "R_{r,s}(t0) = 0";
    if (h0 == hrs) return "h0 = h_{r,s}(t0)";
    for (auto [r2, s2] : pairs_up_to(n_max - r * s))
      if (hrs + r * s == h_rs(r2, s2).eval_t(t0)) return "shifted weight is degenerate";
  }
  return std::nullopt;
}

}  // namespace detail

/// Points (t0, a0) with h0 from the dictionary, for the AGT comparison.
inline std::vector<SamplePoint> agt_panel(std::uint64_t seed, int count, int n_max) {
  std::mt19937_64 eng(seed);
  std::vector<SamplePoint> out;
  while (static_cast<int>(out.size()) < count) {
    const BigRat t0 = detail::small_rational(eng), a0 = detail::small_rational(eng);
    const BigRat h0 = dictionary_h(t0, a0);
    if (detail::panel_reject(t0, h0, n_max)) continue;
    bool ok = true;
    try {
      for (int n = 1; n <= n_max; ++n) (void)nekrasov_Zn(n, virasoro_point(t0, a0));
    } catch (const std::domain_error&) {
      ok = false;
    }
    if (ok) out.push_back({t0, a0, h0});
  }
  return out;
}

/// Points (t0, h0) for the recursions.
inline std::vector<SamplePoint> recursion_panel(std::uint64_t seed, int count, int n_max) {
  std::mt19937_64 eng(seed);
  std::vector<SamplePoint> out;
  while (static_cast<int>(out.size()) < count) {
    const BigRat t0 = detail::small_rational(eng), h0 = detail::small_rational(eng);
    if (detail::panel_reject(t0, h0, n_max)) continue;
    out.push_back({t0, BigRat(0), h0});
  }
  return out;
}

// ---- checks ----

struct Calibration {
  std::optional<int> exponent;
  std::string detail;
};

/// Picks E ∈ {2, 4} with f_1 = (ε1ε2)^E Z_1 at every point.
inline Calibration calibrate_exponent(const std::vector<SamplePoint>& points) {
  Calibration out;
  for (int e : {2, 4}) {
    bool all = !points.empty();
    for (const auto& p : points) {
      auto f = gaiotto_coeff_at(1, p.t0, p.h0);
      if (!f || *f != gauge_side_at(1, e, p.t0, p.a0)) {
        all = false;
        break;
      }
    }
    if (all) {
      out.exponent = e;
      out.detail = "E = " + std::to_string(e);
      return out;
    }
  }
  out.detail = "neither E = 2 nor E = 4 matches at n = 1";
  return out;
}

struct PointRecord {
  int n;
  SamplePoint point;
  BigRat lhs;
  BigRat rhs;
  bool pass;
  bool skipped;
  std::string note;
};

struct AgtResult {
  int exponent = 0;
  std::vector<PointRecord> records;
  bool pass = false;
  std::string detail;
};

inline AgtResult agt_check(int n_max, const std::vector<SamplePoint>& points) {
  AgtResult out;
  const auto cal = calibrate_exponent(points);
  if (!cal.exponent) throw std::runtime_error("exponent calibration failed: " + cal.detail);
  out.exponent = *cal.exponent;
  out.pass = true;
  for (int n = 0; n <= n_max; ++n)
    for (const auto& p : points) {
      PointRecord rec{n, p, BigRat(0), BigRat(0), false, false, {}};
      try {
        auto f = gaiotto_coeff_at(n, p.t0, p.h0);
        if (!f) throw std::domain_error("K_n singular");
        rec.lhs = *f;
        rec.rhs = gauge_side_at(n, out.exponent, p.t0, p.a0);
        rec.pass = rec.lhs == rec.rhs;
      } catch (const std::domain_error& e) {
        rec.skipped = true;
        rec.note = e.what();
      }
      if (!rec.skipped && !rec.pass) out.pass = false;
      out.records.push_back(std::move(rec));
    }
  out.detail = cal.detail;
  return out;
}

struct RecursionResult {
  std::vector<PointRecord> gauge;     // z_n vs its recursion
  std::vector<PointRecord> virasoro;  // f_n vs its recursion
  std::vector<PointRecord> cross;     // z_n vs f_n
  bool pass = false;
};

inline RecursionResult recursion_check(int n_max, int exponent, const std::vector<SamplePoint>& points) {
  RecursionResult out;
  out.pass = true;
  auto run = [&](std::vector<PointRecord>& sink, int n, const SamplePoint& p, auto lhs_fn, auto rhs_fn) {
    PointRecord rec{n, p, BigRat(0), BigRat(0), false, false, {}};
    try {
      rec.lhs = lhs_fn();
      rec.rhs = rhs_fn();
      rec.pass = rec.lhs == rec.rhs;
    } catch (const std::domain_error& e) {
      rec.skipped = true;
      rec.note = e.what();
    }
    if (!rec.skipped && !rec.pass) out.pass = false;
    sink.push_back(std::move(rec));
  };
  for (int n = 0; n <= n_max; ++n)
    for (const auto& p : points) {
      auto f = [&] {
        auto v = gaiotto_coeff_at(n, p.t0, p.h0);
        if (!v) throw std::domain_error("K_n singular");
        return *v;
      };
      auto z = [&] { return gauge_z_at(n, exponent, p.t0, p.h0); };
      run(out.gauge, n, p, z, [&] { return gauge_recursion_rhs(n, exponent, p.t0, p.h0); });
      run(out.virasoro, n, p, f, [&] { return virasoro_recursion_rhs(n, p.t0, p.h0); });
      run(out.cross, n, p, z, f);
    }
  return out;
}

}  // namespace vir
