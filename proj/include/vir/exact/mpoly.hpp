#pragma once

// Sparse multivariate polynomials over Q with a fixed number of variables,
// lexicographic monomial order (variable 0 most significant), and a recursive
// primitive-PRS gcd.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vir/exact/bigrat.hpp"

namespace vir {

class MPoly {
 public:
  using Monomial = std::vector<int>;
  using TermMap = std::map<Monomial, BigRat>;  // ascending lex; leading term is the last entry

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  MPoly(std::size_t nvars, const BigRat& c) : nvars_(nvars) {
    if (!vir::is_zero(c)) terms_.emplace(Monomial(nvars, 0), c);
  }
  MPoly(std::size_t nvars, long c) : MPoly(nvars, BigRat(c)) {}

  static MPoly var(std::size_t nvars, std::size_t i, int power = 1) {
    MPoly p(nvars);
    Monomial m(nvars, 0);
    m[i] = power;
    p.terms_.emplace(std::move(m), BigRat(1));
    return p;
  }
  static MPoly term(Monomial m, const BigRat& c) {
    MPoly p(m.size());
    if (!vir::is_zero(c)) p.terms_.emplace(std::move(m), c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && is_const_monomial(terms_.begin()->first));
  }
  BigRat constant_value() const {
    if (terms_.empty()) return BigRat(0);
    auto it = terms_.find(Monomial(nvars_, 0));
    return it == terms_.end() ? BigRat(0) : it->second;
  }
  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero");
    return terms_.rbegin()->first;
  }
  const BigRat& leading_coef() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero");
    return terms_.rbegin()->second;
  }
  int degree_in(std::size_t v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      int s = 0;
      for (int e : m) s += e;
      d = std::max(d, s);
    }
    return d;
  }
  bool depends_on(std::size_t v) const { return degree_in(v) > 0; }

  MPoly operator-() const {
    MPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  MPoly& operator+=(const MPoly& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MPoly& operator*=(const BigRat& s) {
    if (vir::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const BigRat& s) { return a *= s; }
  friend MPoly operator*(const BigRat& s, MPoly a) { return a *= s; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(std::max(a.nvars_, b.nvars_));
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(ma);
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  BigRat eval(const std::vector<BigRat>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong arity");
    BigRat acc(0);
    for (const auto& [m, c] : terms_) {
      BigRat t = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) t *= vir::pow(point[i], m[i]);
      acc += t;
    }
    return acc;
  }

  /// Substitutes constants for the variables that have a value in `point`; other variables remain.
  MPoly partial_eval(const std::vector<std::optional<BigRat>>& point) const {
    MPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
      Monomial mm(m);
      BigRat t = c;
      for (std::size_t i = 0; i < mm.size(); ++i)
        if (point[i]) {
          if (mm[i]) t *= vir::pow(*point[i], mm[i]);
          mm[i] = 0;
        }
      r.add_term(mm, t);
    }
    return r;
  }

  /// Coefficients with respect to variable v: degree -> polynomial free of v.
  std::map<int, MPoly> coefficients_in(std::size_t v) const {
    std::map<int, MPoly> out;
    for (const auto& [m, c] : terms_) {
      Monomial mm(m);
      int d = mm[v];
      mm[v] = 0;
      auto [it, inserted] = out.try_emplace(d, MPoly(nvars_));
      it->second.add_term(mm, c);
    }
    return out;
  }

  /// Multiplies by x_v^k.
  MPoly shifted(std::size_t v, int k) const {
    MPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
      Monomial mm(m);
      mm[v] += k;
      r.terms_.emplace(std::move(mm), c);
    }
    return r;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      bool neg = sgn(c) < 0;
      BigRat a = neg ? BigRat(-c) : c;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      bool isconst = is_const_monomial(m);
      if (isconst || a != 1) {
        os << a.get_str();
        if (!isconst) os << "*";
      }
      bool firstvar = true;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!firstvar) os << "*";
        firstvar = false;
        os << names.at(i);
        if (m[i] != 1) os << "^" << m[i];
      }
    }
    return os.str();
  }

 private:
  static bool is_const_monomial(const Monomial& m) {
    return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
  }
  void adopt(const MPoly& o) {
    if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
    if (!o.terms_.empty() && o.nvars_ != nvars_) throw std::invalid_argument("mismatched variable count");
  }
  void add_term(const Monomial& m, const BigRat& c) {
    if (vir::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (vir::is_zero(it->second)) terms_.erase(it);
    }
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

/// Exact quotient a/b, or nullopt when b does not divide a.
inline std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  MPoly q(a.nvars());
  MPoly r(a);
  const auto& lb = b.leading_monomial();
  const BigRat inv = BigRat(1) / b.leading_coef();
  while (!r.is_zero()) {
    const auto& lr = r.leading_monomial();
    MPoly::Monomial m(lr);
    for (std::size_t i = 0; i < m.size(); ++i) {
      m[i] -= lb[i];
      if (m[i] < 0) return std::nullopt;
    }
    MPoly t = MPoly::term(std::move(m), r.leading_coef() * inv);
    q += t;
    r -= t * b;
  }
  return q;
}

inline MPoly divexact(const MPoly& a, const MPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw std::domain_error("inexact multivariate division");
  return *q;
}

namespace detail {

inline std::optional<std::size_t> main_variable(const MPoly& a, const MPoly& b) {
  for (std::size_t v = 0; v < std::max(a.nvars(), b.nvars()); ++v)
    if ((v < a.nvars() && a.depends_on(v)) || (v < b.nvars() && b.depends_on(v))) return v;
  return std::nullopt;
}

inline MPoly monic(const MPoly& p) {
  if (p.is_zero()) return p;
  return p * (BigRat(1) / p.leading_coef());
}

}  // namespace detail

inline MPoly gcd(const MPoly& a, const MPoly& b);

namespace detail {

/// gcd of all coefficients of p viewed as a polynomial in v.
inline MPoly content_in(const MPoly& p, std::size_t v) {
  MPoly g(p.nvars());
  for (const auto& [d, c] : p.coefficients_in(v)) {
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

/// Pseudo-remainder of a by b in variable v.
inline MPoly prem(MPoly a, const MPoly& b, std::size_t v) {
  const int db = b.degree_in(v);
  auto bc = b.coefficients_in(v);
  const MPoly lb = bc.rbegin()->second;
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const int da = a.degree_in(v);
    MPoly la = a.coefficients_in(v).rbegin()->second;
    a = lb * a - (la * b).shifted(v, da - db);
  }
  return a;
}

}  // namespace detail

/// Monic (leading coefficient 1 in lex order) gcd; gcd(0,0) = 0.
inline MPoly gcd(const MPoly& a, const MPoly& b) {
  const std::size_t n = std::max(a.nvars(), b.nvars());
  if (a.is_zero()) return detail::monic(b);
  if (b.is_zero()) return detail::monic(a);
  auto mv = detail::main_variable(a, b);
  if (!mv) return MPoly(n, 1);
  const std::size_t v = *mv;
  if (!a.depends_on(v) || !b.depends_on(v)) {
    // One side is free of v: the gcd is free of v and divides every v-coefficient of the other.
    const MPoly& free = a.depends_on(v) ? b : a;
    const MPoly& dep = a.depends_on(v) ? a : b;
    return gcd(free, detail::content_in(dep, v));
  }
  MPoly ca = detail::content_in(a, v);
  MPoly cb = detail::content_in(b, v);
  MPoly g = gcd(ca, cb);
  MPoly pa = divexact(a, ca);
  MPoly pb = divexact(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (true) {
    MPoly r = detail::prem(pa, pb, v);
    if (r.is_zero()) break;
    if (!r.depends_on(v)) {
      pb = MPoly(n, 1);
      break;
    }
    pa = std::move(pb);
    pb = divexact(r, detail::content_in(r, v));
  }
  return detail::monic(g * pb);
}

}  // namespace vir
