#pragma once

// Sparse Laurent polynomials in u = t^{1/2} over the rationals.
//
// All t-dependence of the Virasoro and bosonization coefficients lives here.
// A value "is in t" iff every stored u-exponent is even; t^k is u^{2k}.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vir/exact/bigrat.hpp"

namespace vir {

class LaurentPoly {
 public:
  struct Term {
    int exp;  // power of u
    BigRat coef;
  };

  LaurentPoly() = default;
  explicit LaurentPoly(long c) : LaurentPoly(BigRat(c)) {}
  explicit LaurentPoly(const BigRat& c) {
    if (!vir::is_zero(c)) terms_.push_back({0, c});
  }

  static LaurentPoly monomial(const BigRat& c, int u_exp) {
    LaurentPoly p;
    if (!vir::is_zero(c)) p.terms_.push_back({u_exp, c});
    return p;
  }
  static LaurentPoly u_pow(int k) { return monomial(BigRat(1), k); }
  static LaurentPoly t_pow(int k) { return monomial(BigRat(1), 2 * k); }
  static LaurentPoly u() { return u_pow(1); }
  static LaurentPoly t() { return t_pow(1); }

  /// Builds from arbitrary (unsorted, possibly repeated, possibly zero) terms.
  static LaurentPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    LaurentPoly p;
    for (auto& term : terms) {
      if (!p.terms_.empty() && p.terms_.back().exp == term.exp) {
        p.terms_.back().coef += term.coef;
        if (vir::is_zero(p.terms_.back().coef)) p.terms_.pop_back();
      } else if (!vir::is_zero(term.coef)) {
        p.terms_.push_back(std::move(term));
      }
    }
    return p;
  }

  /// Dense coefficients c[0..] of u^{low}, u^{low+1}, ...
  static LaurentPoly from_dense(const std::vector<BigRat>& c, int low) {
    LaurentPoly p;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!vir::is_zero(c[i])) p.terms_.push_back({low + static_cast<int>(i), c[i]});
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  BigRat coeff_u(int e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& a, int x) { return a.exp < x; });
    if (it != terms_.end() && it->exp == e) return it->coef;
    return BigRat(0);
  }
  BigRat coeff_t(int k) const { return coeff_u(2 * k); }
  BigRat constant_term() const { return coeff_u(0); }

  int max_exp() const {
    if (is_zero()) throw std::domain_error("degree of zero undefined");
    return terms_.back().exp;
  }
  int min_exp() const {
    if (is_zero()) throw std::domain_error("degree of zero undefined");
    return terms_.front().exp;
  }
  const BigRat& leading_coef() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero");
    return terms_.back().coef;
  }
  const BigRat& trailing_coef() const {
    if (is_zero()) throw std::domain_error("trailing coefficient of zero");
    return terms_.front().coef;
  }

  /// True iff every u-exponent is even, i.e. the value is a Laurent polynomial in t.
  bool is_even() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& x) { return x.exp % 2 == 0; });
  }
  bool is_odd() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& x) { return x.exp % 2 != 0; });
  }

  LaurentPoly operator-() const {
    LaurentPoly r(*this);
    for (auto& x : r.terms_) x.coef = -x.coef;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = combine(*this, o, false); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = combine(*this, o, true); }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = multiply(*this, o); }
  LaurentPoly& operator*=(const BigRat& s) {
    if (vir::is_zero(s)) {
      terms_.clear();
    } else {
      for (auto& x : terms_) x.coef *= s;
    }
    return *this;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, false); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, true); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return multiply(a, b); }
  friend LaurentPoly operator*(LaurentPoly a, const BigRat& s) { return a *= s; }
  friend LaurentPoly operator*(const BigRat& s, LaurentPoly a) { return a *= s; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Multiplies by u^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r(*this);
    for (auto& x : r.terms_) x.exp += k;
    return r;
  }

  /// u -> 1/u   (equivalently t -> 1/t).
  LaurentPoly inverted() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.push_back({-it->exp, it->coef});
    return r;
  }

  /// u -> -u.
  LaurentPoly u_negated() const {
    LaurentPoly r(*this);
    for (auto& x : r.terms_)
      if (x.exp % 2 != 0) x.coef = -x.coef;
    return r;
  }

  /// t -> -t on a Laurent polynomial in t.
  LaurentPoly t_negated() const {
    if (!is_even()) throw std::domain_error("t -> -t needs a Laurent polynomial in t");
    LaurentPoly r(*this);
    for (auto& x : r.terms_)
      if ((x.exp / 2) % 2 != 0) x.coef = -x.coef;
    return r;
  }

  BigRat eval_u(const BigRat& u0) const {
    BigRat acc(0);
    for (const auto& x : terms_) acc += x.coef * vir::pow(u0, x.exp);
    return acc;
  }

  BigRat eval_t(const BigRat& t0) const {
    if (!is_even()) throw std::domain_error("half-integer power of t in evaluation");
    BigRat acc(0);
    for (const auto& x : terms_) acc += x.coef * vir::pow(t0, x.exp / 2);
    return acc;
  }

  /// Dense coefficient vector starting at min_exp().
  std::vector<BigRat> dense() const {
    if (is_zero()) return {};
    std::vector<BigRat> c(static_cast<std::size_t>(max_exp() - min_exp() + 1));
    for (const auto& x : terms_) c[static_cast<std::size_t>(x.exp - min_exp())] = x.coef;
    return c;
  }

 private:
  static LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    LaurentPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exp < b.terms_[j].exp)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].exp < a.terms_[i].exp) {
        r.terms_.push_back({b.terms_[j].exp, subtract ? BigRat(-b.terms_[j].coef) : b.terms_[j].coef});
        ++j;
      } else {
        BigRat c = subtract ? BigRat(a.terms_[i].coef - b.terms_[j].coef) : BigRat(a.terms_[i].coef + b.terms_[j].coef);
        if (!vir::is_zero(c)) r.terms_.push_back({a.terms_[i].exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  static LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
      const LaurentPoly& m = a.terms_.size() == 1 ? a : b;
      const LaurentPoly& o = a.terms_.size() == 1 ? b : a;
      LaurentPoly r;
      r.terms_.reserve(o.terms_.size());
      for (const auto& x : o.terms_) r.terms_.push_back({x.exp + m.terms_[0].exp, x.coef * m.terms_[0].coef});
      return r;
    }
    const int low = a.min_exp() + b.min_exp();
    const int high = a.max_exp() + b.max_exp();
    const auto span = static_cast<std::size_t>(high - low + 1);
    if (span <= 8 * (a.terms_.size() * b.terms_.size() + 16)) {
      std::vector<BigRat> acc(span);
      mpq_t tmp;
      mpq_init(tmp);
      for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
          mpq_mul(tmp, x.coef.get_mpq_t(), y.coef.get_mpq_t());
          BigRat& slot = acc[static_cast<std::size_t>(x.exp + y.exp - low)];
          mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), tmp);
        }
      mpq_clear(tmp);
      return from_dense(acc, low);
    }
    std::vector<Term> all;
    all.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) all.push_back({x.exp + y.exp, x.coef * y.coef});
    return from_terms(std::move(all));
  }

  std::vector<Term> terms_;  // ascending exponent, nonzero coefficients
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

inline LaurentPoly pow(const LaurentPoly& p, int k) {
  if (k < 0) {
    if (!p.is_monomial()) throw std::domain_error("negative power of a non-unit Laurent polynomial");
    return pow(LaurentPoly::monomial(BigRat(1) / p.terms()[0].coef, -p.terms()[0].exp), -k);
  }
  LaurentPoly result(1), base(p);
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

/// Degrees in units of t when the polynomial is in t, in units of u otherwise.
struct DegreeRange {
  int max_deg;
  int min_deg;
  bool in_t;
};

inline DegreeRange maxmin_deg(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("degree of zero undefined");
  if (p.is_even()) return {p.max_exp() / 2, p.min_exp() / 2, true};
  return {p.max_exp(), p.min_exp(), false};
}

namespace detail {

inline void trim(std::vector<BigRat>& c) {
  while (!c.empty() && is_zero(c.back())) c.pop_back();
}

/// Dense polynomial long division (ascending coefficient vectors). Returns quotient; remainder in `rem`.
inline std::vector<BigRat> dense_divmod(std::vector<BigRat> num, const std::vector<BigRat>& den,
                                        std::vector<BigRat>& rem) {
  trim(num);
  if (den.empty()) throw std::domain_error("division by zero polynomial");
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) {
    rem = std::move(num);
    return {};
  }
  std::vector<BigRat> q(num.size() - dd);
  const BigRat inv_lead = BigRat(1) / den.back();
  mpq_t tmp;
  mpq_init(tmp);
  for (std::size_t k = num.size(); k-- > dd;) {
    if (is_zero(num[k])) continue;
    BigRat f = num[k] * inv_lead;
    for (std::size_t j = 0; j <= dd; ++j) {
      mpq_mul(tmp, f.get_mpq_t(), den[j].get_mpq_t());
      mpq_sub(num[k - dd + j].get_mpq_t(), num[k - dd + j].get_mpq_t(), tmp);
    }
    q[k - dd] = std::move(f);
  }
  mpq_clear(tmp);
  num.resize(dd);
  trim(num);
  rem = std::move(num);
  return q;
}

inline std::vector<BigRat> dense_gcd(std::vector<BigRat> a, std::vector<BigRat> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    std::vector<BigRat> r;
    dense_divmod(std::move(a), b, r);
    a = std::move(b);
    b = std::move(r);
    if (!b.empty()) {
      BigRat inv = BigRat(1) / b.back();
      for (auto& x : b) x *= inv;
    }
  }
  if (!a.empty()) {
    BigRat inv = BigRat(1) / a.back();
    for (auto& x : a) x *= inv;
  }
  return a;
}

}  // namespace detail

/// Exact quotient a/b in the Laurent ring, or nullopt when b does not divide a.
inline std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) return LaurentPoly();
  if (b.is_monomial()) {
    LaurentPoly q = a.shifted(-b.min_exp());
    q *= BigRat(1) / b.leading_coef();
    return q;
  }
  std::vector<BigRat> rem;
  auto q = detail::dense_divmod(a.dense(), b.dense(), rem);
  if (!rem.empty()) return std::nullopt;
  return LaurentPoly::from_dense(q, a.min_exp() - b.min_exp());
}

inline LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw std::domain_error("inexact Laurent polynomial division");
  return *q;
}

/// Unit-normalized gcd: lowest exponent 0 and leading coefficient 1; gcd(0,0) = 0.
inline LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero() || b.is_zero()) {
    const LaurentPoly& x = a.is_zero() ? b : a;
    LaurentPoly r = x.shifted(-x.min_exp());
    r *= BigRat(1) / r.leading_coef();
    return r;
  }
  if (a.is_monomial() || b.is_monomial()) return LaurentPoly(1);
  return LaurentPoly::from_dense(detail::dense_gcd(a.dense(), b.dense()), 0);
}

/// Splits p = unit * normal, where unit = c u^k and normal has lowest exponent 0 and leading coefficient 1.
inline std::pair<LaurentPoly, LaurentPoly> unit_normal(const LaurentPoly& p) {
  if (p.is_zero()) return {LaurentPoly(1), LaurentPoly()};
  LaurentPoly unit = LaurentPoly::monomial(p.leading_coef(), p.min_exp());
  LaurentPoly normal = p.shifted(-p.min_exp());
  normal *= BigRat(1) / p.leading_coef();
  return {unit, normal};
}

}  // namespace vir
