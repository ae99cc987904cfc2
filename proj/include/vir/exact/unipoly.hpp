#pragma once

// Dense univariate polynomials over a coefficient ring C.
//
// C needs: value-initialization to zero, explicit construction from long,
// + - *, ==, and free functions is_zero(C) and divexact(C, C).
// HPoly = UniPoly<LaurentPoly> is the h-polynomial ring over Q[t^{1/2}, t^{-1/2}].

#include <concepts>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vir/exact/laurent.hpp"

namespace vir {

template <class C>
class UniPoly;
template <class C>
bool is_zero(const UniPoly<C>& p);

template <class C>
class UniPoly {
 public:
  using coeff_type = C;

  UniPoly() = default;
  explicit UniPoly(long c) : UniPoly(C(c)) {}
  explicit UniPoly(C c) {
    if (!vir::is_zero(c)) c_.push_back(std::move(c));
  }
  explicit UniPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// The indeterminate itself.
  static UniPoly x() { return monomial(C(1), 1); }
  static UniPoly monomial(C c, int k) {
    UniPoly p;
    if (vir::is_zero(c)) return p;
    p.c_.resize(static_cast<std::size_t>(k) + 1);
    p.c_[static_cast<std::size_t>(k)] = std::move(c);
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(int k) const {
    if (k < 0 || k > degree()) return C();
    return c_[static_cast<std::size_t>(k)];
  }
  const C& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero");
    return c_.back();
  }

  UniPoly operator-() const {
    UniPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }
  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  UniPoly& operator*=(const C& s) {
    if (vir::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }
  UniPoly& operator*=(const BigRat& s)
    requires(!std::same_as<C, BigRat>)
  {
    if (vir::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<C> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (vir::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (vir::is_zero(b.c_[j])) continue;
        r[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(UniPoly a, const C& s) { return a *= s; }
  friend UniPoly operator*(const C& s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(UniPoly a, const BigRat& s)
    requires(!std::same_as<C, BigRat>)
  {
    return a *= s;
  }
  friend UniPoly operator*(const BigRat& s, UniPoly a)
    requires(!std::same_as<C, BigRat>)
  {
    return a *= s;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Horner evaluation at a point of any ring V that C embeds into via `embed`.
  template <class V, class Embed>
  V eval(const V& x0, Embed embed) const {
    V acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + embed(*it);
    return acc;
  }
  C eval(const C& x0) const {
    C acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
  }

  /// q(d) = p(center + d), by Horner substitution.
  UniPoly shift(const C& center) const {
    UniPoly acc;
    const UniPoly lin = UniPoly::x() + UniPoly(center);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UniPoly(*it);
    return acc;
  }

  /// Applies f to every coefficient.
  template <class F>
  auto map(F f) const -> UniPoly<decltype(f(std::declval<const C&>()))> {
    using D = decltype(f(std::declval<const C&>()));
    std::vector<D> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(f(x));
    return UniPoly<D>(std::move(out));
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<C> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * C(static_cast<long>(i));
    return UniPoly(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && vir::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;  // ascending degree, no trailing zeros
};

template <class C>
bool is_zero(const UniPoly<C>& p) {
  return p.is_zero();
}

/// Exact quotient a/b in C[x]; C must be an integral domain with exact divexact.
template <class C>
std::optional<UniPoly<C>> try_divide(const UniPoly<C>& a, const UniPoly<C>& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return UniPoly<C>();
  const int db = b.degree();
  if (a.degree() < db) return std::nullopt;
  std::vector<C> rem = a.coeffs();
  std::vector<C> q(static_cast<std::size_t>(a.degree() - db + 1));
  const auto& bc = b.coeffs();
  for (int k = a.degree(); k >= db; --k) {
    C& top = rem[static_cast<std::size_t>(k)];
    if (is_zero(top)) continue;
    C f;
    try {
      f = divexact(top, bc.back());
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * bc[static_cast<std::size_t>(j)];
    if (!is_zero(top)) return std::nullopt;
    q[static_cast<std::size_t>(k - db)] = std::move(f);
  }
  for (const auto& x : rem)
    if (!is_zero(x)) return std::nullopt;
  return UniPoly<C>(std::move(q));
}

template <class C>
UniPoly<C> divexact(const UniPoly<C>& a, const UniPoly<C>& b) {
  auto q = try_divide(a, b);
  if (!q) throw std::domain_error("inexact polynomial division");
  return *q;
}

template <class C>
UniPoly<C> pow(const UniPoly<C>& p, int k) {
  UniPoly<C> r(1L);
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

using HPoly = UniPoly<LaurentPoly>;
using QPoly = UniPoly<BigRat>;

}  // namespace vir
