#pragma once

// The fraction field of the Laurent ring (equivalently Q(u)), kept reduced.
//
// Canonical form: the denominator is a polynomial in u with nonzero constant
// term and leading coefficient 1, coprime to the numerator. Every unit c u^k
// is carried by the numerator, so equal values have equal representations.

#include <stdexcept>
#include <utility>

#include "vir/exact/laurent.hpp"

namespace vir {

class LaurentFrac {
 public:
  LaurentFrac() : den_(1) {}
  explicit LaurentFrac(long c) : num_(c), den_(1) {}
  explicit LaurentFrac(const BigRat& c) : num_(c), den_(1) {}
  explicit LaurentFrac(LaurentPoly p) : num_(std::move(p)), den_(1) {}
  LaurentFrac(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True iff the value lies in the Laurent ring itself.
  bool is_laurent() const { return den_ == LaurentPoly(1); }
  LaurentPoly to_laurent() const {
    if (!is_laurent()) throw std::domain_error("fraction is not a Laurent polynomial");
    return num_;
  }

  LaurentFrac operator-() const {
    LaurentFrac r(*this);
    r.num_ = -r.num_;
    return r;
  }
  LaurentFrac& operator+=(const LaurentFrac& o) { return *this = *this + o; }
  LaurentFrac& operator-=(const LaurentFrac& o) { return *this = *this - o; }
  LaurentFrac& operator*=(const LaurentFrac& o) { return *this = *this * o; }
  LaurentFrac& operator/=(const LaurentFrac& o) { return *this = *this / o; }
  LaurentFrac& operator*=(const BigRat& s) {
    num_ *= s;
    return *this;
  }

  friend LaurentFrac operator+(const LaurentFrac& a, const LaurentFrac& b) {
    if (a.den_ == b.den_) return LaurentFrac(a.num_ + b.num_, a.den_);
    return LaurentFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend LaurentFrac operator-(const LaurentFrac& a, const LaurentFrac& b) {
    if (a.den_ == b.den_) return LaurentFrac(a.num_ - b.num_, a.den_);
    return LaurentFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend LaurentFrac operator*(const LaurentFrac& a, const LaurentFrac& b) {
    if (a.is_laurent() && b.is_laurent()) return LaurentFrac(a.num_ * b.num_);
    // Cross-cancel first to keep the operands small.
    LaurentPoly g1 = gcd(a.num_, b.den_);
    LaurentPoly g2 = gcd(b.num_, a.den_);
    LaurentFrac r;
    r.num_ = divexact(a.num_, g1) * divexact(b.num_, g2);
    r.den_ = divexact(a.den_, g2) * divexact(b.den_, g1);
    r.normalize_den();
    return r;
  }
  friend LaurentFrac operator/(const LaurentFrac& a, const LaurentFrac& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return a * b.inverse();
  }
  friend LaurentFrac operator*(LaurentFrac a, const BigRat& s) { return a *= s; }
  friend LaurentFrac operator*(const BigRat& s, LaurentFrac a) { return a *= s; }

  friend bool operator==(const LaurentFrac& a, const LaurentFrac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const LaurentFrac& a, const LaurentFrac& b) { return !(a == b); }

  LaurentFrac inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    LaurentFrac r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize_den();
    return r;
  }

  BigRat eval_u(const BigRat& u0) const {
    BigRat d = den_.eval_u(u0);
    if (vir::is_zero(d)) throw std::domain_error("pole at evaluation point");
    return num_.eval_u(u0) / d;
  }
  BigRat eval_t(const BigRat& t0) const {
    BigRat d = den_.eval_t(t0);
    if (vir::is_zero(d)) throw std::domain_error("pole at evaluation point");
    return num_.eval_t(t0) / d;
  }

 private:
  void reduce() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    if (!den_.is_monomial()) {
      LaurentPoly g = gcd(num_, den_);
      if (g != LaurentPoly(1)) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
      }
    }
    normalize_den();
  }

  void normalize_den() {
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    auto [unit, normal] = unit_normal(den_);
    if (!(unit == LaurentPoly(1))) num_ = divexact(num_, unit);
    den_ = std::move(normal);
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

inline bool is_zero(const LaurentFrac& x) { return x.is_zero(); }
inline LaurentFrac divexact(const LaurentFrac& a, const LaurentFrac& b) { return a / b; }

}  // namespace vir
