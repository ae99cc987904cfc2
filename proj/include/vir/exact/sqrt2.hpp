#pragma once

// Rank-2 extension of the Laurent ring: x + sqrt(2) y.

#include "vir/exact/laurent.hpp"

namespace vir {

class Sqrt2Ext {
 public:
  Sqrt2Ext() = default;
  explicit Sqrt2Ext(long c) : rat_(c) {}
  explicit Sqrt2Ext(const BigRat& c) : rat_(c) {}
  explicit Sqrt2Ext(LaurentPoly rational, LaurentPoly radical = {})
      : rat_(std::move(rational)), rad_(std::move(radical)) {}

  static Sqrt2Ext sqrt2() { return Sqrt2Ext(LaurentPoly(), LaurentPoly(1)); }
  /// 1/sqrt(2) = sqrt(2)/2.
  static Sqrt2Ext inv_sqrt2() { return Sqrt2Ext(LaurentPoly(), LaurentPoly(make_rat(1, 2))); }

  const LaurentPoly& rational_part() const { return rat_; }
  const LaurentPoly& radical_part() const { return rad_; }

  bool is_zero() const { return rat_.is_zero() && rad_.is_zero(); }
  bool is_rational() const { return rad_.is_zero(); }

  Sqrt2Ext operator-() const { return Sqrt2Ext(-rat_, -rad_); }
  Sqrt2Ext& operator+=(const Sqrt2Ext& o) {
    rat_ += o.rat_;
    rad_ += o.rad_;
    return *this;
  }
  Sqrt2Ext& operator-=(const Sqrt2Ext& o) {
    rat_ -= o.rat_;
    rad_ -= o.rad_;
    return *this;
  }
  Sqrt2Ext& operator*=(const Sqrt2Ext& o) { return *this = *this * o; }
  Sqrt2Ext& operator*=(const BigRat& s) {
    rat_ *= s;
    rad_ *= s;
    return *this;
  }
  Sqrt2Ext& operator*=(const LaurentPoly& s) {
    rat_ *= s;
    rad_ *= s;
    return *this;
  }

  friend Sqrt2Ext operator+(Sqrt2Ext a, const Sqrt2Ext& b) { return a += b; }
  friend Sqrt2Ext operator-(Sqrt2Ext a, const Sqrt2Ext& b) { return a -= b; }
  friend Sqrt2Ext operator*(const Sqrt2Ext& a, const Sqrt2Ext& b) {
    LaurentPoly x = a.rat_ * b.rat_ + BigRat(2) * (a.rad_ * b.rad_);
    LaurentPoly y = a.rat_ * b.rad_ + a.rad_ * b.rat_;
    return Sqrt2Ext(std::move(x), std::move(y));
  }
  friend Sqrt2Ext operator*(Sqrt2Ext a, const BigRat& s) { return a *= s; }
  friend Sqrt2Ext operator*(const BigRat& s, Sqrt2Ext a) { return a *= s; }
  friend Sqrt2Ext operator*(Sqrt2Ext a, const LaurentPoly& s) { return a *= s; }
  friend Sqrt2Ext operator*(const LaurentPoly& s, Sqrt2Ext a) { return a *= s; }

  friend bool operator==(const Sqrt2Ext& a, const Sqrt2Ext& b) { return a.rat_ == b.rat_ && a.rad_ == b.rad_; }
  friend bool operator!=(const Sqrt2Ext& a, const Sqrt2Ext& b) { return !(a == b); }

  /// Conjugation sqrt(2) -> -sqrt(2).
  Sqrt2Ext conjugate() const { return Sqrt2Ext(rat_, -rad_); }
  /// Norm x^2 - 2y^2, an element of the base ring.
  LaurentPoly norm() const { return rat_ * rat_ - BigRat(2) * (rad_ * rad_); }

 private:
  LaurentPoly rat_;
  LaurentPoly rad_;
};

inline bool is_zero(const Sqrt2Ext& x) { return x.is_zero(); }

/// Exact division; the divisor must be a unit multiple of a base-ring element after conjugation.
inline Sqrt2Ext divexact(const Sqrt2Ext& a, const Sqrt2Ext& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (b.radical_part().is_zero()) {
    return Sqrt2Ext(divexact(a.rational_part(), b.rational_part()), divexact(a.radical_part(), b.rational_part()));
  }
  Sqrt2Ext num = a * b.conjugate();
  LaurentPoly den = b.norm();
  return Sqrt2Ext(divexact(num.rational_part(), den), divexact(num.radical_part(), den));
}

}  // namespace vir
