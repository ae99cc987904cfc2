#pragma once

// Elements x + y sqrt(D) of the quadratic field Q(sqrt(D)), D a fixed non-square rational.

#include <stdexcept>

#include "vir/exact/bigrat.hpp"

namespace vir {

class QuadNumber {
 public:
  QuadNumber() = default;
  QuadNumber(BigRat x, BigRat y, BigRat d) : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {}

  static QuadNumber rational(const BigRat& x, const BigRat& d) { return QuadNumber(x, BigRat(0), d); }
  static QuadNumber root(const BigRat& d) { return QuadNumber(BigRat(0), BigRat(1), d); }

  const BigRat& x() const { return x_; }
  const BigRat& y() const { return y_; }
  const BigRat& radicand() const { return d_; }
  bool is_rational() const { return vir::is_zero(y_); }
  bool is_zero() const { return vir::is_zero(x_) && vir::is_zero(y_); }

  QuadNumber operator-() const { return QuadNumber(-x_, -y_, d_); }
  friend QuadNumber operator+(const QuadNumber& a, const QuadNumber& b) {
    return QuadNumber(a.x_ + b.x_, a.y_ + b.y_, pick(a, b));
  }
  friend QuadNumber operator-(const QuadNumber& a, const QuadNumber& b) {
    return QuadNumber(a.x_ - b.x_, a.y_ - b.y_, pick(a, b));
  }
  friend QuadNumber operator*(const QuadNumber& a, const QuadNumber& b) {
    BigRat d = pick(a, b);
    return QuadNumber(a.x_ * b.x_ + d * a.y_ * b.y_, a.x_ * b.y_ + a.y_ * b.x_, d);
  }
  friend QuadNumber operator/(const QuadNumber& a, const QuadNumber& b) {
    BigRat d = pick(a, b);
    BigRat n = b.x_ * b.x_ - d * b.y_ * b.y_;
    if (vir::is_zero(n)) throw std::domain_error("division by zero");
    QuadNumber conj(b.x_, -b.y_, d);
    QuadNumber p = a * conj;
    return QuadNumber(p.x_ / n, p.y_ / n, d);
  }
  QuadNumber& operator+=(const QuadNumber& o) { return *this = *this + o; }
  QuadNumber& operator-=(const QuadNumber& o) { return *this = *this - o; }
  QuadNumber& operator*=(const QuadNumber& o) { return *this = *this * o; }

  friend bool operator==(const QuadNumber& a, const QuadNumber& b) { return a.x_ == b.x_ && a.y_ == b.y_; }

 private:
  static const BigRat& pick(const QuadNumber& a, const QuadNumber& b) {
    if (!vir::is_zero(a.y_) && !vir::is_zero(b.y_) && a.d_ != b.d_)
      throw std::domain_error("mixing different quadratic fields");
    return vir::is_zero(a.d_) ? b.d_ : a.d_;
  }

  BigRat x_, y_, d_;
};

}  // namespace vir
