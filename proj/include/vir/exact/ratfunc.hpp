#pragma once

// Reduced fractions of multivariate rational polynomials over a declared variable list.

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vir/exact/mpoly.hpp"

namespace vir {

class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(std::vector<std::string> vars, const BigRat& c)
      : vars_(std::make_shared<const std::vector<std::string>>(std::move(vars))) {
    num_ = MPoly(vars_->size(), c);
    den_ = MPoly(vars_->size(), 1);
  }
  RatFunc(std::shared_ptr<const std::vector<std::string>> vars, MPoly num, MPoly den)
      : vars_(std::move(vars)), num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }
  RatFunc(std::shared_ptr<const std::vector<std::string>> vars, MPoly num)
      : vars_(std::move(vars)), num_(std::move(num)), den_(MPoly(vars_->size(), 1)) {}

  /// The i-th declared variable as a rational function.
  static RatFunc variable(const std::shared_ptr<const std::vector<std::string>>& vars, std::size_t i) {
    return RatFunc(vars, MPoly::var(vars->size(), i));
  }
  static RatFunc constant(const std::shared_ptr<const std::vector<std::string>>& vars, const BigRat& c) {
    return RatFunc(vars, MPoly(vars->size(), c));
  }

  /// Adopts a fraction already known to be coprime; only the denominator is normalized.
  static RatFunc from_reduced(std::shared_ptr<const std::vector<std::string>> vars, MPoly num, MPoly den) {
    return RatFunc(std::move(vars), std::move(num), std::move(den), Reduced{});
  }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  const std::vector<std::string>& vars() const { return *vars_; }
  const std::shared_ptr<const std::vector<std::string>>& vars_ptr() const { return vars_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const { return RatFunc(vars_, -num_, den_, Reduced{}); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.vars_, a.num_ + b.num_, a.den_);
    MPoly g = gcd(a.den_, b.den_);
    MPoly ad = divexact(a.den_, g);
    MPoly bd = divexact(b.den_, g);
    return RatFunc(a.vars_, a.num_ * bd + b.num_ * ad, ad * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    MPoly g1 = gcd(a.num_, b.den_);
    MPoly g2 = gcd(b.num_, a.den_);
    MPoly n = divexact(a.num_, g1) * divexact(b.num_, g2);
    MPoly d = divexact(a.den_, g2) * divexact(b.den_, g1);
    return RatFunc(a.vars_, std::move(n), std::move(d), Reduced{});
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return a * b.inverse();
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return RatFunc(vars_, den_, num_, Reduced{});
  }

  BigRat eval(const std::vector<BigRat>& point) const {
    BigRat d = den_.eval(point);
    if (vir::is_zero(d)) throw std::domain_error("pole at evaluation point");
    return num_.eval(point) / d;
  }

  std::string to_string() const {
    if (den_ == MPoly(den_.nvars(), 1)) return num_.to_string(*vars_);
    return "(" + num_.to_string(*vars_) + ")/(" + den_.to_string(*vars_) + ")";
  }

 private:
  struct Reduced {};
  // Operands already coprime: only normalize the denominator.
  RatFunc(std::shared_ptr<const std::vector<std::string>> vars, MPoly num, MPoly den, Reduced)
      : vars_(std::move(vars)), num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  void reduce() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = MPoly(den_.nvars(), 1);
      return;
    }
    MPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
    normalize();
  }

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = MPoly(den_.nvars(), 1);
      return;
    }
    BigRat lc = den_.leading_coef();
    if (lc != 1) {
      BigRat inv = BigRat(1) / lc;
      num_ *= inv;
      den_ *= inv;
    }
  }

  std::shared_ptr<const std::vector<std::string>> vars_;
  MPoly num_;
  MPoly den_;
};

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

}  // namespace vir
