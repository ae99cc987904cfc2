#pragma once

// Arbitrary-precision integers and rationals (GMP) plus the small free-function
// vocabulary the generic containers rely on: is_zero, divexact, to_string.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace vir {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const BigRat& x) { return sgn(x) == 0; }
inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }

inline BigRat divexact(const BigRat& a, const BigRat& b) {
  if (is_zero(b)) throw std::domain_error("division by zero");
  return a / b;
}

inline std::string to_string(const BigRat& x) { return x.get_str(); }
inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline BigRat pow(const BigRat& x, long k) {
  if (k < 0) {
    if (is_zero(x)) throw std::domain_error("negative power of zero");
    return pow(BigRat(1) / x, -k);
  }
  BigRat result(1), base(x);
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

inline BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline bool is_perfect_square(const BigRat& q, BigRat* root = nullptr) {
  if (sgn(q) < 0) return false;
  const BigInt& n = q.get_num();
  const BigInt& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  if (root) {
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    *root = make_rat(rn, rd);
  }
  return true;
}

/// Parses "p", "-p" or "p/q".
inline BigRat parse_rat(const std::string& s) {
  BigRat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace vir
