// Small tour of the library: a singular vector, its norm, a Jack function and
// one AGT coefficient, all exact.
#include <iostream>

#include "vir/nekrasov.hpp"
#include "vir/symfunc.hpp"
#include "vir/virasoro/norm.hpp"
#include "vir/virasoro/singular.hpp"

int main() {
  using namespace vir;

  const auto& chi = singular_vector(2, 2);
  std::cout << "P_{2,2} = " << to_string(chi.expansion) << "\n";

  const HPoly n = norm_in_delta(2, 2);
  std::cout << "N_{2,2} = " << to_string(n, "d") << "   (d = h - h_{2,2})\n";
  const bool theorem = extract_A(2, 2) == rrs_formula(2, 2);
  std::cout << "A_{2,2} = R_{2,2}: " << (theorem ? "yes" : "no") << "\n";

  std::cout << "J_(2,1) = " << to_string(jack_integral(Partition{2, 1})) << "\n";

  const BigRat t0(3, 2), a0(7, 5);
  const BigRat h0 = dictionary_h(t0, a0);
  const auto f3 = gaiotto_coeff_at(3, t0, h0);
  const BigRat z3 = gauge_side_at(3, 2, t0, a0);
  std::cout << "at t = " << t0 << ", a = " << a0 << ": f_3 = " << *f3 << ", (e1 e2)^6 Z_3 = " << z3 << "\n";
  return theorem && f3 && *f3 == z3 ? 0 : 1;
}
