#pragma once

// Reference values from the literature used by the acceptance suite, each with a
// corrupted twin (one sign flipped) for the negative controls.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vir/exact/format.hpp"
#include "vir/virasoro/checks.hpp"
#include "vir/virasoro/singular.hpp"

namespace vir::golden {

using Entry = std::pair<Partition, Partition>;
using KacTable = std::map<Entry, HCPoly>;

namespace detail {

inline HCPoly H() { return HCPoly::x(); }
inline HCPoly C() { return HCPoly(QPoly::x()); }
inline HCPoly K(long v) { return HCPoly(QPoly(BigRat(v))); }
inline HCPoly K(const BigRat& v) { return HCPoly(QPoly(v)); }

inline LaurentPoly L(const std::string& s) { return parse_laurent(s); }

}  // namespace detail

/// K_1, K_2, K_3 as polynomials in free (c, h).
inline KacTable kac(int n) {
  using namespace detail;
  const Partition p1{1}, p11{1, 1}, p2{2}, p111{1, 1, 1}, p21{2, 1}, p3{3};
  KacTable k;
  auto put = [&k](const Partition& a, const Partition& b, const HCPoly& v) {
    k[{a, b}] = v;
    k[{b, a}] = v;
  };
  switch (n) {
    case 1:
      put(p1, p1, K(2) * H());
      break;
    case 2:
      put(p11, p11, K(4) * H() * (K(1) + K(2) * H()));
      put(p11, p2, K(6) * H());
      put(p2, p2, K(4) * H() + K(make_rat(1, 2)) * C());
      break;
    case 3:
      put(p111, p111, K(24) * H() * (K(1) + H()) * (K(1) + K(2) * H()));
      put(p111, p21, K(12) * H() * (K(1) + K(3) * H()));
      put(p111, p3, K(24) * H());
      put(p21, p21, K(8) * H() * H() + K(8) * H() + C() * H());
      put(p21, p3, K(10) * H());
      put(p3, p3, K(6) * H() + K(2) * C());
      break;
    default:
      break;
  }
  return k;
}

/// True iff the computed K_n agrees with the table entry by entry.
inline bool kac_matches(int n, const KacTable& table) {
  const auto parts = enumerate(n);
  const auto m = kac_matrix_hc(n);
  if (table.size() != parts.size() * parts.size()) return false;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j) {
      auto it = table.find({parts[i], parts[j]});
      if (it == table.end() || !(it->second == m[i][j])) return false;
    }
  return true;
}

/// The same table with the sign of one entry flipped.
inline KacTable corrupted(KacTable k) {
  auto it = k.begin();
  const Entry key = it->first;
  k[key] = -it->second;
  return k;
}

struct SingularGolden {
  int r;
  int s;
  VirElement expansion;
};

/// P_{1,2}, P_{1,3}, P_{1,4}, P_{2,2}.
inline std::vector<SingularGolden> singular_vectors() {
  using detail::L;
  std::vector<SingularGolden> out;
  out.push_back({1, 2, {{Partition{1, 1}, L("1")}, {Partition{2}, L("-t")}}});
  out.push_back({1, 3, {{Partition{1, 1, 1}, L("1")}, {Partition{2, 1}, L("-4t")}, {Partition{3}, L("2t") * L("2t - 1")}}});
  out.push_back({1, 4,
                 {{Partition{1, 1, 1, 1}, L("1")},
                  {Partition{2, 1, 1}, L("-10t")},
                  {Partition{2, 2}, L("9t^2")},
                  {Partition{3, 1}, L("2t") * L("12t - 5")},
                  {Partition{4}, L("-6t") * L("6t^2 - 4t + 1")}}});
  out.push_back({2, 2,
                 {{Partition{1, 1, 1, 1}, L("1")},
                  {Partition{2, 1, 1}, L("-2") * L("t + t^-1")},
                  {Partition{2, 2}, L("t^2 - 2 + t^-2")},
                  {Partition{3, 1}, L("-2") * L("t - 3 + t^-1")},
                  {Partition{4}, L("-3") * L("t - 2 + t^-1")}}});
  return out;
}

inline VirElement corrupted(VirElement e) {
  auto it = std::prev(e.end());
  it->second = -it->second;
  return e;
}

struct NormGolden {
  int r;
  int s;
  std::vector<LaurentPoly> delta_coeffs;  // coefficient of δ^k, k = 0..rs
};

/// N_{1,1}, N_{1,2}, N_{1,3}, N_{1,4}, N_{2,2} expanded in δ = h - h_{r,s}(t).
inline std::vector<NormGolden> norms() {
  using detail::L;
  std::vector<NormGolden> out;
  out.push_back({1, 1, {L("0"), L("2")}});
  out.push_back({1, 2, {L("0"), L("4") * L("t^2 - 1"), L("8")}});
  out.push_back({1, 3, {L("0"), L("24") * L("t^2 - 1") * L("4t^2 - 1"), L("8") * L("16t^2 - 9"), L("48")}});
  out.push_back({1, 4,
                 {L("0"), L("288") * L("t^2 - 1") * L("4t^2 - 1") * L("9t^2 - 1"), L("16") * L("594t^4 - 481t^2 + 66"),
                  L("128") * L("25t^2 - 9"), L("384")}});
  out.push_back({2, 2,
                 {L("0"), L("-8") * L("t^2 - 1") * L("t^2 - 4") * L("t^-2 - 1") * L("t^-2 - 4"),
                  L("16") * L("2t^-4 - 33t^-2 + 91 - 33t^2 + 2t^4"), L("128") * L("t^2 - 7 + t^-2"), L("384")}});
  return out;
}

inline bool norm_matches(int r, int s, const std::vector<LaurentPoly>& coeffs) {
  const HPoly shifted = norm_in_delta(r, s);
  if (shifted.degree() + 1 != static_cast<int>(coeffs.size())) return false;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (!(shifted.coeff(static_cast<int>(k)) == coeffs[k])) return false;
  return true;
}

inline std::vector<LaurentPoly> corrupted(std::vector<LaurentPoly> c) {
  c[1] = -c[1];
  return c;
}

struct ProportionalityGolden {
  int r;
  int s;
  LaurentPoly factor;
};

/// ι∘ψ(χ_{r,s}) = J_{(s^r)} · factor for five pairs.
inline std::vector<ProportionalityGolden> proportionality() {
  using detail::L;
  std::vector<ProportionalityGolden> out;
  out.push_back({1, 1, L("t^-1 - 1")});
  out.push_back({2, 1, L("t^-1 - 1") * L("2t^-1 - 1")});
  out.push_back({3, 1, L("t^-1 - 1") * L("2t^-1 - 1") * L("3t^-1 - 1")});
  out.push_back({4, 1, L("t^-1 - 1") * L("2t^-1 - 1") * L("3t^-1 - 1") * L("4t^-1 - 1")});
  out.push_back({2, 2, L("t^-1 - 1") * L("t^-1 - 2") * L("2t^-1 - 1") * L("2t^-1 - 2")});
  return out;
}

}  // namespace vir::golden
