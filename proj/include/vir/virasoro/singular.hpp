#pragma once

// Singular vectors P_{r,s}(t)|c(t), h_{r,s}(t)> at level rs.
//
// The kernel is taken of the stacked L_1 / L_2 images at h = h_{r,s}(t): those
// two modes generate the positive part, so the joint kernel is exactly the
// space of singular vectors at that level. Entries are affine in h and c, so
// the elimination stays small. The result is checked against K_{rs} afterwards.

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "vir/exact/format.hpp"
#include "vir/exact/laurent_frac.hpp"
#include "vir/linalg.hpp"
#include "vir/virasoro/kac.hpp"

namespace vir {

/// Σ c_λ L_{-λ}, coefficients Laurent in u (in practice in t).
using VirElement = std::map<Partition, LaurentPoly>;

struct SingularVector {
  int r = 0;
  int s = 0;
  VirElement expansion;  // level rs, coefficient of (1^{rs}) equal to 1

  int level() const { return r * s; }
  LaurentPoly coeff(const Partition& p) const {
    auto it = expansion.find(p);
    return it == expansion.end() ? LaurentPoly() : it->second;
  }
};

/// The module M(c(t), h_{r,s}(t)) over the Laurent ring, cached per (r,s).
inline VermaModule<LaurentPoly>& degenerate_verma(int r, int s) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<VermaModule<LaurentPoly>>> modules;
  std::lock_guard lock(mu);
  auto& slot = modules[{r, s}];
  if (!slot) slot = std::make_unique<VermaModule<LaurentPoly>>(c_of_t(), h_rs(r, s));
  return *slot;
}

namespace detail {

inline SingularVector compute_singular(int r, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("singular_vector needs r, s >= 1");
  const int n = r * s;
  auto& m = degenerate_verma(r, s);
  const auto cols = enumerate(n);
  Matrix<LaurentPoly> rows;
  for (int k : {1, 2}) {
    if (n - k < 0) continue;
    for (const auto& target : enumerate(n - k)) {
      std::vector<LaurentPoly> row(cols.size());
      bool any = false;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto& img = m.raise(k, cols[j]);
        auto it = img.find(target);
        if (it != img.end()) {
          row[j] = it->second;
          any = true;
        }
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  auto kernel = laurent_kernel(rows, cols.size());
  if (kernel.size() != 1)
    throw std::logic_error("singular vector kernel has dimension " + std::to_string(kernel.size()) + " at (" +
                           std::to_string(r) + "," + std::to_string(s) + ")");
  const auto& v = kernel[0];
  const LaurentFrac lead = v.back();  // (1^n) is last in canonical order
  if (lead.is_zero()) throw std::logic_error("singular vector has no L_{-1}^{rs} term");
  SingularVector out{r, s, {}};
  for (std::size_t j = 0; j < cols.size(); ++j) {
    LaurentFrac x = v[j] / lead;
    if (x.is_zero()) continue;
    if (!x.is_laurent()) throw std::logic_error("singular vector coefficient is not a Laurent polynomial");
    LaurentPoly p = x.to_laurent();
    if (!p.is_even()) throw std::logic_error("singular vector coefficient has half-integer powers of t");
    out.expansion.emplace(cols[j], std::move(p));
  }
  return out;
}

}  // namespace detail

inline const SingularVector& singular_vector(int r, int s) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<SingularVector>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({r, s});
    if (it != cache.end()) return *it->second;
  }
  auto v = std::make_unique<SingularVector>(detail::compute_singular(r, s));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace({r, s}, std::move(v));
  return *it->second;
}

/// Applies L_1 and L_2 at (c(t), h_{r,s}(t)); both images must vanish.
inline bool verify_singular(const SingularVector& v) {
  auto& m = degenerate_verma(v.r, v.s);
  VermaModule<LaurentPoly>::Vec w;
  for (const auto& [p, x] : v.expansion) VermaModule<LaurentPoly>::add_term(w, p, x);
  return m.apply(1, w).empty() && m.apply(2, w).empty();
}

/// K_{rs}(c(t), h_{r,s}(t)) applied to the coefficient vector; must vanish.
inline bool kac_annihilates(const SingularVector& v) {
  auto& m = degenerate_verma(v.r, v.s);
  const auto parts = enumerate(v.level());
  for (const auto& mu : parts) {
    LaurentPoly acc;
    for (const auto& [lambda, x] : v.expansion) acc += x * m.pairing(mu, lambda);
    if (!acc.is_zero()) return false;
  }
  return true;
}

/// t -> 1/t on every coefficient.
inline VirElement invert_t(const VirElement& e) {
  VirElement out;
  for (const auto& [p, x] : e) out.emplace(p, x.inverted());
  return out;
}

namespace detail {

inline std::string word_text(const Partition& p, bool latex) {
  std::string out;
  const auto& parts = p.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const std::size_t mult = j - i;
    if (!out.empty() && !latex) out += " ";
    out += "L_{-" + std::to_string(parts[i]) + "}";
    if (mult > 1) {
      const std::string e = std::to_string(mult);
      out += (latex && e.size() > 1) ? "^{" + e + "}" : "^" + e;
    }
    i = j;
  }
  return out;
}

inline std::string element_text(const VirElement& e, bool latex) {
  if (e.empty()) return "0";
  std::string out;
  // Display order: (1^n) first, i.e. canonical order reversed.
  for (auto it = e.begin(); it != e.end(); ++it) {
    const LaurentPoly& c = it->second;
    bool neg = false;
    std::string cs;
    if (c.is_monomial()) {
      neg = sgn(c.leading_coef()) < 0;
      cs = latex ? to_latex(neg ? -c : c) : to_string(neg ? -c : c);
      if (cs == "1") cs.clear();
    } else {
      LaurentPoly cc = c;
      if (sgn(c.leading_coef()) < 0) {
        neg = true;
        cc = -c;
      }
      cs = "(" + (latex ? to_latex(cc) : to_string(cc)) + ")";
    }
    std::string term = cs.empty() ? word_text(it->first, latex) : cs + " " + word_text(it->first, latex);
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace detail

inline std::string to_string(const VirElement& e) { return detail::element_text(e, false); }
inline std::string to_latex(const VirElement& e) { return detail::element_text(e, true); }

}  // namespace vir
