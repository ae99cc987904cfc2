#pragma once

// The acceptance suite: eleven numbered criteria, each an exact check.

#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "vir/bosonization.hpp"
#include "vir/golden.hpp"
#include "vir/nekrasov.hpp"
#include "vir/symfunc.hpp"
#include "vir/virasoro/checks.hpp"
#include "vir/virasoro/kac.hpp"
#include "vir/virasoro/norm.hpp"
#include "vir/virasoro/singular.hpp"

namespace vir {

struct SuiteConfig {
  std::uint64_t seed = 1729;
  int samples = 20;
};

struct Criterion {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failures_.push_back(what);
  }
  bool pass() const { return failures_.empty(); }
  std::string summary() const {
    std::ostringstream os;
    os << (total_ - failures_.size()) << "/" << total_ << " checks";
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) os << (i ? ", " : "; failed: ") << failures_[i];
    return os.str();
  }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failures_;
};

inline std::string pair_name(int r, int s) { return "(" + std::to_string(r) + "," + std::to_string(s) + ")"; }

inline Criterion timed(int id, std::string title, const std::function<void(Tally&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Tally tally;
  std::string error;
  try {
    body(tally);
  } catch (const std::exception& e) {
    error = e.what();
  }
  Criterion c;
  c.id = id;
  c.title = std::move(title);
  c.pass = error.empty() && tally.pass();
  c.detail = error.empty() ? tally.summary() : "exception: " + error;
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

inline bool singular_matches(const golden::SingularGolden& g) {
  return singular_vector(g.r, g.s).expansion == g.expansion &&
         (g.r == g.s || singular_vector(g.s, g.r).expansion == invert_t(g.expansion));
}

}  // namespace detail

inline Criterion criterion_kac_matrices() {
  return detail::timed(1, "golden Kac matrices K1-K3", [](detail::Tally& t) {
    for (int n = 1; n <= 3; ++n) t.expect(golden::kac_matches(n, golden::kac(n)), "K" + std::to_string(n));
  });
}

inline Criterion criterion_kac_determinant() {
  return detail::timed(2, "Kac determinant factorization, n <= 6", [](detail::Tally& t) {
    for (int n = 1; n <= 6; ++n) t.expect(kac_det_check(n).pass, "n=" + std::to_string(n));
  });
}

inline Criterion criterion_singular_vectors() {
  return detail::timed(3, "golden singular vectors and verification for rs <= 8", [](detail::Tally& t) {
    for (const auto& g : golden::singular_vectors()) t.expect(detail::singular_matches(g), "P" + detail::pair_name(g.r, g.s));
    for (auto [r, s] : pairs_up_to(8)) {
      const auto& v = singular_vector(r, s);
      t.expect(verify_singular(v) && kac_annihilates(v), "verify" + detail::pair_name(r, s));
    }
  });
}

inline Criterion criterion_norms() {
  return detail::timed(4, "golden norm expansions", [](detail::Tally& t) {
    for (const auto& g : golden::norms()) t.expect(golden::norm_matches(g.r, g.s, g.delta_coeffs), "N" + detail::pair_name(g.r, g.s));
  });
}

inline Criterion criterion_main_theorem() {
  return detail::timed(5, "A_{r,s} = R_{r,s} for rs <= 8", [](detail::Tally& t) {
    for (const auto& rec : theorem_main_check(8)) t.expect(rec.pass, detail::pair_name(rec.r, rec.s));
  });
}

inline Criterion criterion_structure() {
  return detail::timed(6, "evenness, degree bounds, leading terms, t-negation, rectangle form for rs <= 6",
                       [](detail::Tally& t) {
                         for (auto [r, s] : pairs_up_to(6)) {
                           const auto name = detail::pair_name(r, s);
                           const LaurentPoly a = extract_A(r, s);
                           const auto& v = singular_vector(r, s);
                           t.expect(evenness_check(a).pass, "even" + name);
                           t.expect(degree_bounds_check(r, s, a).pass, "degree" + name);
                           t.expect(leading_term_check(v).pass, "leading" + name);
                           t.expect(t_negation_check(v).pass, "negation" + name);
                           t.expect(shapovalov_closed_form_check(r, s).pass, "rectangle" + name);
                         }
                       });
}

inline Criterion criterion_jack() {
  return detail::timed(7, "Jack orthogonality, norms, integrality, power-sum expansion", [](detail::Tally& t) {
    for (int n = 1; n <= 8; ++n) {
      const auto parts = enumerate(n);
      for (const auto& lambda : parts) {
        const auto name = lambda.to_string();
        t.expect(jack_integral(lambda).coeff(Partition{n}) == theta_top_coeff(lambda), "theta" + name);
        if (n > 6) continue;
        t.expect(jack_norm_check(lambda), "norm" + name);
        for (const auto& [mu, c] : to_monomial(jack_monic(lambda))) t.expect(dominance_leq(mu, lambda) == Tri::True, "triangular" + name);
        for (const auto& mu : parts)
          if (mu != lambda) t.expect(inner_product(jack_monic(lambda), jack_monic(mu)).is_zero(), "orth" + name + mu.to_string());
      }
      if (n <= 6) t.expect(powersum_expansion_check(n), "p" + std::to_string(n));
    }
  });
}

inline Criterion criterion_bosonization() {
  return detail::timed(8, "bosonized singular vectors, Jack proportionality, g-decomposition", [](detail::Tally& t) {
    for (const auto& g : golden::proportionality()) {
      const auto res = jack_proportionality_check(g.r, g.s);
      t.expect(res.pass && res.factor == g.factor, "golden factor" + detail::pair_name(g.r, g.s));
    }
    for (auto [r, s] : pairs_up_to(6)) {
      const auto name = detail::pair_name(r, s);
      t.expect(jack_proportionality_check(r, s).pass, "proportional" + name);
      t.expect(g_decomposition(r, s).pass, "g" + name);
      t.expect(a_top_coefficient_check(r, s).pass, "a_top" + name);
    }
    for (int n = 1; n <= 6; ++n)
      for (const auto& lambda : enumerate(n)) t.expect(degree_one_check(lambda), "degree one" + lambda.to_string());
  });
}

inline Criterion criterion_agt(const SuiteConfig& cfg) {
  return detail::timed(9, "AGT equality at seeded points, n <= 5", [&cfg](detail::Tally& t) {
    const auto points = agt_panel(cfg.seed, cfg.samples, 5);
    const auto res = agt_check(5, points);
    t.expect(res.exponent == 2, "calibrated exponent " + std::to_string(res.exponent));
    for (const auto& rec : res.records) t.expect(rec.pass && !rec.skipped, "n=" + std::to_string(rec.n));
  });
}

inline Criterion criterion_recursions(const SuiteConfig& cfg) {
  return detail::timed(10, "gauge and Virasoro recursions at seeded points, n <= 4", [&cfg](detail::Tally& t) {
    const auto points = recursion_panel(cfg.seed, cfg.samples, 4);
    const auto cal = calibrate_exponent(agt_panel(cfg.seed, 3, 1));
    if (!cal.exponent) throw std::runtime_error(cal.detail);
    const auto res = recursion_check(4, *cal.exponent, points);
    for (const auto* side : {&res.gauge, &res.virasoro, &res.cross})
      for (const auto& rec : *side) t.expect(rec.pass && !rec.skipped, "n=" + std::to_string(rec.n));
  });
}

/// Each golden family with one sign flipped must be rejected.
inline Criterion criterion_negative_controls(const SuiteConfig& cfg) {
  return detail::timed(11, "negative controls: corrupted references are rejected", [&cfg](detail::Tally& t) {
    for (int n = 1; n <= 3; ++n) t.expect(!golden::kac_matches(n, golden::corrupted(golden::kac(n))), "K" + std::to_string(n));
    for (auto g : golden::singular_vectors()) {
      g.expansion = golden::corrupted(g.expansion);
      t.expect(!detail::singular_matches(g), "P" + detail::pair_name(g.r, g.s));
      SingularVector bad{g.r, g.s, g.expansion};
      t.expect(!verify_singular(bad), "verify P" + detail::pair_name(g.r, g.s));
    }
    for (const auto& g : golden::norms())
      t.expect(!golden::norm_matches(g.r, g.s, golden::corrupted(g.delta_coeffs)), "N" + detail::pair_name(g.r, g.s));
    for (auto [r, s] : pairs_up_to(4)) t.expect(!(extract_A(r, s) == -rrs_formula(r, s)), "R" + detail::pair_name(r, s));
    for (const auto& g : golden::proportionality()) {
      const auto res = jack_proportionality_check(g.r, g.s);
      t.expect(!(res.factor == -g.factor), "B" + detail::pair_name(g.r, g.s));
    }
    for (const auto& lambda : enumerate(4)) {
      const auto& p = jack_monic(lambda);
      t.expect(!(inner_product(p, p) == -jack_norm_formula(lambda)), "Jack norm" + lambda.to_string());
    }
    for (const auto& p : agt_panel(cfg.seed, 3, 2)) {
      auto f = gaiotto_coeff_at(2, p.t0, p.h0);
      t.expect(f && *f != -gauge_side_at(2, 2, p.t0, p.a0), "AGT");
      t.expect(f && *f != gauge_side_at(2, 4, p.t0, p.a0), "AGT exponent 4");
    }
  });
}

inline std::vector<Criterion> run_suite(const SuiteConfig& cfg = {}) {
  return {criterion_kac_matrices(),  criterion_kac_determinant(), criterion_singular_vectors(),
          criterion_norms(),         criterion_main_theorem(),    criterion_structure(),
          criterion_jack(),          criterion_bosonization(),    criterion_agt(cfg),
          criterion_recursions(cfg), criterion_negative_controls(cfg)};
}

}  // namespace vir
