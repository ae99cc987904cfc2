#pragma once

// Verma module M(c,h) over a coefficient ring C, in the PBW basis
//
//   L_{-λ}|h> = L_{-λ_1} L_{-λ_2} ... L_{-λ_k} |h>,   λ_1 >= λ_2 >= ... >= λ_k,
//
// with the largest mode leftmost. The dual word is L_λ = (L_{-λ})^† =
// L_{λ_k} ... L_{λ_1}, so acting on a ket L_{λ_1} is applied first.
//
// Mode actions on basis vectors are memoized. The caches are append-only maps
// guarded by a shared mutex; entries are computed outside the lock and never
// mutated once inserted, so references handed out stay valid.

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vir/exact/bigrat.hpp"
#include "vir/linalg.hpp"
#include "vir/partitions.hpp"

namespace vir {

template <class C>
class VermaModule {
 public:
  using Vec = std::map<Partition, C>;

  VermaModule(C central_charge, C weight) : c_(std::move(central_charge)), h_(std::move(weight)) {}
  VermaModule(const VermaModule&) = delete;
  VermaModule& operator=(const VermaModule&) = delete;

  const C& central_charge() const { return c_; }
  const C& weight() const { return h_; }

  static Vec basis(const Partition& lambda) { return Vec{{lambda, C(1L)}}; }

  static void add_scaled(Vec& acc, const Vec& v, const C& s) {
    if (is_zero(s)) return;
    for (const auto& [p, x] : v) add_term(acc, p, x * s);
  }
  static void add_scaled(Vec& acc, const Vec& v, long k) {
    if (k == 0) return;
    for (const auto& [p, x] : v) add_term(acc, p, mul_int(x, k));
  }
  static void add_term(Vec& acc, const Partition& p, C x) {
    if (is_zero(x)) return;
    auto [it, inserted] = acc.try_emplace(p, std::move(x));
    if (!inserted) {
      it->second += x;
      if (is_zero(it->second)) acc.erase(it);
    }
  }

  /// L_{-m} L_{-λ}|h>, m >= 1.
  const Vec& lower(int m, const Partition& lambda) {
    if (m < 1) throw std::invalid_argument("lower() needs a positive mode");
    const Key key{m, lambda};
    if (const Vec* hit = find(lower_cache_, key)) return *hit;
    Vec out;
    if (lambda.empty() || m >= lambda.part(1)) {
      out = basis(lambda.with_part(m));
    } else {
      // L_{-m} L_{-j} Y = L_{-j} (L_{-m} Y) + (j - m) L_{-(m+j)} Y
      const int j = lambda.part(1);
      const Partition y = lambda.tail();
      const Vec& inner = lower(m, y);
      for (const auto& [mu, x] : inner) add_scaled(out, lower(j, mu), x);
      add_scaled(out, lower(m + j, y), static_cast<long>(j - m));
    }
    return insert(lower_cache_, key, std::move(out));
  }

  /// L_n L_{-λ}|h>, n >= 1.
  const Vec& raise(int n, const Partition& lambda) {
    if (n < 1) throw std::invalid_argument("raise() needs a positive mode");
    const Key key{n, lambda};
    if (const Vec* hit = find(raise_cache_, key)) return *hit;
    Vec out;
    if (!lambda.empty() && n <= lambda.size()) {
      // L_n L_{-j} Y = L_{-j} (L_n Y) + (n + j) L_{n-j} Y + δ_{n,j} c (n^3 - n)/12 Y
      const int j = lambda.part(1);
      const Partition y = lambda.tail();
      const Vec& inner = raise(n, y);
      for (const auto& [mu, x] : inner) add_scaled(out, lower(j, mu), x);
      if (n > j) {
        add_scaled(out, raise(n - j, y), static_cast<long>(n + j));
      } else if (n < j) {
        add_scaled(out, lower(j - n, y), static_cast<long>(n + j));
      } else {
        add_term(out, y, mul_int(h_ + C(static_cast<long>(y.size())), n + j));
        const long cube = static_cast<long>(n) * n * n - n;
        add_term(out, y, c_ * BigRat(make_rat(cube, 12)));
      }
    }
    return insert(raise_cache_, key, std::move(out));
  }

  /// L_n applied to an arbitrary vector (any integer n).
  Vec apply(int n, const Vec& v) {
    Vec out;
    for (const auto& [lambda, x] : v) {
      if (n > 0) {
        add_scaled(out, raise(n, lambda), x);
      } else if (n < 0) {
        add_scaled(out, lower(-n, lambda), x);
      } else {
        add_term(out, lambda, x * (h_ + C(static_cast<long>(lambda.size()))));
      }
    }
    return out;
  }

  /// word·v for an operator product read left to right (rightmost acts first).
  Vec apply_word(const std::vector<int>& word, Vec v) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply(*it, v);
    return v;
  }

  /// word·|h>, keeping only components of level <= level_cap.
  Vec normal_order_apply(const std::vector<int>& word, int level_cap) {
    Vec v = apply_word(word, basis(Partition()));
    for (auto it = v.begin(); it != v.end();) it = it->first.size() > level_cap ? v.erase(it) : std::next(it);
    return v;
  }

  /// <h| L_μ L_{-λ} |h>.
  const C& pairing(const Partition& mu, const Partition& lambda) {
    const PairKey key{mu, lambda};
    if (const C* hit = find(pair_cache_, key)) return *hit;
    C out{};
    if (mu.size() == lambda.size()) {
      if (mu.empty()) {
        out = C(1L);
      } else {
        const Vec& w = raise(mu.part(1), lambda);
        const Partition rest = mu.tail();
        for (const auto& [nu, x] : w) {
          const C& sub = pairing(rest, nu);
          if (!is_zero(sub)) out += x * sub;
        }
      }
    }
    return insert(pair_cache_, key, std::move(out));
  }

  /// K_n with rows and columns in canonical (reverse-lexicographic) order; K[i][j] = <h|L_{λ_j} L_{-λ_i}|h>.
  Matrix<C> kac_matrix(int n) {
    const auto parts = enumerate(n);
    const std::size_t p = parts.size();
    Matrix<C> k(p, std::vector<C>(p));
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i; j < p; ++j) {
        k[i][j] = pairing(parts[j], parts[i]);
        if (j != i) k[j][i] = k[i][j];
      }
    return k;
  }

 private:
  using Key = std::pair<int, Partition>;
  using PairKey = std::pair<Partition, Partition>;

  static C mul_int(const C& x, long k) {
    if (k == 1) return x;
    return x * BigRat(k);
  }

  template <class Map>
  const typename Map::mapped_type* find(const Map& m, const typename Map::key_type& key) const {
    std::shared_lock lock(mutex_);
    auto it = m.find(key);
    return it == m.end() ? nullptr : &it->second;
  }
  template <class Map>
  const typename Map::mapped_type& insert(Map& m, const typename Map::key_type& key, typename Map::mapped_type v) {
    std::unique_lock lock(mutex_);
    return m.try_emplace(key, std::move(v)).first->second;
  }

  C c_;
  C h_;
  mutable std::shared_mutex mutex_;
  std::map<Key, Vec> lower_cache_;
  std::map<Key, Vec> raise_cache_;
  std::map<PairKey, C> pair_cache_;
};

}  // namespace vir
