#pragma once

// Integer partitions and Young-diagram combinatorics.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vir/exact/bigrat.hpp"

namespace vir {

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
    }
  }
  /// Sorts and validates arbitrary positive parts.
  static Partition from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }
  /// (k^m): the part k repeated m times.
  static Partition rectangle(int k, int m) { return Partition(std::vector<int>(static_cast<std::size_t>(m), k)); }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// λ_i with 1-based i; 0 beyond the length.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int multiplicity(int k) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), k)); }

  /// The partition with one copy of k removed (k must occur).
  Partition without_part(int k) const {
    std::vector<int> p(parts_);
    auto it = std::find(p.begin(), p.end(), k);
    if (it == p.end()) throw std::invalid_argument("part not present");
    p.erase(it);
    return Partition(std::move(p));
  }
  /// The partition with an extra part k inserted in sorted position.
  Partition with_part(int k) const {
    std::vector<int> p(parts_);
    p.insert(std::upper_bound(p.begin(), p.end(), k, std::greater<>()), k);
    return Partition(std::move(p));
  }
  /// Drops the first (largest) part.
  Partition tail() const { return Partition(std::vector<int>(parts_.begin() + (parts_.empty() ? 0 : 1), parts_.end())); }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

/// Parses "(4,4,2,1,1,1)", "()" or "4,2".
inline Partition parse_partition(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw std::invalid_argument("unbalanced partition text");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty partition part");
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("malformed partition part: " + item);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

struct Box {
  int row;  // i >= 1
  int col;  // j >= 1
};

namespace detail {
inline void enumerate_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    enumerate_rec(remaining - k, k, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> enumerate(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::enumerate_rec(n, n, cur, out);
  return out;
}

/// Number of partitions of n via Euler's pentagonal recurrence.
inline BigInt partition_count(int n) {
  std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt acc = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      int sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) acc += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return p[static_cast<std::size_t>(n)];
}

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> c(static_cast<std::size_t>(lambda.part(1)), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

/// Boxes (i,j) of the diagram, row by row.
inline std::vector<Box> boxes(const Partition& lambda) {
  std::vector<Box> out;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) out.push_back({i, j});
  return out;
}

struct ArmLeg {
  int arm;
  int leg;
};

/// arm = λ_i - j, leg = λ^∨_j - i; valid (possibly negative) for boxes outside the diagram.
inline ArmLeg arm_leg(const Partition& lambda, const Box& b) {
  const int row = lambda.part(b.row);
  int col = 0;
  for (int part : lambda.parts())
    if (part >= b.col) ++col;
  return {row - b.col, col - b.row};
}

/// z_λ = ∏ i^{m_i} m_i!.
inline BigInt z_lambda(const Partition& lambda) {
  BigInt z = 1;
  const auto& p = lambda.parts();
  std::size_t i = 0;
  while (i < p.size()) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    const auto m = static_cast<unsigned long>(j - i);
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p[i]), m);
    z *= pw * factorial(static_cast<long>(m));
    i = j;
  }
  return z;
}

enum class Dominance { Leq, Geq, Equal, Incomparable };

/// Three-valued answer to "μ ≤ λ in dominance".
enum class Tri { True, False, Incomparable };

/// Compares μ and λ (|μ| = |λ|) by partial sums.
inline Dominance dominance_compare(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) throw std::invalid_argument("dominance needs partitions of equal size");
  bool le = true, ge = true;
  int sm = 0, sl = 0;
  const int len = std::max(mu.length(), lambda.length());
  for (int i = 1; i <= len; ++i) {
    sm += mu.part(i);
    sl += lambda.part(i);
    if (sm > sl) le = false;
    if (sm < sl) ge = false;
  }
  if (le && ge) return Dominance::Equal;
  if (le) return Dominance::Leq;
  if (ge) return Dominance::Geq;
  return Dominance::Incomparable;
}

inline Tri dominance_leq(const Partition& mu, const Partition& lambda) {
  switch (dominance_compare(mu, lambda)) {
    case Dominance::Leq:
    case Dominance::Equal:
      return Tri::True;
    case Dominance::Geq:
      return Tri::False;
    default:
      return Tri::Incomparable;
  }
}

}  // namespace vir
