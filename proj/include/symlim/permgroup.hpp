#pragma once

// Finite symmetric group S_N acting on {0, ..., N-1}.
//
// Storage is 0-indexed. Coxeter generators are exposed with the usual
// 1-indexed convention: s_j swaps the points j-1 and j (i.e. the
// points j and j+1 of {1, ..., N}).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "symlim/detail/partition_gen.hpp"
#include "symlim/errors.hpp"

namespace symlim {

using Point = std::uint32_t;

class Permutation {
public:
  /// Identity of degree 1.
  Permutation() : images_{0} {}

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    detail::require(!images_.empty(), "permutation degree must be >= 1");
    std::vector<bool> seen(images_.size(), false);
    for (Point y : images_) {
      detail::require(y < images_.size() && !seen[y],
                      "image table is not a bijection");
      seen[y] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    detail::require(degree >= 1, "permutation degree must be >= 1");
    std::vector<Point> im(degree);
    std::iota(im.begin(), im.end(), Point{0});
    return Permutation(std::move(im), Unchecked{});
  }

  /// Product of the given disjoint cycles, 0-indexed points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles) {
    auto im = identity(degree).images_;
    std::vector<bool> used(degree, false);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        detail::require(c[i] < degree && !used[c[i]], "cycles are not disjoint");
        used[c[i]] = true;
        im[c[i]] = c[(i + 1) % c.size()];
      }
    }
    return Permutation(std::move(im), Unchecked{});
  }

  static Permutation transposition(std::size_t degree, Point a, Point b) {
    return from_cycles(degree, {{a, b}});
  }

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
      if (images_[x] != x) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<Point> inv(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) inv[images_[x]] = Point(x);
    return Permutation(std::move(inv), Unchecked{});
  }

  /// Disjoint cycles of length >= 2, each starting at its smallest point,
  /// ordered by that point.
  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(images_.size(), false);
    for (Point x = 0; x < images_.size(); ++x) {
      if (seen[x] || images_[x] == x) continue;
      std::vector<Point> c;
      for (Point y = x; !seen[y]; y = images_[y]) {
        seen[y] = true;
        c.push_back(y);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;

  friend Permutation compose(const Permutation&, const Permutation&);
};

/// (p∘q)(x) = p(q(x)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  detail::require(p.degree() == q.degree(), "compose: degree mismatch");
  std::vector<Point> im(p.degree());
  for (std::size_t x = 0; x < im.size(); ++x) im[x] = p(q(Point(x)));
  return Permutation(std::move(im), Permutation::Unchecked{});
}

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

inline Permutation conjugate(const Permutation& g, const Permutation& p) {
  return g * p * g.inverse();
}

inline Permutation power(const Permutation& p, long long k) {
  Permutation base = k < 0 ? p.inverse() : p;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                               : static_cast<unsigned long long>(k);
  Permutation acc = Permutation::identity(p.degree());
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

// ---------------------------------------------------------------------------

/// Cycle counts m_1, m_2, ... of a permutation of degree N. Trailing zero
/// counts are dropped, so equality ignores them.
class CycleType {
public:
  CycleType() = default;

  /// Degree is taken to be Σ i·m_i.
  static CycleType from_counts(std::vector<std::uint64_t> counts) {
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) n += (i + 1) * counts[i];
    return CycleType(n, std::move(counts));
  }

  /// Throws InvalidArgument unless Σ i·m_i = degree.
  CycleType(std::uint64_t degree, std::vector<std::uint64_t> counts)
      : degree_(degree), counts_(std::move(counts)) {
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < counts_.size(); ++i) n += (i + 1) * counts_[i];
    detail::require(n == degree_ && degree_ >= 1,
                    "invalid cycle type: sum of i*m_i is " + std::to_string(n) +
                        ", expected " + std::to_string(degree_));
    while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
  }

  /// Cycle type whose cycle lengths are the given parts (any order).
  static CycleType from_cycle_lengths(const std::vector<std::uint64_t>& lengths) {
    std::vector<std::uint64_t> counts;
    for (auto len : lengths) {
      detail::require(len >= 1, "cycle length must be positive");
      if (counts.size() < len) counts.resize(len, 0);
      ++counts[len - 1];
    }
    return from_counts(std::move(counts));
  }

  std::uint64_t degree() const { return degree_; }
  /// m_i for i >= 1.
  std::uint64_t count(std::size_t i) const {
    return i >= 1 && i <= counts_.size() ? counts_[i - 1] : 0;
  }
  const std::vector<std::uint64_t>& counts() const { return counts_; }

  std::uint64_t total_cycles() const {
    return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
  }

  /// Σ_{i>=2} i·m_i.
  std::uint64_t support_size() const { return degree_ - count(1); }

  /// Cycle lengths in weakly decreasing order (fixed points included).
  std::vector<std::uint64_t> lengths() const {
    std::vector<std::uint64_t> out;
    for (std::size_t i = counts_.size(); i >= 1; --i)
      out.insert(out.end(), counts_[i - 1], i);
    return out;
  }

  friend bool operator==(const CycleType&, const CycleType&) = default;

private:
  std::uint64_t degree_ = 0;
  std::vector<std::uint64_t> counts_;
};

inline CycleType cycle_type(const Permutation& p) {
  std::vector<std::uint64_t> counts(p.degree(), 0);
  std::vector<bool> seen(p.degree(), false);
  for (Point x = 0; x < p.degree(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (Point y = x; !seen[y]; y = p(y)) {
      seen[y] = true;
      ++len;
    }
    ++counts[len - 1];
  }
  return CycleType(p.degree(), std::move(counts));
}

inline std::size_t support_size(const Permutation& p) {
  std::size_t n = 0;
  for (Point x = 0; x < p.degree(); ++x) n += p(x) != x;
  return n;
}

struct SignKappa {
  int sign;
  std::uint64_t kappa;
};

/// kappa = N - (number of cycles, fixed points included); sign = (-1)^kappa.
inline SignKappa sign_and_kappa(const Permutation& p) {
  const auto ct = cycle_type(p);
  const std::uint64_t kappa = ct.degree() - ct.total_cycles();
  return {kappa % 2 == 0 ? 1 : -1, kappa};
}

inline int sign(const Permutation& p) { return sign_and_kappa(p).sign; }

// ---------------------------------------------------------------------------

/// Word s_{j_1} s_{j_2} ... s_{j_r} in the Coxeter generators of S_N,
/// indices 1-indexed in {1, ..., N-1}. The word denotes the composition
/// s_{j_1} ∘ ... ∘ s_{j_r}, so s_{j_r} acts first.
class CoxeterWord {
public:
  CoxeterWord(std::size_t degree, std::vector<std::uint32_t> indices)
      : degree_(degree), indices_(std::move(indices)) {
    for (auto j : indices_)
      detail::require(j >= 1 && j + 1 <= degree_,
                      "Coxeter index out of range: " + std::to_string(j));
  }

  std::size_t degree() const { return degree_; }
  const std::vector<std::uint32_t>& indices() const { return indices_; }
  std::size_t length() const { return indices_.size(); }

  bool strictly_increasing() const {
    return std::adjacent_find(indices_.begin(), indices_.end(),
                              [](auto a, auto b) { return a >= b; }) ==
           indices_.end();
  }

  Permutation evaluate() const {
    auto im = Permutation::identity(degree_).images();
    // Apply letters right to left: im tracks x -> (s_{j_k} ... s_{j_r})(x).
    for (auto it = indices_.rbegin(); it != indices_.rend(); ++it) {
      const Point a = *it - 1, b = *it;
      for (auto& y : im) {
        if (y == a)
          y = b;
        else if (y == b)
          y = a;
      }
    }
    return Permutation(std::move(im));
  }

  friend bool operator==(const CoxeterWord&, const CoxeterWord&) = default;

private:
  std::size_t degree_;
  std::vector<std::uint32_t> indices_;
};

/// Deterministic reduced word obtained by bubble-sorting the image table.
/// Every swap of adjacent table positions j-1, j right-multiplies by s_j;
/// sorting reaches the identity, so the word is the swap sequence reversed.
inline CoxeterWord bubble_sort_word(const Permutation& p) {
  auto im = p.images();
  std::vector<std::uint32_t> swaps;
  const std::size_t n = im.size();
  for (std::size_t pass = 0; pass + 1 < n; ++pass) {
    bool swapped = false;
    for (std::size_t j = 1; j < n - pass; ++j) {
      if (im[j - 1] > im[j]) {
        std::swap(im[j - 1], im[j]);
        swaps.push_back(static_cast<std::uint32_t>(j));
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  std::reverse(swaps.begin(), swaps.end());
  return CoxeterWord(n, std::move(swaps));
}

struct MinimalElement {
  Permutation permutation;
  CoxeterWord word;
};

/// Minimal element of the conjugacy class with the given cycle type: cycles
/// packed left to right over {0, ..., N-m_1-1} in increasing length order,
/// fixed points in the tail. The returned word is strictly increasing.
inline MinimalElement minimal_element(const CycleType& ct) {
  const std::size_t n = ct.degree();
  std::vector<std::vector<Point>> cycles;
  std::vector<std::uint32_t> word;
  Point start = 0;
  for (std::size_t len = 2; len <= ct.counts().size(); ++len) {
    for (std::uint64_t c = 0; c < ct.count(len); ++c) {
      std::vector<Point> cyc(len);
      std::iota(cyc.begin(), cyc.end(), start);
      // (i i+1 ... i+len-1) = s_i s_{i+1} ... s_{i+len-2} with 1-indexed i.
      for (std::size_t t = 0; t + 1 < len; ++t)
        word.push_back(static_cast<std::uint32_t>(start + 1 + t));
      cycles.push_back(std::move(cyc));
      start += static_cast<Point>(len);
    }
  }
  return {Permutation::from_cycles(n, cycles), CoxeterWord(n, std::move(word))};
}

/// All cycle types of degree n (one per partition of n), ordered by the
/// partition of cycle lengths in reverse lexicographic order, (n) first.
inline std::vector<CycleType> cycle_types_of(std::size_t n) {
  std::vector<CycleType> out;
  detail::for_each_partition(n, [&](const std::vector<std::uint32_t>& parts) {
    std::vector<std::uint64_t> lengths(parts.begin(), parts.end());
    out.push_back(CycleType::from_cycle_lengths(lengths));
  });
  return out;
}

}  // namespace symlim
