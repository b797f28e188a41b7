#pragma once

// The inductive system S_{N_1} ⊂ S_{N_2} ⊂ ... of block-diagonal embeddings
// determined by an eventually periodic base sequence n_1, n_2, ...
//
// Points of X_{N_j} are identified with pairs (x1, x2) ∈ X_{N_k} × X_{N_j/N_k}
// via x = x1 + N_k·x2, and σ ∈ S_{N_k} acts on the first coordinate only.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symlim/errors.hpp"
#include "symlim/numeric.hpp"
#include "symlim/permgroup.hpp"

namespace symlim {

inline constexpr std::size_t kDefaultPointCap = 1'000'000;

/// n_1, n_2, ... given as a finite prefix followed by a repeating tail.
class BaseSequence {
public:
  BaseSequence() : tail_{2} {}

  BaseSequence(std::vector<std::uint64_t> prefix, std::vector<std::uint64_t> tail)
      : prefix_(std::move(prefix)), tail_(std::move(tail)) {
    detail::require(!tail_.empty(), "base sequence tail must be non-empty");
    for (auto n : prefix_) detail::require(n > 1, "base sequence entries must be > 1");
    for (auto n : tail_) detail::require(n > 1, "base sequence entries must be > 1");
  }

  /// Purely periodic sequence (t_1, ..., t_L, t_1, ...).
  static BaseSequence periodic(std::vector<std::uint64_t> tail) {
    return BaseSequence({}, std::move(tail));
  }

  const std::vector<std::uint64_t>& prefix() const { return prefix_; }
  const std::vector<std::uint64_t>& tail() const { return tail_; }

  /// n_k for k >= 1.
  std::uint64_t factor(std::size_t k) const {
    detail::require(k >= 1, "levels start at 1");
    if (k <= prefix_.size()) return prefix_[k - 1];
    return tail_[(k - 1 - prefix_.size()) % tail_.size()];
  }

  friend bool operator==(const BaseSequence&, const BaseSequence&) = default;

private:
  std::vector<std::uint64_t> prefix_;
  std::vector<std::uint64_t> tail_;
};

/// N_k = n_1 · ... · n_k, exact.
inline BigInt level_order(const BaseSequence& seq, std::size_t k) {
  detail::require(k >= 1, "levels start at 1");
  BigInt n = 1;
  for (std::size_t i = 1; i <= k; ++i) n *= seq.factor(i);
  return n;
}

/// N_k as a machine integer; CapExceeded when N_k > cap.
inline std::size_t level_points(const BaseSequence& seq, std::size_t k,
                                std::size_t cap = kDefaultPointCap) {
  const BigInt n = level_order(seq, k);
  if (n > cap)
    throw CapExceeded("level " + std::to_string(k) + " has " + n.str() +
                      " points, above the cap of " + std::to_string(cap));
  return static_cast<std::size_t>(n);
}

/// Smallest level k with N_k >= n (the level where a degree-n object fits).
inline std::size_t level_of_order(const BaseSequence& seq, const BigInt& n) {
  std::size_t k = 1;
  while (level_order(seq, k) < n) ++k;
  return k;
}

/// Block-diagonal image of σ ∈ S_{N} in S_{N·multiplicity}.
inline Permutation block_embed(const Permutation& sigma, std::size_t multiplicity) {
  const std::size_t n = sigma.degree();
  std::vector<Point> im(n * multiplicity);
  for (std::size_t x2 = 0; x2 < multiplicity; ++x2)
    for (std::size_t x1 = 0; x1 < n; ++x1)
      im[x1 + n * x2] = static_cast<Point>(sigma(Point(x1)) + n * x2);
  return Permutation(std::move(im));
}

/// An element of the inductive limit, stored at its minimal level.
class GroupElement {
public:
  /// Identity of the limit group (level 1).
  explicit GroupElement(BaseSequence seq)
      : seq_(std::move(seq)), level_(1),
        perm_(Permutation::identity(level_points(seq_, 1))) {}

  const BaseSequence& sequence() const { return seq_; }
  std::size_t level() const { return level_; }
  const Permutation& permutation() const { return perm_; }
  bool is_identity() const { return perm_.is_identity(); }

  /// Canonical representatives make equality in the limit plain equality.
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
  GroupElement(BaseSequence seq, std::size_t level, Permutation perm)
      : seq_(std::move(seq)), level_(level), perm_(std::move(perm)) {}

  BaseSequence seq_;
  std::size_t level_;
  Permutation perm_;

  friend GroupElement canonicalize(const BaseSequence&, std::size_t, const Permutation&);
};

/// Finds the least level k' <= k at which perm is the embedded image of some
/// π ∈ S_{N_k'}, and returns π tagged with k'.
inline GroupElement canonicalize(const BaseSequence& seq, std::size_t k,
                                 const Permutation& perm) {
  detail::require(k >= 1, "levels start at 1");
  detail::require(level_order(seq, k) == perm.degree(),
                  "permutation degree " + std::to_string(perm.degree()) +
                      " does not match N_" + std::to_string(k));
  std::size_t block = 1;
  for (std::size_t lower = 1; lower < k; ++lower) {
    block *= seq.factor(lower);
    bool periodic = true;
    for (std::size_t x = 0; x < perm.degree() && periodic; ++x) {
      const std::size_t x1 = x % block;
      const Point y = perm(Point(x));
      periodic = y >= x - x1 && y < x - x1 + block && y - (x - x1) == perm(Point(x1));
    }
    if (periodic) {
      std::vector<Point> im(perm.images().begin(), perm.images().begin() + block);
      return GroupElement(seq, lower, Permutation(std::move(im)));
    }
  }
  return GroupElement(seq, k, perm);
}

/// Realizes g as a permutation of X_{N_j}.
inline Permutation embed(const GroupElement& g, std::size_t j,
                         std::size_t cap = kDefaultPointCap) {
  detail::require(j >= g.level(), "cannot embed to a level below the element's level");
  const std::size_t nj = level_points(g.sequence(), j, cap);
  return block_embed(g.permutation(), nj / g.permutation().degree());
}

/// Cycle type of g at level j, scaled symbolically (nothing is materialized).
inline CycleType embedded_cycle_type(const GroupElement& g, std::size_t j) {
  detail::require(j >= g.level(), "cannot embed to a level below the element's level");
  const BigInt factor = level_order(g.sequence(), j) / level_order(g.sequence(), g.level());
  auto counts = cycle_type(g.permutation()).counts();
  BigInt degree = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const BigInt scaled = factor * counts[i];
    if (!fits_u64(scaled)) throw CapExceeded("embedded cycle counts overflow 64 bits");
    counts[i] = static_cast<std::uint64_t>(scaled);
    degree += scaled * (i + 1);
  }
  if (!fits_u64(degree)) throw CapExceeded("embedded degree overflows 64 bits");
  return CycleType(static_cast<std::uint64_t>(degree), std::move(counts));
}

inline GroupElement identity_element(const BaseSequence& seq) { return GroupElement(seq); }

inline GroupElement make_element(const BaseSequence& seq, std::size_t k, Permutation perm) {
  return canonicalize(seq, k, perm);
}

/// Product gh (h acts first), formed at the larger of the two levels.
inline GroupElement multiply(const GroupElement& g, const GroupElement& h,
                             std::size_t cap = kDefaultPointCap) {
  detail::require(g.sequence() == h.sequence(), "elements of different inductive systems");
  const std::size_t k = std::max(g.level(), h.level());
  return canonicalize(g.sequence(), k, embed(g, k, cap) * embed(h, k, cap));
}

inline GroupElement inverse(const GroupElement& g) {
  return canonicalize(g.sequence(), g.level(), g.permutation().inverse());
}

/// χ_nat(g) = 1 - #supp(σ)/N_k; independent of the representing level.
inline Rational chi_nat(const GroupElement& g) {
  return Rational(1) - Rational(BigInt(support_size(g.permutation())),
                               level_order(g.sequence(), g.level()));
}

/// Eventual value of sgn_{N_j}(g) = sgn_{N_k}(g)^{N_j/N_k} as j → ∞.
inline int sgn_infinity(const GroupElement& g) {
  if (sign(g.permutation()) == 1) return 1;
  const auto& seq = g.sequence();
  // Any even factor beyond level k makes every later exponent even.
  for (auto n : seq.tail())
    if (n % 2 == 0) return 1;
  for (std::size_t i = g.level() + 1; i <= seq.prefix().size(); ++i)
    if (seq.factor(i) % 2 == 0) return 1;
  return -1;
}

}  // namespace symlim
