#pragma once

// Finite truncations of the odometer model. A level-K point is a digit
// string (x_1, ..., x_K) with 0 <= x_i < n_i, identified with the integer
// x_1 + n_1 x_2 + n_1 n_2 x_3 + ... in X_{N_K}. At that level the odometer
// O (add one with carry, all-max wrapping to all-zero) is the full cycle
// x -> x + 1 mod N_K.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symlim/embedding.hpp"
#include "symlim/errors.hpp"
#include "symlim/numeric.hpp"
#include "symlim/permgroup.hpp"

namespace symlim {

struct TruncatedPoint {
  std::vector<std::uint64_t> digits;
  friend bool operator==(const TruncatedPoint&, const TruncatedPoint&) = default;
};

inline TruncatedPoint make_point(const BaseSequence& seq, std::vector<std::uint64_t> digits) {
  for (std::size_t i = 0; i < digits.size(); ++i)
    detail::require(digits[i] < seq.factor(i + 1), "digit " + std::to_string(i + 1) + " out of range");
  return {std::move(digits)};
}

inline std::size_t encode(const BaseSequence& seq, const TruncatedPoint& x) {
  std::size_t value = 0, scale = 1;
  for (std::size_t i = 0; i < x.digits.size(); ++i) {
    value += x.digits[i] * scale;
    scale *= seq.factor(i + 1);
  }
  return value;
}

inline TruncatedPoint decode(const BaseSequence& seq, std::size_t level, std::size_t value) {
  TruncatedPoint x;
  for (std::size_t i = 1; i <= level; ++i) {
    x.digits.push_back(value % seq.factor(i));
    value /= seq.factor(i);
  }
  return x;
}

/// Add one to x_1 and carry; the all-max point maps to all zeros.
inline TruncatedPoint odometer_step(const BaseSequence& seq, TruncatedPoint x) {
  for (std::size_t i = 0; i < x.digits.size(); ++i) {
    if (x.digits[i] + 1 < seq.factor(i + 1)) {
      ++x.digits[i];
      return x;
    }
    x.digits[i] = 0;
  }
  return x;
}

/// A permutation of X_{N_K} viewed as a measure-preserving map of the
/// truncated digit space.
class LevelAutomorphism {
public:
  LevelAutomorphism(BaseSequence seq, std::size_t level, Permutation action)
      : seq_(std::move(seq)), level_(level), action_(std::move(action)) {
    detail::require(level_ >= 1, "levels start at 1");
    detail::require(level_order(seq_, level_) == action_.degree(),
                    "action degree does not match N_K");
  }

  static LevelAutomorphism identity(const BaseSequence& seq, std::size_t level,
                                    std::size_t cap = kDefaultPointCap) {
    return {seq, level, Permutation::identity(level_points(seq, level, cap))};
  }

  static LevelAutomorphism from_element(const GroupElement& g, std::size_t level,
                                        std::size_t cap = kDefaultPointCap) {
    return {g.sequence(), level, embed(g, level, cap)};
  }

  const BaseSequence& sequence() const { return seq_; }
  std::size_t level() const { return level_; }
  const Permutation& action() const { return action_; }
  std::size_t points() const { return action_.degree(); }
  std::size_t operator()(std::size_t x) const { return action_(Point(x)); }

  TruncatedPoint operator()(const TruncatedPoint& x) const {
    return decode(seq_, level_, action_(Point(encode(seq_, x))));
  }

  /// Same map viewed at a finer level (acting trivially on the new digits).
  LevelAutomorphism at_level(std::size_t level, std::size_t cap = kDefaultPointCap) const {
    detail::require(level >= level_, "cannot restrict to a coarser level");
    const std::size_t n = level_points(seq_, level, cap);
    return {seq_, level, block_embed(action_, n / points())};
  }

  LevelAutomorphism inverse() const { return {seq_, level_, action_.inverse()}; }

  friend LevelAutomorphism operator*(const LevelAutomorphism& a, const LevelAutomorphism& b) {
    detail::require(a.seq_ == b.seq_ && a.level_ == b.level_, "automorphisms at different levels");
    return {a.seq_, a.level_, a.action_ * b.action_};
  }

  friend bool operator==(const LevelAutomorphism&, const LevelAutomorphism&) = default;

private:
  BaseSequence seq_;
  std::size_t level_;
  Permutation action_;
};

/// Periodic odometer acting on the first j digits of level-K points
/// (identity on digits j+1..K).
inline LevelAutomorphism periodic_odometer(const BaseSequence& seq, std::size_t j, std::size_t level,
                                           std::size_t cap = kDefaultPointCap) {
  detail::require(j >= 1 && j <= level, "need 1 <= j <= K");
  const std::size_t n = level_points(seq, level, cap);
  std::vector<Point> im(n);
  for (std::size_t x = 0; x < n; ++x) {
    TruncatedPoint pt = decode(seq, level, x);
    TruncatedPoint head{{pt.digits.begin(), pt.digits.begin() + std::ptrdiff_t(j)}};
    head = odometer_step(seq, head);
    std::copy(head.digits.begin(), head.digits.end(), pt.digits.begin());
    im[x] = static_cast<Point>(encode(seq, pt));
  }
  return {seq, level, Permutation(std::move(im))};
}

inline LevelAutomorphism odometer(const BaseSequence& seq, std::size_t level,
                                  std::size_t cap = kDefaultPointCap) {
  return periodic_odometer(seq, level, level, cap);
}

/// d(σ, x): the representative in [0, N_K) of the exponent with
/// σ(x) = O^d(x). O is x -> x + 1 mod N_K on encodings.
inline std::size_t degree(const LevelAutomorphism& sigma, std::size_t x) {
  const std::size_t n = sigma.points();
  return (sigma(x) + n - x) % n;
}

inline std::size_t degree(const LevelAutomorphism& sigma, const TruncatedPoint& x) {
  detail::require(x.digits.size() == sigma.level(), "point is at a different level");
  return degree(sigma, encode(sigma.sequence(), x));
}

/// (d(γσ, x) - d(γ, σx) - d(σ, x)) mod N_K.
inline std::size_t cocycle_residual(const LevelAutomorphism& gamma, const LevelAutomorphism& sigma,
                                    std::size_t x) {
  detail::require(gamma.sequence() == sigma.sequence() && gamma.level() == sigma.level(),
                  "cocycle needs automorphisms at the same level");
  const std::size_t n = sigma.points();
  const std::size_t lhs = degree(gamma * sigma, x);
  const std::size_t rhs = (degree(gamma, sigma(x)) + degree(sigma, x)) % n;
  return (lhs + n - rhs) % n;
}

/// ν(x : α(x) ≠ β(x)), computed at the finer of the two levels.
inline Rational rho(const LevelAutomorphism& alpha, const LevelAutomorphism& beta,
                    std::size_t cap = kDefaultPointCap) {
  detail::require(alpha.sequence() == beta.sequence(), "automorphisms of different sequences");
  const std::size_t k = std::max(alpha.level(), beta.level());
  const auto a = alpha.at_level(k, cap), b = beta.at_level(k, cap);
  std::size_t differ = 0;
  for (std::size_t x = 0; x < a.points(); ++x) differ += a(x) != b(x);
  return Rational(BigInt(differ), BigInt(a.points()));
}

/// ν(x : σx = x).
inline Rational fixed_fraction(const LevelAutomorphism& sigma) {
  std::size_t fixed = 0;
  for (std::size_t x = 0; x < sigma.points(); ++x) fixed += sigma(x) == x;
  return Rational(BigInt(fixed), BigInt(sigma.points()));
}

// ---------------------------------------------------------------------------
// Approximation of S_{N_p} inside the digits q+1..r.
//
// With M = N_r / N_q = N_p·m + rem, the level-r space splits into the tower
// B_0, ..., B_{M-1} (cylinders on digits q+1..r along T = O^{N_q}), grouped
// into the N_p blocks E_k = B_{km} ∪ ... ∪ B_{(k+1)m-1}. The remainder
// B_{N_p m}, ..., B_{M-1} is left out.

class ConjugatingConstruction {
public:
  static constexpr std::size_t kOutside = static_cast<std::size_t>(-1);

  ConjugatingConstruction(BaseSequence seq, std::size_t p, std::size_t q, std::size_t r,
                       std::size_t cap = kDefaultPointCap)
      : seq_(std::move(seq)), p_(p), q_(q), r_(r) {
    detail::require(p >= 1 && p < q && q < r, "need 1 <= p < q < r");
    np_ = level_points(seq_, p, cap);
    nq_ = level_points(seq_, q, cap);
    nr_ = level_points(seq_, r, cap);
    tower_ = nr_ / nq_;
    detail::require(tower_ > np_, "need N_r / N_q > N_p");
    m_ = tower_ / np_;
    rem_ = tower_ % np_;

    // Tower index of each point: B_i is the cylinder whose digits q+1..r
    // agree with those of T^i(0).
    const auto big_t = power(odometer(seq_, r, cap).action(), static_cast<long long>(nq_));
    std::vector<std::size_t> label_of_tail(tower_);
    Point orbit = 0;
    for (std::size_t i = 0; i < tower_; ++i, orbit = big_t(orbit)) label_of_tail[orbit / nq_] = i;
    tower_index_.resize(nr_);
    for (std::size_t x = 0; x < nr_; ++x) tower_index_[x] = label_of_tail[x / nq_];

    block_.resize(nr_);
    for (std::size_t x = 0; x < nr_; ++x) {
      const std::size_t i = tower_index_[x];
      block_[x] = i < np_ * m_ ? i / m_ : kOutside;
    }

    // qT: T on B_0..B_{M-2}, T^{1-M} on B_{M-1}.
    const auto t_back = power(big_t, 1 - static_cast<long long>(tower_));
    std::vector<Point> qt(nr_);
    for (std::size_t x = 0; x < nr_; ++x)
      qt[x] = tower_index_[x] + 1 < tower_ ? big_t(Point(x)) : t_back(Point(x));
    tower_shift_ = Permutation(std::move(qt));

    // q^pT: qT^m on E_0..E_{N_p-2}, qT^{m(1-N_p)} on E_{N_p-1}, identity off E.
    const auto fwd = power(tower_shift_, static_cast<long long>(m_));
    const auto back = power(tower_shift_, static_cast<long long>(m_) * (1 - static_cast<long long>(np_)));
    std::vector<Point> bs(nr_);
    for (std::size_t x = 0; x < nr_; ++x) {
      if (block_[x] == kOutside)
        bs[x] = Point(x);
      else
        bs[x] = block_[x] + 1 < np_ ? fwd(Point(x)) : back(Point(x));
    }
    block_shift_ = Permutation(std::move(bs));

    head_odometer_ = periodic_odometer(seq_, p_, r_, cap).action();

    // Θ on E_i ∩ A_j: (^p_0 O)^{i-j} (q^pT)^{j-i}, where A_j is the cylinder
    // on digits 1..p labelled by the j-th iterate of the level-p odometer.
    std::vector<Point> th(nr_);
    for (std::size_t x = 0; x < nr_; ++x) {
      if (block_[x] == kOutside) {
        th[x] = Point(x);
        continue;
      }
      const std::size_t i = block_[x], j = head_index(x);
      Point y = Point(x);
      for (std::size_t s = 0; s < (j + np_ - i) % np_; ++s) y = block_shift_(y);
      for (std::size_t s = 0; s < (i + np_ - j) % np_; ++s) y = head_odometer_(y);
      th[x] = y;
    }
    theta_ = Permutation(std::move(th));
  }

  std::size_t n_p() const { return np_; }
  std::size_t n_q() const { return nq_; }
  std::size_t n_r() const { return nr_; }
  /// N_r / N_q.
  std::size_t tower_height() const { return tower_; }
  std::size_t m() const { return m_; }
  std::size_t rem() const { return rem_; }
  Rational bound() const { return Rational(1, BigInt(m_)); }

  LevelAutomorphism theta() const { return wrap(theta_); }
  LevelAutomorphism tower_shift() const { return wrap(tower_shift_); }
  LevelAutomorphism block_shift() const { return wrap(block_shift_); }

  /// Index k of the block E_k containing x, or kOutside.
  std::size_t block_of(std::size_t x) const { return block_[x]; }

  /// ν(E_k), exact.
  Rational block_measure(std::size_t k) const {
    std::size_t count = 0;
    for (auto b : block_) count += b == k;
    return Rational(BigInt(count), BigInt(nr_));
  }

  /// 𝔍(σ) for σ ∈ S_{N_p}: on E_i it is (q^pT)^{k_i(σ)}, where k_i(σ) is the
  /// level-p degree of σ at the point labelled i; identity off E.
  LevelAutomorphism jay(const Permutation& sigma) const {
    detail::require(sigma.degree() == np_, "sigma must lie in S_{N_p}");
    const LevelAutomorphism at_p(seq_, p_, sigma);
    std::vector<std::size_t> k(np_);
    for (std::size_t i = 0; i < np_; ++i) k[i] = degree(at_p, head_point(i));
    std::vector<Point> im(nr_);
    for (std::size_t x = 0; x < nr_; ++x) {
      Point y = Point(x);
      if (block_[x] != kOutside)
        for (std::size_t s = 0; s < k[block_[x]]; ++s) y = block_shift_(y);
      im[x] = y;
    }
    return wrap(Permutation(std::move(im)));
  }

  /// Θ σ Θ^{-1} with σ ∈ S_{N_p} embedded at level r.
  LevelAutomorphism conjugated(const Permutation& sigma) const {
    detail::require(sigma.degree() == np_, "sigma must lie in S_{N_p}");
    return wrap(theta_ * block_embed(sigma, nr_ / np_) * theta_.inverse());
  }

  /// ρ(ΘσΘ^{-1}, 𝔍(σ)).
  Rational defect(const Permutation& sigma) const { return rho(conjugated(sigma), jay(sigma)); }

  /// Every σ ∈ S_{N_p} (lexicographic image tables) with 𝔍(σ).
  std::vector<std::pair<Permutation, LevelAutomorphism>> homomorphism_table(
      std::size_t max_np = 8) const {
    if (np_ > max_np)
      throw CapExceeded("S_{N_p} with N_p = " + std::to_string(np_) + " is too large to tabulate");
    std::vector<std::pair<Permutation, LevelAutomorphism>> table;
    auto images = Permutation::identity(np_).images();
    do {
      Permutation sigma(images);
      auto image = jay(sigma);
      table.emplace_back(std::move(sigma), std::move(image));
    } while (std::next_permutation(images.begin(), images.end()));
    return table;
  }

private:
  LevelAutomorphism wrap(Permutation perm) const { return {seq_, r_, std::move(perm)}; }

  /// Level-p point (encoding) reached from 0 by i steps of the level-p odometer.
  std::size_t head_point(std::size_t i) const {
    TruncatedPoint pt = decode(seq_, p_, 0);
    for (std::size_t s = 0; s < i; ++s) pt = odometer_step(seq_, pt);
    return encode(seq_, pt);
  }

  /// Label j of the cylinder A_j on digits 1..p containing x.
  std::size_t head_index(std::size_t x) const {
    const std::size_t head = x % np_;
    for (std::size_t j = 0; j < np_; ++j)
      if (head_point(j) == head) return j;
    return kOutside;
  }

  BaseSequence seq_;
  std::size_t p_, q_, r_;
  std::size_t np_ = 0, nq_ = 0, nr_ = 0, tower_ = 0, m_ = 0, rem_ = 0;
  std::vector<std::size_t> tower_index_;
  std::vector<std::size_t> block_;
  Permutation tower_shift_;
  Permutation block_shift_;
  Permutation head_odometer_;
  Permutation theta_;
};

inline ConjugatingConstruction conjugating_construction(const BaseSequence& seq, std::size_t p,
                                                  std::size_t q, std::size_t r,
                                                  std::size_t cap = kDefaultPointCap) {
  return ConjugatingConstruction(seq, p, q, r, cap);
}

}  // namespace symlim
