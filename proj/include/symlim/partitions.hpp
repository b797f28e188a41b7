#pragma once

// Partitions, Young diagrams and standard Young tableaux.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "symlim/detail/partition_gen.hpp"
#include "symlim/errors.hpp"
#include "symlim/numeric.hpp"

namespace symlim {

inline constexpr std::size_t kDefaultTableauCap = 1'000'000;

/// Weakly decreasing list of positive parts. The empty partition is allowed.
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      detail::require(parts_[i] >= 1, "partition parts must be positive");
      detail::require(i == 0 || parts_[i] <= parts_[i - 1],
                      "partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<std::uint32_t> parts)
      : Partition(std::vector<std::uint32_t>(parts)) {}

  const std::vector<std::uint32_t>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  std::uint32_t operator[](std::size_t i) const { return parts_[i]; }
  /// λ_1, or 0 for the empty partition.
  std::uint32_t first() const { return parts_.empty() ? 0 : parts_.front(); }

  std::size_t size() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<std::uint32_t> parts_;
};

/// λ' with λ'_i = #{j : λ_j >= i}.
inline Partition transpose(const Partition& lambda) {
  std::vector<std::uint32_t> out(lambda.first(), 0);
  for (auto part : lambda.parts())
    for (std::uint32_t i = 0; i < part; ++i) ++out[i];
  return Partition(std::move(out));
}

/// All partitions of n in reverse lexicographic order, (n) first.
inline std::vector<Partition> partitions_of(std::size_t n) {
  std::vector<Partition> out;
  detail::for_each_partition(n, [&](const std::vector<std::uint32_t>& parts) {
    out.emplace_back(parts);
  });
  return out;
}

/// Hook-length formula: N! / ∏ hook(p, q).
inline BigInt dimension_hook(const Partition& lambda) {
  const auto conj = transpose(lambda);
  BigInt num = 1, den = 1;
  for (std::size_t n = 2; n <= lambda.size(); ++n) num *= n;
  for (std::size_t p = 0; p < lambda.length(); ++p)
    for (std::size_t q = 0; q < lambda[p]; ++q)
      den *= (lambda[p] - q - 1) + (conj[q] - p - 1) + 1;
  return num / den;
}

/// λ with its first row removed: (λ_2, λ_3, ...).
inline Partition class_tail(const Partition& lambda) {
  if (lambda.empty()) return {};
  return Partition(std::vector<std::uint32_t>(lambda.parts().begin() + 1, lambda.parts().end()));
}

/// λ with its first column removed: every part decremented, zeros dropped.
inline Partition hat_class_tail(const Partition& lambda) {
  std::vector<std::uint32_t> out;
  for (auto part : lambda.parts())
    if (part > 1) out.push_back(part - 1);
  return Partition(std::move(out));
}

/// (N - |μ|, μ_1, μ_2, ...); requires N - |μ| >= μ_1.
inline Partition build_near_row(const Partition& mu, std::size_t n) {
  const std::size_t m = mu.size();
  detail::require(n >= m && n - m >= mu.first() && n - m >= 1,
                  "N = " + std::to_string(n) + " is too small for a first row above mu");
  std::vector<std::uint32_t> parts{static_cast<std::uint32_t>(n - m)};
  parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
  return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------

/// Standard Young tableau. Entries are 1..N; rows and columns reported
/// 1-indexed by content_and_position, stored 0-indexed.
class Tableau {
public:
  /// From explicit rows (top to bottom). Validates shape and standardness.
  explicit Tableau(const std::vector<std::vector<std::uint32_t>>& rows) {
    std::vector<std::uint32_t> parts;
    for (const auto& r : rows) parts.push_back(static_cast<std::uint32_t>(r.size()));
    shape_ = Partition(parts);
    const std::size_t n = shape_.size();
    row_of_.assign(n, 0);
    col_of_.assign(n, 0);
    std::vector<bool> seen(n, false);
    for (std::size_t p = 0; p < rows.size(); ++p) {
      for (std::size_t q = 0; q < rows[p].size(); ++q) {
        const auto e = rows[p][q];
        detail::require(e >= 1 && e <= n && !seen[e - 1], "tableau entries must be 1..N once each");
        seen[e - 1] = true;
        row_of_[e - 1] = static_cast<std::uint32_t>(p);
        col_of_[e - 1] = static_cast<std::uint32_t>(q);
        detail::require(q == 0 || rows[p][q - 1] < e, "tableau rows must increase");
        detail::require(p == 0 || rows[p - 1][q] < e, "tableau columns must increase");
      }
    }
  }

  /// From the row index (0-based) of each entry 1..N, which must be a
  /// lattice word for the given shape.
  static Tableau from_row_word(const Partition& shape, const std::vector<std::uint32_t>& row_word) {
    Tableau t;
    t.shape_ = shape;
    t.row_of_ = row_word;
    t.col_of_.resize(row_word.size());
    std::vector<std::uint32_t> filled(shape.length(), 0);
    for (std::size_t i = 0; i < row_word.size(); ++i) t.col_of_[i] = filled[row_word[i]]++;
    return t;
  }

  const Partition& shape() const { return shape_; }
  std::size_t size() const { return row_of_.size(); }

  /// 0-based row and column of entry i (1-based).
  std::uint32_t row(std::size_t i) const { return row_of_[i - 1]; }
  std::uint32_t col(std::size_t i) const { return col_of_[i - 1]; }
  int content(std::size_t i) const { return int(col_of_[i - 1]) - int(row_of_[i - 1]); }

  const std::vector<std::uint32_t>& row_word() const { return row_of_; }

  std::vector<std::vector<std::uint32_t>> rows() const {
    std::vector<std::vector<std::uint32_t>> out(shape_.length());
    for (std::size_t p = 0; p < out.size(); ++p) out[p].resize(shape_[p]);
    for (std::size_t i = 0; i < row_of_.size(); ++i)
      out[row_of_[i]][col_of_[i]] = static_cast<std::uint32_t>(i + 1);
    return out;
  }

  /// Row-reading word: rows concatenated top to bottom.
  std::vector<std::uint32_t> reading_word() const {
    std::vector<std::uint32_t> out;
    for (const auto& r : rows()) out.insert(out.end(), r.begin(), r.end());
    return out;
  }

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.shape_ == b.shape_ && a.row_of_ == b.row_of_;
  }

private:
  Tableau() = default;

  Partition shape_;
  std::vector<std::uint32_t> row_of_;
  std::vector<std::uint32_t> col_of_;
};

struct ContentPosition {
  int content;
  std::uint32_t row;     // 1-based
  std::uint32_t column;  // 1-based
};

inline ContentPosition content_and_position(const Tableau& t, std::size_t i) {
  detail::require(i >= 1 && i <= t.size(), "tableau entry out of range");
  return {t.content(i), t.row(i) + 1, t.col(i) + 1};
}

/// All standard tableaux of shape λ in lexicographic order of their
/// row-reading words. CapExceeded if there are more than cap of them.
inline std::vector<Tableau> enumerate_tableaux(const Partition& lambda,
                                               std::size_t cap = kDefaultTableauCap) {
  const BigInt dim = dimension_hook(lambda);
  if (dim > cap)
    throw CapExceeded("shape has " + dim.str() + " standard tableaux, above the cap of " +
                      std::to_string(cap));
  const std::size_t n = lambda.size();
  std::vector<std::vector<std::uint32_t>> words;
  words.reserve(static_cast<std::size_t>(dim));
  std::vector<std::uint32_t> word(n), filled(lambda.length(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      words.push_back(word);
      return;
    }
    for (std::size_t r = 0; r < lambda.length(); ++r) {
      if (filled[r] < lambda[r] && (r == 0 || filled[r - 1] > filled[r])) {
        word[i] = static_cast<std::uint32_t>(r);
        ++filled[r];
        self(self, i + 1);
        --filled[r];
      }
    }
  };
  rec(rec, 0);

  std::vector<Tableau> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(Tableau::from_row_word(lambda, w));
  std::vector<std::vector<std::uint32_t>> keys;
  keys.reserve(out.size());
  for (const auto& t : out) keys.push_back(t.reading_word());
  std::vector<std::size_t> order(out.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
  std::vector<Tableau> sorted;
  sorted.reserve(out.size());
  for (auto i : order) sorted.push_back(std::move(out[i]));
  return sorted;
}

}  // namespace symlim
