#pragma once

// Isomorphism classes of the limit groups of eventually periodic base
// sequences, via supernatural numbers ∏ p^{e_p}, e_p ∈ ℕ ∪ {∞}.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symlim/embedding.hpp"
#include "symlim/errors.hpp"
#include "symlim/numeric.hpp"

namespace symlim {

struct Exponent {
  bool infinite = false;
  std::uint64_t value = 0;

  static Exponent finite(std::uint64_t v) { return {false, v}; }
  static Exponent infinity() { return {true, 0}; }

  std::string str() const { return infinite ? "inf" : std::to_string(value); }

  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Only primes with a nonzero exponent are stored.
struct SupernaturalNumber {
  std::map<std::uint64_t, Exponent> exponents;

  Exponent exponent(std::uint64_t p) const {
    auto it = exponents.find(p);
    return it == exponents.end() ? Exponent::finite(0) : it->second;
  }

  friend bool operator==(const SupernaturalNumber&, const SupernaturalNumber&) = default;
};

namespace detail {

/// Prime factorization by trial division; entries of base sequences are small.
inline std::map<std::uint64_t, std::uint64_t> factorize(std::uint64_t n) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

/// Largest exponent of any prime in any single entry.
inline std::uint64_t max_entry_exponent(const std::vector<std::uint64_t>& entries) {
  std::uint64_t e = 0;
  for (auto n : entries)
    for (const auto& [p, k] : factorize(n)) e = std::max(e, k);
  return e;
}

}  // namespace detail

inline SupernaturalNumber supernatural(const BaseSequence& seq) {
  SupernaturalNumber s;
  for (auto n : seq.prefix())
    for (const auto& [p, k] : detail::factorize(n)) {
      auto& e = s.exponents[p];
      e.value += k;
    }
  for (auto n : seq.tail())
    for (const auto& [p, k] : detail::factorize(n)) s.exponents[p] = Exponent::infinity();
  return s;
}

inline bool isomorphic(const BaseSequence& a, const BaseSequence& b) {
  return supernatural(a) == supernatural(b);
}

/// Smallest j for which N_i' | N_j'' holds whenever it holds for any j.
///
/// deg_p(N_i') <= i·E', with E' the largest prime exponent in one entry of
/// the first sequence. After its prefix (P'' entries) the second sequence
/// multiplies in each tail prime at least once per period L'', so at
/// j = P'' + i·L''·E' every tail prime has exponent >= i·E'. A prime outside
/// the tail stops growing after the prefix. Since N_j'' | N_{j+1}'', testing
/// this single j decides the existential.
inline std::size_t partner_bound(const BaseSequence& first, const BaseSequence& second,
                                 std::size_t i) {
  std::vector<std::uint64_t> entries = first.prefix();
  entries.insert(entries.end(), first.tail().begin(), first.tail().end());
  const std::size_t e = std::max<std::uint64_t>(1, detail::max_entry_exponent(entries));
  return second.prefix().size() + i * second.tail().size() * e;
}

namespace detail {

inline bool divides_into(const BaseSequence& first, const BaseSequence& second, std::size_t k_max) {
  for (std::size_t i = 1; i <= k_max; ++i) {
    const std::size_t j = std::max<std::size_t>(1, partner_bound(first, second, i));
    if (level_order(second, j) % level_order(first, i) != 0) return false;
  }
  return true;
}

}  // namespace detail

/// For every i <= k_max some N_j'' is divisible by N_i', and symmetrically.
inline bool condition_b_check(const BaseSequence& a, const BaseSequence& b, std::size_t k_max) {
  return detail::divides_into(a, b, k_max) && detail::divides_into(b, a, k_max);
}

/// A k_max at which condition_b_check agrees with isomorphic.
///
/// If some prime has a larger exponent in the first sequence than in the
/// second, the second's exponent is finite and at most P''·E'' (prefix
/// length times largest prefix exponent). The first sequence passes that
/// value by i = P' + L'·(P''·E'' + 1): its prefix is exhausted by then, and
/// each further period adds at least one factor of every tail prime.
inline std::size_t sufficient_k_max(const BaseSequence& a, const BaseSequence& b) {
  auto one_way = [](const BaseSequence& first, const BaseSequence& second) {
    const std::size_t e2 = detail::max_entry_exponent(second.prefix());
    return first.prefix().size() + first.tail().size() * (second.prefix().size() * e2 + 1);
  };
  return std::max(one_way(a, b), one_way(b, a));
}

/// Whether N divides some N_k.
inline bool div_member(std::uint64_t n, const BaseSequence& seq) {
  detail::require(n >= 1, "N must be positive");
  const auto s = supernatural(seq);
  for (const auto& [p, k] : detail::factorize(n)) {
    const Exponent e = s.exponent(p);
    if (!e.infinite && e.value < k) return false;
  }
  return true;
}

}  // namespace symlim
