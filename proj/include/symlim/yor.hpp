#pragma once

// Young's orthogonal form of the irreducible representation R_λ of S_N.
//
// Basis vectors v_T are indexed by standard tableaux T of shape λ (in the
// order of enumerate_tableaux). A Coxeter generator s_i acts by
//   v_T                          if i, i+1 share a row of T,
//  -v_T                          if i, i+1 share a column of T,
//   (1/d) v_T + sqrt(1-1/d²) v_T' otherwise,
// with d = c_T(i+1) - c_T(i) the difference of contents and T' the tableau
// with i and i+1 exchanged.

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symlim/errors.hpp"
#include "symlim/numeric.hpp"
#include "symlim/partitions.hpp"
#include "symlim/permgroup.hpp"

namespace symlim {

inline constexpr std::size_t kDefaultDimensionCap = 50'000;

/// Coordinates in the tableau basis; absent indices are zero. Ordered so
/// that every reduction over a vector is deterministic.
struct SparseVector {
  std::map<std::size_t, double> coefficients;

  static SparseVector basis(std::size_t t) { return SparseVector{{{t, 1.0}}}; }

  double operator[](std::size_t t) const {
    auto it = coefficients.find(t);
    return it == coefficients.end() ? 0.0 : it->second;
  }
  void add(std::size_t t, double c) {
    if (c != 0.0) coefficients[t] += c;
  }
  std::size_t nonzeros() const { return coefficients.size(); }
};

class YoungOrthogonalForm {
public:
  explicit YoungOrthogonalForm(Partition lambda, std::size_t dimension_cap = kDefaultDimensionCap)
      : shape_(std::move(lambda)) {
    const BigInt dim = dimension_hook(shape_);
    if (dim > dimension_cap)
      throw CapExceeded("dim of shape is " + dim.str() + ", above the cap of " +
                        std::to_string(dimension_cap));
    tableaux_ = enumerate_tableaux(shape_, dimension_cap);
    index_.reserve(tableaux_.size());
    for (std::size_t t = 0; t < tableaux_.size(); ++t) index_.emplace(tableaux_[t].row_word(), t);
  }

  const Partition& shape() const { return shape_; }
  std::size_t degree() const { return shape_.size(); }
  std::size_t dimension() const { return tableaux_.size(); }
  const std::vector<Tableau>& tableaux() const { return tableaux_; }

  std::size_t index_of(const Tableau& t) const {
    detail::require(t.shape() == shape_, "tableau has a different shape");
    return index_.at(t.row_word());
  }

  /// R_λ(s_i) v, 1 <= i <= N-1.
  SparseVector apply_generator(std::uint32_t i, const SparseVector& v) const {
    detail::require(i >= 1 && i < degree(), "Coxeter index out of range: " + std::to_string(i));
    SparseVector out;
    for (const auto& [t, c] : v.coefficients) act(i, t, c, out);
    return out;
  }

  /// R_λ(s_{j_1} ... s_{j_r}) v; the rightmost letter acts first.
  SparseVector apply_word(const CoxeterWord& w, SparseVector v) const {
    detail::require(w.degree() == degree(), "word degree does not match the shape");
    for (auto it = w.indices().rbegin(); it != w.indices().rend(); ++it) {
      SparseVector next;
      for (const auto& [t, c] : v.coefficients) act(*it, t, c, next);
      v = std::move(next);
    }
    return v;
  }

  /// ⟨R_λ(w) v_T, v_T⟩.
  double diagonal_entry(const CoxeterWord& w, std::size_t t) const {
    return apply_word(w, SparseVector::basis(t))[t];
  }

  /// Tr R_λ(σ), summed over tableaux in index order.
  double trace(const Permutation& sigma) const {
    detail::require(sigma.degree() == degree(), "permutation degree does not match the shape");
    const CoxeterWord w = bubble_sort_word(sigma);
    double sum = 0.0;
    for (std::size_t t = 0; t < dimension(); ++t) sum += diagonal_entry(w, t);
    return sum;
  }

  double normalized_character(const Permutation& sigma) const {
    return trace(sigma) / static_cast<double>(dimension());
  }

  /// Dense matrix of R_λ(σ), column t = R_λ(σ) v_t. Small shapes only.
  std::vector<std::vector<double>> matrix(const Permutation& sigma) const {
    const CoxeterWord w = bubble_sort_word(sigma);
    std::vector<std::vector<double>> m(dimension(), std::vector<double>(dimension(), 0.0));
    for (std::size_t t = 0; t < dimension(); ++t)
      for (const auto& [r, c] : apply_word(w, SparseVector::basis(t)).coefficients) m[r][t] = c;
    return m;
  }

private:
  struct WordHash {
    std::size_t operator()(const std::vector<std::uint32_t>& w) const {
      return boost::hash_range(w.begin(), w.end());
    }
  };

  void act(std::uint32_t i, std::size_t t, double c, SparseVector& out) const {
    const Tableau& T = tableaux_[t];
    if (T.row(i) == T.row(i + 1)) {
      out.add(t, c);
    } else if (T.col(i) == T.col(i + 1)) {
      out.add(t, -c);
    } else {
      const double d = T.content(i + 1) - T.content(i);
      auto swapped = T.row_word();
      std::swap(swapped[i - 1], swapped[i]);
      out.add(t, c / d);
      out.add(index_.at(swapped), c * std::sqrt(1.0 - 1.0 / (d * d)));
    }
  }

  Partition shape_;
  std::vector<Tableau> tableaux_;
  std::unordered_map<std::vector<std::uint32_t>, std::size_t, WordHash> index_;
};

inline SparseVector apply_generator(const Partition& lambda, std::uint32_t i, const SparseVector& v) {
  return YoungOrthogonalForm(lambda).apply_generator(i, v);
}

/// χ_λ(σ) = Tr R_λ(σ) / dim λ.
inline double normalized_character(const Partition& lambda, const Permutation& sigma,
                                   std::size_t dimension_cap = kDefaultDimensionCap) {
  detail::require(sigma.degree() == lambda.size(), "permutation degree does not match |lambda|");
  return YoungOrthogonalForm(lambda, dimension_cap).normalized_character(sigma);
}

/// |⟨R_λ(σ_m) v_T, v_T⟩| for the minimal element σ_m of the class ct, as the
/// product of 1/|a_{i+1} - a_i| over the letters s_i of its increasing word
/// whose i and i+1 lie in different rows and different columns of T.
inline double diag_matrix_element_minimal(const Tableau& t, const CycleType& ct) {
  detail::require(ct.degree() == t.size(), "cycle type degree does not match the tableau");
  const auto word = minimal_element(ct).word;
  double product = 1.0;
  for (auto i : word.indices()) {
    if (t.row(i) != t.row(i + 1) && t.col(i) != t.col(i + 1))
      product /= std::abs(t.content(i + 1) - t.content(i));
  }
  return product;
}

inline double diag_matrix_element_minimal(const Partition& lambda, const Tableau& t,
                                          const CycleType& ct) {
  detail::require(t.shape() == lambda, "tableau has a different shape");
  return diag_matrix_element_minimal(t, ct);
}

// ---------------------------------------------------------------------------
// Roichman-type bound |χ_λ(σ)| <= max(λ_1/N, λ'_1/N, a)^{b·#supp σ}.

struct RoichmanCheck {
  double chi;
  double bound;
  bool satisfied;
};

inline double roichman_base(const Partition& lambda) {
  const double n = static_cast<double>(lambda.size());
  return std::max(lambda.first() / n, transpose(lambda).first() / n);
}

inline RoichmanCheck roichman_bound(double chi, const Partition& lambda, std::size_t support,
                                    double a, double b) {
  detail::require(lambda.size() >= 4, "the bound is stated for N >= 4");
  detail::require(a > 0.0 && a < 1.0 && b > 0.0, "need a in (0,1) and b > 0");
  const double bound = std::pow(std::max(roichman_base(lambda), a), b * double(support));
  // 1e-12 absorbs rounding in the floating-point trace.
  return {chi, bound, std::abs(chi) <= bound + 1e-12};
}

inline RoichmanCheck roichman_bound(const Partition& lambda, const Permutation& sigma, double a,
                                    double b) {
  detail::require(lambda.size() >= 4, "the bound is stated for N >= 4");
  return roichman_bound(normalized_character(lambda, sigma), lambda, support_size(sigma), a, b);
}

struct RoichmanCase {
  Partition lambda;
  CycleType cycle_type;
  double chi;
  std::size_t support;
  double base;
};

struct RoichmanCalibration {
  double a;
  double b;
  std::vector<RoichmanCase> cases;
  /// Cases no pair (a, b) with a < 1, b > 0 can cover: |χ| = 1 while
  /// max(λ_1, λ'_1) < N.
  std::vector<RoichmanCase> infeasible;
};

/// All (λ, class) pairs with 4 <= N <= n_max, σ ≠ id.
inline std::vector<RoichmanCase> roichman_cases(std::size_t n_max) {
  std::vector<RoichmanCase> out;
  for (std::size_t n = 4; n <= n_max; ++n) {
    const auto classes = cycle_types_of(n);
    for (const auto& lambda : partitions_of(n)) {
      const YoungOrthogonalForm form(lambda);
      for (const auto& ct : classes) {
        if (ct.support_size() == 0) continue;
        const auto sigma = minimal_element(ct).permutation;
        out.push_back({lambda, ct, form.normalized_character(sigma), ct.support_size(),
                       roichman_base(lambda)});
      }
    }
  }
  return out;
}

/// Smallest a making every feasible case hold for the given b.
inline double roichman_required_a(const std::vector<RoichmanCase>& cases, double b) {
  double a = 0.0;
  for (const auto& c : cases) {
    const double mag = std::abs(c.chi);
    if (mag <= 1e-12 || mag >= 1.0 - 1e-12) continue;
    if (mag <= std::pow(c.base, b * double(c.support)) + 1e-12) continue;
    a = std::max(a, std::pow(mag, 1.0 / (b * double(c.support))));
  }
  return a;
}

/// Scans b over a grid of step b_step up to b_max and keeps the largest b
/// whose required a stays at or below a_ceiling; a is then rounded up to a
/// multiple of 1e-4.
inline RoichmanCalibration calibrate_roichman(std::size_t n_max = 8, double a_ceiling = 0.9,
                                              double b_step = 0.05, double b_max = 4.0) {
  RoichmanCalibration cal{0.0, 0.0, roichman_cases(n_max), {}};
  for (const auto& c : cal.cases)
    if (std::abs(c.chi) >= 1.0 - 1e-12 && c.base < 1.0) cal.infeasible.push_back(c);
  const auto steps = static_cast<int>(std::floor(b_max / b_step + 0.5));
  for (int s = 1; s <= steps; ++s) {
    const double b = s * b_step;
    const double a = roichman_required_a(cal.cases, b);
    if (a > a_ceiling) break;
    cal.b = b;
    cal.a = std::max(1e-4, std::ceil(a * 1e4) / 1e4);
  }
  return cal;
}

}  // namespace symlim
