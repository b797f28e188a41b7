#pragma once

// Finite-N experiments along sequences of partitions: near-row shapes
// (N - |μ|, μ) and their transposes, whose normalized characters approach
// χ_nat^{|μ|} (resp. sgn_∞·χ_nat^{|μ|}), and shapes whose second row grows,
// whose characters decay to 0 away from the identity.

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "symlim/characters.hpp"
#include "symlim/embedding.hpp"
#include "symlim/errors.hpp"
#include "symlim/partitions.hpp"
#include "symlim/yor.hpp"

namespace symlim {

struct RunCaps {
  std::size_t points = kDefaultPointCap;
  std::size_t dimension = kDefaultDimensionCap;
};

struct ConvergenceRow {
  std::size_t level;
  std::size_t n;
  Partition lambda;
  double chi;
  Rational target;
  double deviation;
};

struct ConvergenceRun {
  BaseSequence sequence;
  GroupElement sigma;
  Partition mu;
  bool transposed;
  std::vector<std::size_t> levels;
  std::vector<ConvergenceRow> rows;

  double final_deviation() const { return rows.empty() ? 0.0 : rows.back().deviation; }
  double max_deviation() const {
    double m = 0.0;
    for (const auto& r : rows) m = std::max(m, r.deviation);
    return m;
  }
  /// Last deviation no larger than the first.
  bool monotone_trend() const {
    return rows.size() < 2 || rows.back().deviation <= rows.front().deviation;
  }
};

/// Target character of the class with tail μ: χ_nat^{|μ|}, times sgn_∞ for
/// the transposed class.
inline CharacterSpec convergence_target(const Partition& mu, bool transposed) {
  const auto p = static_cast<unsigned>(mu.size());
  return transposed ? CharacterSpec::sgn_nat_power(p) : CharacterSpec::nat_power(p);
}

inline ConvergenceRun convergence_run(const BaseSequence& seq, const GroupElement& sigma,
                                      const Partition& mu, bool transposed,
                                      const std::vector<std::size_t>& levels, RunCaps caps = {}) {
  detail::require(sigma.sequence() == seq, "sigma belongs to a different base sequence");
  ConvergenceRun run{seq, sigma, mu, transposed, levels, {}};
  const Rational target = evaluate(convergence_target(mu, transposed), sigma);
  for (auto k : levels) {
    detail::require(k >= sigma.level(), "level " + std::to_string(k) + " is below sigma's level");
    const std::size_t n = level_points(seq, k, caps.points);
    if (n < mu.size() + mu.first())
      throw InvalidArgument("level " + std::to_string(k) + " (N = " + std::to_string(n) +
                            ") is too small for mu");
    Partition lambda = build_near_row(mu, n);
    if (transposed) lambda = transpose(lambda);
    const YoungOrthogonalForm form(lambda, caps.dimension);
    const double chi = form.normalized_character(embed(sigma, k, caps.points));
    run.rows.push_back({k, n, std::move(lambda), chi, target, std::abs(chi - to_double(target))});
  }
  return run;
}

/// Rule producing λ ⊢ N for the divergence experiments.
struct ShapeRule {
  std::string name;
  std::function<Partition(std::size_t)> shape;

  /// (N - r, r) for a fixed r.
  static ShapeRule two_row(std::uint32_t r) {
    return {"two_row:" + std::to_string(r), [r](std::size_t n) {
              detail::require(n >= 2 * std::size_t{r}, "N too small for a second row of " +
                                                           std::to_string(r));
              return Partition({static_cast<std::uint32_t>(n - r), r});
            }};
  }

  /// (N - r, r) with r = floor(ln N): second row unbounded, dimension
  /// polynomial in N.
  static ShapeRule log_two_row() {
    return {"log_two_row", [](std::size_t n) {
              const auto r = static_cast<std::uint32_t>(std::floor(std::log(double(n))));
              detail::require(r >= 1 && n >= 2 * std::size_t{r}, "N too small for log rule");
              return Partition({static_cast<std::uint32_t>(n - r), r});
            }};
  }
};

struct DivergenceRow {
  std::size_t level;
  std::size_t n;
  Partition lambda;
  double chi_abs;
};

inline std::vector<DivergenceRow> divergence_run(const BaseSequence& seq, const GroupElement& sigma,
                                                 const ShapeRule& rule,
                                                 const std::vector<std::size_t>& levels,
                                                 RunCaps caps = {}) {
  detail::require(sigma.sequence() == seq, "sigma belongs to a different base sequence");
  std::vector<DivergenceRow> rows;
  for (auto k : levels) {
    detail::require(k >= sigma.level(), "level " + std::to_string(k) + " is below sigma's level");
    const std::size_t n = level_points(seq, k, caps.points);
    Partition lambda = rule.shape(n);
    const YoungOrthogonalForm form(lambda, caps.dimension);
    const double chi = form.normalized_character(embed(sigma, k, caps.points));
    rows.push_back({k, n, std::move(lambda), std::abs(chi)});
  }
  return rows;
}

}  // namespace symlim
