#pragma once

// The extreme characters of the limit group: χ_nat^p, sgn_∞·χ_nat^p and the
// regular (delta) character, plus finite-sample checks of the character
// axioms.

#include <Eigen/Eigenvalues>

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "symlim/embedding.hpp"
#include "symlim/errors.hpp"
#include "symlim/numeric.hpp"

namespace symlim {

struct CharacterSpec {
  enum class Kind { NatPower, SgnNatPower, Delta };

  Kind kind = Kind::NatPower;
  unsigned p = 0;  // unused for Delta

  static CharacterSpec nat_power(unsigned p) { return {Kind::NatPower, p}; }
  static CharacterSpec sgn_nat_power(unsigned p) { return {Kind::SgnNatPower, p}; }
  static CharacterSpec delta() { return {Kind::Delta, 0}; }

  std::string name() const {
    switch (kind) {
      case Kind::NatPower: return "nat_power";
      case Kind::SgnNatPower: return "sgn_nat_power";
      case Kind::Delta: return "delta";
    }
    return {};
  }

  friend bool operator==(const CharacterSpec&, const CharacterSpec&) = default;
};

inline Rational evaluate(const CharacterSpec& spec, const GroupElement& g) {
  switch (spec.kind) {
    case CharacterSpec::Kind::NatPower:
      return pow(chi_nat(g), spec.p);
    case CharacterSpec::Kind::SgnNatPower:
      return sgn_infinity(g) * pow(chi_nat(g), spec.p);
    case CharacterSpec::Kind::Delta:
      return g.is_identity() ? 1 : 0;
  }
  return 0;
}

struct GramCheck {
  double min_eigenvalue;
  bool pass;
};

/// Gram matrix [χ(g_i g_j^{-1})]; pass iff its smallest eigenvalue >= -tol.
inline GramCheck gram_psd_check(const CharacterSpec& spec, const std::vector<GroupElement>& elements,
                                double tol = 1e-8, std::size_t cap = kDefaultPointCap) {
  const auto n = static_cast<Eigen::Index>(elements.size());
  if (n == 0) return {0.0, true};
  std::vector<GroupElement> inverses;
  inverses.reserve(elements.size());
  for (const auto& g : elements) inverses.push_back(inverse(g));
  Eigen::MatrixXd gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      gram(i, j) = to_double(evaluate(spec, multiply(elements[i], inverses[j], cap)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
  const double lo = solver.eigenvalues().minCoeff();
  return {lo, lo >= -tol};
}

/// χ(gh) == χ(hg) exactly for every pair.
inline bool centrality_check(const CharacterSpec& spec,
                             const std::vector<std::pair<GroupElement, GroupElement>>& pairs,
                             std::size_t cap = kDefaultPointCap) {
  for (const auto& [g, h] : pairs)
    if (evaluate(spec, multiply(g, h, cap)) != evaluate(spec, multiply(h, g, cap))) return false;
  return true;
}

/// max over {χ_nat^p, sgn_∞·χ_nat^p : 1 <= p <= p_max} of |χ(g)|, exactly.
inline Rational max_character_value(const GroupElement& g, unsigned p_max) {
  detail::require(!g.is_identity(), "the maximum identity needs a non-identity element");
  Rational best = 0;
  for (unsigned p = 1; p <= p_max; ++p) {
    for (auto spec : {CharacterSpec::nat_power(p), CharacterSpec::sgn_nat_power(p)}) {
      const Rational v = abs(evaluate(spec, g));
      if (v > best) best = v;
    }
  }
  return best;
}

inline bool max_character_identity(const GroupElement& g, unsigned p_max) {
  return max_character_value(g, p_max) == chi_nat(g);
}

}  // namespace symlim
