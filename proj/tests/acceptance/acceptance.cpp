// Acceptance runner: one PASS/FAIL line per criterion. `--only N` runs a
// single criterion; the exit status is non-zero if any selected criterion
// fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "symlim.hpp"

using namespace symlim;

namespace {

// Frozen output of calibrate_roichman(8, 0.9, 0.05, 4.0).
constexpr double kRoichmanA = 0.8991;
constexpr double kRoichmanB = 0.8;

struct Outcome {
  bool pass;
  std::string detail;
};

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* format, double v) {
  char buf[128];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

GroupElement level_one_transposition(const BaseSequence& seq) {
  return make_element(seq, 1, Permutation::transposition(2, 0, 1));
}

Outcome standard_representation_convergence() {
  const Stopwatch clock;
  const auto seq = BaseSequence::periodic({2});
  const auto run = convergence_run(seq, level_one_transposition(seq), Partition({1}), false, {2, 3, 4, 5, 6});
  double worst_chi = 0.0, worst_dev = 0.0;
  for (const auto& row : run.rows) {
    const double expected = 1.0 / double(row.n - 1);
    worst_chi = std::max(worst_chi, std::abs(row.chi + expected));
    worst_dev = std::max(worst_dev, std::abs(row.deviation - expected));
  }
  bool target_zero = true;
  for (const auto& row : run.rows) target_zero = target_zero && row.target == 0;
  const double t = clock.seconds();
  return {worst_chi <= 1e-9 && worst_dev <= 1e-9 && target_zero && run.rows.back().n == 64 && t < 10.0,
          "max |chi + 1/(N-1)| = " + fmt("%.3g", worst_chi) + ", max |dev - 1/(N-1)| = " +
              fmt("%.3g", worst_dev) + ", " + fmt("%.2f s", t)};
}

Outcome two_box_convergence() {
  const Stopwatch clock;
  const auto seq = BaseSequence::periodic({2, 3});
  const auto sigma = make_element(seq, 2, Permutation::from_cycles(6, {{0, 1, 2}}));
  RunCaps caps;
  caps.dimension = 50'000;
  const auto run = convergence_run(seq, sigma, Partition({1, 1}), false, {2, 3, 4, 5, 6}, caps);
  const auto& last = run.rows.back();
  const bool dims_ok = dimension_hook(last.lambda) < 50'000;
  const double t = clock.seconds();
  return {chi_nat(sigma) == Rational(1, 2) && last.target == Rational(1, 4) && last.n >= 96 &&
              last.deviation <= 0.05 && dims_ok && t < 60.0,
          "N = " + std::to_string(last.n) + ", chi = " + float_string(last.chi) + ", target 1/4, deviation " +
              fmt("%.4g", last.deviation) + ", " + fmt("%.2f s", t)};
}

Outcome two_row_divergence() {
  const auto seq = BaseSequence::periodic({2});
  const auto rows = divergence_run(seq, level_one_transposition(seq), ShapeRule::two_row(2), {3, 4, 5});
  const bool decreasing = rows[0].chi_abs > rows[1].chi_abs && rows[1].chi_abs > rows[2].chi_abs;
  return {decreasing && rows[2].n == 32 && rows[2].chi_abs < 0.1,
          "|chi| at N = 8, 16, 32: " + float_string(rows[0].chi_abs) + ", " + float_string(rows[1].chi_abs) +
              ", " + float_string(rows[2].chi_abs)};
}

double vector_defect(const SparseVector& a, const SparseVector& b) {
  double worst = 0.0;
  for (const auto& [t, c] : a.coefficients) worst = std::max(worst, std::abs(c - b[t]));
  for (const auto& [t, c] : b.coefficients) worst = std::max(worst, std::abs(c - a[t]));
  return worst;
}

Outcome yor_relations() {
  double worst = 0.0;
  std::size_t checks = 0;
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const YoungOrthogonalForm form(lambda);
      for (std::uint32_t i = 1; i < n; ++i)
        for (std::uint32_t j = i; j < n; ++j)
          for (std::size_t t = 0; t < form.dimension(); ++t) {
            const auto v = SparseVector::basis(t);
            if (j == i) {
              worst = std::max(worst, vector_defect(form.apply_word(CoxeterWord(n, {i, i}), v), v));
            } else if (j == i + 1) {
              worst = std::max(worst, vector_defect(form.apply_word(CoxeterWord(n, {i, j, i}), v),
                                                    form.apply_word(CoxeterWord(n, {j, i, j}), v)));
            } else {
              worst = std::max(worst, vector_defect(form.apply_word(CoxeterWord(n, {i, j}), v),
                                                    form.apply_word(CoxeterWord(n, {j, i}), v)));
            }
            ++checks;
          }
    }
  return {worst < 1e-10, std::to_string(checks) + " relation checks, max defect " + fmt("%.3g", worst)};
}

Outcome transpose_rule() {
  double worst = 0.0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const YoungOrthogonalForm form(lambda), dual(transpose(lambda));
      for (const auto& ct : cycle_types_of(n)) {
        const auto p = minimal_element(ct).permutation;
        worst = std::max(worst, std::abs(dual.normalized_character(p) - sign(p) * form.normalized_character(p)));
      }
    }
  return {worst <= 1e-9, "max |chi_T - sgn chi| = " + fmt("%.3g", worst)};
}

Outcome dimension_identities() {
  bool ok = true;
  std::string failures;
  for (std::size_t n = 1; n <= 8; ++n) {
    BigInt sum = 0;
    for (const auto& lambda : partitions_of(n)) {
      const BigInt dim = dimension_hook(lambda);
      sum += dim * dim;
      if (dim != enumerate_tableaux(lambda).size()) {
        ok = false;
        failures += " count mismatch at N=" + std::to_string(n);
      }
    }
    if (sum != oracle::factorial(n)) {
      ok = false;
      failures += " sum of squares wrong at N=" + std::to_string(n);
    }
  }
  return {ok, ok ? "sum dim^2 = N! and hook = tableau count for N <= 8" : failures};
}

Outcome minimal_element_formula() {
  double worst = 0.0;
  std::size_t entries = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const YoungOrthogonalForm form(lambda);
      for (const auto& ct : cycle_types_of(n)) {
        const auto word = minimal_element(ct).word;
        for (std::size_t t = 0; t < form.dimension(); ++t, ++entries)
          worst = std::max(worst, std::abs(diag_matrix_element_minimal(form.tableaux()[t], ct) -
                                           std::abs(form.diagonal_entry(word, t))));
      }
    }
  return {worst <= 1e-9, std::to_string(entries) + " diagonal entries, max error " + fmt("%.3g", worst)};
}

Outcome fixed_point_trace() {
  std::mt19937_64 rng(2024);
  const std::vector<BaseSequence> seqs{BaseSequence::periodic({2, 3}), BaseSequence::periodic({2}),
                                       BaseSequence({3}, {2, 2})};
  std::size_t checks = 0, bad = 0;
  for (int i = 0; i < 100; ++i) {
    const auto& seq = seqs[i % seqs.size()];
    std::size_t top = 1;
    while (level_order(seq, top + 1) <= 48) ++top;
    const auto g = oracle::random_element(seq, 1 + i % top, rng);
    for (std::size_t k = g.level(); k <= top; ++k, ++checks)
      bad += fixed_fraction(LevelAutomorphism::from_element(g, k)) != chi_nat(g);
  }
  return {bad == 0, std::to_string(checks) + " exact comparisons, " + std::to_string(bad) + " mismatches"};
}

Outcome cocycle_identity() {
  std::mt19937_64 rng(2025);
  const std::vector<BaseSequence> seqs{BaseSequence::periodic({2, 3}), BaseSequence::periodic({2}),
                                       BaseSequence({3}, {4})};
  std::size_t checks = 0, bad = 0;
  for (int i = 0; i < 20; ++i) {
    const auto& seq = seqs[i % seqs.size()];
    std::size_t top = 1;
    while (level_order(seq, top + 1) <= 48) ++top;
    const std::size_t k = 1 + i % top;
    const auto n = level_points(seq, k);
    const LevelAutomorphism g(seq, k, oracle::random_permutation(n, rng));
    const LevelAutomorphism s(seq, k, oracle::random_permutation(n, rng));
    for (std::size_t x = 0; x < n; ++x, ++checks) bad += cocycle_residual(g, s, x) != 0;
  }
  return {bad == 0, std::to_string(checks) + " points, " + std::to_string(bad) + " non-zero residuals"};
}

Outcome conjugating_construction_check() {
  struct Case {
    BaseSequence seq;
    std::size_t m, rem;
  };
  const std::vector<Case> cases{{BaseSequence({2}, {3}), 4, 1}, {BaseSequence::periodic({2}), 2, 0}};
  bool ok = true;
  std::ostringstream detail;
  for (const auto& c : cases) {
    const auto a = conjugating_construction(c.seq, 1, 2, 4);
    ok = ok && a.m() == c.m && a.rem() == c.rem;
    ok = ok && a.theta() * a.theta() == LevelAutomorphism::identity(c.seq, 4);
    const auto table = a.homomorphism_table();
    std::map<Permutation, std::size_t> position;
    for (const auto& [s, js] : table) position.emplace(s, position.size());
    Rational worst = 0;
    for (const auto& [s, js] : table) {
      const Rational d = a.defect(s);
      worst = std::max(worst, d);
      ok = ok && d <= a.bound() && (c.rem != 0 || d == 0);
      for (const auto& [t, jt] : table) ok = ok && table[position.at(s * t)].second == js * jt;
    }
    detail << "N_r=" << a.n_r() << " m=" << a.m() << " rem=" << a.rem() << " max rho=" << fraction_string(worst)
           << " bound=" << fraction_string(a.bound()) << "; ";
  }
  return {ok, detail.str() + "theta^2 = id, J multiplicative"};
}

Outcome gram_psd() {
  std::mt19937_64 rng(2026);
  const auto seq = BaseSequence::periodic({2, 3});
  std::vector<GroupElement> elements;
  for (int i = 0; i < 20; ++i) elements.push_back(oracle::random_element(seq, 1 + i % 3, rng));
  double lo = 1e300;
  bool ok = true;
  for (unsigned p = 0; p <= 3; ++p) {
    const auto r = gram_psd_check(CharacterSpec::nat_power(p), elements, 1e-8);
    ok = ok && r.pass;
    lo = std::min(lo, r.min_eigenvalue);
  }
  return {ok, "min eigenvalue over p = 0..3: " + fmt("%.3g", lo)};
}

Outcome max_character() {
  std::mt19937_64 rng(2027);
  const auto seq = BaseSequence::periodic({2, 3});
  int tested = 0, bad = 0;
  while (tested < 50) {
    const auto g = oracle::random_element(seq, 1 + tested % 2, rng);
    if (g.is_identity()) continue;
    ++tested;
    bad += !max_character_identity(g, 6);
  }
  return {bad == 0, std::to_string(tested) + " elements, " + std::to_string(bad) + " failures"};
}

Outcome classification() {
  const auto twos = BaseSequence::periodic({2}), fours = BaseSequence::periodic({4});
  const auto two_three = BaseSequence::periodic({2, 3}), sixes = BaseSequence::periodic({6});
  bool ok = isomorphic(twos, fours) && isomorphic(two_three, sixes) && !isomorphic(twos, two_three);

  std::mt19937_64 rng(2028);
  std::vector<BaseSequence> rules;
  for (int i = 0; i < 20; ++i) rules.push_back(oracle::random_sequence(rng));
  std::size_t pairs = 0, iso_pairs = 0, disagreements = 0;
  for (const auto& a : rules)
    for (const auto& b : rules) {
      const bool cond_a = isomorphic(a, b);
      const bool cond_b = condition_b_check(a, b, sufficient_k_max(a, b));
      bool cond_c = true;
      for (std::uint64_t n = 1; n <= 1000 && cond_c; ++n) cond_c = div_member(n, a) == div_member(n, b);
      ++pairs;
      iso_pairs += cond_a;
      disagreements += cond_a != cond_b || cond_a != cond_c;
    }
  ok = ok && disagreements == 0;
  return {ok, "worked pairs as stated; " + std::to_string(pairs) + " rule pairs (" + std::to_string(iso_pairs) +
                  " isomorphic), " + std::to_string(disagreements) + " disagreements"};
}

Outcome roichman_regression() {
  const auto cases = roichman_cases(8);
  std::size_t held = 0;
  std::string first_failure;
  for (const auto& c : cases) {
    const auto r = roichman_bound(c.chi, c.lambda, c.support, kRoichmanA, kRoichmanB);
    if (r.satisfied)
      ++held;
    else if (first_failure.empty())
      first_failure = "; first failure lambda=" + partition_string(c.lambda) + " class=" +
                      cycle_type_string(c.cycle_type) + " |chi|=" + float_string(std::abs(c.chi)) +
                      " bound=" + float_string(r.bound);
  }
  return {held == cases.size(), "a=" + float_string(kRoichmanA) + " b=" + float_string(kRoichmanB) + ": " +
                                    std::to_string(held) + "/" + std::to_string(cases.size()) + " cases hold" +
                                    first_failure};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"convergence, standard representation", standard_representation_convergence},
      {"convergence, |mu| = 2", two_box_convergence},
      {"divergence, (N-2,2)", two_row_divergence},
      {"YOR relations", yor_relations},
      {"transpose rule", transpose_rule},
      {"dimension identities", dimension_identities},
      {"minimal-element product formula", minimal_element_formula},
      {"fixed-point trace", fixed_point_trace},
      {"cocycle identity", cocycle_identity},
      {"conjugating construction", conjugating_construction_check},
      {"Gram PSD", gram_psd},
      {"max-character identity", max_character},
      {"classification", classification},
      {"Roichman-bound regression", roichman_regression}};

  std::set<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      selected.insert(std::stoul(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--only N]...\n", argv[0]);
      return 2;
    }
  }

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected.empty() && !selected.count(i + 1)) continue;
    Outcome outcome{false, ""};
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += !outcome.pass;
    std::printf("criterion %2zu [%s] %s: %s\n", i + 1, outcome.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), outcome.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
