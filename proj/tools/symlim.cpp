// symlim: batch front end for the character and classification experiments.
//
// Exit codes: 0 success, 1 invalid input or configuration, 2 resource cap.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "symlim.hpp"

using namespace symlim;

namespace {

struct Global {
  std::optional<std::size_t> cap_dim;
  std::optional<std::size_t> cap_points;
  std::optional<double> tol;
  std::string out;
  std::string format = "csv";
  std::string config_path;
  Json config = Json::object();

  std::size_t dimension_cap() const {
    return cap_dim.value_or(config.contains("caps") ? config["caps"].value("dimension", kDefaultDimensionCap)
                                                    : kDefaultDimensionCap);
  }
  std::size_t point_cap() const {
    return cap_points.value_or(config.contains("caps") ? config["caps"].value("points", kDefaultPointCap)
                                                       : kDefaultPointCap);
  }
  RunCaps caps() const { return {point_cap(), dimension_cap()}; }
};

/// Command-line value if given, else the config entry, else the fallback.
template <class T>
T pick(const std::optional<T>& cli, const Json& config, const char* key, T fallback) {
  if (cli) return *cli;
  if (config.contains(key)) return config.at(key).get<T>();
  return fallback;
}

std::vector<std::uint64_t> number_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      detail::require(used == item.size(), "bad number: " + item);
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad number: " + item);
    }
  }
  return out;
}

BaseSequence sequence_from(const std::optional<std::string>& cli, const Json& config, const char* key,
                           const char* flag) {
  if (cli) return parse_base_sequence(*cli);
  if (config.contains(key)) return base_sequence_from_json(config.at(key));
  throw InvalidArgument(std::string("missing base sequence (") + flag + ")");
}

struct SigmaOptions {
  std::optional<std::size_t> level;
  std::optional<std::string> cycles;
  std::optional<std::string> images;
};

void add_sigma_options(CLI::App* cmd, SigmaOptions& s) {
  cmd->add_option("--sigma-level", s.level, "Level k at which sigma is given");
  cmd->add_option("--sigma-cycles", s.cycles, "Lengths of the non-trivial cycles of sigma, e.g. 3 or 2,2");
  cmd->add_option("--sigma-images", s.images, "Image table of sigma on 0..N_k-1");
}

/// σ from --sigma-images, or the minimal element of the class with the given
/// non-trivial cycles (fixed points fill the rest of X_{N_k}).
GroupElement sigma_from(const SigmaOptions& s, const Json& config, const BaseSequence& seq, std::size_t cap) {
  Json spec = config.value("sigma", Json::object());
  const std::size_t level = s.level ? *s.level : spec.value("level", std::size_t{1});
  const std::size_t n = level_points(seq, level, cap);
  if (s.images || (!s.cycles && spec.contains("images"))) {
    std::vector<Point> im;
    if (s.images)
      for (auto v : number_list(*s.images)) im.push_back(static_cast<Point>(v));
    else
      im = spec.at("images").get<std::vector<Point>>();
    return make_element(seq, level, Permutation(std::move(im)));
  }
  std::vector<std::uint64_t> lengths;
  if (s.cycles)
    lengths = number_list(*s.cycles);
  else if (spec.contains("cycles"))
    lengths = spec.at("cycles").get<std::vector<std::uint64_t>>();
  else
    throw InvalidArgument("sigma needs --sigma-cycles or --sigma-images");
  std::uint64_t moved = 0;
  for (auto len : lengths) {
    detail::require(len >= 2, "cycle lengths of sigma must be >= 2");
    moved += len;
  }
  detail::require(moved <= n, "sigma's cycles do not fit in N_k = " + std::to_string(n));
  lengths.insert(lengths.end(), n - moved, 1);
  return make_element(seq, level, minimal_element(CycleType::from_cycle_lengths(lengths)).permutation);
}

std::vector<std::size_t> levels_from(const std::optional<std::string>& cli, const Json& config) {
  std::vector<std::size_t> out;
  if (cli) {
    for (auto v : number_list(*cli)) out.push_back(static_cast<std::size_t>(v));
  } else if (config.contains("levels")) {
    out = config.at("levels").get<std::vector<std::size_t>>();
  }
  detail::require(!out.empty(), "no levels given (--levels)");
  return out;
}

/// Writes a table and a summary. With --out DIR the table goes to
/// DIR/<name>.<format> and the summary to DIR/<name>_summary.json, and the
/// summary is echoed on stdout. Otherwise the table goes to stdout, and a
/// CSV table leaves the summary for stderr.
class Report {
public:
  Report(const Global& g, std::string name) : g_(g), name_(std::move(name)) {
    detail::require(g_.format == "csv" || g_.format == "json", "--format must be csv or json");
  }

  void header(std::vector<std::string> columns) { columns_ = std::move(columns); }
  void row(std::vector<std::string> cells, Json json_row) {
    rows_.push_back(std::move(cells));
    json_rows_.push_back(std::move(json_row));
  }
  Json& summary() { return summary_; }

  void emit() const {
    std::ostringstream table;
    if (g_.format == "csv") {
      write_csv_row(table, columns_);
      for (const auto& r : rows_) write_csv_row(table, r);
    } else {
      Json doc{{"summary", summary_}, {"rows", json_rows_}};
      table << doc.dump(2) << '\n';
    }
    if (g_.out.empty()) {
      std::cout << table.str();
      if (g_.format == "csv") std::cerr << summary_.dump(2) << '\n';
      return;
    }
    std::filesystem::create_directories(g_.out);
    const auto dir = std::filesystem::path(g_.out);
    write_file(dir / (name_ + "." + g_.format), table.str());
    write_file(dir / (name_ + "_summary.json"), summary_.dump(2) + "\n");
    std::cout << summary_.dump(2) << '\n';
  }

private:
  static void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write " + path.string());
    f << text;
  }

  const Global& g_;
  std::string name_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
  Json json_rows_ = Json::array();
  Json summary_ = Json::object();
};

// --- character ------------------------------------------------------------

struct CharacterArgs {
  std::optional<std::size_t> n;
};

void cmd_character(const Global& g, const CharacterArgs& args) {
  const std::size_t n = pick(args.n, g.config, "n", std::size_t{0});
  detail::require(n >= 1, "character needs --n >= 1");
  const auto shapes = partitions_of(n);
  const auto classes = cycle_types_of(n);
  for (const auto& lambda : shapes)
    if (dimension_hook(lambda) > g.dimension_cap())
      throw CapExceeded("dim " + partition_string(lambda) + " = " + dimension_hook(lambda).str() +
                        " exceeds --cap-dim " + std::to_string(g.dimension_cap()));
  Report report(g, "character");
  std::vector<std::string> columns{"lambda"};
  for (const auto& ct : classes) columns.push_back(cycle_type_string(ct));
  report.header(columns);
  for (const auto& lambda : shapes) {
    const YoungOrthogonalForm form(lambda, g.dimension_cap());
    std::vector<std::string> cells{partition_string(lambda)};
    Json values = Json::array();
    for (const auto& ct : classes) {
      const double chi = form.normalized_character(minimal_element(ct).permutation);
      cells.push_back(float_string(chi));
      values.push_back(float_string(chi));
    }
    report.row(std::move(cells), Json{{"lambda", to_json(lambda)}, {"chi", values}});
  }
  Json class_list = Json::array();
  for (const auto& ct : classes) class_list.push_back(cycle_type_string(ct));
  report.summary() = Json{{"n", n}, {"shapes", shapes.size()}, {"classes", class_list}};
  report.emit();
}

// --- converge -------------------------------------------------------------

struct ConvergeArgs {
  std::optional<std::string> seq, mu, levels;
  std::optional<bool> transposed;
  SigmaOptions sigma;
};

void cmd_converge(const Global& g, const ConvergeArgs& args) {
  const auto seq = sequence_from(args.seq, g.config, "sequence", "--seq");
  const auto sigma = sigma_from(args.sigma, g.config, seq, g.point_cap());
  Partition mu;
  if (args.mu) {
    std::vector<std::uint32_t> parts;
    for (auto v : number_list(*args.mu)) parts.push_back(static_cast<std::uint32_t>(v));
    mu = Partition(parts);
  } else if (g.config.contains("mu")) {
    mu = partition_from_json(g.config.at("mu"));
  }
  const bool transposed = pick(args.transposed, g.config, "transposed", false);
  const auto levels = levels_from(args.levels, g.config);
  const double budget = g.tol ? *g.tol : g.config.value("tolerance", 0.05);

  const auto run = convergence_run(seq, sigma, mu, transposed, levels, g.caps());
  Report report(g, "converge");
  report.header({"level", "N", "lambda", "chi", "target", "deviation"});
  for (const auto& r : run.rows)
    report.row({std::to_string(r.level), std::to_string(r.n), partition_string(r.lambda), float_string(r.chi),
                fraction_string(r.target), float_string(r.deviation)},
               Json{{"level", r.level},
                    {"N", r.n},
                    {"lambda", to_json(r.lambda)},
                    {"chi", float_string(r.chi)},
                    {"target", fraction_string(r.target)},
                    {"deviation", float_string(r.deviation)}});
  report.summary() = Json{{"sequence", to_json(seq)},
                          {"sigma", to_json(sigma)},
                          {"mu", to_json(mu)},
                          {"transposed", transposed},
                          {"target", convergence_target(mu, transposed).name()},
                          {"final_deviation", float_string(run.final_deviation())},
                          {"max_deviation", float_string(run.max_deviation())},
                          {"budget", float_string(budget)},
                          {"monotone_trend", run.monotone_trend()},
                          {"pass", run.final_deviation() <= budget}};
  report.emit();
}

// --- diverge --------------------------------------------------------------

struct DivergeArgs {
  std::optional<std::string> seq, levels, rule;
  SigmaOptions sigma;
};

ShapeRule shape_rule(const std::string& name) {
  if (name == "log_two_row") return ShapeRule::log_two_row();
  const std::string prefix = "two_row:";
  if (name.rfind(prefix, 0) == 0) {
    const auto r = number_list(name.substr(prefix.size()));
    detail::require(r.size() == 1 && r[0] >= 1, "two_row:<r> needs one positive r");
    return ShapeRule::two_row(static_cast<std::uint32_t>(r[0]));
  }
  throw InvalidArgument("unknown shape rule: " + name);
}

void cmd_diverge(const Global& g, const DivergeArgs& args) {
  const auto seq = sequence_from(args.seq, g.config, "sequence", "--seq");
  const auto sigma = sigma_from(args.sigma, g.config, seq, g.point_cap());
  const auto rule = shape_rule(pick(args.rule, g.config, "rule", std::string("log_two_row")));
  const auto levels = levels_from(args.levels, g.config);
  const auto rows = divergence_run(seq, sigma, rule, levels, g.caps());
  Report report(g, "diverge");
  report.header({"level", "N", "lambda", "abs_chi"});
  bool decreasing = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (i > 0) decreasing = decreasing && r.chi_abs < rows[i - 1].chi_abs;
    report.row({std::to_string(r.level), std::to_string(r.n), partition_string(r.lambda), float_string(r.chi_abs)},
               Json{{"level", r.level}, {"N", r.n}, {"lambda", to_json(r.lambda)}, {"abs_chi", float_string(r.chi_abs)}});
  }
  report.summary() = Json{{"sequence", to_json(seq)},
                          {"sigma", to_json(sigma)},
                          {"rule", rule.name},
                          {"final_abs_chi", float_string(rows.back().chi_abs)},
                          {"strictly_decreasing", decreasing}};
  report.emit();
}

// --- classify -------------------------------------------------------------

struct ClassifyArgs {
  std::optional<std::string> seq1, seq2;
};

void cmd_classify(const Global& g, const ClassifyArgs& args) {
  const auto a = sequence_from(args.seq1, g.config, "seq1", "--seq1");
  const auto b = sequence_from(args.seq2, g.config, "seq2", "--seq2");
  const auto k_max = sufficient_k_max(a, b);
  const Json out{{"isomorphic", isomorphic(a, b)},
                 {"supernatural", Json::array({to_json(supernatural(a)), to_json(supernatural(b))})},
                 {"condition_b", condition_b_check(a, b, k_max)},
                 {"k_max", k_max}};
  if (!g.out.empty()) {
    std::filesystem::create_directories(g.out);
    std::ofstream(std::filesystem::path(g.out) / "classify.json") << out.dump(2) << '\n';
  }
  std::cout << out.dump(2) << '\n';
}

// --- odometer -------------------------------------------------------------

struct OdometerArgs {
  std::optional<std::string> seq;
  std::optional<std::size_t> p, q, r, cocycle_level, pairs;
  std::optional<std::uint64_t> seed;
};

void cmd_odometer(const Global& g, const OdometerArgs& args) {
  const auto seq = sequence_from(args.seq, g.config, "sequence", "--seq");
  const auto p = pick(args.p, g.config, "p", std::size_t{0});
  const auto q = pick(args.q, g.config, "q", std::size_t{0});
  const auto r = pick(args.r, g.config, "r", std::size_t{0});
  const auto a = conjugating_construction(seq, p, q, r, g.point_cap());
  const auto table = a.homomorphism_table();

  Report report(g, "odometer");
  report.header({"sigma", "rho", "bound", "within_bound"});
  std::map<Permutation, std::size_t> position;
  for (const auto& [s, js] : table) position.emplace(s, position.size());
  bool all_within = true, multiplicative = true;
  Rational worst = 0;
  for (const auto& [s, js] : table) {
    const Rational rho_value = a.defect(s);
    const bool within = rho_value <= a.bound();
    all_within = all_within && within;
    worst = std::max(worst, rho_value);
    for (const auto& [t, jt] : table) multiplicative = multiplicative && table[position.at(s * t)].second == js * jt;
    std::ostringstream images;
    for (std::size_t i = 0; i < s.degree(); ++i) images << (i ? " " : "") << s(Point(i));
    report.row({images.str(), fraction_string(rho_value), fraction_string(a.bound()), within ? "true" : "false"},
               Json{{"sigma", to_json(s)}, {"rho", fraction_string(rho_value)}, {"within_bound", within}});
  }
  const auto theta = a.theta();
  Json summary{{"sequence", to_json(seq)},
               {"p", p},
               {"q", q},
               {"r", r},
               {"N_p", a.n_p()},
               {"N_r", a.n_r()},
               {"tower_height", a.tower_height()},
               {"m", a.m()},
               {"rem", a.rem()},
               {"bound", fraction_string(a.bound())},
               {"max_rho", fraction_string(worst)},
               {"bound_satisfied", all_within},
               {"theta_involution", theta * theta == LevelAutomorphism::identity(seq, r, g.point_cap())},
               {"homomorphism", multiplicative}};
  if (args.cocycle_level || g.config.contains("cocycle_level")) {
    const auto k = pick(args.cocycle_level, g.config, "cocycle_level", std::size_t{1});
    const auto pairs = pick(args.pairs, g.config, "pairs", std::size_t{20});
    std::mt19937_64 rng(pick(args.seed, g.config, "seed", std::uint64_t{1}));
    const auto n = level_points(seq, k, g.point_cap());
    std::vector<Point> im(n);
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < pairs; ++i) {
      auto random_map = [&] {
        for (std::size_t x = 0; x < n; ++x) im[x] = static_cast<Point>(x);
        for (std::size_t x = n; x > 1; --x) std::swap(im[x - 1], im[rng() % x]);
        return LevelAutomorphism(seq, k, Permutation(im));
      };
      const auto gamma = random_map();
      const auto sigma = random_map();
      for (std::size_t x = 0; x < n; ++x) nonzero += cocycle_residual(gamma, sigma, x) != 0;
    }
    summary["cocycle"] = Json{{"level", k}, {"pairs", pairs}, {"points", n}, {"nonzero_residuals", nonzero}};
  }
  report.summary() = summary;
  report.emit();
}

// --- bound-calibrate ------------------------------------------------------

struct CalibrateArgs {
  std::optional<std::size_t> n_max;
  std::optional<double> a_ceiling, b_step, b_max;
};

void cmd_calibrate(const Global& g, const CalibrateArgs& args) {
  const auto n_max = pick(args.n_max, g.config, "n_max", std::size_t{8});
  detail::require(n_max >= 4 && n_max <= 12, "--n-max must be in 4..12");
  const auto cal = calibrate_roichman(n_max, pick(args.a_ceiling, g.config, "a_ceiling", 0.9),
                                      pick(args.b_step, g.config, "b_step", 0.05),
                                      pick(args.b_max, g.config, "b_max", 4.0));
  Report report(g, "bound_calibrate");
  report.header({"N", "lambda", "class", "chi", "support", "bound", "satisfied"});
  std::size_t held = 0;
  for (const auto& c : cal.cases) {
    const auto check = cal.b > 0 ? roichman_bound(c.chi, c.lambda, c.support, cal.a, cal.b)
                                 : RoichmanCheck{c.chi, 0.0, false};
    held += check.satisfied;
    report.row({std::to_string(c.lambda.size()), partition_string(c.lambda), cycle_type_string(c.cycle_type),
                float_string(c.chi), std::to_string(c.support), float_string(check.bound),
                check.satisfied ? "true" : "false"},
               Json{{"lambda", to_json(c.lambda)},
                    {"class", cycle_type_string(c.cycle_type)},
                    {"chi", float_string(c.chi)},
                    {"bound", float_string(check.bound)},
                    {"satisfied", check.satisfied}});
  }
  Json infeasible = Json::array();
  for (const auto& c : cal.infeasible)
    infeasible.push_back(Json{{"lambda", partition_string(c.lambda)}, {"class", cycle_type_string(c.cycle_type)},
                              {"chi", float_string(c.chi)}});
  report.summary() = Json{{"n_max", n_max},
                          {"a", float_string(cal.a)},
                          {"b", float_string(cal.b)},
                          {"cases", cal.cases.size()},
                          {"satisfied", held},
                          {"infeasible", infeasible}};
  report.emit();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characters of inductive limits of symmetric groups: batch experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--cap-dim", g.cap_dim, "Largest irreducible dimension to materialize (default 50000)");
  app.add_option("--cap-points", g.cap_points, "Largest N_k to materialize (default 1000000)");
  app.add_option("--tol", g.tol, "Deviation budget for converge (default 0.05)");
  app.add_option("--out", g.out, "Directory for output files (default: standard output)");
  app.add_option("--format", g.format, "Table format: csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--config", g.config_path, "JSON experiment configuration");

  CharacterArgs character;
  auto* c_cmd = app.add_subcommand("character", "Normalized character table of S_N");
  c_cmd->add_option("--n", character.n, "N");

  ConvergeArgs converge;
  auto* v_cmd = app.add_subcommand("converge", "Characters of (N-|mu|, mu) along a base sequence");
  v_cmd->add_option("--seq", converge.seq, "Base sequence, e.g. 2,3 (periodic) or 12|5 (prefix|tail)");
  v_cmd->add_option("--mu", converge.mu, "Tail partition mu, e.g. 1,1");
  v_cmd->add_option("--levels", converge.levels, "Levels k, e.g. 2,3,4");
  v_cmd->add_flag("--transposed", converge.transposed, "Use the transposed shapes");
  add_sigma_options(v_cmd, converge.sigma);

  DivergeArgs diverge;
  auto* d_cmd = app.add_subcommand("diverge", "Characters along shapes with a growing second row");
  d_cmd->add_option("--seq", diverge.seq, "Base sequence");
  d_cmd->add_option("--levels", diverge.levels, "Levels k");
  d_cmd->add_option("--rule", diverge.rule, "log_two_row or two_row:<r>");
  add_sigma_options(d_cmd, diverge.sigma);

  ClassifyArgs classify;
  auto* k_cmd = app.add_subcommand("classify", "Isomorphism test of two limit groups");
  k_cmd->add_option("--seq1", classify.seq1, "First base sequence");
  k_cmd->add_option("--seq2", classify.seq2, "Second base sequence");

  OdometerArgs odometer;
  auto* o_cmd = app.add_subcommand("odometer", "Conjugating construction and cocycle checks");
  o_cmd->add_option("--seq", odometer.seq, "Base sequence");
  o_cmd->add_option("--p", odometer.p, "p");
  o_cmd->add_option("--q", odometer.q, "q");
  o_cmd->add_option("--r", odometer.r, "r");
  o_cmd->add_option("--cocycle-level", odometer.cocycle_level, "Also check the cocycle identity at this level");
  o_cmd->add_option("--pairs", odometer.pairs, "Random pairs for the cocycle check (default 20)");
  o_cmd->add_option("--seed", odometer.seed, "Seed for the cocycle check (default 1)");

  CalibrateArgs calibrate;
  auto* b_cmd = app.add_subcommand("bound-calibrate", "Calibrate constants of the Roichman-type bound");
  b_cmd->add_option("--n-max", calibrate.n_max, "Largest N (default 8)");
  b_cmd->add_option("--a-ceiling", calibrate.a_ceiling, "Largest admissible a (default 0.9)");
  b_cmd->add_option("--b-step", calibrate.b_step, "Grid step for b (default 0.05)");
  b_cmd->add_option("--b-max", calibrate.b_max, "Largest b scanned (default 4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!g.config_path.empty()) {
      std::ifstream in(g.config_path);
      if (!in) throw InvalidArgument("cannot read config " + g.config_path);
      try {
        g.config = Json::parse(in);
      } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("malformed config: ") + e.what());
      }
      detail::require(g.config.is_object(), "config must be a JSON object");
      if (g.out.empty()) g.out = g.config.value("output", std::string());
    }
    if (c_cmd->parsed()) cmd_character(g, character);
    if (v_cmd->parsed()) cmd_converge(g, converge);
    if (d_cmd->parsed()) cmd_diverge(g, diverge);
    if (k_cmd->parsed()) cmd_classify(g, classify);
    if (o_cmd->parsed()) cmd_odometer(g, odometer);
    if (b_cmd->parsed()) cmd_calibrate(g, calibrate);
  } catch (const CapExceeded& e) {
    std::cerr << "symlim: " << e.what() << '\n';
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "symlim: " << e.what() << '\n';
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "symlim: bad configuration value: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
