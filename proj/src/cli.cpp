#include "gmew/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "gmew/analysis.hpp"
#include "gmew/maps.hpp"
#include "gmew/matrix_io.hpp"
#include "gmew/parse.hpp"
#include "gmew/states.hpp"
#include "gmew/witness.hpp"

namespace gmew {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SpaceShape parse_shape(const std::string& text) {
  std::vector<std::size_t> dims;
  for (auto part : split(text, ',')) dims.push_back(parse_count(part));
  for (auto d : dims)
    if (d < 2) throw ParseError("--shape: local dimensions must be >= 2, got '" + text + "'");
  return SpaceShape(std::move(dims));
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "' for writing");
  return f;
}

void print_cuts(std::ostream& out, const std::vector<CutValue>& cuts) {
  out << "bipartition,mapped_parties,min_eigenvalue\n";
  for (const auto& c : cuts) {
    std::string parties;
    for (std::size_t k = 0; k < c.mapped_parties.size(); ++k) {
      parties += (k ? " " : "") + std::to_string(c.mapped_parties[k]);
    }
    out << c.bipartition.to_string() << ',' << parties << ',' << fmt(c.min_eigenvalue) << '\n';
  }
}

struct Options {
  double tol = kDefaultDetectionThreshold;
  std::uint64_t seed = 0;

  std::string map = "choi3";
  std::string shape = "3,3,3";
  std::string seeds = "ghz";
  std::string out;
  std::size_t probe_samples = 2000;

  std::string witness;
  std::string state;

  std::string lambdas;
  std::string from = "0.05", to = "0.9";
  std::size_t steps = 18;
  std::string bracket;

  std::string lambda = "1/9";
  std::size_t region_steps = 101;
};

int run_witness_build(const Options& o, std::ostream& out) {
  const SpaceShape shape = parse_shape(o.shape);
  const MapSpec map = MapSpec::parse(o.map);
  const SeedPolicy policy = SeedPolicy::parse(o.seeds);
  auto seeds = policy.seeds(shape, map);
  for (const auto& s : seeds) {
    const double probe = positivity_probe(s.map, o.probe_samples, o.seed);
    if (probe < -1e-8) {
      throw std::domain_error("map " + map.to_string() + " is not positive: probe found eigenvalue " + fmt(probe));
    }
  }
  const auto w = build_witness(std::move(seeds), shape);
  write_matrix_json(o.out, {shape, w.witness});
  out << "witness written to " << o.out << " (map " << map.to_string() << ", seeds " << policy.to_string()
      << ", shape " << shape.to_string() << ", trace " << fmt(w.witness.trace().real()) << ")\n";
  return kExitOk;
}

int run_evaluate(const Options& o, std::ostream& out) {
  const auto w = read_matrix_json(std::filesystem::path(o.witness), true);
  const auto rho = resolve_state(o.state);
  if (!(w.shape == rho.shape)) {
    throw ParseError("witness shape " + w.shape.to_string() + " does not match state shape " + rho.shape.to_string());
  }
  const auto e = evaluate(w.matrix, rho.matrix, o.tol);
  out << "value " << fmt(e.value) << "\nverdict " << to_string(e.verdict) << '\n';
  return kExitOk;
}

int run_ppt_check(const Options& o, std::ostream& out) {
  const auto rho = resolve_state(o.state);
  print_cuts(out, ppt_check(rho.matrix, rho.shape));
  return kExitOk;
}

int run_map_check(const Options& o, std::ostream& out) {
  const auto rho = resolve_state(o.state);
  print_cuts(out, map_check(rho.matrix, rho.shape, MapSpec::parse(o.map)));
  return kExitOk;
}

int run_lambda_scan(const Options& o, std::ostream& out) {
  const MapSpec map = MapSpec::parse(o.map);
  const SeedPolicy policy = SeedPolicy::parse(o.seeds);
  std::vector<double> grid = o.lambdas.empty()
                                 ? uniform_grid(parse_number(o.from), parse_number(o.to), o.steps)
                                 : parse_number_list(o.lambdas);
  for (double l : grid)
    if (!(l > 0)) throw ParseError("lambda-scan: lambda values must be positive, got " + fmt(l));
  const auto w = build_policy_witness(SpaceShape({3, 3, 3}), map, policy).witness;
  const auto rows = lambda_scan(grid, w, o.tol);
  if (o.out.empty()) {
    write_lambda_csv(out, rows);
  } else {
    auto f = open_output(o.out);
    write_lambda_csv(f, rows);
    out << rows.size() << " rows written to " << o.out << '\n';
  }
  if (!o.bracket.empty()) {
    const auto ends = parse_number_list(o.bracket);
    if (ends.size() != 2) throw ParseError("--bracket expects lo,hi");
    const auto [lo, hi] = bracket_lambda_sign_change(w, ends[0], ends[1]);
    out << "sign change in [" << fmt(lo) << ", " << fmt(hi) << "]\n";
  }
  return kExitOk;
}

int run_noise_robustness(const Options& o, std::ostream& out) {
  const double lambda = parse_number(o.lambda);
  if (!(lambda > 0)) throw ParseError("--lambda must be positive");
  const auto w = build_policy_witness(SpaceShape({3, 3, 3}), MapSpec::parse(o.map), SeedPolicy::parse(o.seeds)).witness;
  const auto r = noise_robustness(lambda, w, o.tol);
  out << "lambda " << fmt(r.lambda) << "\nvalue_at_zero " << fmt(r.witness_value_at_zero) << "\nwitness_trace "
      << fmt(r.witness_trace) << '\n';
  if (!r.p_crit) {
    out << "state not detected at p = 0; no critical noise level\n";
    return kExitOk;
  }
  out << "p_crit " << fmt(*r.p_crit) << "\np_crit_bisection " << fmt(r.p_crit_bisection.value_or(0.0)) << '\n';
  return kExitOk;
}

int run_region_scan(const Options& o, std::ostream& out) {
  const auto rows = region_scan(o.region_steps, o.tol);
  if (o.out.empty()) {
    write_region_csv(out, rows);
  } else {
    auto f = open_output(o.out);
    write_region_csv(f, rows);
    std::size_t skipped = 0;
    for (const auto& r : rows) skipped += r.verdict == RegionVerdict::skipped;
    out << rows.size() << " rows written to " << o.out << " (" << skipped << " outside p + q <= 1)\n";
  }
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genuine multipartite entanglement witnesses from positive maps", "gmew"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--tol", o.tol, "Detection threshold: a witness value below -tol counts as detection")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "Seed for randomized checks");

  auto* build = app.add_subcommand("witness-build", "Build a witness from a positive map and write it as JSON");
  build->add_option("--map", o.map, "identity | transpose | reduction | choi3 | gchoi:a,b,c | breuer-hall:d");
  build->add_option("--shape", o.shape, "Comma-separated local dimensions");
  build->add_option("--seeds", o.seeds, "Seed states: ghz | pair:x,y");
  build->add_option("--out", o.out, "Output JSON file")->required();
  build->add_option("--probe-samples", o.probe_samples, "Random pure states used to probe map positivity")
      ->check(CLI::PositiveNumber);

  auto* eval = app.add_subcommand("evaluate", "Evaluate Tr[rho W]");
  eval->add_option("--witness", o.witness, "Witness JSON file")->required();
  eval->add_option("--state", o.state, "ghz:n,d | rho-lambda:L | noise:p,L | two-param:p,q | JSON file")
      ->required();

  auto* ppt = app.add_subcommand("ppt-check", "Minimum eigenvalue of the partial transpose on every cut");
  ppt->add_option("--state", o.state, "State specifier or JSON file")->required();

  auto* mapc = app.add_subcommand("map-check", "Minimum eigenvalue after applying a map on every cut");
  mapc->add_option("--state", o.state, "State specifier or JSON file")->required();
  mapc->add_option("--map", o.map, "Map specifier");

  auto* scan = app.add_subcommand("lambda-scan", "Witness value on rho(lambda) over a grid");
  scan->add_option("--map", o.map, "Map specifier");
  scan->add_option("--seeds", o.seeds, "Seed states: ghz | pair:x,y");
  scan->add_option("--lambdas", o.lambdas, "Explicit comma-separated lambda values");
  scan->add_option("--from", o.from, "Grid start");
  scan->add_option("--to", o.to, "Grid end");
  scan->add_option("--steps", o.steps, "Grid points")->check(CLI::PositiveNumber);
  scan->add_option("--bracket", o.bracket, "lo,hi: bisect the sign change of the witness value");
  scan->add_option("--out", o.out, "CSV output file (stdout if omitted)");

  auto* noise = app.add_subcommand("noise-robustness", "Critical white-noise admixture for rho(lambda)");
  noise->add_option("--lambda", o.lambda, "Family parameter, decimal or rational (e.g. 1/9)");
  noise->add_option("--map", o.map, "Map specifier");
  noise->add_option("--seeds", o.seeds, "Seed states: ghz | pair:x,y");

  auto* region = app.add_subcommand("region-scan", "Compare transpose- and Choi-map witnesses over (p, q)");
  region->add_option("--steps", o.region_steps, "Grid points per axis")->check(CLI::PositiveNumber);
  region->add_option("--out", o.out, "CSV output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return run_witness_build(o, out);
    if (*eval) return run_evaluate(o, out);
    if (*ppt) return run_ppt_check(o, out);
    if (*mapc) return run_map_check(o, out);
    if (*scan) return run_lambda_scan(o, out);
    if (*noise) return run_noise_robustness(o, out);
    if (*region) return run_region_scan(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "validation failed: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace gmew
