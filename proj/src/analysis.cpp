#include "gmew/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "gmew/eigen.hpp"
#include "gmew/parse.hpp"
#include "gmew/states.hpp"

namespace gmew {

namespace {

const SpaceShape& three_qutrits() {
  static const SpaceShape shape({3, 3, 3});
  return shape;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double value_on(const ComplexMatrix& witness, const ComplexMatrix& rho) {
  return trace_product(rho, witness).real();
}

}  // namespace

std::vector<CutValue> ppt_check(const ComplexMatrix& rho, const SpaceShape& shape) {
  require_state(rho);
  std::vector<CutValue> out;
  for (auto& b : enumerate_bipartitions(shape)) {
    const double lmin = min_eigenvalue(partial_transpose(rho, shape, b.inside));
    auto parties = b.inside;
    out.push_back({std::move(b), std::move(parties), lmin});
  }
  return out;
}

std::vector<CutValue> map_check(const ComplexMatrix& rho, const SpaceShape& shape, const MapSpec& map) {
  require_state(rho);
  std::vector<CutValue> out;
  for (auto& b : enumerate_bipartitions(shape)) {
    const MapSide preferred = smaller_side(b);
    const MapSide other = preferred == MapSide::inside ? MapSide::outside : MapSide::inside;
    std::optional<MapSide> side;
    for (MapSide s : {preferred, other}) {
      const std::size_t d = shape.subset_dim(side_parties(b, s));
      if (!map.fixed_dimension() || *map.fixed_dimension() == d) {
        side = s;
        break;
      }
    }
    if (!side) {
      throw std::invalid_argument("map " + map.to_string() + " fits neither side of bipartition " + b.to_string() +
                                  " for shape " + shape.to_string());
    }
    const auto& parties = side_parties(b, *side);
    const auto superop = map.build(shape.subset_dim(parties));
    const double lmin = min_eigenvalue(apply_map_partial(superop, rho, shape, parties));
    auto mapped = parties;
    out.push_back({std::move(b), std::move(mapped), lmin});
  }
  return out;
}

SeedPolicy SeedPolicy::parse(std::string_view text) {
  SeedPolicy policy;
  if (text == "ghz") return policy;
  if (text.substr(0, 5) == "pair:") {
    const auto parts = split(text.substr(5), ',');
    if (parts.size() != 2) throw ParseError("seed policy pair:x,y needs two levels: '" + std::string(text) + "'");
    policy.kind = Kind::pair;
    policy.x = parse_count(parts[0]);
    policy.y = parse_count(parts[1]);
    if (policy.x == policy.y) throw ParseError("seed policy pair:x,y needs distinct levels: '" + std::string(text) + "'");
    return policy;
  }
  throw ParseError("unknown seed policy '" + std::string(text) + "' (expected ghz or pair:x,y)");
}

std::string SeedPolicy::to_string() const {
  return kind == Kind::ghz ? "ghz" : "pair:" + std::to_string(x) + "," + std::to_string(y);
}

std::vector<WitnessSeed> SeedPolicy::seeds(const SpaceShape& shape, const MapSpec& map) const {
  return kind == Kind::ghz ? ghz_seeds(shape, map) : pair_seeds(shape, map, x, y);
}

WitnessConstruction build_policy_witness(const SpaceShape& shape, const MapSpec& map, const SeedPolicy& policy) {
  return build_witness(policy.seeds(shape, map), shape);
}

ComplexMatrix choi_ghz_witness() {
  return build_policy_witness(three_qutrits(), MapSpec::parse("choi3"), SeedPolicy{}).witness;
}

ComplexMatrix ppt_pair_witness() {
  return build_policy_witness(three_qutrits(), MapSpec::parse("transpose"), SeedPolicy::parse("pair:0,1")).witness;
}

std::vector<LambdaRow> lambda_scan(std::span<const double> lambdas, const ComplexMatrix& witness, double threshold) {
  std::vector<LambdaRow> rows;
  rows.reserve(lambdas.size());
  for (double lambda : lambdas) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda_scan: lambda must be positive");
    const auto e = evaluate(witness, rho_lambda(lambda), threshold);
    rows.push_back({lambda, e.value, e.verdict});
  }
  return rows;
}

std::vector<LambdaRow> lambda_scan(std::span<const double> lambdas, const MapSpec& map, const SeedPolicy& policy,
                                   double threshold) {
  for (double lambda : lambdas)
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda_scan: lambda must be positive");
  const auto w = build_policy_witness(three_qutrits(), map, policy).witness;
  return lambda_scan(lambdas, w, threshold);
}

std::pair<double, double> bracket_lambda_sign_change(const ComplexMatrix& witness, double lo, double hi,
                                                     double width) {
  if (!(lo > 0.0 && hi > lo)) throw std::invalid_argument("bracket_lambda_sign_change: need 0 < lo < hi");
  const double f_lo = value_on(witness, rho_lambda(lo));
  const double f_hi = value_on(witness, rho_lambda(hi));
  if ((f_lo < 0) == (f_hi < 0)) {
    throw std::invalid_argument("bracket_lambda_sign_change: witness value has the same sign at both ends");
  }
  const bool negative_low = f_lo < 0;
  for (int it = 0; it < 200 && hi - lo > width; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((value_on(witness, rho_lambda(mid)) < 0) == negative_low) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

RobustnessResult noise_robustness(const ComplexMatrix& rho, const ComplexMatrix& witness, double threshold) {
  require_hermitian(witness);
  require_state(rho);
  RobustnessResult r;
  r.witness_value_at_zero = value_on(witness, rho);
  r.witness_trace = witness.trace().real();
  if (r.witness_value_at_zero >= -threshold) return r;

  const double dim = static_cast<double>(rho.dim());
  const double noise_value = r.witness_trace / dim;
  if (noise_value > r.witness_value_at_zero) {
    r.p_crit = r.witness_value_at_zero / (r.witness_value_at_zero - noise_value);
  } else {
    r.p_crit = 1.0;  // detected even for the maximally mixed state; cannot happen for a valid witness
  }

  // Independent route: bisection on the evaluated noisy states.
  double lo = 0.0, hi = 1.0;
  const auto value_at = [&](double p) { return value_on(witness, add_white_noise(rho, p)); };
  if (value_at(hi) < 0) {
    r.p_crit_bisection = 1.0;
    return r;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (value_at(mid) < 0 ? lo : hi) = mid;
  }
  r.p_crit_bisection = 0.5 * (lo + hi);
  return r;
}

RobustnessResult noise_robustness(double lambda, const ComplexMatrix& witness, double threshold) {
  auto r = noise_robustness(rho_lambda(lambda), witness, threshold);
  r.lambda = lambda;
  return r;
}

std::string to_string(RegionVerdict v) {
  switch (v) {
    case RegionVerdict::none: return "NONE";
    case RegionVerdict::ppt: return "PPT";
    case RegionVerdict::choi: return "CHOI";
    case RegionVerdict::both: return "BOTH";
    case RegionVerdict::skipped: return "SKIPPED";
  }
  return "?";
}

RegionVerdict parse_region_verdict(std::string_view text) {
  for (auto v : {RegionVerdict::none, RegionVerdict::ppt, RegionVerdict::choi, RegionVerdict::both,
                 RegionVerdict::skipped})
    if (text == to_string(v)) return v;
  throw ParseError("unknown verdict '" + std::string(text) + "'");
}

bool operator==(const RegionScanRow& a, const RegionScanRow& b) {
  const auto same = [](double x, double y) { return x == y || (std::isnan(x) && std::isnan(y)); };
  return same(a.p, b.p) && same(a.q, b.q) && same(a.value_ppt, b.value_ppt) && same(a.value_choi, b.value_choi) &&
         a.verdict == b.verdict;
}

std::vector<RegionScanRow> region_scan(std::span<const double> p_grid, std::span<const double> q_grid,
                                       const ComplexMatrix& ppt_witness, const ComplexMatrix& choi_witness,
                                       double threshold) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<RegionScanRow> rows;
  rows.reserve(p_grid.size() * q_grid.size());
  for (double p : p_grid)
    for (double q : q_grid) {
      if (p < 0 || q < 0 || p + q > 1.0 + 1e-12) {
        rows.push_back({p, q, nan, nan, RegionVerdict::skipped});
        continue;
      }
      const auto rho = two_param_family(p, q);
      require_state(rho);
      const double vp = value_on(ppt_witness, rho);
      const double vc = value_on(choi_witness, rho);
      const bool dp = vp < -threshold, dc = vc < -threshold;
      const auto verdict = dp && dc ? RegionVerdict::both
                           : dp     ? RegionVerdict::ppt
                           : dc     ? RegionVerdict::choi
                                    : RegionVerdict::none;
      rows.push_back({p, q, vp, vc, verdict});
    }
  return rows;
}

std::vector<RegionScanRow> region_scan(std::size_t steps, double threshold) {
  const auto grid = uniform_grid(0.0, 1.0, steps);
  return region_scan(grid, grid, ppt_pair_witness(), choi_ghz_witness(), threshold);
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t steps) {
  if (steps == 0) throw std::invalid_argument("uniform_grid: need at least one step");
  if (steps == 1) return {lo};
  std::vector<double> g(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  return g;
}

void write_region_csv(std::ostream& out, std::span<const RegionScanRow> rows) {
  out << "p,q,value_ppt,value_choi,verdict\n";
  for (const auto& r : rows) {
    out << format_double(r.p) << ',' << format_double(r.q) << ',' << format_double(r.value_ppt) << ','
        << format_double(r.value_choi) << ',' << to_string(r.verdict) << '\n';
  }
}

std::vector<RegionScanRow> read_region_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "p,q,value_ppt,value_choi,verdict") {
    throw ParseError("region CSV line 1: expected header 'p,q,value_ppt,value_choi,verdict'");
  }
  std::vector<RegionScanRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 5) {
      throw ParseError("region CSV line " + std::to_string(lineno) + ": expected 5 fields, got " +
                       std::to_string(fields.size()));
    }
    const auto num = [&](std::size_t k) {
      const std::string f(fields[k]);
      if (f == "nan" || f == "-nan") return std::numeric_limits<double>::quiet_NaN();
      try {
        return parse_number(f);
      } catch (const ParseError& e) {
        throw ParseError("region CSV line " + std::to_string(lineno) + " field " + std::to_string(k + 1) + ": " +
                         e.what());
      }
    };
    RegionScanRow r{num(0), num(1), num(2), num(3), RegionVerdict::none};
    try {
      r.verdict = parse_region_verdict(fields[4]);
    } catch (const ParseError& e) {
      throw ParseError("region CSV line " + std::to_string(lineno) + " field 5: " + e.what());
    }
    rows.push_back(r);
  }
  return rows;
}

void write_lambda_csv(std::ostream& out, std::span<const LambdaRow> rows) {
  out << "lambda,value,verdict\n";
  for (const auto& r : rows) {
    out << format_double(r.lambda) << ',' << format_double(r.value) << ',' << to_string(r.verdict) << '\n';
  }
}

}  // namespace gmew
