#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gmew/maps.hpp"
#include "gmew/matrix.hpp"
#include "gmew/multipartite.hpp"
#include "gmew/witness.hpp"

namespace gmew {

struct CutValue {
  Bipartition bipartition;
  std::vector<std::size_t> mapped_parties;
  double min_eigenvalue = 0.0;
};

/// lambda_min(rho^{T_inside}) for every canonical bipartition.
std::vector<CutValue> ppt_check(const ComplexMatrix& rho, const SpaceShape& shape);

/// lambda_min((Lambda (x) id)[rho]) for every canonical bipartition, with the map on the
/// smaller side when its dimension fits, otherwise on whichever side matches.
std::vector<CutValue> map_check(const ComplexMatrix& rho, const SpaceShape& shape, const MapSpec& map);

/// Seed policy for the three-qutrit witnesses: `ghz` or `pair:x,y`.
struct SeedPolicy {
  enum class Kind { ghz, pair } kind = Kind::ghz;
  std::size_t x = 0, y = 1;

  static SeedPolicy parse(std::string_view text);
  std::string to_string() const;
  std::vector<WitnessSeed> seeds(const SpaceShape& shape, const MapSpec& map) const;
};

WitnessConstruction build_policy_witness(const SpaceShape& shape, const MapSpec& map, const SeedPolicy& policy);

/// Witness from Choi's map with GHZ_3 seeds on every cut.
ComplexMatrix choi_ghz_witness();
/// Witness from the transpose map with pair:0,1 seeds on three qutrits.
ComplexMatrix ppt_pair_witness();

struct LambdaRow {
  double lambda = 0.0;
  double value = 0.0;
  Verdict verdict = Verdict::undetected;
};

std::vector<LambdaRow> lambda_scan(std::span<const double> lambdas, const ComplexMatrix& witness,
                                   double threshold = kDefaultDetectionThreshold);
std::vector<LambdaRow> lambda_scan(std::span<const double> lambdas, const MapSpec& map, const SeedPolicy& policy,
                                   double threshold = kDefaultDetectionThreshold);

/// Bisection for the zero of lambda -> Tr[rho(lambda) W] on [lo, hi]; the endpoint values
/// must differ in sign. Returns the final bracket.
std::pair<double, double> bracket_lambda_sign_change(const ComplexMatrix& witness, double lo, double hi,
                                                     double width = 1e-12);

struct RobustnessResult {
  double lambda = 0.0;
  double witness_value_at_zero = 0.0;
  double witness_trace = 0.0;
  std::optional<double> p_crit;            // affine solve
  std::optional<double> p_crit_bisection;  // sign change of the evaluated noisy state
};

/// Critical white-noise weight for a state: value(p) = (1-p) Tr[rho W] + p Tr[W]/D.
RobustnessResult noise_robustness(const ComplexMatrix& rho, const ComplexMatrix& witness,
                                  double threshold = kDefaultDetectionThreshold);
RobustnessResult noise_robustness(double lambda, const ComplexMatrix& witness,
                                  double threshold = kDefaultDetectionThreshold);

enum class RegionVerdict { none, ppt, choi, both, skipped };

std::string to_string(RegionVerdict v);
RegionVerdict parse_region_verdict(std::string_view text);

struct RegionScanRow {
  double p = 0.0;
  double q = 0.0;
  double value_ppt = 0.0;
  double value_choi = 0.0;
  RegionVerdict verdict = RegionVerdict::none;
};

bool operator==(const RegionScanRow& a, const RegionScanRow& b);

/// Evaluates both witnesses on two_param_family(p, q) over the grid; points with
/// p + q > 1 are returned as skipped with NaN values.
std::vector<RegionScanRow> region_scan(std::span<const double> p_grid, std::span<const double> q_grid,
                                       const ComplexMatrix& ppt_witness, const ComplexMatrix& choi_witness,
                                       double threshold = kDefaultDetectionThreshold);
std::vector<RegionScanRow> region_scan(std::size_t steps, double threshold = kDefaultDetectionThreshold);

std::vector<double> uniform_grid(double lo, double hi, std::size_t steps);

void write_region_csv(std::ostream& out, std::span<const RegionScanRow> rows);
std::vector<RegionScanRow> read_region_csv(std::istream& in);

void write_lambda_csv(std::ostream& out, std::span<const LambdaRow> rows);

}  // namespace gmew
