#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gmew/maps.hpp"
#include "gmew/matrix.hpp"
#include "gmew/multipartite.hpp"

namespace gmew {

inline constexpr double kDefaultDetectionThreshold = 1e-10;

/// One ingredient of the multipartite construction: a seed state |psi_b> and a
/// positive map applied (through its dual) to one side of bipartition b.
struct WitnessSeed {
  Bipartition bipartition;
  MapSide map_side = MapSide::inside;
  ComplexVector psi;
  Superoperator map;

  const std::vector<std::size_t>& map_parties() const { return side_parties(bipartition, map_side); }
};

struct OverlapMatrices {
  ComplexMatrix positive;  // P
  ComplexMatrix negative;  // N
  ComplexMatrix q;         // Q = N + P
};

/// Everything assembled while building a genuine-multipartite witness
///   W = sum_b tau_b + Q,   tau_b = [M_b - Q]_+,   M_b = (Lambda_b^* (x) id)[|psi_b><psi_b|].
struct WitnessConstruction {
  std::vector<WitnessSeed> seeds;
  std::vector<ComplexMatrix> images;  // M_b
  OverlapMatrices overlap;
  std::vector<ComplexMatrix> tau;
  ComplexMatrix witness;
};

enum class Verdict { undetected, detected };

struct Evaluation {
  double value = 0.0;
  Verdict verdict = Verdict::undetected;
};

std::string to_string(Verdict v);

/// M_b for one seed. Throws on mismatched dimensions or a non-normalized psi.
ComplexMatrix seed_image(const WitnessSeed& seed, const SpaceShape& shape);

/// Entrywise over (eta, eta'):
///   P = max(0, min_b Re M_b),  N = min(0, max_b Re M_b).
OverlapMatrices overlap_matrices(std::span<const ComplexMatrix> images);

WitnessConstruction build_witness(std::vector<WitnessSeed> seeds, const SpaceShape& shape);

/// Re Tr[rho W], after checking that rho is a density matrix.
Evaluation evaluate(const ComplexMatrix& witness, const ComplexMatrix& rho,
                    double threshold = kDefaultDetectionThreshold);

/// Bipartite witness W = (Lambda^* (x) id)[|n><n|], where |n> is the eigenvector of the
/// most negative eigenvalue of (Lambda (x) id)[sigma]. Empty if that spectrum is non-negative.
std::optional<ComplexMatrix> bipartite_witness_from_map(const Superoperator& map, const ComplexMatrix& sigma,
                                                        const SpaceShape& shape, const Bipartition& b,
                                                        MapSide side,
                                                        double threshold = kDefaultDetectionThreshold);

/// Q + sum_b M_b for positive semidefinite M_b.
ComplexMatrix combine_overlapping_witnesses(const ComplexMatrix& q, std::span<const ComplexMatrix> parts);

/// Seed states psi_b = |GHZ(n, d)> for every bipartition, map on the smaller side.
/// Both seed policies need equal local dimensions.
std::vector<WitnessSeed> ghz_seeds(const SpaceShape& shape, const MapSpec& map);

/// Seed states (|x on S, y elsewhere> - |y on S, x elsewhere>) / sqrt 2 with S the smaller
/// side of each bipartition; for qubits and (x, y) = (0, 1) these are the familiar
/// (|011> - |100>)/sqrt 2 family whose transpose-map witness is 1/2 - |GHZ><GHZ|.
std::vector<WitnessSeed> pair_seeds(const SpaceShape& shape, const MapSpec& map, std::size_t x,
                                    std::size_t y);

}  // namespace gmew
