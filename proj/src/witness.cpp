#include "gmew/witness.hpp"

#include <algorithm>
#include <cmath>

#include "gmew/eigen.hpp"
#include "gmew/states.hpp"

namespace gmew {

namespace {

std::size_t uniform_local_dim(const SpaceShape& shape) {
  const std::size_t d = shape.dim(0);
  for (auto dk : shape.dims())
    if (dk != d) throw std::invalid_argument("seed policy needs equal local dimensions, got " + shape.to_string());
  return d;
}

WitnessSeed make_seed(const SpaceShape& shape, const Bipartition& b, const MapSpec& spec, ComplexVector psi) {
  const MapSide side = smaller_side(b);
  const std::size_t d_side = shape.subset_dim(side_parties(b, side));
  return WitnessSeed{b, side, std::move(psi), spec.build(d_side)};
}

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::detected ? "GME-DETECTED" : "UNDETECTED"; }

ComplexMatrix seed_image(const WitnessSeed& seed, const SpaceShape& shape) {
  if (seed.psi.size() != shape.total_dim()) {
    throw std::invalid_argument("seed state has length " + std::to_string(seed.psi.size()) + ", shape " +
                                shape.to_string() + " needs " + std::to_string(shape.total_dim()));
  }
  if (std::abs(norm(seed.psi) - 1.0) > 1e-12) throw std::invalid_argument("seed state is not normalized");
  const auto& parties = seed.map_parties();
  return apply_map_partial(dual(seed.map), ComplexMatrix::projector(seed.psi), shape, parties);
}

OverlapMatrices overlap_matrices(std::span<const ComplexMatrix> images) {
  if (images.empty()) throw std::invalid_argument("overlap_matrices: no images given");
  const std::size_t n = images.front().dim();
  for (const auto& m : images) {
    if (m.dim() != n) throw std::invalid_argument("overlap_matrices: images differ in dimension");
    require_hermitian(m);
  }
  OverlapMatrices out{ComplexMatrix(n), ComplexMatrix(n), ComplexMatrix(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double lo = images.front()(i, j).real();
      double hi = lo;
      for (const auto& m : images.subspan(1)) {
        lo = std::min(lo, m(i, j).real());
        hi = std::max(hi, m(i, j).real());
      }
      const double p = std::max(0.0, lo);
      const double neg = std::min(0.0, hi);
      out.positive(i, j) = p;
      out.negative(i, j) = neg;
      out.q(i, j) = p + neg;
    }
  return out;
}

WitnessConstruction build_witness(std::vector<WitnessSeed> seeds, const SpaceShape& shape) {
  if (seeds.empty()) throw std::invalid_argument("build_witness: need at least one seed");
  WitnessConstruction w;
  w.images.reserve(seeds.size());
  for (const auto& seed : seeds) w.images.push_back(seed_image(seed, shape));
  w.overlap = overlap_matrices(w.images);

  w.witness = w.overlap.q;
  for (const auto& m : w.images) {
    w.tau.push_back(positive_part(m - w.overlap.q));
    w.witness += w.tau.back();
  }
  w.seeds = std::move(seeds);
  return w;
}

Evaluation evaluate(const ComplexMatrix& witness, const ComplexMatrix& rho, double threshold) {
  require_hermitian(witness);
  require_state(rho);
  const double value = trace_product(rho, witness).real();
  return {value, value < -threshold ? Verdict::detected : Verdict::undetected};
}

std::optional<ComplexMatrix> bipartite_witness_from_map(const Superoperator& map, const ComplexMatrix& sigma,
                                                        const SpaceShape& shape, const Bipartition& b,
                                                        MapSide side, double threshold) {
  const auto& parties = side_parties(b, side);
  const auto eig = herm_eig(apply_map_partial(map, sigma, shape, parties));
  if (eig.values.front() >= -threshold) return std::nullopt;
  const auto n = eig.vector(0);
  return apply_map_partial(dual(map), ComplexMatrix::projector(n), shape, parties);
}

ComplexMatrix combine_overlapping_witnesses(const ComplexMatrix& q, std::span<const ComplexMatrix> parts) {
  ComplexMatrix w = q;
  for (std::size_t b = 0; b < parts.size(); ++b) {
    const double lmin = min_eigenvalue(parts[b]);
    if (lmin < -1e-10) {
      throw std::invalid_argument("combine_overlapping_witnesses: part " + std::to_string(b) +
                                  " is not positive semidefinite (min eigenvalue " + std::to_string(lmin) + ")");
    }
    w += parts[b];
  }
  return w;
}

std::vector<WitnessSeed> ghz_seeds(const SpaceShape& shape, const MapSpec& map) {
  const auto psi = ghz(shape.parties(), uniform_local_dim(shape));
  std::vector<WitnessSeed> seeds;
  for (const auto& b : enumerate_bipartitions(shape)) seeds.push_back(make_seed(shape, b, map, psi));
  return seeds;
}

std::vector<WitnessSeed> pair_seeds(const SpaceShape& shape, const MapSpec& map, std::size_t x, std::size_t y) {
  const std::size_t d = uniform_local_dim(shape);
  if (x == y || x >= d || y >= d) throw std::invalid_argument("pair_seeds: need distinct levels below d");
  std::vector<WitnessSeed> seeds;
  const double amp = 1.0 / std::sqrt(2.0);
  for (const auto& b : enumerate_bipartitions(shape)) {
    const auto& side = side_parties(b, smaller_side(b));
    std::vector<std::size_t> plus(shape.parties(), y), minus(shape.parties(), x);
    for (auto k : side) {
      plus[k] = x;
      minus[k] = y;
    }
    ComplexVector psi(shape.total_dim());
    psi[shape.flat_index(plus)] = amp;
    psi[shape.flat_index(minus)] = -amp;
    seeds.push_back(make_seed(shape, b, map, std::move(psi)));
  }
  return seeds;
}

}  // namespace gmew
