#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "gmew/matrix.hpp"
#include "gmew/multipartite.hpp"

namespace gmew {

/// Thrown when a matrix fails the density-matrix check (unit trace, PSD).
class StateError : public std::domain_error {
 public:
  StateError(const std::string& what, double trace, double min_eigenvalue);
  double trace() const noexcept { return trace_; }
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double trace_;
  double min_eigenvalue_;
};

/// Checks Hermiticity, |Tr - 1| <= tol and lambda_min >= -tol.
void require_state(const ComplexMatrix& rho, double tol = 1e-10);

/// (1/sqrt d) sum_x |x>^{(x) n}
ComplexVector ghz(std::size_t n, std::size_t d);

/// Unnormalized sqrt(lambda)|x..x> + sqrt(1/lambda)|y..y> with levels x <-> y
/// exchanged on every party in `flipped`. Squared norm is lambda + 1/lambda.
ComplexVector flipped_ghz(std::span<const std::size_t> flipped, std::size_t x, std::size_t y, double lambda,
                          std::size_t n, std::size_t d);

/// Level pairs (x, y) entering the three-qutrit family: (0,2), (1,0), (2,1),
/// i.e. y = x - 1 (mod 3) with sqrt(lambda) on |x x x>.
const std::array<std::array<std::size_t, 2>, 3>& flip_pairs();

/// 3|GHZ_3><GHZ_3| + sum over parties i and flip_pairs() of the unnormalized
/// projectors of flipped_ghz({i}, x, y, lambda_i). Trace 3 + sum_i 3(lambda_i + 1/lambda_i).
ComplexMatrix e_operator(const std::array<double, 3>& lambda_per_party);
ComplexMatrix e_operator(double lambda);

/// e_operator(lambda) / Tr e_operator(lambda); invariant under every partial transpose.
ComplexMatrix rho_lambda(double lambda);

/// p 1/D + (1 - p) rho
ComplexMatrix add_white_noise(const ComplexMatrix& rho, double p);

/// p |GHZ_3><GHZ_3| + q rho(1/9) + (1 - p - q) 1/27
ComplexMatrix two_param_family(double p, double q);

struct ProductTerm {
  double weight = 0.0;
  ComplexVector inside;   // state on the `inside` parties, in ascending party order
  ComplexVector outside;  // state on the `outside` parties
};

struct BiseparableSample {
  std::vector<Bipartition> partitions;
  std::vector<double> partition_weights;
  std::vector<std::vector<ProductTerm>> terms;  // terms[b] are the pure product terms for partitions[b]
  ComplexMatrix rho;
};

/// Product of a state on the `inside` parties and one on the `outside` parties,
/// laid out in natural party order.
ComplexVector product_vector(const SpaceShape& shape, const Bipartition& b, std::span<const Complex> inside,
                             std::span<const Complex> outside);

/// Haar-random product terms on each partition with Dirichlet(1,...,1) weights.
BiseparableSample random_biseparable(const SpaceShape& shape, std::span<const Bipartition> partitions,
                                     std::size_t terms_per_partition, std::uint64_t seed);

}  // namespace gmew
