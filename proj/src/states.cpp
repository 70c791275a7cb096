#include "gmew/states.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "gmew/eigen.hpp"

namespace gmew {

namespace {

ComplexVector haar_vector(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(d);
  for (auto& z : v) z = Complex{gauss(rng), gauss(rng)};
  const double n = norm(v);
  for (auto& z : v) z /= n;
  return v;
}

std::vector<double> dirichlet_uniform(std::size_t k, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(k);
  double sum = 0.0;
  for (auto& x : w) sum += (x = expo(rng));
  for (auto& x : w) x /= sum;
  return w;
}

}  // namespace

StateError::StateError(const std::string& what, double trace, double min_eigenvalue)
    : std::domain_error(what), trace_(trace), min_eigenvalue_(min_eigenvalue) {}

void require_state(const ComplexMatrix& rho, double tol) {
  require_hermitian(rho);
  const double tr = rho.trace().real();
  const double lmin = min_eigenvalue(rho);
  if (std::abs(tr - 1.0) > tol || lmin < -tol) {
    std::ostringstream os;
    os.precision(17);
    os << "not a density matrix: trace = " << tr << ", min eigenvalue = " << lmin;
    throw StateError(os.str(), tr, lmin);
  }
}

ComplexVector ghz(std::size_t n, std::size_t d) {
  if (n < 2 || d < 2) throw std::invalid_argument("ghz: need n >= 2 and d >= 2");
  const SpaceShape shape(std::vector<std::size_t>(n, d));
  ComplexVector v(shape.total_dim());
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t x = 0; x < d; ++x) v[shape.flat_index(std::vector<std::size_t>(n, x))] = amp;
  return v;
}

ComplexVector flipped_ghz(std::span<const std::size_t> flipped, std::size_t x, std::size_t y, double lambda,
                          std::size_t n, std::size_t d) {
  if (x == y || x >= d || y >= d) throw std::invalid_argument("flipped_ghz: need distinct levels x, y < d");
  if (!(lambda > 0.0)) throw std::invalid_argument("flipped_ghz: lambda must be positive");
  if (flipped.empty()) throw std::invalid_argument("flipped_ghz: flipped party set must be nonempty");
  const SpaceShape shape(std::vector<std::size_t>(n, d));
  std::vector<std::size_t> a(n, x), b(n, y);
  for (auto k : flipped) {
    if (k >= n) throw std::invalid_argument("flipped_ghz: party index out of range");
    a[k] = y;
    b[k] = x;
  }
  ComplexVector v(shape.total_dim());
  v[shape.flat_index(a)] += std::sqrt(lambda);
  v[shape.flat_index(b)] += std::sqrt(1.0 / lambda);
  return v;
}

const std::array<std::array<std::size_t, 2>, 3>& flip_pairs() {
  static const std::array<std::array<std::size_t, 2>, 3> pairs{{{0, 2}, {1, 0}, {2, 1}}};
  return pairs;
}

ComplexMatrix e_operator(const std::array<double, 3>& lambda_per_party) {
  for (double l : lambda_per_party)
    if (!(l > 0.0)) throw std::invalid_argument("e_operator: lambda must be positive");
  const auto g = ghz(3, 3);
  ComplexMatrix e = ComplexMatrix::projector(g) * Complex{3.0};
  for (std::size_t party = 0; party < 3; ++party) {
    const std::array<std::size_t, 1> flipped{party};
    for (const auto& [x, y] : flip_pairs()) {
      e += ComplexMatrix::projector(flipped_ghz(flipped, x, y, lambda_per_party[party], 3, 3));
    }
  }
  return e;
}

ComplexMatrix e_operator(double lambda) { return e_operator({lambda, lambda, lambda}); }

ComplexMatrix rho_lambda(double lambda) {
  ComplexMatrix e = e_operator(lambda);
  const double tr = e.trace().real();
  return e * Complex{1.0 / tr};
}

ComplexMatrix add_white_noise(const ComplexMatrix& rho, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("add_white_noise: p must lie in [0, 1]");
  const double dim = static_cast<double>(rho.dim());
  return rho * Complex{1.0 - p} + ComplexMatrix::identity(rho.dim()) * Complex{p / dim};
}

ComplexMatrix two_param_family(double p, double q) {
  constexpr double slack = 1e-12;
  if (p < 0.0 || q < 0.0 || p + q > 1.0 + slack) {
    throw std::invalid_argument("two_param_family: need p, q >= 0 and p + q <= 1");
  }
  const double rest = std::max(0.0, 1.0 - p - q);
  return ComplexMatrix::projector(ghz(3, 3)) * Complex{p} + rho_lambda(1.0 / 9.0) * Complex{q} +
         ComplexMatrix::identity(27) * Complex{rest / 27.0};
}

ComplexVector product_vector(const SpaceShape& shape, const Bipartition& b, std::span<const Complex> inside,
                             std::span<const Complex> outside) {
  if (inside.size() != shape.subset_dim(b.inside) || outside.size() != shape.subset_dim(b.outside)) {
    throw std::invalid_argument("product_vector: factor dimensions do not match the bipartition");
  }
  std::vector<std::size_t> order(b.inside);
  order.insert(order.end(), b.outside.begin(), b.outside.end());
  const auto grouped = kron(inside, outside);
  return permute_parties(grouped, shape.permuted(order), inverse_permutation(order));
}

BiseparableSample random_biseparable(const SpaceShape& shape, std::span<const Bipartition> partitions,
                                     std::size_t terms_per_partition, std::uint64_t seed) {
  if (partitions.empty()) throw std::invalid_argument("random_biseparable: need at least one partition");
  if (terms_per_partition == 0) throw std::invalid_argument("random_biseparable: need at least one term");
  std::mt19937_64 rng(seed);

  BiseparableSample sample;
  sample.partitions.assign(partitions.begin(), partitions.end());
  sample.partition_weights = dirichlet_uniform(partitions.size(), rng);
  sample.rho = ComplexMatrix(shape.total_dim());
  for (std::size_t b = 0; b < partitions.size(); ++b) {
    const auto& part = partitions[b];
    const auto weights = dirichlet_uniform(terms_per_partition, rng);
    std::vector<ProductTerm> terms;
    for (double w : weights) {
      ProductTerm t{w, haar_vector(shape.subset_dim(part.inside), rng),
                    haar_vector(shape.subset_dim(part.outside), rng)};
      const auto psi = product_vector(shape, part, t.inside, t.outside);
      sample.rho += ComplexMatrix::projector(psi) * Complex{sample.partition_weights[b] * w};
      terms.push_back(std::move(t));
    }
    sample.terms.push_back(std::move(terms));
  }
  return sample;
}

}  // namespace gmew
