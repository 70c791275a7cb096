#include "gmew/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gmew {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRelativeOffDiagonal = 1e-14;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Zeroes a(p,q) with the unitary G = D R, where D = diag(1, e^{-i phi}) removes the
// phase of a(p,q) and R is the real Jacobi rotation of the resulting symmetric block.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);

  const std::size_t n = a.dim();
  // A <- A G
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  // A <- G^dagger A
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  // V <- V G
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
}

}  // namespace

ComplexVector EigenDecomposition::vector(std::size_t k) const {
  ComplexVector out(vectors.dim());
  for (std::size_t i = 0; i < vectors.dim(); ++i) out[i] = vectors(i, k);
  return out;
}

ComplexMatrix EigenDecomposition::reconstruct() const {
  const std::size_t n = vectors.dim();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto vk = vector(k);
    out += ComplexMatrix::projector(vk) * Complex{values[k]};
  }
  return out;
}

EigenDecomposition herm_eig(const ComplexMatrix& input) {
  ComplexMatrix a = symmetrized(input);
  const std::size_t n = a.dim();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = kRelativeOffDiagonal * a.frobenius_norm();
  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (++sweep > kMaxSweeps) throw std::runtime_error("herm_eig: Jacobi iteration did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition result{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    result.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) result.vectors(i, k) = v(i, order[k]);
  }
  return result;
}

ComplexMatrix positive_part(const ComplexMatrix& a) {
  const auto eig = herm_eig(a);
  double largest = 0.0;
  for (double l : eig.values) largest = std::max(largest, std::abs(l));
  const double eps = 1e-12 * std::max(1.0, largest);

  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (eig.values[k] <= eps) continue;
    const auto vk = eig.vector(k);
    for (std::size_t i = 0; i < n; ++i) {
      if (vk[i] == Complex{}) continue;
      const Complex li = eig.values[k] * vk[i];
      for (std::size_t j = 0; j < n; ++j) out(i, j) += li * std::conj(vk[j]);
    }
  }
  return out;
}

double min_eigenvalue(const ComplexMatrix& a) {
  if (a.dim() == 0) throw std::invalid_argument("min_eigenvalue: empty matrix");
  return herm_eig(a).values.front();
}

}  // namespace gmew
