#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "gmew/maps.hpp"
#include "gmew/matrix.hpp"
#include "gmew/multipartite.hpp"

namespace gmew::testing {

inline ComplexVector random_vector(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexVector v(d);
  for (auto& z : v) z = Complex{g(rng), g(rng)};
  const double n = norm(v);
  for (auto& z : v) z /= n;
  return v;
}

inline ComplexMatrix random_matrix(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(d);
  for (auto& z : m.data()) z = Complex{g(rng), g(rng)};
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t d, std::mt19937_64& rng) {
  const auto a = random_matrix(d, rng);
  return (a + a.adjoint()) * Complex{0.5};
}

/// G G^dagger / Tr, full rank almost surely.
inline ComplexMatrix random_density(std::size_t d, std::mt19937_64& rng) {
  const auto g = random_matrix(d, rng);
  auto rho = g * g.adjoint();
  return rho * Complex{1.0 / rho.trace().real()};
}

inline ComplexVector basis_ket(const SpaceShape& shape, std::vector<std::size_t> digits) {
  ComplexVector v(shape.total_dim());
  v[shape.flat_index(digits)] = 1.0;
  return v;
}

/// (Lambda_k (x) id)[rho] computed entry by entry from the images of |a><a'| on party k,
/// without any party permutation.
inline ComplexMatrix naive_apply_on_party(const std::function<ComplexMatrix(const ComplexMatrix&)>& action,
                                          const ComplexMatrix& rho, const SpaceShape& shape, std::size_t k) {
  const std::size_t dk = shape.dim(k);
  std::vector<ComplexMatrix> images;  // images[a * dk + ap] = Lambda(|a><ap|)
  for (std::size_t a = 0; a < dk; ++a)
    for (std::size_t ap = 0; ap < dk; ++ap) {
      ComplexMatrix e(dk);
      e(a, ap) = 1.0;
      images.push_back(action(e));
    }
  ComplexMatrix out(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j) {
      auto di = shape.multi_index(i);
      auto dj = shape.multi_index(j);
      const std::size_t ik = di[k], jk = dj[k];
      Complex acc{};
      for (std::size_t a = 0; a < dk; ++a)
        for (std::size_t ap = 0; ap < dk; ++ap) {
          di[k] = a;
          dj[k] = ap;
          acc += images[a * dk + ap](ik, jk) * rho(shape.flat_index(di), shape.flat_index(dj));
        }
      out(i, j) = acc;
    }
  return out;
}

inline double max_entry(const ComplexMatrix& m) { return m.max_abs(); }

}  // namespace gmew::testing
