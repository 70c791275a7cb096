#pragma once

#include <vector>

#include "gmew/matrix.hpp"

namespace gmew {

/// Spectral decomposition A = V diag(values) V^dagger of a Hermitian matrix.
/// Eigenvalues ascend; column k of `vectors` belongs to values[k].
struct EigenDecomposition {
  std::vector<double> values;
  ComplexMatrix vectors;

  ComplexVector vector(std::size_t k) const;
  ComplexMatrix reconstruct() const;
};

/// Cyclic complex Jacobi. Input is checked for Hermiticity and symmetrized first;
/// iteration stops once the off-diagonal Frobenius norm drops to 1e-14 ||A||_F.
EigenDecomposition herm_eig(const ComplexMatrix& a);

/// Sum of lambda_i |v_i><v_i| over eigenvalues above 1e-12 max(1, |lambda|_max).
ComplexMatrix positive_part(const ComplexMatrix& a);

double min_eigenvalue(const ComplexMatrix& a);

}  // namespace gmew
