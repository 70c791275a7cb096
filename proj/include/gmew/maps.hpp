#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "gmew/matrix.hpp"

namespace gmew {

/// Linear map on d x d operators, stored as a d^2 x d^2 matrix acting on
/// column-stacked vectorizations: vec(A)[j*d + i] = A(i, j).
class Superoperator {
 public:
  Superoperator() = default;
  Superoperator(std::size_t d, ComplexMatrix matrix);

  /// Builds the matrix column by column from the images of E_ij = |i><j|.
  static Superoperator from_action(std::size_t d,
                                   const std::function<ComplexMatrix(const ComplexMatrix&)>& action);

  std::size_t local_dim() const noexcept { return d_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

  ComplexMatrix apply(const ComplexMatrix& a) const;

  friend bool operator==(const Superoperator&, const Superoperator&) = default;

 private:
  std::size_t d_ = 0;
  ComplexMatrix matrix_;
};

ComplexVector vectorize(const ComplexMatrix& a);
ComplexMatrix unvectorize(std::span<const Complex> v, std::size_t d);

Superoperator identity_map(std::size_t d);
Superoperator transpose_map(std::size_t d);
/// A -> Tr(A) 1 - A
Superoperator reduction_map(std::size_t d);

/// Choi's qutrit map with the 1/2 normalization:
///   diag -> (a00 + a22, a11 + a00, a22 + a11) / 2, off-diagonals -> -a_ij / 2.
Superoperator choi_map();

/// Unnormalized generalized Choi map on qutrits:
///   Lambda(A)_ii = a*A_ii + b*A_{i+1,i+1} + c*A_{i+2,i+2} (indices mod 3), off-diagonals -A_ij.
/// Positivity depends on (a, b, c) and is not checked here; run positivity_probe.
Superoperator generalized_choi(double a, double b, double c);

/// Block-diagonal antisymmetric unitary with blocks [[0, 1], [-1, 0]]; d must be even.
ComplexMatrix canonical_antisymmetric_unitary(std::size_t d);

/// A -> Tr(A) 1 - A - U A^T U^dagger, for even d and antisymmetric unitary U.
Superoperator breuer_hall_map(std::size_t d, const ComplexMatrix& u);
Superoperator breuer_hall_map(std::size_t d);

/// Adjoint under the pairing Tr[Lambda(A) B] = Tr[A Lambda*(B)].
Superoperator dual(const Superoperator& map);

/// Minimum eigenvalue of Lambda(|phi><phi|) over `samples` Haar-random pure states.
/// A clearly negative result proves the map is not positive; a non-negative one is evidence only.
double positivity_probe(const Superoperator& map, std::size_t samples, std::uint64_t seed);

enum class MapKind { identity, transpose, reduction, choi3, generalized_choi, breuer_hall };

/// Textual map descriptor as accepted by the command line:
/// `identity`, `transpose`, `reduction`, `choi3`, `gchoi:a,b,c`, `breuer-hall:d`.
struct MapSpec {
  MapKind kind = MapKind::identity;
  double a = 0.0, b = 0.0, c = 0.0;      // generalized_choi
  std::optional<std::size_t> dimension;  // fixed by breuer-hall:d, choi3, gchoi

  static MapSpec parse(std::string_view text);
  std::string to_string() const;

  /// Local dimension required by the map kind, if it is fixed.
  std::optional<std::size_t> fixed_dimension() const;

  /// Superoperator on d x d operators; throws std::invalid_argument if d is incompatible.
  Superoperator build(std::size_t d) const;
};

}  // namespace gmew
