#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmew {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Thrown when a matrix expected to be Hermitian is not, within tolerance.
/// Carries the first offending entry pair (row, col) and its deviation.
class HermiticityError : public std::domain_error {
 public:
  HermiticityError(std::size_t row, std::size_t col, double deviation);

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }
  double deviation() const noexcept { return deviation_; }

 private:
  std::size_t row_;
  std::size_t col_;
  double deviation_;
};

/// Dense square complex matrix, row-major storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |u><v|
  static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);
  /// |v><v|
  static ComplexMatrix projector(std::span<const Complex> v);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return entries_.size(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  std::span<const Complex> data() const noexcept { return entries_; }
  std::span<Complex> data() noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double max_abs() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

/// max_ij |A_ij - B_ij|; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b);

/// Tr[AB] as sum_ij A_ij B_ji, without forming AB.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm(std::span<const Complex> v);

/// Tolerance used for the Hermiticity check: 1e-12 * max(1, max|A_ij|).
double hermiticity_tolerance(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a);

/// Throws HermiticityError naming the worst entry pair if `a` is not Hermitian.
void require_hermitian(const ComplexMatrix& a);

/// (A + A^dagger) / 2 after checking Hermiticity.
ComplexMatrix symmetrized(const ComplexMatrix& a);

std::string to_string(const ComplexMatrix& a, int precision = 6);

}  // namespace gmew
