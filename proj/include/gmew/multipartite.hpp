#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gmew/matrix.hpp"

namespace gmew {

class Superoperator;

/// Local dimensions of an n-party system. Party 0 is the most significant
/// digit of a flat basis index (|x0 x1 ... x_{n-1}>).
class SpaceShape {
 public:
  SpaceShape() = default;
  explicit SpaceShape(std::vector<std::size_t> dims);

  std::size_t parties() const noexcept { return dims_.size(); }
  std::size_t total_dim() const noexcept { return total_; }
  std::size_t dim(std::size_t party) const { return dims_.at(party); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }

  /// Product of local dimensions over `subset`.
  std::size_t subset_dim(std::span<const std::size_t> subset) const;

  std::vector<std::size_t> multi_index(std::size_t flat) const;
  std::size_t flat_index(std::span<const std::size_t> digits) const;

  /// Shape after reordering: party k of the result is party perm[k] of this shape.
  SpaceShape permuted(std::span<const std::size_t> perm) const;

  std::string to_string() const;

  friend bool operator==(const SpaceShape&, const SpaceShape&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::size_t total_ = 1;
};

/// A split of the parties into two nonempty sets; `inside` always holds party 0.
struct Bipartition {
  std::vector<std::size_t> inside;
  std::vector<std::size_t> outside;

  static Bipartition from_subset(std::span<const std::size_t> subset, std::size_t parties);

  std::string to_string() const;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

enum class MapSide { inside, outside };

const std::vector<std::size_t>& side_parties(const Bipartition& b, MapSide side);

/// Side holding fewer parties (`inside` on ties).
MapSide smaller_side(const Bipartition& b);

/// All 2^{n-1}-1 canonical bipartitions, ordered by the bitmask of `inside`.
std::vector<Bipartition> enumerate_bipartitions(const SpaceShape& shape);

/// Relabels tensor factors: party k of the output is party perm[k] of the input.
ComplexMatrix permute_parties(const ComplexMatrix& rho, const SpaceShape& shape,
                              std::span<const std::size_t> perm);
ComplexVector permute_parties(std::span<const Complex> psi, const SpaceShape& shape,
                              std::span<const std::size_t> perm);

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm);

/// Transposes the local indices of every party in `subset`.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const SpaceShape& shape,
                                std::span<const std::size_t> subset);

/// (Lambda_subset (x) id)[rho] for a superoperator acting on the joint space of `subset`.
ComplexMatrix apply_map_partial(const Superoperator& map, const ComplexMatrix& rho,
                                const SpaceShape& shape, std::span<const std::size_t> subset);

}  // namespace gmew
