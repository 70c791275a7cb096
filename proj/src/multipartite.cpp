#include "gmew/multipartite.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gmew/maps.hpp"

namespace gmew {

namespace {

void check_subset(std::span<const std::size_t> subset, std::size_t parties) {
  std::vector<bool> seen(parties, false);
  for (auto k : subset) {
    if (k >= parties) {
      throw std::invalid_argument("party index " + std::to_string(k) + " out of range for " +
                                  std::to_string(parties) + " parties");
    }
    if (seen[k]) throw std::invalid_argument("party index " + std::to_string(k) + " repeated in subset");
    seen[k] = true;
  }
}

void check_state_dim(const ComplexMatrix& rho, const SpaceShape& shape) {
  if (rho.dim() != shape.total_dim()) {
    throw std::invalid_argument("matrix dimension " + std::to_string(rho.dim()) + " does not match shape " +
                                shape.to_string());
  }
}

// source[f] = flat index in the input of the output basis state f.
std::vector<std::size_t> permutation_source(const SpaceShape& shape, std::span<const std::size_t> perm) {
  if (perm.size() != shape.parties()) throw std::invalid_argument("permutation has wrong length");
  check_subset(perm, shape.parties());
  const SpaceShape out_shape = shape.permuted(perm);
  std::vector<std::size_t> source(shape.total_dim());
  std::vector<std::size_t> in_digits(shape.parties());
  for (std::size_t f = 0; f < source.size(); ++f) {
    const auto out_digits = out_shape.multi_index(f);
    for (std::size_t k = 0; k < perm.size(); ++k) in_digits[perm[k]] = out_digits[k];
    source[f] = shape.flat_index(in_digits);
  }
  return source;
}

std::string join(std::span<const std::size_t> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

SpaceShape::SpaceShape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("SpaceShape: need at least one party");
  for (auto d : dims_) {
    if (d < 2) throw std::invalid_argument("SpaceShape: local dimensions must be >= 2");
    total_ *= d;
  }
}

std::size_t SpaceShape::subset_dim(std::span<const std::size_t> subset) const {
  check_subset(subset, parties());
  std::size_t d = 1;
  for (auto k : subset) d *= dims_[k];
  return d;
}

std::vector<std::size_t> SpaceShape::multi_index(std::size_t flat) const {
  if (flat >= total_) throw std::out_of_range("multi_index: flat index out of range");
  std::vector<std::size_t> digits(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    digits[k] = flat % dims_[k];
    flat /= dims_[k];
  }
  return digits;
}

std::size_t SpaceShape::flat_index(std::span<const std::size_t> digits) const {
  if (digits.size() != dims_.size()) throw std::invalid_argument("flat_index: wrong number of digits");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (digits[k] >= dims_[k]) throw std::out_of_range("flat_index: digit out of range");
    flat = flat * dims_[k] + digits[k];
  }
  return flat;
}

SpaceShape SpaceShape::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != dims_.size()) throw std::invalid_argument("permutation has wrong length");
  check_subset(perm, dims_.size());
  std::vector<std::size_t> dims(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) dims[k] = dims_[perm[k]];
  return SpaceShape(std::move(dims));
}

std::string SpaceShape::to_string() const { return "(" + join(dims_) + ")"; }

Bipartition Bipartition::from_subset(std::span<const std::size_t> subset, std::size_t parties) {
  check_subset(subset, parties);
  std::vector<bool> in(parties, false);
  for (auto k : subset) in[k] = true;
  if (subset.empty() || subset.size() == parties) {
    throw std::invalid_argument("bipartition needs a nonempty proper subset");
  }
  if (!in[0]) in.flip();
  Bipartition b;
  for (std::size_t k = 0; k < parties; ++k) (in[k] ? b.inside : b.outside).push_back(k);
  return b;
}

std::string Bipartition::to_string() const { return "{" + join(inside) + "}|{" + join(outside) + "}"; }

const std::vector<std::size_t>& side_parties(const Bipartition& b, MapSide side) {
  return side == MapSide::inside ? b.inside : b.outside;
}

MapSide smaller_side(const Bipartition& b) {
  return b.outside.size() < b.inside.size() ? MapSide::outside : MapSide::inside;
}

std::vector<Bipartition> enumerate_bipartitions(const SpaceShape& shape) {
  const std::size_t n = shape.parties();
  if (n < 2) throw std::invalid_argument("enumerate_bipartitions: need at least two parties");
  std::vector<Bipartition> out;
  const std::size_t full = (std::size_t{1} << n) - 1;
  for (std::size_t mask = 1; mask < full; mask += 2) {  // odd masks contain party 0
    Bipartition b;
    for (std::size_t k = 0; k < n; ++k) ((mask >> k) & 1U ? b.inside : b.outside).push_back(k);
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm) {
  check_subset(perm, perm.size());
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) inv[perm[k]] = k;
  return inv;
}

ComplexMatrix permute_parties(const ComplexMatrix& rho, const SpaceShape& shape,
                              std::span<const std::size_t> perm) {
  check_state_dim(rho, shape);
  const auto source = permutation_source(shape, perm);
  ComplexMatrix out(rho.dim());
  for (std::size_t i = 0; i < source.size(); ++i)
    for (std::size_t j = 0; j < source.size(); ++j) out(i, j) = rho(source[i], source[j]);
  return out;
}

ComplexVector permute_parties(std::span<const Complex> psi, const SpaceShape& shape,
                              std::span<const std::size_t> perm) {
  if (psi.size() != shape.total_dim()) throw std::invalid_argument("vector length does not match shape");
  const auto source = permutation_source(shape, perm);
  ComplexVector out(psi.size());
  for (std::size_t i = 0; i < source.size(); ++i) out[i] = psi[source[i]];
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const SpaceShape& shape,
                                std::span<const std::size_t> subset) {
  check_state_dim(rho, shape);
  check_subset(subset, shape.parties());
  const std::size_t n = rho.dim();
  std::vector<std::vector<std::size_t>> digits(n);
  for (std::size_t f = 0; f < n; ++f) digits[f] = shape.multi_index(f);

  ComplexMatrix out(n);
  std::vector<std::size_t> row(shape.parties()), col(shape.parties());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      row = digits[i];
      col = digits[j];
      for (auto k : subset) std::swap(row[k], col[k]);
      out(shape.flat_index(row), shape.flat_index(col)) = rho(i, j);
    }
  return out;
}

ComplexMatrix apply_map_partial(const Superoperator& map, const ComplexMatrix& rho, const SpaceShape& shape,
                                std::span<const std::size_t> subset) {
  check_state_dim(rho, shape);
  check_subset(subset, shape.parties());
  const std::size_t db = shape.subset_dim(subset);
  if (map.local_dim() != db) {
    throw std::invalid_argument("map acts on dimension " + std::to_string(map.local_dim()) +
                                " but parties {" + join(subset) + "} of shape " + shape.to_string() +
                                " have joint dimension " + std::to_string(db));
  }

  // Bring the subset to the front, in the given order.
  std::vector<std::size_t> perm(subset.begin(), subset.end());
  for (std::size_t k = 0; k < shape.parties(); ++k)
    if (std::find(subset.begin(), subset.end(), k) == subset.end()) perm.push_back(k);
  const ComplexMatrix front = permute_parties(rho, shape, perm);

  const std::size_t dr = rho.dim() / db;
  const ComplexMatrix& s = map.matrix();
  ComplexMatrix mapped(rho.dim());
  ComplexVector block(db * db);
  for (std::size_t r = 0; r < dr; ++r)
    for (std::size_t rp = 0; rp < dr; ++rp) {
      for (std::size_t a = 0; a < db; ++a)
        for (std::size_t ap = 0; ap < db; ++ap) block[ap * db + a] = front(a * dr + r, ap * dr + rp);
      for (std::size_t row = 0; row < db * db; ++row) {
        Complex acc{};
        for (std::size_t k = 0; k < db * db; ++k) acc += s(row, k) * block[k];
        const std::size_t a = row % db, ap = row / db;
        mapped(a * dr + r, ap * dr + rp) = acc;
      }
    }

  const SpaceShape front_shape = shape.permuted(perm);
  return permute_parties(mapped, front_shape, inverse_permutation(perm));
}

}  // namespace gmew
