#include "gmew/maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "gmew/eigen.hpp"
#include "gmew/parse.hpp"

namespace gmew {

namespace {

// Position of vec(A^T) entries inside vec(A).
std::size_t transposed_slot(std::size_t k, std::size_t d) { return (k % d) * d + k / d; }

ComplexVector haar_pure_state(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(d);
  for (auto& z : v) z = Complex{gauss(rng), gauss(rng)};
  const double n = norm(v);
  for (auto& z : v) z /= n;
  return v;
}

}  // namespace

Superoperator::Superoperator(std::size_t d, ComplexMatrix matrix) : d_(d), matrix_(std::move(matrix)) {
  if (d_ == 0 || matrix_.dim() != d_ * d_) {
    throw std::invalid_argument("Superoperator: matrix must be d^2 x d^2 for d = " + std::to_string(d_));
  }
}

Superoperator Superoperator::from_action(
    std::size_t d, const std::function<ComplexMatrix(const ComplexMatrix&)>& action) {
  ComplexMatrix m(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix e(d);
      e(i, j) = 1.0;
      const auto image = vectorize(action(e));
      const std::size_t col = j * d + i;
      for (std::size_t r = 0; r < d * d; ++r) m(r, col) = image[r];
    }
  return Superoperator(d, std::move(m));
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& a) const {
  if (a.dim() != d_) {
    throw std::invalid_argument("Superoperator::apply: operator dimension " + std::to_string(a.dim()) +
                                " does not match map dimension " + std::to_string(d_));
  }
  const auto v = vectorize(a);
  return unvectorize(matrix_ * std::span<const Complex>(v), d_);
}

ComplexVector vectorize(const ComplexMatrix& a) {
  const std::size_t d = a.dim();
  ComplexVector v(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) v[j * d + i] = a(i, j);
  return v;
}

ComplexMatrix unvectorize(std::span<const Complex> v, std::size_t d) {
  if (v.size() != d * d) throw std::invalid_argument("unvectorize: length is not d^2");
  ComplexMatrix a(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a(i, j) = v[j * d + i];
  return a;
}

Superoperator identity_map(std::size_t d) {
  if (d < 1) throw std::invalid_argument("identity_map: d must be positive");
  return Superoperator(d, ComplexMatrix::identity(d * d));
}

Superoperator transpose_map(std::size_t d) {
  if (d < 2) throw std::invalid_argument("transpose_map: d must be at least 2");
  return Superoperator::from_action(d, [](const ComplexMatrix& a) { return a.transpose(); });
}

Superoperator reduction_map(std::size_t d) {
  if (d < 2) throw std::invalid_argument("reduction_map: d must be at least 2");
  return Superoperator::from_action(d, [d](const ComplexMatrix& a) {
    return ComplexMatrix::identity(d) * a.trace() - a;
  });
}

Superoperator choi_map() {
  return Superoperator::from_action(3, [](const ComplexMatrix& a) {
    ComplexMatrix out = a * Complex{-0.5};
    out(0, 0) = 0.5 * (a(0, 0) + a(2, 2));
    out(1, 1) = 0.5 * (a(1, 1) + a(0, 0));
    out(2, 2) = 0.5 * (a(2, 2) + a(1, 1));
    return out;
  });
}

Superoperator generalized_choi(double a, double b, double c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("generalized_choi: parameters must be non-negative");
  return Superoperator::from_action(3, [a, b, c](const ComplexMatrix& x) {
    ComplexMatrix out = x * Complex{-1.0};
    for (std::size_t i = 0; i < 3; ++i) {
      out(i, i) = a * x(i, i) + b * x((i + 1) % 3, (i + 1) % 3) + c * x((i + 2) % 3, (i + 2) % 3);
    }
    return out;
  });
}

ComplexMatrix canonical_antisymmetric_unitary(std::size_t d) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("antisymmetric unitary needs even d >= 2");
  ComplexMatrix u(d);
  for (std::size_t k = 0; k < d; k += 2) {
    u(k, k + 1) = 1.0;
    u(k + 1, k) = -1.0;
  }
  return u;
}

Superoperator breuer_hall_map(std::size_t d, const ComplexMatrix& u) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("breuer_hall_map: d must be even and >= 2");
  if (u.dim() != d) throw std::invalid_argument("breuer_hall_map: U has wrong dimension");
  if (max_abs_diff(u.transpose(), u * Complex{-1.0}) > 1e-12) {
    throw std::invalid_argument("breuer_hall_map: U must be antisymmetric (U^T = -U)");
  }
  if (max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(d)) > 1e-12) {
    throw std::invalid_argument("breuer_hall_map: U must be unitary");
  }
  const ComplexMatrix u_dag = u.adjoint();
  return Superoperator::from_action(d, [d, &u, &u_dag](const ComplexMatrix& a) {
    return ComplexMatrix::identity(d) * a.trace() - a - u * a.transpose() * u_dag;
  });
}

Superoperator breuer_hall_map(std::size_t d) { return breuer_hall_map(d, canonical_antisymmetric_unitary(d)); }

Superoperator dual(const Superoperator& map) {
  // Tr[X B] = vec(X)^T vec(B^T), so the dual matrix is K S^T K with K the vec-transpose permutation.
  const std::size_t d = map.local_dim();
  const std::size_t n = d * d;
  const ComplexMatrix& s = map.matrix();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = s(transposed_slot(c, d), transposed_slot(r, d));
  return Superoperator(d, std::move(out));
}

double positivity_probe(const Superoperator& map, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("positivity_probe: need at least one sample");
  std::mt19937_64 rng(seed);
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < samples; ++s) {
    const auto phi = haar_pure_state(map.local_dim(), rng);
    worst = std::min(worst, min_eigenvalue(map.apply(ComplexMatrix::projector(phi))));
  }
  return worst;
}

MapSpec MapSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const auto no_args = [&] {
    if (colon != std::string_view::npos) {
      throw ParseError("map '" + std::string(name) + "' takes no parameters: '" + std::string(text) + "'");
    }
  };

  MapSpec spec;
  if (name == "identity") {
    no_args();
    spec.kind = MapKind::identity;
  } else if (name == "transpose") {
    no_args();
    spec.kind = MapKind::transpose;
  } else if (name == "reduction") {
    no_args();
    spec.kind = MapKind::reduction;
  } else if (name == "choi3") {
    no_args();
    spec.kind = MapKind::choi3;
    spec.dimension = 3;
  } else if (name == "gchoi") {
    const auto v = parse_number_list(args);
    if (v.size() != 3) throw ParseError("gchoi expects three parameters a,b,c: '" + std::string(text) + "'");
    if (v[0] < 0 || v[1] < 0 || v[2] < 0) {
      throw ParseError("gchoi parameters must be non-negative: '" + std::string(text) + "'");
    }
    spec.kind = MapKind::generalized_choi;
    spec.a = v[0];
    spec.b = v[1];
    spec.c = v[2];
    spec.dimension = 3;
  } else if (name == "breuer-hall") {
    const std::size_t d = parse_count(args);
    if (d < 2 || d % 2 != 0) throw ParseError("breuer-hall dimension must be even and >= 2: '" + std::string(text) + "'");
    spec.kind = MapKind::breuer_hall;
    spec.dimension = d;
  } else {
    throw ParseError("unknown map '" + std::string(text) +
                     "' (expected identity, transpose, reduction, choi3, gchoi:a,b,c or breuer-hall:d)");
  }
  return spec;
}

std::string MapSpec::to_string() const {
  switch (kind) {
    case MapKind::identity: return "identity";
    case MapKind::transpose: return "transpose";
    case MapKind::reduction: return "reduction";
    case MapKind::choi3: return "choi3";
    case MapKind::generalized_choi:
      return "gchoi:" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
    case MapKind::breuer_hall: return "breuer-hall:" + std::to_string(dimension.value_or(0));
  }
  return "?";
}

std::optional<std::size_t> MapSpec::fixed_dimension() const { return dimension; }

Superoperator MapSpec::build(std::size_t d) const {
  if (dimension && *dimension != d) {
    throw std::invalid_argument("map " + to_string() + " acts on dimension " + std::to_string(*dimension) +
                                ", requested " + std::to_string(d));
  }
  switch (kind) {
    case MapKind::identity: return identity_map(d);
    case MapKind::transpose: return transpose_map(d);
    case MapKind::reduction: return reduction_map(d);
    case MapKind::choi3: return choi_map();
    case MapKind::generalized_choi: return generalized_choi(a, b, c);
    case MapKind::breuer_hall: return breuer_hall_map(d);
  }
  throw std::logic_error("MapSpec::build: unhandled kind");
}

}  // namespace gmew
