#include <doctest.h>

#include <cmath>

#include "gmew/eigen.hpp"
#include "gmew/maps.hpp"
#include "gmew/multipartite.hpp"
#include "gmew/states.hpp"
#include "helpers.hpp"

using namespace gmew;
using gmew::testing::random_density;

namespace {

ComplexMatrix bell_phi_plus() {
  const double a = 1.0 / std::sqrt(2.0);
  return ComplexMatrix::projector(ComplexVector{a, 0, 0, a});
}

}  // namespace

TEST_CASE("SpaceShape index round trip") {
  const SpaceShape shape({2, 3, 4});
  CHECK(shape.total_dim() == 24);
  for (std::size_t f = 0; f < shape.total_dim(); ++f) REQUIRE(shape.flat_index(shape.multi_index(f)) == f);
  // party 0 is the most significant digit
  CHECK(shape.flat_index(std::vector<std::size_t>{1, 0, 0}) == 12);
  CHECK(shape.flat_index(std::vector<std::size_t>{0, 0, 1}) == 1);
  CHECK_THROWS_AS(SpaceShape({2, 1}), std::invalid_argument);
}

TEST_CASE("enumerate_bipartitions") {
  CHECK(enumerate_bipartitions(SpaceShape({2, 2})).size() == 1);
  const auto three = enumerate_bipartitions(SpaceShape({2, 2, 2}));
  REQUIRE(three.size() == 3);
  CHECK(three[0] == Bipartition{{0}, {1, 2}});
  CHECK(three[1] == Bipartition{{0, 1}, {2}});
  CHECK(three[2] == Bipartition{{0, 2}, {1}});
  const auto four = enumerate_bipartitions(SpaceShape({2, 2, 2, 2}));
  CHECK(four.size() == 7);
  for (const auto& b : four) {
    CHECK(b.inside.front() == 0);
    CHECK(b.inside.size() + b.outside.size() == 4);
  }
  CHECK_THROWS_AS(enumerate_bipartitions(SpaceShape({3})), std::invalid_argument);
}

TEST_CASE("Bipartition canonical form") {
  const std::vector<std::size_t> s{1, 2};
  CHECK(Bipartition::from_subset(s, 3) == Bipartition{{0}, {1, 2}});
  CHECK(smaller_side(Bipartition{{0, 1}, {2}}) == MapSide::outside);
  CHECK(smaller_side(Bipartition{{0}, {1, 2}}) == MapSide::inside);
}

TEST_CASE("partial_transpose basics") {
  std::mt19937_64 rng(11);
  const SpaceShape shape({2, 3});
  const auto rho = random_density(6, rng);
  const std::vector<std::size_t> all{0, 1}, none{}, first{0};
  CHECK(max_abs_diff(partial_transpose(rho, shape, all), rho.transpose()) == 0.0);
  CHECK(partial_transpose(rho, shape, none) == rho);
  const std::vector<std::size_t> bad{2};
  CHECK_THROWS_AS(partial_transpose(rho, shape, bad), std::invalid_argument);

  SUBCASE("Bell state") {
    const auto pt = partial_transpose(bell_phi_plus(), SpaceShape({2, 2}), first);
    // closed form spectrum {1/2, 1/2, 1/2, -1/2}
    const auto e = herm_eig(pt);
    CHECK(e.values[0] == doctest::Approx(-0.5).epsilon(1e-14));
    for (int k = 1; k < 4; ++k) CHECK(e.values[k] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(min_eigenvalue(pt) == doctest::Approx(-0.5).epsilon(1e-14));
  }
}

TEST_CASE("partial_transpose properties") {
  std::mt19937_64 rng(12);
  const SpaceShape shape({2, 3, 2});
  const std::vector<std::vector<std::size_t>> subsets{{0}, {1}, {2}, {0, 2}, {1, 2}};
  for (int trial = 0; trial < 20; ++trial) {
    const auto rho = random_density(shape.total_dim(), rng);
    for (const auto& s : subsets) {
      const auto pt = partial_transpose(rho, shape, s);
      REQUIRE(partial_transpose(pt, shape, s) == rho);
      REQUIRE(std::abs(pt.trace() - rho.trace()) < 1e-14);
      REQUIRE(is_hermitian(pt));
      double sum = 0.0;
      for (double v : herm_eig(pt).values) sum += v;
      REQUIRE(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("permute_parties") {
  std::mt19937_64 rng(13);
  const SpaceShape shape({2, 3});
  const auto a = random_density(2, rng), b = random_density(3, rng);
  const std::vector<std::size_t> id{0, 1}, swap{1, 0};
  CHECK(permute_parties(kron(a, b), shape, id) == kron(a, b));
  CHECK(max_abs_diff(permute_parties(kron(a, b), shape, swap), kron(b, a)) == 0.0);

  const SpaceShape three({3, 3, 3});
  const auto g = ComplexMatrix::projector(ghz(3, 3));
  const std::vector<std::size_t> cyc{1, 2, 0}, rev{2, 1, 0};
  CHECK(permute_parties(g, three, cyc) == g);
  CHECK(permute_parties(g, three, rev) == g);

  const SpaceShape mixed({2, 3, 4});
  const auto rho = random_density(24, rng);
  const std::vector<std::size_t> perm{2, 0, 1};
  const auto there = permute_parties(rho, mixed, perm);
  CHECK(permute_parties(there, mixed.permuted(perm), inverse_permutation(perm)) == rho);

  const std::vector<std::size_t> bad{0, 0, 1};
  CHECK_THROWS_AS(permute_parties(rho, mixed, bad), std::invalid_argument);
}

TEST_CASE("apply_map_partial agrees with an index-loop oracle") {
  std::mt19937_64 rng(14);
  const SpaceShape shape({3, 2, 3});
  const auto choi = choi_map();
  const auto red = reduction_map(2);
  for (int trial = 0; trial < 5; ++trial) {
    const auto rho = random_density(shape.total_dim(), rng);
    for (std::size_t k : {std::size_t{0}, std::size_t{2}}) {
      const std::vector<std::size_t> s{k};
      const auto oracle = gmew::testing::naive_apply_on_party(
          [&](const ComplexMatrix& a) { return choi.apply(a); }, rho, shape, k);
      REQUIRE(max_abs_diff(apply_map_partial(choi, rho, shape, s), oracle) < 1e-14);
    }
    const std::vector<std::size_t> middle{1};
    const auto oracle = gmew::testing::naive_apply_on_party(
        [](const ComplexMatrix& a) { return ComplexMatrix::identity(2) * a.trace() - a; }, rho, shape, 1);
    REQUIRE(max_abs_diff(apply_map_partial(red, rho, shape, middle), oracle) < 1e-14);
  }
}

TEST_CASE("apply_map_partial special cases") {
  std::mt19937_64 rng(15);
  const SpaceShape shape({2, 2, 2});
  const auto rho = random_density(8, rng);
  const std::vector<std::size_t> s{1};
  CHECK(max_abs_diff(apply_map_partial(identity_map(2), rho, shape, s), rho) == 0.0);

  const std::vector<std::size_t> pair{0, 2};
  CHECK(max_abs_diff(apply_map_partial(identity_map(4), rho, shape, pair), rho) == 0.0);
  CHECK_THROWS_AS(apply_map_partial(identity_map(3), rho, shape, s), std::invalid_argument);

  // Choi map on one qutrit of rho(1/2): negative eigenvalue
  const std::vector<std::size_t> first{0};
  CHECK(min_eigenvalue(apply_map_partial(choi_map(), rho_lambda(0.5), SpaceShape({3, 3, 3}), first)) < 0.0);
}

TEST_CASE("apply_map_partial with the transpose map reproduces partial_transpose") {
  std::mt19937_64 rng(16);
  for (const auto& dims : {std::vector<std::size_t>{2, 2, 2}, std::vector<std::size_t>{3, 3, 3}}) {
    const SpaceShape shape(dims);
    const std::size_t d = dims[0];
    const auto t1 = transpose_map(d);
    const auto t2 = transpose_map(d * d);
    for (int trial = 0; trial < 100; ++trial) {
      const auto rho = random_density(shape.total_dim(), rng);
      for (std::size_t k = 0; k < 3; ++k) {
        const std::vector<std::size_t> s{k};
        REQUIRE(max_abs_diff(apply_map_partial(t1, rho, shape, s), partial_transpose(rho, shape, s)) <= 1e-13);
      }
      const std::vector<std::size_t> two{0, 2};
      REQUIRE(max_abs_diff(apply_map_partial(t2, rho, shape, two), partial_transpose(rho, shape, two)) <= 1e-13);
    }
  }
}

TEST_CASE("apply_map_partial factorizes on product inputs") {
  std::mt19937_64 rng(17);
  const SpaceShape shape({3, 2, 3});
  const std::vector<Superoperator> maps{choi_map(), reduction_map(3), generalized_choi(2, 0, 1)};
  for (const auto& map : maps) {
    for (int trial = 0; trial < 10; ++trial) {
      // sigma_b on party 2, sigma_rest on parties {0, 1}
      const auto sb = random_density(3, rng);
      const auto sr = random_density(6, rng);
      const auto rho = kron(sr, sb);  // already in natural order (0, 1 | 2)
      const std::vector<std::size_t> s{2};
      const auto expect = kron(sr, map.apply(sb));
      REQUIRE(max_abs_diff(apply_map_partial(map, rho, shape, s), expect) <= 1e-12);

      // map on party 0: sigma_b (x) sigma_rest
      const auto rho0 = kron(sb, sr);
      const std::vector<std::size_t> s0{0};
      REQUIRE(max_abs_diff(apply_map_partial(map, rho0, shape, s0), kron(map.apply(sb), sr)) <= 1e-12);
    }
  }
}
