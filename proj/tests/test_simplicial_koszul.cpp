#include <doctest.h>

#include <random>

#include "koszul/errors.hpp"
#include "koszul/simplicial.hpp"
#include "oracles.hpp"

using namespace koszul;
using koszul::testing::ev;

namespace {

const MonomialIdeal kXY = maximal_ideal(2);
const MonomialIdeal kSquares = minimalize({ev({2, 0}), ev({1, 1}), ev({0, 2})});

std::vector<std::size_t> labels(std::size_t k) {
  std::vector<std::size_t> out(k);
  for (std::size_t j = 0; j < k; ++j) out[j] = j;
  return out;
}

// Applies the Koszul differential to a chain given as (basis element, coefficient) pairs.
bool is_cycle(const MonomialIdeal& I, const HomologyClassRep& rep, std::uint32_t p) {
  if (rep.degree == 0) return true;
  auto basis = koszul_basis(I, rep.multidegree, rep.degree);
  std::vector<FieldElement> v(basis.size(), 0);
  for (const auto& [element, coeff] : rep.chain) {
    auto it = std::find(basis.begin(), basis.end(), element);
    if (it == basis.end()) return false;
    v[static_cast<std::size_t>(it - basis.begin())] = coeff;
  }
  auto image = koszul_differential(I, rep.multidegree, rep.degree, p).apply(v);
  return std::all_of(image.begin(), image.end(), [](FieldElement x) { return x == 0; });
}

}  // namespace

TEST_SUITE("simplicial_koszul") {
  TEST_CASE("complex validation") {
    CHECK_THROWS_AS(SimplicialComplex(labels(2), {0, 3}), InvariantError);
    SimplicialComplex two_points(labels(2), {0, 1, 2});
    CHECK(two_points.dimension() == 0);
    CHECK(SimplicialComplex().dimension() == -2);
    CHECK(SimplicialComplex(labels(0), {0}).dimension() == -1);
    CHECK(SimplicialComplex::full_simplex(labels(3)).faces().size() == 8);
  }

  TEST_CASE("upper Koszul complexes") {
    auto two_points = upper_koszul_complex(kXY, ev({1, 1}));
    CHECK(two_points.faces() == std::vector<Face>{0, 1, 2});
    auto full = upper_koszul_complex(kSquares, ev({2, 2}));
    CHECK(full.faces() == std::vector<Face>{0, 1, 2, 3});
    CHECK(upper_koszul_complex(kSquares, ev({1, 0})).is_void());
  }

  TEST_CASE("reduced homology") {
    SimplicialComplex two_points(labels(2), {0, 1, 2});
    CHECK(reduced_homology_dim(two_points, 0) == 1);
    CHECK(reduced_homology_dim(two_points, -1) == 0);
    CHECK(reduced_homology_dim(SimplicialComplex(labels(0), {0}), -1) == 1);
    CHECK(reduced_homology_dim(SimplicialComplex(), -1) == 0);
    for (std::size_t k = 1; k <= 5; ++k) {
      auto simplex = SimplicialComplex::full_simplex(labels(k));
      for (int d = -1; d <= static_cast<int>(k); ++d) CHECK(reduced_homology_dim(simplex, d) == 0);
    }
    // Boundary of a triangle is a circle.
    SimplicialComplex circle(labels(3), {0, 1, 2, 4, 3, 5, 6});
    CHECK(reduced_homology_dim(circle, 1) == 1);
    CHECK(reduced_homology_dim(circle, 0) == 0);
    CHECK_THROWS_AS(reduced_homology_dim(circle, -2), PreconditionError);
  }

  TEST_CASE("Betti numbers through the upper Koszul complex") {
    CHECK(betti_via_simplicial(kXY, 1, ev({1, 1})) == 1);
    CHECK(betti_via_simplicial(kSquares, 1, ev({2, 1})) == 1);
    for (std::size_t i = 0; i <= 3; ++i) CHECK(betti_via_simplicial(kSquares, i, ev({2, 2})) == 0);
  }

  TEST_CASE("simplicial and Koszul agree on random ideals") {
    for (std::uint64_t seed = 200; seed < 240; ++seed) {
      auto I = koszul::testing::small_random_ideal(seed);
      for (const auto& a : lcm_lattice(I).elements()) {
        for (std::size_t i = 0; i <= I.num_vars(); ++i) CHECK(betti_via_simplicial(I, i, a) == koszul_homology_dim(I, a, i));
      }
    }
  }

  TEST_CASE("truncation") {
    auto k4 = truncate_for_degree(SimplicialComplex::full_simplex(labels(4)), 0);
    CHECK(k4.faces().size() == 1 + 4 + 6);
    CHECK(k4.dimension() == 1);
    CHECK(reduced_homology_dim(k4, 1) == 3);
    auto simplex = SimplicialComplex::full_simplex(labels(3));
    CHECK(truncate_for_degree(simplex, 2) == simplex);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      auto complex = koszul::testing::random_complex(rng, 2 + rng() % 6);
      for (int d = -1; d <= complex.dimension(); ++d) {
        auto full = koszul::testing::full_reduced_homology(complex, d, 32003);
        CHECK(reduced_homology_dim(truncate_for_degree(complex, d), d) == full);
        CHECK(reduced_homology_dim(complex, d) == full);
      }
    }
  }

  TEST_CASE("boundary squares to zero") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      auto complex = koszul::testing::random_complex(rng, 2 + rng() % 6);
      for (std::size_t k = 2; k <= complex.vertex_count(); ++k) {
        auto d_k = simplicial_boundary(complex.faces_of_size(k), complex.faces_of_size(k - 1), 32003);
        auto d_k1 = simplicial_boundary(complex.faces_of_size(k + 1), complex.faces_of_size(k), 32003);
        CHECK(multiply(d_k, d_k1).is_zero());
      }
    }
  }

  TEST_CASE("homology class representatives") {
    const std::uint32_t p = 32003;
    auto reps = homology_class_reps(kXY, ev({1, 1}), 1, p);
    REQUIRE(reps.size() == 1);
    REQUIRE(reps[0].chain.size() == 2);
    CHECK(reps[0].chain[0].second == p - reps[0].chain[1].second);
    CHECK(is_cycle(kXY, reps[0], p));

    CHECK(homology_class_reps(kSquares, ev({2, 2}), 1, p).empty());

    auto m3 = homology_class_reps(maximal_ideal(3), ev({1, 1, 1}), 2, p);
    REQUIRE(m3.size() == 1);
    for (const auto& [element, coeff] : m3[0].chain) CHECK(element.wedge.size() == 2);
    CHECK(is_cycle(maximal_ideal(3), m3[0], p));
  }
}
