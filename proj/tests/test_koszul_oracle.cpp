#include <doctest.h>

#include "koszul/errors.hpp"
#include "koszul/koszul_oracle.hpp"
#include "oracles.hpp"

using namespace koszul;
using koszul::testing::ev;

namespace {

const MonomialIdeal kXY = maximal_ideal(2);
const MonomialIdeal kSquares = minimalize({ev({2, 0}), ev({1, 1}), ev({0, 2})});

}  // namespace

TEST_SUITE("koszul_oracle") {
  TEST_CASE("basis at (1,1) for <x,y>") {
    auto b1 = koszul_basis(kXY, ev({1, 1}), 1);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0].wedge == std::vector<std::size_t>{0});
    CHECK(b1[0].monomial_part == ev({0, 1}));
    CHECK(b1[1].wedge == std::vector<std::size_t>{1});
    CHECK(b1[1].monomial_part == ev({1, 0}));
    CHECK(koszul_basis(kXY, ev({1, 1}), 2).empty());
    CHECK(koszul_basis(kXY, ev({0, 0}), 0).empty());
  }

  TEST_CASE("differential at (1,1) for <x,y>") {
    const std::uint32_t p = 32003;
    auto d1 = koszul_differential(kXY, ev({1, 1}), 1, p);
    REQUIRE(d1.rows() == 1);
    REQUIRE(d1.cols() == 2);
    CHECK(d1.at(0, 0) == p - 1);
    CHECK(d1.at(0, 1) == p - 1);
    auto d2 = koszul_differential(kXY, ev({1, 1}), 2, p);
    CHECK(d2.cols() == 0);
    CHECK(koszul_differential(kXY, ev({1, 1}), 0, p).rows() == 0);
  }

  TEST_CASE("homology at small multidegrees") {
    CHECK(koszul_homology_dim(kXY, ev({1, 1}), 1) == 1);
    CHECK(koszul_homology_dim(kXY, ev({1, 0}), 0) == 1);
    for (std::size_t i = 0; i <= 2; ++i) CHECK(koszul_homology_dim(kSquares, ev({2, 2}), i) == 0);
    CHECK(koszul_homology_dim(kSquares, ev({2, 1}), 1) == 1);
    CHECK(koszul_homology_dim(kSquares, ev({1, 2}), 1) == 1);
    CHECK_THROWS_AS(koszul_homology_dim(kXY, ev({1, 1, 1}), 0), DimensionError);
  }

  TEST_CASE("differential squares to zero") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      auto I = koszul::testing::small_random_ideal(seed);
      for (const auto& a : lcm_lattice(I).elements()) {
        for (std::size_t q = 1; q <= I.num_vars(); ++q) {
          auto d_q = koszul_differential(I, a, q, 32003);
          auto d_q1 = koszul_differential(I, a, q + 1, 32003);
          CHECK(multiply(d_q, d_q1).is_zero());
        }
      }
    }
  }

  TEST_CASE("chain window shapes") {
    auto w = koszul_window(kSquares, ev({2, 1}), 1, 32003);
    CHECK(w.basis.size() == 2);
    CHECK(w.d_q.cols() == w.basis.size());
    CHECK(w.d_q.rows() == w.basis_below.size());
    CHECK(w.d_q_plus_1.rows() == w.basis.size());
    CHECK(w.d_q_plus_1.cols() == w.basis_above.size());
  }

  TEST_CASE("Taylor oracle") {
    CHECK(taylor_betti(kXY, 1, ev({1, 1})) == 1);
    CHECK(taylor_betti(kXY, 0, ev({1, 0})) == 1);
    CHECK(taylor_betti(kSquares, 1, ev({2, 2})) == 0);
    for (std::size_t i = 3; i < 6; ++i) CHECK(taylor_betti(kSquares, i, ev({2, 2})) == 0);
    auto I = random_ideal({3, 6, 18, 35, 5});
    CHECK(taylor_size(I) == 64);
    auto big = random_ideal({4, 21, 10, 12, 1});
    CHECK_THROWS_AS(taylor_betti(big, 1, ev({12, 12, 12, 12})), InfeasibleError);
  }

  TEST_CASE("Taylor agrees with Koszul on random ideals") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
      auto I = koszul::testing::small_random_ideal(seed);
      for (const auto& a : lcm_lattice(I).elements()) {
        for (std::size_t i = 0; i < I.num_vars(); ++i) {
          CHECK(taylor_betti(I, i, a) == koszul_homology_dim(I, a, i));
        }
      }
    }
  }
}
