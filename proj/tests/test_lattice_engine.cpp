#include <doctest.h>

#include <algorithm>
#include <set>

#include "koszul/engine.hpp"
#include "koszul/errors.hpp"
#include "koszul/lattice.hpp"
#include "oracles.hpp"

using namespace koszul;
using koszul::testing::ev;

namespace {

const MonomialIdeal kXY = maximal_ideal(2);
const MonomialIdeal kSquares = minimalize({ev({2, 0}), ev({1, 1}), ev({0, 2})});

std::set<ExponentVector> as_set(const std::vector<ExponentVector>& xs) { return {xs.begin(), xs.end()}; }

SubBettiLookup oracle_lookup() {
  return [](const MonomialIdeal& J, const ExponentVector& a, std::size_t j) {
    return J.is_zero() ? std::size_t{0} : koszul_homology_dim(J, a, j);
  };
}

}  // namespace

TEST_SUITE("lattice_engine") {
  TEST_CASE("lcm lattice") {
    CHECK(as_set(lcm_lattice(kXY).elements()) == std::set{ev({1, 0}), ev({0, 1}), ev({1, 1})});
    CHECK(as_set(lcm_lattice(kSquares).elements()) ==
          std::set{ev({2, 0}), ev({1, 1}), ev({0, 2}), ev({2, 1}), ev({1, 2}), ev({2, 2})});
    auto single = minimalize({ev({3, 1, 0})});
    CHECK(lcm_lattice(single).elements() == std::vector{ev({3, 1, 0})});
    CHECK(in_lcm_lattice(kSquares, ev({2, 1})));
    CHECK_FALSE(in_lcm_lattice(kSquares, ev({3, 1})));
    std::size_t relations = 0;
    for (const auto& up : lcm_lattice(kSquares).divisibility()) relations += up.size();
    CHECK(relations == 9);
  }

  TEST_CASE("candidate multidegrees") {
    auto d0 = candidate_multidegrees(kSquares, 0);
    CHECK(as_set(d0) == std::set{ev({2, 0}), ev({1, 1}), ev({0, 2})});
    auto d1 = as_set(candidate_multidegrees(kSquares, 1));
    CHECK(d1.count(ev({2, 1})));
    CHECK(d1.count(ev({1, 2})));
    // i >= r: still defined, and every Betti number there vanishes.
    for (const auto& a : candidate_multidegrees(kSquares, 3)) {
      for (std::size_t i = 3; i < 5; ++i) CHECK(koszul_homology_dim(kSquares, a, i) == 0);
    }
  }

  TEST_CASE("candidate multidegrees contain the syzygy degrees") {
    for (std::uint64_t seed = 300; seed < 340; ++seed) {
      auto I = koszul::testing::small_random_ideal(seed);
      auto table = koszul::testing::oracle_table(I);
      for (const auto& [key, value] : table.entries()) {
        auto d = as_set(candidate_multidegrees(I, key.first));
        CHECK(d.count(key.second) == 1);
      }
    }
  }

  TEST_CASE("Mayer-Vietoris split") {
    auto split = mv_split(kSquares, SplitPick::Last);
    CHECK(split.split_generator == ev({0, 2}));
    CHECK(split.rest == minimalize({ev({2, 0}), ev({1, 1})}));
    CHECK(split.overlap == minimalize({ev({1, 2})}));
    CHECK(mv_split(kSquares).split_generator == ev({0, 2}));

    auto xy = mv_split(kXY);
    CHECK(xy.split_generator == ev({0, 1}));
    CHECK(xy.rest == minimalize({ev({1, 0})}));
    CHECK(xy.overlap == minimalize({ev({1, 1})}));

    CHECK_THROWS_AS(mv_split(minimalize({ev({1, 1})})), PreconditionError);
    CHECK_THROWS_AS(mv_split_at(kSquares, 3), DimensionError);
  }

  TEST_CASE("short exact sequence") {
    CHECK(verify_exactness(kSquares, ev({1, 2})));
    CHECK(verify_exactness(kXY, ev({1, 1})));
    CHECK(verify_exactness(kSquares, ev({0, 0})));
    CHECK(verify_exactness(kSquares, ev({5, 7})));
    for (std::uint64_t seed = 400; seed < 420; ++seed) {
      auto I = koszul::testing::small_random_ideal(seed);
      if (I.size() < 2) continue;
      for (const auto& a : lcm_lattice(I).elements()) {
        CHECK(verify_exactness(I, a, 32003, SplitPick::MaxDegree));
        CHECK(verify_exactness(I, a, 32003, SplitPick::Last));
      }
    }
  }

  TEST_CASE("long exact sequence shortcuts") {
    auto split = mv_split(kSquares, SplitPick::Last);
    auto b = les_shortcut(split, ev({1, 2}), 1, oracle_lookup());
    REQUIRE(b.has_value());
    CHECK(*b == 1);
    CHECK(les_shortcut(LesDims{}) == std::optional<std::size_t>{0});
    // Only the middle of the sequence known to be nonzero on both sides: undetermined.
    CHECK_FALSE(les_shortcut(LesDims{1, 0, 1, 1, 0, 0}).has_value());
  }

  TEST_CASE("shortcuts never contradict the oracle") {
    for (std::uint64_t seed = 500; seed < 540; ++seed) {
      auto I = koszul::testing::small_random_ideal(seed);
      if (I.size() < 2) continue;
      for (auto pick : {SplitPick::MaxDegree, SplitPick::Last}) {
        auto split = mv_split(I, pick);
        for (const auto& a : lcm_lattice(I).elements()) {
          for (std::size_t i = 0; i < I.num_vars(); ++i) {
            if (auto v = les_shortcut(split, a, i, oracle_lookup())) CHECK(*v == koszul_homology_dim(I, a, i));
          }
        }
      }
    }
  }

  TEST_CASE("Betti tables") {
    auto m3 = betti_table(maximal_ideal(3));
    CHECK(m3.totals() == std::vector<std::size_t>{3, 3, 1});
    for (const auto& [key, value] : m3.entries()) {
      CHECK(value == 1);
      for (auto e : key.second) CHECK(e <= 1);
    }

    auto sq = betti_table(kSquares, Strategy::Simplicial);
    BettiTable expected(2, 32003);
    expected.set(0, ev({2, 0}), 1);
    expected.set(0, ev({1, 1}), 1);
    expected.set(0, ev({0, 2}), 1);
    expected.set(1, ev({2, 1}), 1);
    expected.set(1, ev({1, 2}), 1);
    CHECK(sq.same_entries(expected));
    CHECK(betti_table(kSquares, Strategy::MayerVietoris).same_entries(expected));

    auto I = random_ideal({3, 6, 18, 35, 9});
    auto t = betti_table(I);
    CHECK(t.stats().taylor_size == 64);
    CHECK(t.stats().multidegrees_checked <= 64);

    CHECK(betti_table(MonomialIdeal(3)).empty());
    CHECK_THROWS_AS(betti_table(minimalize({ev({1, 1, 0}), ev({0, 1, 1})}), Strategy::Scarf), PreconditionError);
    CHECK_THROWS_AS(betti_table(kSquares, Strategy::Simplicial, 32004), PreconditionError);
  }

  TEST_CASE("strategies and thread counts agree with the oracle") {
    for (std::uint64_t seed = 600; seed < 660; ++seed) {
      auto I = koszul::testing::small_random_ideal(seed);
      auto expected = koszul::testing::oracle_table(I);
      CHECK(betti_table(I, Strategy::Simplicial).same_entries(expected));
      CHECK(betti_table(I, Strategy::MayerVietoris).same_entries(expected));
      CHECK(betti_table(I, Strategy::Auto, 32003, EngineOptions{3}).same_entries(expected));
      CHECK(betti_table(I, Strategy::MayerVietoris, 32003, EngineOptions{1, SplitPick::Last}).same_entries(expected));
    }
  }

  TEST_CASE("Euler relation") {
    for (std::uint64_t seed = 700; seed < 740; ++seed) {
      auto t = betti_table(koszul::testing::small_random_ideal(seed));
      CHECK(t.alternating_sum() == 1);
      auto stats = t.stats();
      CHECK(stats.multidegrees_checked >= stats.minimal_distinct);
      CHECK(stats.minimal_total == t.total());
    }
  }

  TEST_CASE("strategy names") {
    CHECK(parse_strategy("mv") == Strategy::MayerVietoris);
    CHECK(to_string(Strategy::Scarf) == "scarf");
    CHECK_THROWS_AS(parse_strategy("fast"), PreconditionError);
  }
}
