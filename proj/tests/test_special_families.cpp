#include <doctest.h>

#include <set>

#include "koszul/engine.hpp"
#include "koszul/errors.hpp"
#include "koszul/families.hpp"
#include "oracles.hpp"

using namespace koszul;
using koszul::testing::ev;

namespace {

const MonomialIdeal kSquares = minimalize({ev({2, 0}), ev({1, 1}), ev({0, 2})});

}  // namespace

TEST_SUITE("special_families") {
  TEST_CASE("genericity") {
    CHECK_FALSE(is_generic(minimalize({ev({1, 1, 0}), ev({0, 1, 1})})));
    CHECK(is_generic(kSquares));
    CHECK(is_generic(minimalize({ev({4, 2, 7})})));
    // x*z divides lcm(x*y, y*z) = x*y*z, but not strictly.
    CHECK(is_generic(minimalize({ev({1, 1, 0}), ev({0, 1, 1}), ev({1, 0, 1})})) == false);
    CHECK(strictly_divides(ev({1, 0, 0}), ev({2, 1, 0})));
    CHECK_FALSE(strictly_divides(ev({1, 1, 0}), ev({2, 1, 0})));
  }

  TEST_CASE("genericity needs strict divisibility") {
    // x^2y and x^2z share deg_x = 2; xyz divides their lcm x^2yz and differs from it, but not strictly.
    auto I = minimalize({ev({2, 1, 0}), ev({2, 0, 1}), ev({1, 1, 1}), ev({0, 0, 2})});
    CHECK_FALSE(is_generic(I));
    auto truth = koszul::testing::oracle_table(I);
    CHECK(truth.at(1, ev({2, 1, 1})) == 2);
    auto s = scarf_complex(I);
    CHECK(s.count_of_size(2) + s.count_of_size(3) < truth.totals()[1] + truth.totals()[2]);
  }

  TEST_CASE("Scarf complex") {
    auto s = scarf_complex(kSquares);
    CHECK(std::set<std::uint64_t>(s.faces.begin(), s.faces.end()) == std::set<std::uint64_t>{0, 1, 2, 4, 3, 6});
    CHECK_FALSE(s.contains(5));
    CHECK_FALSE(s.contains(7));
    CHECK(scarf_complex(maximal_ideal(2)).faces.size() == 4);
    CHECK(scarf_complex(minimalize({ev({2, 3})})).faces == std::vector<std::uint64_t>{0, 1});
  }

  TEST_CASE("Scarf complex matches subset enumeration") {
    for (std::uint64_t seed = 800; seed < 880; ++seed) {
      auto I = koszul::testing::small_random_ideal(seed);
      auto s = scarf_complex(I);
      CHECK(std::set<std::uint64_t>(s.faces.begin(), s.faces.end()) == koszul::testing::brute_scarf_faces(I));
    }
    CHECK_THROWS_AS(scarf_complex(random_ideal({4, 26, 10, 12, 1})), InfeasibleError);
  }

  TEST_CASE("Scarf Betti numbers") {
    auto t = scarf_betti(kSquares);
    CHECK(t.totals() == std::vector<std::size_t>{3, 2});
    CHECK(t.at(1, ev({2, 1})) == 1);
    CHECK(t.at(1, ev({1, 2})) == 1);
    auto xy = scarf_betti(maximal_ideal(2));
    CHECK(xy.totals() == std::vector<std::size_t>{2, 1});
    CHECK(xy.at(1, ev({1, 1})) == 1);
    CHECK(scarf_betti(minimalize({ev({1, 2})})).totals() == std::vector<std::size_t>{1});
    CHECK(scarf_betti(minimalize({ev({0, 0})})).totals() == std::vector<std::size_t>{1});
    CHECK_THROWS_AS(scarf_betti(minimalize({ev({1, 1, 0}), ev({0, 1, 1})})), PreconditionError);
  }

  TEST_CASE("two-term long exact sequences") {
    CHECK(les_two_term_check(kSquares).holds);
    CHECK(les_two_term_check(maximal_ideal(2)).holds);
    CHECK_THROWS_AS(les_two_term_check(minimalize({ev({1, 1, 0}), ev({0, 1, 1})})), PreconditionError);
  }

  TEST_CASE("Pommaret classes") {
    CHECK(pommaret_class(ev({0, 2, 1})) == 2);
    CHECK(multiplicative_variables(ev({0, 2, 1})) == std::vector<std::size_t>{1, 2});
    CHECK(pommaret_class(ev({3, 0})) == 1);
    CHECK(multiplicative_variables(ev({3, 0})) == std::vector<std::size_t>{1});
    CHECK(pommaret_class(ev({0, 0, 5})) == 3);
    CHECK(multiplicative_variables(ev({0, 0, 5})) == std::vector<std::size_t>{1, 2, 3});
    CHECK_THROWS_AS(pommaret_class(ev({0, 0})), PreconditionError);
    CHECK(involutively_divides(ev({0, 1}), ev({3, 1})));
    CHECK_FALSE(involutively_divides(ev({1, 0}), ev({1, 1})));
  }

  TEST_CASE("Pommaret completion") {
    auto xy_y2 = pommaret_complete(minimalize({ev({1, 1}), ev({0, 2})}), 10);
    REQUIRE(std::holds_alternative<PommaretBasis>(xy_y2));
    CHECK(std::get<PommaretBasis>(xy_y2).elements == std::vector{ev({1, 1}), ev({0, 2})});

    auto y = pommaret_complete(minimalize({ev({0, 1})}), 10);
    REQUIRE(std::holds_alternative<PommaretBasis>(y));
    CHECK(std::get<PommaretBasis>(y).elements == std::vector{ev({0, 1})});

    auto x = pommaret_complete(minimalize({ev({1, 0})}), 10);
    REQUIRE(std::holds_alternative<NotQuasiStableWithinBound>(x));
    const auto& chain = std::get<NotQuasiStableWithinBound>(x).chain;
    REQUIRE(chain.size() >= 3);
    CHECK(chain[0] == ev({1, 0}));
    CHECK(chain[1] == ev({1, 1}));
    CHECK(chain[2] == ev({1, 2}));
    CHECK(chain.back().total_degree() > 10);
  }

  TEST_CASE("quasi-stability") {
    auto sq = is_quasi_stable(kSquares);
    REQUIRE(sq.quasi_stable);
    CHECK(sq.basis->elements == std::vector<ExponentVector>(kSquares.generators().begin(), kSquares.generators().end()));
    CHECK_FALSE(is_quasi_stable(minimalize({ev({1, 0})})).quasi_stable);
    CHECK(is_quasi_stable(minimalize({ev({0, 1})})).quasi_stable);
    CHECK(is_quasi_stable(maximal_ideal(3)).quasi_stable);
  }

  TEST_CASE("completion covers the ideal and ignores processing order") {
    for (std::uint64_t seed = 900; seed < 960; ++seed) {
      auto I = koszul::testing::small_random_ideal(seed);
      auto bound = default_degree_bound(I);
      auto result = pommaret_complete(I, bound);
      auto shuffled = pommaret_complete(I, bound, seed);
      CHECK(result.index() == shuffled.index());
      auto* basis = std::get_if<PommaretBasis>(&result);
      if (!basis) continue;
      CHECK(basis->elements == std::get<PommaretBasis>(shuffled).elements);
      // Every monomial of I up to the bound has exactly one involutive divisor.
      for (const auto& g : I.generators()) {
        for (std::size_t j = 0; j < I.num_vars(); ++j) {
          ExponentVector m = g;
          m[j] += 2;
          CHECK(basis->involutive_divisors(m).size() == 1);
        }
        CHECK(basis->involutive_divisors(g).size() == 1);
      }
    }
  }
}
