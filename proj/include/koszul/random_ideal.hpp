#pragma once

#include <cstddef>
#include <cstdint>

#include "koszul/monomial.hpp"

namespace koszul {

struct RandomIdealParams {
  std::size_t num_vars = 3;
  std::size_t num_gens = 6;
  std::uint32_t min_degree = 1;
  std::uint32_t max_degree = 1;
  std::uint64_t seed = 0;
  /// Candidate draws before giving up with InfeasibleError.
  std::size_t max_attempts = 200000;
};

/// Random ideal with exactly num_gens minimal generators of total degree in
/// [min_degree, max_degree].
///
/// Each candidate has a total degree drawn uniformly from the range and an exponent vector
/// drawn uniformly among the compositions of that degree into num_vars parts. A candidate
/// comparable under divisibility with an accepted generator is rejected. The draw sequence
/// depends only on the seed (mt19937_64 with portable bounded sampling).
MonomialIdeal random_ideal(const RandomIdealParams& params);

}  // namespace koszul
