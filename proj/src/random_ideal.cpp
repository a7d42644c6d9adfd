#include "koszul/random_ideal.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

// Uniform integer in [0, bound) by rejection; std::uniform_int_distribution is not
// reproducible across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// Stars and bars: n-1 distinct bar positions among degree + n - 1 slots (Floyd's sampling).
ExponentVector random_composition(std::mt19937_64& rng, std::size_t n, std::uint32_t degree) {
  const std::uint64_t slots = std::uint64_t{degree} + n - 1;
  std::set<std::uint64_t> bars;
  for (std::uint64_t j = slots - (n - 1); j < slots; ++j) {
    std::uint64_t t = uniform_below(rng, j + 1);
    if (!bars.insert(t).second) bars.insert(j);
  }
  ExponentVector out(n);
  std::uint64_t prev = 0;
  std::size_t part = 0;
  for (auto b : bars) {
    out[part++] = static_cast<ExponentVector::value_type>(b - prev);
    prev = b + 1;
  }
  out[part] = static_cast<ExponentVector::value_type>(slots - prev);
  return out;
}

bool comparable(const ExponentVector& a, const ExponentVector& b) {
  return divides(a, b) || divides(b, a);
}

}  // namespace

MonomialIdeal random_ideal(const RandomIdealParams& p) {
  if (p.num_vars < 1 || p.num_gens < 1 || p.min_degree < 1 || p.min_degree > p.max_degree) {
    throw PreconditionError("random_ideal needs n >= 1, g >= 1 and 1 <= min_deg <= max_deg");
  }
  std::mt19937_64 rng(p.seed);
  std::vector<ExponentVector> accepted;
  for (std::size_t attempt = 0; attempt < p.max_attempts; ++attempt) {
    auto span = std::uint64_t{p.max_degree} - p.min_degree + 1;
    auto degree = static_cast<std::uint32_t>(p.min_degree + uniform_below(rng, span));
    auto candidate = random_composition(rng, p.num_vars, degree);
    bool clash = std::any_of(accepted.begin(), accepted.end(),
                             [&](const ExponentVector& g) { return comparable(g, candidate); });
    if (clash) continue;
    accepted.push_back(std::move(candidate));
    if (accepted.size() == p.num_gens) return minimalize(p.num_vars, std::move(accepted));
  }
  throw InfeasibleError("random_ideal: no " + std::to_string(p.num_gens) +
                        " pairwise incomparable generators after " +
                        std::to_string(p.max_attempts) + " draws");
}

}  // namespace koszul
