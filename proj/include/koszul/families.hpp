#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "koszul/betti_table.hpp"
#include "koszul/lattice.hpp"
#include "koszul/monomial.hpp"

namespace koszul {

// ---------------------------------------------------------------------------
// Generic ideals and the Scarf complex
// ---------------------------------------------------------------------------

/// m strictly divides l: m divides l / x_i for every variable x_i dividing l.
bool strictly_divides(const ExponentVector& m, const ExponentVector& l);

/// Whenever two minimal generators share the same positive degree in some variable, a third
/// generator strictly divides their lcm.
bool is_generic(const MonomialIdeal& ideal);

inline constexpr std::size_t kDefaultScarfCap = 25;

/// Subsets of generator indices whose lcm no other subset attains. Faces are bitmasks over
/// generator positions in canonical order, sorted by size then mask value.
struct ScarfComplex {
  std::size_t num_generators = 0;
  std::vector<std::uint64_t> faces;
  std::vector<ExponentVector> lcm_of;  // parallel to faces

  bool contains(std::uint64_t face) const;
  std::size_t count_of_size(std::size_t k) const;
};

/// Throws InfeasibleError above `cap` generators.
ScarfComplex scarf_complex(const MonomialIdeal& ideal, std::size_t cap = kDefaultScarfCap);

/// Betti numbers read from the Scarf complex; exact for generic ideals.
/// Throws PreconditionError for non-generic input.
BettiTable scarf_betti(const MonomialIdeal& ideal, std::uint32_t p = kDefaultCharacteristic,
                       std::size_t cap = kDefaultScarfCap);

struct LesTwoTermReport {
  bool holds = true;
  std::size_t lattice_points = 0;
  std::optional<ExponentVector> counterexample;
  std::size_t nonzero_terms = 0;  // at the counterexample
  std::string detail;
};

/// For every a in the lcm lattice, counts the nonzero terms of the whole long exact sequence
/// of the default Mayer-Vietoris split at a (homology from the Koszul oracle) and checks there
/// are at most two. Throws PreconditionError for non-generic input.
LesTwoTermReport les_two_term_check(const MonomialIdeal& ideal, std::uint32_t p = kDefaultCharacteristic,
                                    SplitPick pick = SplitPick::MaxDegree);

// ---------------------------------------------------------------------------
// Pommaret division
//
// Convention: cls(m) is the smallest index j with m_j > 0, and the multiplicative variables of
// m are x_1..x_cls(m). Under it <x2> is quasi-stable in k[x1,x2] and <x1> is not. Reversing the
// variable order gives the mirrored convention.
// ---------------------------------------------------------------------------

/// 1-based class. Throws PreconditionError for the unit monomial.
std::size_t pommaret_class(const ExponentVector& m);

/// 1-based indices 1..cls(m).
std::vector<std::size_t> multiplicative_variables(const ExponentVector& m);

/// divisor | m and m / divisor only involves multiplicative variables of the divisor.
bool involutively_divides(const ExponentVector& divisor, const ExponentVector& m);

struct PommaretBasis {
  std::vector<ExponentVector> elements;  // canonical order
  std::vector<std::size_t> classes;      // 1-based, parallel to elements

  /// Basis elements involutively dividing m.
  std::vector<std::size_t> involutive_divisors(const ExponentVector& m) const;
};

struct NotQuasiStableWithinBound {
  std::uint64_t degree_bound = 0;
  /// Prolongation chain from a generator to the first element past the bound.
  std::vector<ExponentVector> chain;
};

using PommaretCompletion = std::variant<PommaretBasis, NotQuasiStableWithinBound>;

/// 2 * (max generator degree) + n.
std::uint64_t default_degree_bound(const MonomialIdeal& ideal);

/// Involutive completion: add non-multiplicative prolongations that are not involutively
/// divisible until closed, then drop elements involutively divisible by another one.
/// `order_seed` = 0 processes prolongations in a fixed order; any other value shuffles them
/// (the resulting basis is the same).
PommaretCompletion pommaret_complete(const MonomialIdeal& ideal, std::uint64_t degree_bound,
                                     std::uint64_t order_seed = 0);

struct QuasiStability {
  bool quasi_stable = false;
  std::uint64_t degree_bound = 0;
  std::optional<PommaretBasis> basis;
  std::vector<ExponentVector> divergent_chain;
};

QuasiStability is_quasi_stable(const MonomialIdeal& ideal, std::optional<std::uint64_t> degree_bound = std::nullopt);

}  // namespace koszul
