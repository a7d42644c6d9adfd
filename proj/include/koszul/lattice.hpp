#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "koszul/field_matrix.hpp"
#include "koszul/monomial.hpp"

namespace koszul {

/// Least common multiples of all nonempty subsets of the minimal generators.
class LcmLattice {
 public:
  LcmLattice() = default;
  explicit LcmLattice(std::vector<ExponentVector> elements);

  /// Elements in canonical order.
  const std::vector<ExponentVector>& elements() const& noexcept { return elements_; }
  std::vector<ExponentVector> elements() && noexcept { return std::move(elements_); }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(const ExponentVector& a) const { return lookup_.count(a) != 0; }

  /// For each element (by index), the indices of the other elements it divides.
  std::vector<std::vector<std::size_t>> divisibility() const;

 private:
  std::vector<ExponentVector> elements_;
  std::unordered_set<ExponentVector, ExponentVectorHash> lookup_;
};

/// Closure of the generators under pairwise lcm.
LcmLattice lcm_lattice(const MonomialIdeal& ideal);

/// True iff a is the lcm of the generators dividing it, i.e. a lies in the lcm lattice.
bool in_lcm_lattice(const MonomialIdeal& ideal, const ExponentVector& a);

/// D_0 = generator degrees, D_j = { lcm(u, v) : u, v in D_{j-1} }. Returns D_i in canonical
/// order. Any a with beta_{i,a} != 0 lies in D_i.
std::vector<ExponentVector> candidate_multidegrees(const MonomialIdeal& ideal, std::size_t i);

enum class SplitPick {
  MaxDegree,  // largest total degree; among ties the last in canonical order
  Last,       // last generator in canonical order
};

/// I = rest + <split_generator>, overlap = rest ∩ <split_generator>.
struct MvSplit {
  ExponentVector split_generator;
  MonomialIdeal rest;
  MonomialIdeal overlap;
};

/// Throws PreconditionError when the ideal has fewer than two generators.
MvSplit mv_split(const MonomialIdeal& ideal, SplitPick pick = SplitPick::MaxDegree);
MvSplit mv_split_at(const MonomialIdeal& ideal, std::size_t generator_index);
std::size_t split_index(const MonomialIdeal& ideal, SplitPick pick);

/// Checks 0 -> K(overlap)_a -> K(rest)_a (+) K(<m>)_a -> K(I)_a -> 0 is exact in every
/// Koszul degree, using ranks of the maps u -> (u, -u) and (v, w) -> v + w.
bool verify_exactness(const MonomialIdeal& ideal, const ExponentVector& a,
                      std::uint32_t p = kDefaultCharacteristic, SplitPick pick = SplitPick::MaxDegree);

/// Homology dimensions at one multidegree that feed the long exact sequence
///   H_i(overlap) -> H_i(rest) (+) H_i(<m>) -> H_i(I) -> H_{i-1}(overlap) -> H_{i-1}(rest) (+) H_{i-1}(<m>)
struct LesDims {
  std::size_t overlap_i = 0;
  std::size_t overlap_prev = 0;
  std::size_t rest_i = 0;
  std::size_t rest_prev = 0;
  std::size_t principal_i = 0;
  std::size_t principal_prev = 0;
};

/// dim H_i(I) when one of the vanishing patterns pins it down, nullopt otherwise.
std::optional<std::size_t> les_shortcut(const LesDims& dims);

/// dim_k H_j(K(J))_a for a sub-ideal J.
using SubBettiLookup =
    std::function<std::size_t(const MonomialIdeal& sub, const ExponentVector& a, std::size_t j)>;

/// Homology of a principal ideal: 1 at (0, m), 0 elsewhere.
std::size_t principal_betti(const ExponentVector& generator, const ExponentVector& a, std::size_t j);

std::optional<std::size_t> les_shortcut(const MvSplit& split, const ExponentVector& a, std::size_t i,
                                        const SubBettiLookup& sub_betti);

}  // namespace koszul
