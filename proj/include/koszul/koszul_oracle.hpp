#pragma once

// Direct constructions of the multigraded Koszul complex of I and of the Taylor complex of
// R/I tensored with k. Both are brute force and serve as ground truth for the faster paths.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "koszul/field_matrix.hpp"
#include "koszul/monomial.hpp"

namespace koszul {

/// Basis element x^monomial_part (x) x_{wedge[0]} ^ ... ^ x_{wedge[q-1]} of K(I) at multidegree
/// monomial_part + e_wedge. Variable indices are 0-based and ascending.
struct KoszulBasisElement {
  std::vector<std::size_t> wedge;
  ExponentVector monomial_part;

  friend bool operator==(const KoszulBasisElement&, const KoszulBasisElement&) = default;
};

/// Wedge-size q part of K(I) at multidegree a: every q-subset S of support(a) with
/// x^(a - e_S) in I, in lexicographic order of S.
std::vector<KoszulBasisElement> koszul_basis(const MonomialIdeal& ideal, const ExponentVector& a,
                                             std::size_t q);

/// Matrix of the Koszul differential from wedge size q to q - 1 at multidegree a. Column for
/// wedge {i_0 < ... < i_{q-1}} has (-1)^(j+1) in the row of the wedge with i_j removed.
/// For q = 0 the result has zero rows.
PrimeFieldMatrix koszul_differential(const MonomialIdeal& ideal, const ExponentVector& a,
                                     std::size_t q, std::uint32_t p);

/// C_{q+1} -> C_q -> C_{q-1} at one multidegree.
struct MultigradedChainWindow {
  ExponentVector multidegree;
  std::size_t degree = 0;
  std::vector<KoszulBasisElement> basis_below;  // wedge size q - 1 (empty for q = 0)
  std::vector<KoszulBasisElement> basis;        // wedge size q
  std::vector<KoszulBasisElement> basis_above;  // wedge size q + 1
  PrimeFieldMatrix d_q;                         // basis -> basis_below
  PrimeFieldMatrix d_q_plus_1;                  // basis_above -> basis
};

MultigradedChainWindow koszul_window(const MonomialIdeal& ideal, const ExponentVector& a,
                                     std::size_t q, std::uint32_t p);

/// dim_k H_i(K(I))_a, which is beta_{i,a}(I).
std::size_t koszul_homology_dim(const MonomialIdeal& ideal, const ExponentVector& a, std::size_t i,
                                std::uint32_t p = kDefaultCharacteristic);

inline constexpr std::size_t kDefaultTaylorCap = 20;

/// beta_{i,a}(I) read off the Taylor complex of R/I tensored with k: homology in
/// homological degree i + 1 of the complex spanned by generator subsets with lcm exactly a.
/// Throws InfeasibleError when the ideal has more than `cap` generators.
std::size_t taylor_betti(const MonomialIdeal& ideal, std::size_t i, const ExponentVector& a,
                         std::uint32_t p = kDefaultCharacteristic, std::size_t cap = kDefaultTaylorCap);

/// Total rank 2^r of the Taylor resolution (saturates at UINT64_MAX for r >= 64).
std::uint64_t taylor_size(const MonomialIdeal& ideal) noexcept;

}  // namespace koszul
