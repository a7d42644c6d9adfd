#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "koszul/betti_table.hpp"
#include "koszul/families.hpp"
#include "koszul/lattice.hpp"
#include "koszul/monomial.hpp"

namespace koszul {

enum class Strategy {
  Auto,
  Simplicial,     // rank computation on the upper Koszul complex at every candidate
  MayerVietoris,  // long exact sequence shortcuts first, simplicial rank as fallback
  Scarf,          // generic ideals only
};

Strategy parse_strategy(std::string_view name);
std::string_view to_string(Strategy s) noexcept;

/// Strategy `Auto` resolves to for this ideal.
Strategy choose_strategy(const MonomialIdeal& ideal, std::size_t scarf_cap = kDefaultScarfCap);

struct EngineOptions {
  std::size_t threads = 1;  // 0 = KOSZUL_THREADS or hardware concurrency
  SplitPick pick = SplitPick::MaxDegree;
  std::size_t scarf_cap = kDefaultScarfCap;
};

/// All nonzero beta_{i,a}(I) over F_p.
///
/// Homological degree i only visits multidegrees a that are the lcm of the degree-(i-1)
/// Betti multidegrees strictly dividing them, that lie in candidate_multidegrees(I, i) and
/// have at least i+1 variables in their support. The result does not depend on the strategy
/// or on the thread count.
BettiTable betti_table(const MonomialIdeal& ideal, Strategy strategy = Strategy::Auto,
                       std::uint32_t p = kDefaultCharacteristic, const EngineOptions& options = {});

/// beta_{i,a}(I) through the Mayer-Vietoris recursion at the single multidegree a.
/// `rank_computations` and `les_shortcuts`, if given, are incremented.
std::size_t betti_via_mayer_vietoris(const MonomialIdeal& ideal, std::size_t i, const ExponentVector& a,
                                     std::uint32_t p = kDefaultCharacteristic, SplitPick pick = SplitPick::MaxDegree,
                                     std::size_t* rank_computations = nullptr, std::size_t* les_shortcuts = nullptr);

}  // namespace koszul
