#pragma once

#include <string>

#include "koszul/betti_table.hpp"
#include "koszul/engine.hpp"

namespace koszul {

struct RenderOptions {
  bool include_stats = false;
  Strategy strategy = Strategy::Auto;  // as resolved by the engine
};

/// Multigraded table, totals per homological degree, the (i, total degree) coarse table and,
/// optionally, the computation statistics. Deterministic for a given table.
std::string render_text(const BettiTable& table, const RenderOptions& options = {});
std::string render_json(const BettiTable& table, const RenderOptions& options = {});

}  // namespace koszul
