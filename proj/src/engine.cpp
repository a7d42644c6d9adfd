#include "koszul/engine.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "koszul/errors.hpp"
#include "koszul/koszul_oracle.hpp"
#include "koszul/parallel.hpp"
#include "koszul/simplicial.hpp"

namespace koszul {

Strategy parse_strategy(std::string_view name) {
  if (name == "auto") return Strategy::Auto;
  if (name == "simplicial") return Strategy::Simplicial;
  if (name == "mv") return Strategy::MayerVietoris;
  if (name == "scarf") return Strategy::Scarf;
  throw PreconditionError("unknown strategy '" + std::string(name) + "' (auto|simplicial|mv|scarf)");
}

std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Simplicial: return "simplicial";
    case Strategy::MayerVietoris: return "mv";
    case Strategy::Scarf: return "scarf";
  }
  return "auto";
}

Strategy choose_strategy(const MonomialIdeal& ideal, std::size_t scarf_cap) {
  if (ideal.size() <= scarf_cap && is_generic(ideal)) return Strategy::Scarf;
  // Many generators per variable prune more corners topologically than by recursion.
  if (ideal.size() <= 2 * ideal.num_vars()) return Strategy::MayerVietoris;
  return Strategy::Simplicial;
}

namespace {

/// Mayer-Vietoris recursion at one fixed multidegree. Every sub-ideal is first cut down to the
/// generators dividing a, which leaves its homology at a unchanged.
class MvSolver {
 public:
  MvSolver(const ExponentVector& a, std::uint32_t p, SplitPick pick) : a_(a), p_(p), pick_(pick) {}

  std::size_t solve(const MonomialIdeal& ideal, std::size_t i, bool top_level) {
    auto local = ideal.restricted_to(a_);
    if (local.is_zero()) return 0;
    if (!in_lcm_lattice(local, a_)) return 0;
    if (i == 0) {
      const auto gens = local.generators();
      return std::find(gens.begin(), gens.end(), a_) != gens.end() ? 1 : 0;
    }
    if (i >= local.size() || i >= local.num_vars() || i + 1 > a_.support().size()) return 0;

    auto key = std::make_pair(local, i);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::size_t value = 0;
    std::optional<std::size_t> shortcut;
    if (local.size() >= 2) {
      auto split = mv_split(local, pick_);
      shortcut = les_shortcut(split, a_, i, [this](const MonomialIdeal& sub, const ExponentVector&, std::size_t j) {
        return solve(sub, j, false);
      });
    }
    if (shortcut) {
      value = *shortcut;
      if (top_level) ++les_shortcuts;
    } else {
      ++rank_computations;
      value = betti_via_simplicial(local, i, a_, p_);
    }
    memo_.emplace(std::move(key), value);
    return value;
  }

  std::size_t rank_computations = 0;
  std::size_t les_shortcuts = 0;

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<MonomialIdeal, std::size_t>& k) const noexcept {
      return MonomialIdealHash{}(k.first) * 31 + k.second;
    }
  };

  ExponentVector a_;
  std::uint32_t p_;
  SplitPick pick_;
  std::unordered_map<std::pair<MonomialIdeal, std::size_t>, std::size_t, KeyHash> memo_;
};

// Multidegrees a such that a is the lcm of the elements of `previous` strictly dividing it.
std::vector<ExponentVector> refine_candidates(const MonomialIdeal& ideal, std::size_t i,
                                              const std::vector<ExponentVector>& previous) {
  std::unordered_set<ExponentVector, ExponentVectorHash> closure(previous.begin(), previous.end());
  std::vector<ExponentVector> frontier = previous;
  while (!frontier.empty()) {
    std::vector<ExponentVector> next;
    for (const auto& u : frontier) {
      for (const auto& b : previous) {
        auto l = lcm(u, b);
        if (closure.insert(l).second) next.push_back(std::move(l));
      }
    }
    frontier = std::move(next);
  }

  std::unordered_set<ExponentVector, ExponentVectorHash> admissible;
  bool whole_lattice = i >= 64 || (std::uint64_t{1} << i) >= ideal.size();
  if (!whole_lattice) {
    auto d = candidate_multidegrees(ideal, i);
    admissible.insert(d.begin(), d.end());
  }

  std::vector<ExponentVector> out;
  for (const auto& a : closure) {
    if (a.support().size() < i + 1) continue;
    if (!whole_lattice && !admissible.count(a)) continue;
    std::optional<ExponentVector> acc;
    for (const auto& b : previous) {
      if (b != a && divides(b, a)) acc = acc ? lcm(*acc, b) : b;
    }
    if (acc && *acc == a) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  return out;
}

}  // namespace

std::size_t betti_via_mayer_vietoris(const MonomialIdeal& ideal, std::size_t i, const ExponentVector& a,
                                     std::uint32_t p, SplitPick pick, std::size_t* rank_computations,
                                     std::size_t* les_shortcuts) {
  if (a.size() != ideal.num_vars()) throw DimensionError("multidegree length differs from ring size");
  MvSolver solver(a, p, pick);
  auto value = solver.solve(ideal, i, true);
  if (rank_computations) *rank_computations += solver.rank_computations;
  if (les_shortcuts) *les_shortcuts += solver.les_shortcuts;
  return value;
}

BettiTable betti_table(const MonomialIdeal& ideal, Strategy strategy, std::uint32_t p,
                       const EngineOptions& options) {
  PrimeField field(p);  // validates p
  if (strategy == Strategy::Auto) strategy = choose_strategy(ideal, options.scarf_cap);
  if (strategy == Strategy::Scarf) return scarf_betti(ideal, p, options.scarf_cap);

  BettiTable table(ideal.num_vars(), p);
  auto& stats = table.stats();
  stats.taylor_size = taylor_size(ideal);
  if (ideal.is_zero()) return table;

  const std::size_t threads = resolve_threads(options.threads);
  std::unordered_set<ExponentVector, ExponentVectorHash> checked;
  std::vector<ExponentVector> previous;
  const std::size_t max_degree = std::max<std::size_t>(1, std::min(ideal.size(), ideal.num_vars()));

  for (std::size_t i = 0; i < max_degree; ++i) {
    std::vector<ExponentVector> candidates =
        i == 0 ? std::vector<ExponentVector>(ideal.generators().begin(), ideal.generators().end())
               : refine_candidates(ideal, i, previous);
    if (candidates.empty()) break;

    struct Outcome {
      std::size_t value = 0;
      std::size_t ranks = 0;
      std::size_t shortcuts = 0;
    };
    std::vector<Outcome> outcomes(candidates.size());
    parallel_for(candidates.size(), threads, [&](std::size_t k) {
      auto& out = outcomes[k];
      if (strategy == Strategy::MayerVietoris) {
        out.value = betti_via_mayer_vietoris(ideal, i, candidates[k], p, options.pick, &out.ranks, &out.shortcuts);
      } else {
        out.value = betti_via_simplicial(ideal, i, candidates[k], p);
        out.ranks = 1;
      }
    });

    previous.clear();
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      checked.insert(candidates[k]);
      stats.rank_computations += outcomes[k].ranks;
      stats.les_shortcuts += outcomes[k].shortcuts;
      if (outcomes[k].value > 0) {
        table.set(i, candidates[k], outcomes[k].value);
        previous.push_back(candidates[k]);
      }
    }
  }

  stats.multidegrees_checked = checked.size();
  stats.minimal_total = table.total();
  stats.minimal_distinct = table.distinct_multidegrees();
  return table;
}

}  // namespace koszul
