#include "koszul/lattice.hpp"

#include <algorithm>
#include <map>

#include "koszul/errors.hpp"
#include "koszul/koszul_oracle.hpp"

namespace koszul {

LcmLattice::LcmLattice(std::vector<ExponentVector> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(), CanonicalOrder{});
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  lookup_.insert(elements_.begin(), elements_.end());
}

std::vector<std::vector<std::size_t>> LcmLattice::divisibility() const {
  std::vector<std::vector<std::size_t>> out(elements_.size());
  for (std::size_t u = 0; u < elements_.size(); ++u) {
    for (std::size_t v = 0; v < elements_.size(); ++v) {
      if (u != v && divides(elements_[u], elements_[v])) out[u].push_back(v);
    }
  }
  return out;
}

LcmLattice lcm_lattice(const MonomialIdeal& ideal) {
  const auto gens = ideal.generators();
  std::unordered_set<ExponentVector, ExponentVectorHash> seen(gens.begin(), gens.end());
  std::vector<ExponentVector> frontier(gens.begin(), gens.end());
  // Every subset lcm is reached by folding in one generator at a time.
  while (!frontier.empty()) {
    std::vector<ExponentVector> next;
    for (const auto& u : frontier) {
      for (const auto& g : gens) {
        auto l = lcm(u, g);
        if (seen.insert(l).second) next.push_back(std::move(l));
      }
    }
    frontier = std::move(next);
  }
  return LcmLattice(std::vector<ExponentVector>(seen.begin(), seen.end()));
}

bool in_lcm_lattice(const MonomialIdeal& ideal, const ExponentVector& a) {
  std::optional<ExponentVector> acc;
  for (const auto& g : ideal.generators()) {
    if (!divides(g, a)) continue;
    acc = acc ? lcm(*acc, g) : g;
  }
  return acc && *acc == a;
}

std::vector<ExponentVector> candidate_multidegrees(const MonomialIdeal& ideal, std::size_t i) {
  // D_i holds the lcms of at most 2^i generators, hence the whole lattice once 2^i >= r.
  if (i >= 64 || (std::uint64_t{1} << i) >= ideal.size()) {
    if (ideal.is_zero()) return {};
    return lcm_lattice(ideal).elements();
  }
  std::vector<ExponentVector> current(ideal.generators().begin(), ideal.generators().end());
  for (std::size_t step = 1; step <= i; ++step) {
    std::unordered_set<ExponentVector, ExponentVectorHash> next;
    for (std::size_t u = 0; u < current.size(); ++u) {
      for (std::size_t v = u; v < current.size(); ++v) next.insert(lcm(current[u], current[v]));
    }
    // D_{j-1} is contained in D_j (pairs u = v); equal sizes mean a fixed point.
    bool stable = next.size() == current.size();
    current.assign(next.begin(), next.end());
    if (stable) break;
  }
  std::sort(current.begin(), current.end(), CanonicalOrder{});
  return current;
}

std::size_t split_index(const MonomialIdeal& ideal, SplitPick pick) {
  if (ideal.size() < 2) throw PreconditionError("Mayer-Vietoris split needs at least two generators");
  if (pick == SplitPick::Last) return ideal.size() - 1;
  std::size_t best = 0;
  for (std::size_t k = 1; k < ideal.size(); ++k) {
    if (ideal.generator(k).total_degree() >= ideal.generator(best).total_degree()) best = k;
  }
  return best;
}

MvSplit mv_split_at(const MonomialIdeal& ideal, std::size_t generator_index) {
  if (ideal.size() < 2) throw PreconditionError("Mayer-Vietoris split needs at least two generators");
  if (generator_index >= ideal.size()) throw DimensionError("split generator index out of range");
  const auto& m = ideal.generator(generator_index);
  std::vector<ExponentVector> rest, overlap;
  for (std::size_t k = 0; k < ideal.size(); ++k) {
    if (k == generator_index) continue;
    rest.push_back(ideal.generator(k));
    overlap.push_back(lcm(ideal.generator(k), m));
  }
  return {m, minimalize(ideal.num_vars(), std::move(rest)), minimalize(ideal.num_vars(), std::move(overlap))};
}

MvSplit mv_split(const MonomialIdeal& ideal, SplitPick pick) {
  return mv_split_at(ideal, split_index(ideal, pick));
}

namespace {

std::map<std::vector<std::size_t>, std::size_t> index_by_wedge(const std::vector<KoszulBasisElement>& basis) {
  std::map<std::vector<std::size_t>, std::size_t> out;
  for (std::size_t k = 0; k < basis.size(); ++k) out.emplace(basis[k].wedge, k);
  return out;
}

}  // namespace

bool verify_exactness(const MonomialIdeal& ideal, const ExponentVector& a, std::uint32_t p, SplitPick pick) {
  auto split = mv_split(ideal, pick);
  auto principal = minimalize(ideal.num_vars(), {split.split_generator});

  for (std::size_t q = 0; q <= ideal.num_vars(); ++q) {
    auto b_overlap = koszul_basis(split.overlap, a, q);
    auto b_rest = koszul_basis(split.rest, a, q);
    auto b_principal = koszul_basis(principal, a, q);
    auto b_total = koszul_basis(ideal, a, q);
    auto rest_idx = index_by_wedge(b_rest);
    auto principal_idx = index_by_wedge(b_principal);
    auto total_idx = index_by_wedge(b_total);
    const std::size_t mid = b_rest.size() + b_principal.size();

    std::vector<PrimeFieldMatrix::Entry> inject;
    for (std::size_t c = 0; c < b_overlap.size(); ++c) {
      auto r = rest_idx.find(b_overlap[c].wedge);
      auto m = principal_idx.find(b_overlap[c].wedge);
      if (r == rest_idx.end() || m == principal_idx.end()) return false;
      inject.push_back({r->second, c, 1});
      inject.push_back({b_rest.size() + m->second, c, -1});
    }
    std::vector<PrimeFieldMatrix::Entry> project;
    for (std::size_t c = 0; c < b_rest.size(); ++c) {
      auto t = total_idx.find(b_rest[c].wedge);
      if (t == total_idx.end()) return false;
      project.push_back({t->second, c, 1});
    }
    for (std::size_t c = 0; c < b_principal.size(); ++c) {
      auto t = total_idx.find(b_principal[c].wedge);
      if (t == total_idx.end()) return false;
      project.push_back({t->second, b_rest.size() + c, 1});
    }
    PrimeFieldMatrix alpha(mid, b_overlap.size(), p, inject);
    PrimeFieldMatrix beta(b_total.size(), mid, p, project);

    const std::size_t rank_alpha = rank(alpha);
    const std::size_t rank_beta = rank(beta);
    if (rank_alpha != b_overlap.size()) return false;       // injective
    if (rank_beta != b_total.size()) return false;          // surjective
    if (!multiply(beta, alpha).is_zero()) return false;     // image inside kernel
    if (mid - rank_beta != rank_alpha) return false;        // kernel equals image
  }
  return true;
}

std::optional<std::size_t> les_shortcut(const LesDims& d) {
  const std::size_t middle_i = d.rest_i + d.principal_i;
  const std::size_t middle_prev = d.rest_prev + d.principal_prev;
  if (middle_i == 0 && d.overlap_prev == 0) return 0;
  if (d.overlap_i == 0 && d.overlap_prev == 0) return middle_i;
  if (middle_i == 0 && middle_prev == 0) return d.overlap_prev;
  return std::nullopt;
}

std::size_t principal_betti(const ExponentVector& generator, const ExponentVector& a, std::size_t j) {
  return j == 0 && generator == a ? 1 : 0;
}

std::optional<std::size_t> les_shortcut(const MvSplit& split, const ExponentVector& a, std::size_t i,
                                        const SubBettiLookup& sub_betti) {
  LesDims d;
  d.overlap_i = sub_betti(split.overlap, a, i);
  d.rest_i = sub_betti(split.rest, a, i);
  d.principal_i = principal_betti(split.split_generator, a, i);
  if (i > 0) {
    d.overlap_prev = sub_betti(split.overlap, a, i - 1);
    d.rest_prev = sub_betti(split.rest, a, i - 1);
    d.principal_prev = principal_betti(split.split_generator, a, i - 1);
  }
  return les_shortcut(d);
}

}  // namespace koszul
