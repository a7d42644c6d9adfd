#include "koszul/koszul_oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

void lex_subsets(const std::vector<std::size_t>& pool, std::size_t q, std::size_t start,
                 std::vector<std::size_t>& current, std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == q) {
    out.push_back(current);
    return;
  }
  for (std::size_t k = start; k + (q - current.size()) <= pool.size(); ++k) {
    current.push_back(pool[k]);
    lex_subsets(pool, q, k + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<KoszulBasisElement> koszul_basis(const MonomialIdeal& ideal, const ExponentVector& a,
                                             std::size_t q) {
  if (a.size() != ideal.num_vars()) throw DimensionError("multidegree length differs from ring size");
  std::vector<KoszulBasisElement> out;
  auto support = a.support();
  if (q > support.size()) return out;

  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> current;
  lex_subsets(support, q, 0, current, subsets);
  for (auto& s : subsets) {
    ExponentVector m = a;
    for (auto v : s) m[v] -= 1;
    if (ideal.contains(m)) out.push_back({std::move(s), std::move(m)});
  }
  return out;
}

namespace {

PrimeFieldMatrix differential_between(const std::vector<KoszulBasisElement>& source,
                                      const std::vector<KoszulBasisElement>& target, std::uint32_t p) {
  std::map<std::vector<std::size_t>, std::size_t> row_of;
  for (std::size_t r = 0; r < target.size(); ++r) row_of.emplace(target[r].wedge, r);

  std::vector<PrimeFieldMatrix::Entry> entries;
  for (std::size_t c = 0; c < source.size(); ++c) {
    const auto& wedge = source[c].wedge;
    for (std::size_t j = 0; j < wedge.size(); ++j) {
      std::vector<std::size_t> face;
      face.reserve(wedge.size() - 1);
      for (std::size_t k = 0; k < wedge.size(); ++k) {
        if (k != j) face.push_back(wedge[k]);
      }
      auto it = row_of.find(face);
      // x^m in I implies x^(m + e_j) in I, so the target always exists.
      if (it == row_of.end()) throw InvariantError("Koszul differential leaves the ideal");
      entries.push_back({it->second, c, (j % 2 == 0) ? -1 : 1});
    }
  }
  return PrimeFieldMatrix(target.size(), source.size(), p, entries);
}

}  // namespace

PrimeFieldMatrix koszul_differential(const MonomialIdeal& ideal, const ExponentVector& a,
                                     std::size_t q, std::uint32_t p) {
  auto source = koszul_basis(ideal, a, q);
  if (q == 0) return PrimeFieldMatrix(0, source.size(), p);
  return differential_between(source, koszul_basis(ideal, a, q - 1), p);
}

MultigradedChainWindow koszul_window(const MonomialIdeal& ideal, const ExponentVector& a,
                                     std::size_t q, std::uint32_t p) {
  auto below = q == 0 ? std::vector<KoszulBasisElement>{} : koszul_basis(ideal, a, q - 1);
  auto mid = koszul_basis(ideal, a, q);
  auto above = koszul_basis(ideal, a, q + 1);
  auto d_q = q == 0 ? PrimeFieldMatrix(0, mid.size(), p) : differential_between(mid, below, p);
  auto d_up = differential_between(above, mid, p);
  return {a, q, std::move(below), std::move(mid), std::move(above), std::move(d_q), std::move(d_up)};
}

std::size_t koszul_homology_dim(const MonomialIdeal& ideal, const ExponentVector& a, std::size_t i,
                                std::uint32_t p) {
  if (i > ideal.num_vars()) return 0;
  auto w = koszul_window(ideal, a, i, p);
  return homology_dim(w.d_q, w.d_q_plus_1);
}

std::uint64_t taylor_size(const MonomialIdeal& ideal) noexcept {
  if (ideal.size() >= 64) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << ideal.size();
}

namespace {

using Subset = std::uint64_t;

void collect_subsets_with_lcm(const std::vector<ExponentVector>& gens, const ExponentVector& target,
                              std::size_t next, Subset mask, const ExponentVector& acc,
                              std::vector<std::vector<Subset>>& by_size) {
  if (acc == target) by_size[std::popcount(mask)].push_back(mask);
  for (std::size_t k = next; k < gens.size(); ++k) {
    collect_subsets_with_lcm(gens, target, k + 1, mask | (Subset{1} << k), lcm(acc, gens[k]), by_size);
  }
}

PrimeFieldMatrix taylor_boundary(const std::vector<Subset>& source, const std::vector<Subset>& target,
                                 std::size_t target_rows, std::uint32_t p) {
  std::unordered_map<Subset, std::size_t> row_of;
  for (std::size_t r = 0; r < target.size(); ++r) row_of.emplace(target[r], r);
  std::vector<PrimeFieldMatrix::Entry> entries;
  for (std::size_t c = 0; c < source.size(); ++c) {
    Subset s = source[c];
    std::size_t position = 0;
    for (Subset rest = s; rest != 0; rest &= rest - 1, ++position) {
      Subset face = s & ~(rest & (~rest + 1));
      auto it = row_of.find(face);
      if (it == row_of.end()) continue;  // coefficient m_s / m_face is a positive-degree monomial
      entries.push_back({it->second, c, position % 2 == 0 ? 1 : -1});
    }
  }
  return PrimeFieldMatrix(target_rows, source.size(), p, entries);
}

}  // namespace

std::size_t taylor_betti(const MonomialIdeal& ideal, std::size_t i, const ExponentVector& a,
                         std::uint32_t p, std::size_t cap) {
  if (ideal.size() > cap || cap > 63) {
    throw InfeasibleError("Taylor oracle infeasible: " + std::to_string(ideal.size()) +
                          " generators exceed the cap of " + std::to_string(std::min<std::size_t>(cap, 63)));
  }
  if (a.size() != ideal.num_vars()) throw DimensionError("multidegree length differs from ring size");

  std::vector<ExponentVector> gens;
  for (const auto& g : ideal.generators()) {
    if (divides(g, a)) gens.push_back(g);
  }
  const std::size_t top = i + 2;
  if (top > gens.size() + 1) return 0;

  std::vector<std::vector<Subset>> by_size(gens.size() + 1);
  collect_subsets_with_lcm(gens, a, 0, 0, ExponentVector(a.size()), by_size);
  by_size.resize(std::max(by_size.size(), top + 1));

  // Homology at subset size i + 1 of C_{i+2} -> C_{i+1} -> C_i.
  const auto& below = by_size[i];
  const auto& mid = by_size[i + 1];
  const auto& above = by_size[i + 2];
  auto d_in = taylor_boundary(mid, below, below.size(), p);
  auto d_out = taylor_boundary(above, mid, mid.size(), p);
  return homology_dim(d_in, d_out);
}

}  // namespace koszul
