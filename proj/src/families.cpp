#include "koszul/families.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "koszul/errors.hpp"
#include "koszul/ideal_io.hpp"
#include "koszul/koszul_oracle.hpp"

namespace koszul {

bool strictly_divides(const ExponentVector& m, const ExponentVector& l) {
  if (!divides(m, l)) return false;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] > 0 && m[i] >= l[i]) return false;
  }
  return true;
}

bool is_generic(const MonomialIdeal& ideal) {
  const auto gens = ideal.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      bool shared = false;
      for (std::size_t v = 0; v < ideal.num_vars() && !shared; ++v) {
        shared = gens[i][v] > 0 && gens[i][v] == gens[j][v];
      }
      if (!shared) continue;
      const auto l = lcm(gens[i], gens[j]);
      bool witnessed = false;
      for (std::size_t k = 0; k < gens.size() && !witnessed; ++k) {
        witnessed = k != i && k != j && strictly_divides(gens[k], l);
      }
      if (!witnessed) return false;
    }
  }
  return true;
}

bool ScarfComplex::contains(std::uint64_t face) const {
  return std::find(faces.begin(), faces.end(), face) != faces.end();
}

std::size_t ScarfComplex::count_of_size(std::size_t k) const {
  return static_cast<std::size_t>(std::count_if(faces.begin(), faces.end(), [k](std::uint64_t f) {
    return static_cast<std::size_t>(std::popcount(f)) == k;
  }));
}

namespace {

ExponentVector lcm_of_mask(std::span<const ExponentVector> gens, std::uint64_t mask, std::size_t n) {
  ExponentVector acc(n);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (mask >> k & 1) acc = lcm(acc, gens[k]);
  }
  return acc;
}

// sigma has a unique lcm iff no outside generator divides m_sigma and no element of sigma can be
// dropped without changing m_sigma.
bool has_unique_lcm(std::span<const ExponentVector> gens, std::uint64_t sigma, const ExponentVector& m,
                    std::size_t n) {
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (!(sigma >> j & 1) && divides(gens[j], m)) return false;
  }
  for (std::uint64_t rest = sigma; rest != 0; rest &= rest - 1) {
    std::uint64_t without = sigma & ~(rest & (~rest + 1));
    if (lcm_of_mask(gens, without, n) == m) return false;
  }
  return true;
}

}  // namespace

ScarfComplex scarf_complex(const MonomialIdeal& ideal, std::size_t cap) {
  if (ideal.size() > cap || ideal.size() > 63) {
    throw InfeasibleError("Scarf complex: " + std::to_string(ideal.size()) + " generators exceed the cap of " +
                          std::to_string(std::min<std::size_t>(cap, 63)));
  }
  const auto gens = ideal.generators();
  const std::size_t n = ideal.num_vars();
  ScarfComplex out;
  out.num_generators = gens.size();

  // Scarf faces are closed under subsets, so extending only Scarf faces reaches all of them.
  std::vector<std::pair<std::uint64_t, ExponentVector>> found;
  std::vector<std::pair<std::uint64_t, ExponentVector>> stack;
  ExponentVector unit(n);
  if (has_unique_lcm(gens, 0, unit, n)) stack.emplace_back(0, unit);
  while (!stack.empty()) {
    auto [sigma, m] = std::move(stack.back());
    stack.pop_back();
    const std::size_t start = sigma == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(sigma));
    for (std::size_t k = start; k < gens.size(); ++k) {
      std::uint64_t bigger = sigma | (std::uint64_t{1} << k);
      auto l = lcm(m, gens[k]);
      if (has_unique_lcm(gens, bigger, l, n)) stack.emplace_back(bigger, std::move(l));
    }
    found.emplace_back(sigma, std::move(m));
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    int px = std::popcount(x.first), py = std::popcount(y.first);
    return px != py ? px < py : x.first < y.first;
  });
  for (auto& [face, l] : found) {
    out.faces.push_back(face);
    out.lcm_of.push_back(std::move(l));
  }
  return out;
}

BettiTable scarf_betti(const MonomialIdeal& ideal, std::uint32_t p, std::size_t cap) {
  PrimeField check(p);
  if (!is_generic(ideal)) throw PreconditionError("Scarf Betti numbers requested for a non-generic ideal");
  BettiTable table(ideal.num_vars(), p);
  if (ideal.size() == 1 && ideal.generator(0).is_zero()) {
    // The unit ideal: the empty face and {1} share lcm 1, so the Scarf complex is void.
    table.set(0, ideal.generator(0), 1);
  } else {
    auto scarf = scarf_complex(ideal, cap);
    for (std::size_t k = 0; k < scarf.faces.size(); ++k) {
      auto size = static_cast<std::size_t>(std::popcount(scarf.faces[k]));
      if (size == 0) continue;
      table.set(size - 1, scarf.lcm_of[k], table.at(size - 1, scarf.lcm_of[k]) + 1);
    }
  }
  auto& stats = table.stats();
  stats.taylor_size = taylor_size(ideal);
  stats.minimal_total = table.total();
  stats.minimal_distinct = table.distinct_multidegrees();
  stats.multidegrees_checked = stats.minimal_distinct;
  return table;
}

LesTwoTermReport les_two_term_check(const MonomialIdeal& ideal, std::uint32_t p, SplitPick pick) {
  if (!is_generic(ideal)) throw PreconditionError("two-term check requested for a non-generic ideal");
  LesTwoTermReport report;
  if (ideal.size() < 2) return report;

  const auto split = mv_split(ideal, pick);
  const auto lattice = lcm_lattice(ideal);
  report.lattice_points = lattice.size();
  for (const auto& a : lattice.elements()) {
    std::size_t nonzero = 0;
    std::ostringstream terms;
    for (std::size_t q = 0; q <= ideal.num_vars(); ++q) {
      std::size_t h_overlap = koszul_homology_dim(split.overlap, a, q, p);
      std::size_t h_middle = koszul_homology_dim(split.rest, a, q, p) + principal_betti(split.split_generator, a, q);
      std::size_t h_total = koszul_homology_dim(ideal, a, q, p);
      nonzero += (h_overlap != 0) + (h_middle != 0) + (h_total != 0);
      terms << " H_" << q << ": " << h_overlap << ' ' << h_middle << ' ' << h_total << ';';
    }
    if (nonzero > 2) {
      report.holds = false;
      report.counterexample = a;
      report.nonzero_terms = nonzero;
      report.detail = "at " + format_monomial(a) + " (overlap, middle, ideal):" + terms.str();
      return report;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t class_index(const ExponentVector& m) {
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] > 0) return j;
  }
  throw PreconditionError("the unit monomial has no Pommaret class");
}

}  // namespace

std::size_t pommaret_class(const ExponentVector& m) { return class_index(m) + 1; }

std::vector<std::size_t> multiplicative_variables(const ExponentVector& m) {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j <= pommaret_class(m); ++j) out.push_back(j);
  return out;
}

bool involutively_divides(const ExponentVector& divisor, const ExponentVector& m) {
  if (!divides(divisor, m)) return false;
  if (divisor.is_zero()) return true;  // 1 divides everything with all variables multiplicative
  const std::size_t cls = class_index(divisor);
  for (std::size_t j = cls + 1; j < m.size(); ++j) {
    if (m[j] != divisor[j]) return false;
  }
  return true;
}

std::vector<std::size_t> PommaretBasis::involutive_divisors(const ExponentVector& m) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (involutively_divides(elements[k], m)) out.push_back(k);
  }
  return out;
}

std::uint64_t default_degree_bound(const MonomialIdeal& ideal) {
  std::uint64_t max_deg = 0;
  for (const auto& g : ideal.generators()) max_deg = std::max(max_deg, g.total_degree());
  return 2 * max_deg + ideal.num_vars();
}

PommaretCompletion pommaret_complete(const MonomialIdeal& ideal, std::uint64_t degree_bound,
                                     std::uint64_t order_seed) {
  const std::size_t n = ideal.num_vars();
  std::set<ExponentVector> basis(ideal.generators().begin(), ideal.generators().end());
  std::map<ExponentVector, ExponentVector> parent;  // prolongation -> element it came from
  std::mt19937_64 rng(order_seed);

  struct Prolongation {
    ExponentVector value;
    ExponentVector source;
  };
  auto covered = [&](const ExponentVector& u) {
    return std::any_of(basis.begin(), basis.end(), [&](const ExponentVector& b) { return involutively_divides(b, u); });
  };
  auto prolongations_of = [&](const ExponentVector& h, std::vector<Prolongation>& out) {
    if (h.is_zero()) return;
    for (std::size_t j = class_index(h) + 1; j < n; ++j) {
      ExponentVector u = h;
      u[j] += 1;
      out.push_back({std::move(u), h});
    }
  };

  while (true) {
    std::vector<Prolongation> pending;
    for (const auto& h : basis) prolongations_of(h, pending);
    while (!pending.empty()) {
      std::size_t pick = 0;
      if (order_seed == 0) {
        // lowest degree first, canonical order among equals
        for (std::size_t k = 1; k < pending.size(); ++k) {
          const auto& cand = pending[k].value;
          const auto& best = pending[pick].value;
          auto dk = cand.total_degree(), dp = best.total_degree();
          if (dk < dp || (dk == dp && CanonicalOrder{}(cand, best))) pick = k;
        }
      } else {
        pick = static_cast<std::size_t>(rng() % pending.size());
      }
      Prolongation next = std::move(pending[pick]);
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
      if (covered(next.value)) continue;
      if (next.value.total_degree() > degree_bound) {
        NotQuasiStableWithinBound fail{degree_bound, {next.value}};
        ExponentVector step = next.source;
        while (true) {
          fail.chain.push_back(step);
          auto it = parent.find(step);
          if (it == parent.end()) break;
          step = it->second;
        }
        std::reverse(fail.chain.begin(), fail.chain.end());
        return fail;
      }
      parent.emplace(next.value, next.source);
      basis.insert(next.value);
      prolongations_of(next.value, pending);
    }

    // Involutive autoreduction; if anything went, re-check closure.
    std::set<ExponentVector> reduced;
    for (const auto& b : basis) {
      bool redundant = std::any_of(basis.begin(), basis.end(), [&](const ExponentVector& other) {
        return other != b && involutively_divides(other, b);
      });
      if (!redundant) reduced.insert(b);
    }
    if (reduced.size() == basis.size()) break;
    basis = std::move(reduced);
  }

  PommaretBasis out;
  out.elements.assign(basis.begin(), basis.end());
  std::sort(out.elements.begin(), out.elements.end(), CanonicalOrder{});
  for (const auto& e : out.elements) out.classes.push_back(e.is_zero() ? n : pommaret_class(e));
  return out;
}

QuasiStability is_quasi_stable(const MonomialIdeal& ideal, std::optional<std::uint64_t> degree_bound) {
  QuasiStability out;
  out.degree_bound = degree_bound.value_or(default_degree_bound(ideal));
  auto result = pommaret_complete(ideal, out.degree_bound);
  if (auto* basis = std::get_if<PommaretBasis>(&result)) {
    out.quasi_stable = true;
    out.basis = std::move(*basis);
  } else {
    out.divergent_chain = std::get<NotQuasiStableWithinBound>(result).chain;
  }
  return out;
}

}  // namespace koszul
