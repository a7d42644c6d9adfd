#include "koszul/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

void check_same_length(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("exponent vectors of length " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  }
}

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::uint64_t ExponentVector::total_degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](value_type e) { return e == 0; });
}

std::vector<std::size_t> ExponentVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) out.push_back(i);
  }
  return out;
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& a) const noexcept {
  std::size_t h = a.size();
  for (auto e : a) h = hash_combine(h, e);
  return h;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  check_same_length(a, b);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  check_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

ExponentVector quotient(const ExponentVector& a, const ExponentVector& b) {
  if (!divides(b, a)) throw DimensionError("quotient: divisor does not divide");
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool MonomialIdeal::contains(const ExponentVector& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const ExponentVector& g) { return divides(g, m); });
}

MonomialIdeal MonomialIdeal::restricted_to(const ExponentVector& a) const {
  MonomialIdeal out(num_vars_);
  for (const auto& g : gens_) {
    if (divides(g, a)) out.gens_.push_back(g);
  }
  return out;
}

std::size_t MonomialIdealHash::operator()(const MonomialIdeal& ideal) const noexcept {
  std::size_t h = ideal.num_vars();
  ExponentVectorHash eh;
  for (const auto& g : ideal.generators()) h = hash_combine(h, eh(g));
  return h;
}

MonomialIdeal minimalize(std::size_t num_vars, std::vector<ExponentVector> gens) {
  for (const auto& g : gens) {
    if (g.size() != num_vars) {
      throw DimensionError("generator of length " + std::to_string(g.size()) + " in a ring of " +
                           std::to_string(num_vars) + " variables");
    }
  }
  // A divisor never has larger total degree, so scanning by degree keeps only minimal ones.
  std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
    auto da = a.total_degree(), db = b.total_degree();
    return da != db ? da < db : a > b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  MonomialIdeal out(num_vars);
  for (auto& g : gens) {
    bool redundant = std::any_of(out.gens_.begin(), out.gens_.end(),
                                 [&](const ExponentVector& kept) { return divides(kept, g); });
    if (!redundant) out.gens_.push_back(std::move(g));
  }
  std::sort(out.gens_.begin(), out.gens_.end(), CanonicalOrder{});
  return out;
}

MonomialIdeal minimalize(std::vector<ExponentVector> gens) {
  if (gens.empty()) throw DimensionError("cannot infer the variable count of an empty list");
  std::size_t n = gens.front().size();
  return minimalize(n, std::move(gens));
}

MonomialIdeal maximal_ideal(std::size_t num_vars) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < num_vars; ++i) {
    ExponentVector v(num_vars);
    v[i] = 1;
    gens.push_back(std::move(v));
  }
  return minimalize(num_vars, std::move(gens));
}

}  // namespace koszul
