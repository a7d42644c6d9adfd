#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace koszul {

/// Exponent vector of a monomial x^a in n variables. Doubles as a multidegree.
class ExponentVector {
 public:
  using value_type = std::uint32_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : exps_(n, 0) {}
  ExponentVector(std::initializer_list<value_type> exps) : exps_(exps) {}
  explicit ExponentVector(std::vector<value_type> exps) : exps_(std::move(exps)) {}

  std::size_t size() const noexcept { return exps_.size(); }
  value_type operator[](std::size_t i) const { return exps_[i]; }
  value_type& operator[](std::size_t i) { return exps_[i]; }

  auto begin() const noexcept { return exps_.begin(); }
  auto end() const noexcept { return exps_.end(); }

  const std::vector<value_type>& exponents() const noexcept { return exps_; }

  std::uint64_t total_degree() const noexcept;
  bool is_zero() const noexcept;

  /// Indices i (0-based) with a_i > 0, ascending.
  std::vector<std::size_t> support() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<value_type> exps_;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& a) const noexcept;
};

/// Canonical generator order: decreasing lexicographic, so x1^2 precedes x1*x2 precedes x2^2.
struct CanonicalOrder {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const { return a > b; }
};

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
bool divides(const ExponentVector& a, const ExponentVector& b);

/// Componentwise a - b. Requires b | a.
ExponentVector quotient(const ExponentVector& a, const ExponentVector& b);

/// Monomial ideal given by its canonical minimal generating set.
///
/// The zero ideal has no generators; the unit ideal has the single zero vector.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::span<const ExponentVector> generators() const noexcept { return gens_; }
  const ExponentVector& generator(std::size_t k) const { return gens_[k]; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }

  /// x^m in I, by linear scan over the minimal generators.
  bool contains(const ExponentVector& m) const;

  /// The ideal generated by the minimal generators dividing a. Its Koszul homology at any
  /// multidegree dividing a agrees with that of the full ideal.
  MonomialIdeal restricted_to(const ExponentVector& a) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal minimalize(std::size_t, std::vector<ExponentVector>);

  std::size_t num_vars_ = 0;
  std::vector<ExponentVector> gens_;
};

struct MonomialIdealHash {
  std::size_t operator()(const MonomialIdeal& ideal) const noexcept;
};

/// Removes duplicates and non-minimal vectors, then sorts canonically.
/// Throws DimensionError if some vector does not have length num_vars.
MonomialIdeal minimalize(std::size_t num_vars, std::vector<ExponentVector> gens);

/// Same, taking n from the first vector. An empty input needs the explicit overload.
MonomialIdeal minimalize(std::vector<ExponentVector> gens);

/// The ideal <x_1, ..., x_n>.
MonomialIdeal maximal_ideal(std::size_t num_vars);

}  // namespace koszul
