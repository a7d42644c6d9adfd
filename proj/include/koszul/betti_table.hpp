#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "koszul/field_matrix.hpp"
#include "koszul/monomial.hpp"

namespace koszul {

struct CheckStats {
  /// Distinct multidegrees at which some homology determination (rank or LES) happened.
  std::size_t multidegrees_checked = 0;
  /// Simplicial homology computations, including those made for sub-ideals.
  std::size_t rank_computations = 0;
  /// Table entries settled by the long exact sequence without a rank computation.
  std::size_t les_shortcuts = 0;
  std::uint64_t taylor_size = 0;
  /// Sum of all Betti numbers.
  std::size_t minimal_total = 0;
  /// Distinct multidegrees carrying a nonzero Betti number.
  std::size_t minimal_distinct = 0;

  friend bool operator==(const CheckStats&, const CheckStats&) = default;
};

/// Key ordering: homological degree, then canonical multidegree order.
struct BettiKeyLess {
  bool operator()(const std::pair<std::size_t, ExponentVector>& x,
                  const std::pair<std::size_t, ExponentVector>& y) const {
    if (x.first != y.first) return x.first < y.first;
    return CanonicalOrder{}(x.second, y.second);
  }
};

/// Nonzero multigraded Betti numbers beta_{i,a}(I) over F_p.
class BettiTable {
 public:
  using Key = std::pair<std::size_t, ExponentVector>;
  using Entries = std::map<Key, std::size_t, BettiKeyLess>;

  BettiTable() = default;
  BettiTable(std::size_t num_vars, std::uint32_t p) : num_vars_(num_vars), p_(p) {}

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::uint32_t characteristic() const noexcept { return p_; }

  /// Zero values are not stored.
  void set(std::size_t i, const ExponentVector& a, std::size_t value);
  std::size_t at(std::size_t i, const ExponentVector& a) const;
  const Entries& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// Sum over a of beta_{i,a}, indexed by i.
  std::vector<std::size_t> totals() const;
  /// Sum over a of total degree d of beta_{i,a}, keyed by (i, d).
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> coarse() const;
  std::size_t total() const;
  std::size_t distinct_multidegrees() const;
  /// sum_i (-1)^i beta_i. Equals 1 for every nonzero ideal.
  std::int64_t alternating_sum() const;

  CheckStats& stats() noexcept { return stats_; }
  const CheckStats& stats() const noexcept { return stats_; }

  /// Same entries and characteristic; statistics are ignored.
  bool same_entries(const BettiTable& other) const {
    return p_ == other.p_ && entries_ == other.entries_;
  }

 private:
  std::size_t num_vars_ = 0;
  std::uint32_t p_ = kDefaultCharacteristic;
  Entries entries_;
  CheckStats stats_;
};

}  // namespace koszul
