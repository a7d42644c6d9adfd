#include "koszul/betti_table.hpp"

#include <set>

#include "koszul/errors.hpp"

namespace koszul {

void BettiTable::set(std::size_t i, const ExponentVector& a, std::size_t value) {
  if (a.size() != num_vars_) throw DimensionError("multidegree length differs from ring size");
  if (value == 0) {
    entries_.erase({i, a});
  } else {
    entries_[{i, a}] = value;
  }
}

std::size_t BettiTable::at(std::size_t i, const ExponentVector& a) const {
  auto it = entries_.find({i, a});
  return it == entries_.end() ? 0 : it->second;
}

std::vector<std::size_t> BettiTable::totals() const {
  std::vector<std::size_t> out;
  for (const auto& [key, value] : entries_) {
    if (out.size() <= key.first) out.resize(key.first + 1, 0);
    out[key.first] += value;
  }
  return out;
}

std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> BettiTable::coarse() const {
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> out;
  for (const auto& [key, value] : entries_) out[{key.first, key.second.total_degree()}] += value;
  return out;
}

std::size_t BettiTable::total() const {
  std::size_t sum = 0;
  for (const auto& [key, value] : entries_) sum += value;
  return sum;
}

std::size_t BettiTable::distinct_multidegrees() const {
  std::set<ExponentVector> seen;
  for (const auto& [key, value] : entries_) seen.insert(key.second);
  return seen.size();
}

std::int64_t BettiTable::alternating_sum() const {
  std::int64_t sum = 0;
  for (const auto& [key, value] : entries_) {
    auto v = static_cast<std::int64_t>(value);
    sum += key.first % 2 == 0 ? v : -v;
  }
  return sum;
}

}  // namespace koszul
