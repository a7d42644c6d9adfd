#include "koszul/report.hpp"

#include <sstream>

#include "json.hpp"
#include "koszul/ideal_io.hpp"

namespace koszul {

namespace {

nlohmann::ordered_json stats_json(const CheckStats& s) {
  nlohmann::ordered_json out;
  out["multidegrees_checked"] = s.multidegrees_checked;
  out["rank_computations"] = s.rank_computations;
  out["les_shortcuts"] = s.les_shortcuts;
  out["taylor_size"] = s.taylor_size;
  out["minimal_total"] = s.minimal_total;
  out["minimal_distinct"] = s.minimal_distinct;
  return out;
}

}  // namespace

std::string render_text(const BettiTable& table, const RenderOptions& options) {
  std::ostringstream out;
  out << "# multigraded Betti numbers, ring " << table.num_vars() << ", characteristic "
      << table.characteristic() << ", strategy " << to_string(options.strategy) << '\n';
  out << "# i beta multidegree\n";
  for (const auto& [key, value] : table.entries()) {
    out << key.first << ' ' << value << ' ' << format_monomial(key.second) << '\n';
  }
  out << "# totals: i beta\n";
  auto totals = table.totals();
  for (std::size_t i = 0; i < totals.size(); ++i) out << i << ' ' << totals[i] << '\n';
  out << "# coarse: i total_degree beta\n";
  for (const auto& [key, value] : table.coarse()) out << key.first << ' ' << key.second << ' ' << value << '\n';
  if (options.include_stats) {
    out << "# stats\n";
    const auto stats = stats_json(table.stats());
    for (const auto& [name, value] : stats.items()) out << name << ' ' << value.dump() << '\n';
  }
  return out.str();
}

std::string render_json(const BettiTable& table, const RenderOptions& options) {
  nlohmann::ordered_json doc;
  doc["ring"] = table.num_vars();
  doc["characteristic"] = table.characteristic();
  doc["strategy"] = std::string(to_string(options.strategy));
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [key, value] : table.entries()) {
    nlohmann::ordered_json e;
    e["i"] = key.first;
    e["multidegree"] = key.second.exponents();
    e["monomial"] = format_monomial(key.second);
    e["beta"] = value;
    entries.push_back(std::move(e));
  }
  doc["entries"] = std::move(entries);
  doc["totals"] = table.totals();
  auto coarse = nlohmann::ordered_json::array();
  for (const auto& [key, value] : table.coarse()) {
    coarse.push_back({{"i", key.first}, {"degree", key.second}, {"beta", value}});
  }
  doc["coarse"] = std::move(coarse);
  if (options.include_stats) doc["stats"] = stats_json(table.stats());
  return doc.dump(2) + "\n";
}

}  // namespace koszul
