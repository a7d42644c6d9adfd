#include "koszul/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "koszul/errors.hpp"
#include "koszul/parallel.hpp"
#include "koszul/random_ideal.hpp"

namespace koszul {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    auto first = cell.find_first_not_of(" \t\r");
    auto last = cell.find_last_not_of(" \t\r");
    cells.push_back(first == std::string::npos ? "" : cell.substr(first, last - first + 1));
  }
  return cells;
}

bool is_number(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

std::vector<BenchRow> parse_bench_rows(std::istream& in) {
  const std::vector<std::string> names{"n", "g", "min_deg", "max_deg"};
  std::vector<std::size_t> column_of{0, 1, 2, 3};
  std::vector<BenchRow> rows;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    auto cells = split_csv(line);
    if (cells.empty() || (cells.size() == 1 && cells[0].empty()) || cells[0].rfind('#', 0) == 0) continue;
    if (first && !is_number(cells[0])) {
      first = false;
      std::map<std::string, std::size_t> pos;
      for (std::size_t c = 0; c < cells.size(); ++c) pos[cells[c]] = c;
      for (std::size_t k = 0; k < names.size(); ++k) {
        auto it = pos.find(names[k]);
        if (it == pos.end()) throw ParseError("bench header lacks column '" + names[k] + "'", line_no, 1);
        column_of[k] = it->second;
      }
      continue;
    }
    first = false;
    std::uint64_t v[4];
    for (std::size_t k = 0; k < 4; ++k) {
      if (column_of[k] >= cells.size() || !is_number(cells[column_of[k]])) {
        throw ParseError("expected an integer for '" + names[k] + "'", line_no, column_of[k] + 1);
      }
      const auto& s = cells[column_of[k]];
      std::from_chars(s.data(), s.data() + s.size(), v[k]);
    }
    rows.push_back({v[0], v[1], static_cast<std::uint32_t>(v[2]), static_cast<std::uint32_t>(v[3])});
  }
  return rows;
}

std::vector<BenchRecord> run_bench(const std::vector<BenchRow>& rows, const BenchOptions& options) {
  std::vector<BenchRecord> records;
  for (const auto& row : rows) {
    for (auto seed : options.seeds) {
      BenchRecord r;
      r.row = row;
      r.seed = seed;
      r.taylor = row.g >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << row.g;
      records.push_back(std::move(r));
    }
  }
  parallel_for(records.size(), resolve_threads(options.threads), [&](std::size_t k) {
    auto& rec = records[k];
    try {
      auto start = std::chrono::steady_clock::now();
      auto ideal = random_ideal({rec.row.n, rec.row.g, rec.row.min_degree, rec.row.max_degree, rec.seed});
      auto table = betti_table(ideal, options.strategy, options.p, EngineOptions{1});
      auto stop = std::chrono::steady_clock::now();
      const auto& s = table.stats();
      rec.checked = s.multidegrees_checked;
      rec.rank_computations = s.rank_computations;
      rec.minimal_total = s.minimal_total;
      rec.minimal_distinct = s.minimal_distinct;
      if (options.timing) rec.time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    } catch (const Error& e) {
      rec.status = "failed";
      rec.error = e.what();
    }
  });
  return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kBenchCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.row.n << ',' << r.row.g << ',' << r.row.max_degree << ',' << r.row.min_degree << ',' << r.seed << ','
        << r.taylor << ',' << r.checked << ',' << r.rank_computations << ',' << r.minimal_total << ','
        << r.minimal_distinct << ',' << std::fixed << std::setprecision(3) << r.time_ms << ',' << r.status << '\n';
  }
}

}  // namespace koszul
