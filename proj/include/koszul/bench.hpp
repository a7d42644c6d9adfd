#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "koszul/engine.hpp"

namespace koszul {

struct BenchRow {
  std::size_t n = 0;
  std::size_t g = 0;
  std::uint32_t min_degree = 1;
  std::uint32_t max_degree = 1;
};

struct BenchRecord {
  BenchRow row;
  std::uint64_t seed = 0;
  std::uint64_t taylor = 0;  // 2^g
  std::size_t checked = 0;
  std::size_t rank_computations = 0;
  std::size_t minimal_total = 0;
  std::size_t minimal_distinct = 0;
  double time_ms = 0.0;
  std::string status = "ok";  // "ok" or "failed"
  std::string error;          // reason when failed; not part of the CSV
};

/// CSV rows "n,g,min_deg,max_deg". A first line naming those columns (any order) is accepted as
/// a header; blank lines and lines starting with '#' are skipped. Throws ParseError.
std::vector<BenchRow> parse_bench_rows(std::istream& in);

struct BenchOptions {
  std::vector<std::uint64_t> seeds{1};
  Strategy strategy = Strategy::Auto;
  std::uint32_t p = kDefaultCharacteristic;
  std::size_t threads = 1;
  /// Measure wall-clock time. Off by default so that reruns are byte-identical.
  bool timing = false;
};

/// One record per (row, seed), in row-major order regardless of the thread count. A row whose
/// parameters admit no random ideal is reported as failed and the run continues.
std::vector<BenchRecord> run_bench(const std::vector<BenchRow>& rows, const BenchOptions& options);

inline constexpr const char* kBenchCsvHeader =
    "n,g,max_deg,min_deg,seed,taylor,checked,rank_computations,minimal_total,minimal_distinct,time_ms,status";

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace koszul
