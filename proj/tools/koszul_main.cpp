// koszul: multigraded Betti numbers of monomial ideals from the command line.
//
// Exit codes: 0 success, 2 bad input, 3 infeasible request or cap exceeded,
// 4 internal invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "koszul/bench.hpp"
#include "koszul/engine.hpp"
#include "koszul/errors.hpp"
#include "koszul/families.hpp"
#include "koszul/ideal_io.hpp"
#include "koszul/koszul_oracle.hpp"
#include "koszul/lattice.hpp"
#include "koszul/random_ideal.hpp"
#include "koszul/report.hpp"

namespace {

using namespace koszul;

ExponentVector parse_multidegree(const std::string& text, std::size_t n) {
  std::vector<ExponentVector::value_type> exps;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      auto v = std::stoul(cell, &used);
      if (used != cell.size()) throw std::invalid_argument(cell);
      exps.push_back(static_cast<ExponentVector::value_type>(v));
    } catch (const std::exception&) {
      throw ParseError("bad multidegree entry '" + cell + "'", 1, 1);
    }
  }
  if (exps.size() != n) {
    throw DimensionError("multidegree has " + std::to_string(exps.size()) + " entries, ring has " + std::to_string(n));
  }
  return ExponentVector(std::move(exps));
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'", 0, 0);
  out << text;
}

int run_betti(const std::string& file, const std::string& strategy_name, std::uint32_t p, bool json, bool stats) {
  auto ideal = read_ideal_file(file);
  auto strategy = parse_strategy(strategy_name);
  auto resolved = strategy == Strategy::Auto ? choose_strategy(ideal) : strategy;
  auto table = betti_table(ideal, resolved, p, EngineOptions{0});
  if (table.num_vars() && !ideal.is_zero() && table.alternating_sum() != 1) {
    throw InvariantError("alternating sum of Betti numbers is not 1");
  }
  RenderOptions opts{stats, resolved};
  std::cout << (json ? render_json(table, opts) : render_text(table, opts));
  return 0;
}

int run_oracle(const std::string& file, const std::string& multidegree, std::size_t degree, bool taylor,
               std::uint32_t p) {
  auto ideal = read_ideal_file(file);
  auto a = parse_multidegree(multidegree, ideal.num_vars());
  std::cout << "koszul " << koszul_homology_dim(ideal, a, degree, p) << '\n';
  if (taylor) std::cout << "taylor " << taylor_betti(ideal, degree, a, p) << '\n';
  return 0;
}

int run_classify(const std::string& file, std::optional<std::uint64_t> bound) {
  auto ideal = read_ideal_file(file);
  std::cout << "ring " << ideal.num_vars() << '\n';
  std::cout << "generators " << ideal.size() << '\n';
  std::cout << "lcm_lattice " << (ideal.is_zero() ? 0 : lcm_lattice(ideal).size()) << '\n';
  std::cout << "generic " << (is_generic(ideal) ? "true" : "false") << '\n';
  try {
    auto scarf = scarf_complex(ideal);
    std::cout << "scarf_faces";
    for (std::size_t k = 0; k <= ideal.size(); ++k) {
      auto count = scarf.count_of_size(k);
      if (count == 0 && k > 0) break;
      std::cout << ' ' << k << ':' << count;
    }
    std::cout << '\n';
  } catch (const InfeasibleError&) {
    std::cout << "scarf_faces skipped (" << ideal.size() << " generators above cap " << kDefaultScarfCap << ")\n";
  }
  if (ideal.is_zero()) {
    std::cout << "quasi_stable yes (zero ideal)\n";
    return 0;
  }
  auto qs = is_quasi_stable(ideal, bound);
  if (qs.quasi_stable) {
    std::cout << "quasi_stable yes (bound " << qs.degree_bound << ")\n";
    std::cout << "pommaret_basis";
    for (const auto& e : qs.basis->elements) std::cout << ' ' << format_monomial(e);
    std::cout << '\n';
  } else {
    std::cout << "quasi_stable no-within-bound (bound " << qs.degree_bound << ")\n";
    std::cout << "divergent_chain";
    for (const auto& e : qs.divergent_chain) std::cout << ' ' << format_monomial(e);
    std::cout << '\n';
  }
  return 0;
}

int run_random(const RandomIdealParams& params, const std::string& out) {
  auto ideal = random_ideal(params);
  std::ostringstream text;
  text << "# random n=" << params.num_vars << " g=" << params.num_gens << " degrees " << params.min_degree << ".."
       << params.max_degree << " seed " << params.seed << " (uniform degree, uniform composition)\n";
  text << format_ideal(ideal);
  write_output(out, text.str());
  return 0;
}

int run_bench(const std::string& spec, std::size_t seeds, std::uint64_t seed_base, const std::string& strategy,
              std::uint32_t p, bool timing, const std::string& out) {
  std::ifstream in(spec);
  if (!in) throw ParseError("cannot open '" + spec + "'", 0, 0);
  auto rows = parse_bench_rows(in);
  BenchOptions opts;
  opts.seeds.clear();
  for (std::size_t k = 0; k < seeds; ++k) opts.seeds.push_back(seed_base + k);
  opts.strategy = parse_strategy(strategy);
  opts.p = p;
  opts.threads = 0;
  opts.timing = timing;
  auto records = run_bench(rows, opts);
  std::ostringstream csv;
  write_bench_csv(csv, records);
  write_output(out, csv.str());
  for (const auto& r : records) {
    if (r.status != "ok") {
      std::cerr << "row n=" << r.row.n << " g=" << r.row.g << " seed " << r.seed << ": " << r.error << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multigraded Koszul homology of monomial ideals"};
  app.require_subcommand(1);

  std::string file, strategy = "auto", multidegree, out, spec;
  std::uint32_t p = kDefaultCharacteristic;
  bool json = false, stats = false, taylor = false, timing = false;
  std::size_t degree = 0, seeds = 1;
  std::uint64_t seed_base = 1;
  std::optional<std::uint64_t> bound;
  RandomIdealParams rparams;

  auto* betti = app.add_subcommand("betti", "Multigraded Betti table of an ideal file");
  betti->add_option("file", file, "Ideal file")->required();
  betti->add_option("--strategy", strategy, "auto|simplicial|mv|scarf");
  betti->add_option("--char", p, "Field characteristic (prime)");
  betti->add_flag("--json", json, "Structured JSON output");
  betti->add_flag("--stats", stats, "Include computation statistics");

  auto* oracle = app.add_subcommand("oracle", "Brute-force Koszul homology at one multidegree");
  oracle->add_option("file", file, "Ideal file")->required();
  oracle->add_option("--multidegree", multidegree, "e1,..,en")->required();
  oracle->add_option("--degree", degree, "Homological degree i")->required();
  oracle->add_flag("--taylor", taylor, "Also evaluate the Taylor complex");
  oracle->add_option("--char", p, "Field characteristic (prime)");

  auto* classify = app.add_subcommand("classify", "Genericity, Scarf complex and quasi-stability");
  classify->add_option("file", file, "Ideal file")->required();
  classify->add_option("--bound", bound, "Degree bound for Pommaret completion");

  auto* random = app.add_subcommand("random", "Seeded random ideal");
  random->add_option("--n", rparams.num_vars, "Number of variables")->required();
  random->add_option("--g", rparams.num_gens, "Number of minimal generators")->required();
  random->add_option("--min-deg", rparams.min_degree, "Minimal generator degree")->required();
  random->add_option("--max-deg", rparams.max_degree, "Maximal generator degree")->required();
  random->add_option("--seed", rparams.seed, "Seed")->required();
  random->add_option("--out", out, "Output file (default stdout)");

  auto* bench = app.add_subcommand("bench", "Multidegrees-checked statistics over random ideals (CSV)");
  bench->add_option("--spec", spec, "CSV of n,g,min_deg,max_deg rows")->required();
  bench->add_option("--seeds", seeds, "Seeds per row");
  bench->add_option("--seed-base", seed_base, "First seed (default 1)");
  bench->add_option("--strategy", strategy, "auto|simplicial|mv|scarf");
  bench->add_option("--char", p, "Field characteristic (prime)");
  bench->add_flag("--timing", timing, "Fill time_ms with wall-clock times");
  bench->add_option("--out", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors share the exit code of malformed input.
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*betti) return run_betti(file, strategy, p, json, stats);
    if (*oracle) return run_oracle(file, multidegree, degree, taylor, p);
    if (*classify) return run_classify(file, bound);
    if (*random) return run_random(rparams, out);
    if (*bench) return run_bench(spec, seeds, seed_base, strategy, p, timing, out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
