#ifndef QCONG_BENCH_HPP
#define QCONG_BENCH_HPP

// Timing of the full and reduce-as-you-go strategies for binom(kp, sp)_q
// modulo [p]_q^3.

#include "qcong/congruences.hpp"
#include "qcong/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qcong {

struct BenchRow {
  Strategy strategy = Strategy::full;
  bool ran = false;
  std::string note;
  double best_ms = 0;
  double mean_ms = 0;
  std::size_t peak_bits = 0; // largest coefficient bit length produced
  std::optional<std::size_t> residue_degree;
  IntPoly residue;
};

struct BenchResult {
  std::int64_t p = 0, k = 0, s = 0;
  int repetitions = 0;
  std::vector<BenchRow> rows;
  std::optional<bool> residues_equal; // set when both strategies ran
  bool straub_holds = false;
};

inline BenchResult run_bench(std::int64_t p, std::int64_t k, std::int64_t s, int repetitions,
                             std::int64_t full_limit = full_strategy_limit) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw ConfigError("bench: p must be prime");
  if (repetitions < 1) throw ConfigError("bench: --reps must be >= 1");
  if (k < 0 || s < 0) throw ConfigError("bench: k and s must be nonnegative");

  const Modulus cube = modulus_poly(p, 3);
  BenchResult out{p, k, s, repetitions, {}, std::nullopt, false};

  for (Strategy strategy : {Strategy::full, Strategy::modular}) {
    BenchRow row;
    row.strategy = strategy;
    if (strategy == Strategy::full && k * p > full_limit) {
      row.note = "skipped: kp = " + std::to_string(k * p) + " exceeds " + std::to_string(full_limit);
      out.rows.push_back(std::move(row));
      continue;
    }
    double total = 0;
    for (int rep = 0; rep < repetitions; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      IntPoly residue;
      std::size_t bits = 0;
      if (strategy == Strategy::full) {
        IntPoly lhs = gaussian_binomial(k * p, s * p);
        bits = lhs.max_bits();
        residue = poly_rem(std::move(lhs), cube);
      } else {
        residue = gaussian_binomial_mod(k * p, s * p, cube);
        bits = residue.max_bits();
      }
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      total += ms;
      row.best_ms = rep == 0 ? ms : std::min(row.best_ms, ms);
      row.peak_bits = std::max(row.peak_bits, bits);
      row.residue = std::move(residue);
    }
    row.ran = true;
    row.mean_ms = total / repetitions;
    row.residue_degree = row.residue.degree();
    out.rows.push_back(std::move(row));
  }

  if (out.rows[0].ran && out.rows[1].ran) out.residues_equal = out.rows[0].residue == out.rows[1].residue;
  if (p >= 5)
    out.straub_holds = congruent(out.rows[1].residue, poly_rem(straub_rhs(p, k, s), cube), cube).holds;
  return out;
}

} // namespace qcong

#endif // QCONG_BENCH_HPP
