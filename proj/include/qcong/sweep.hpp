#ifndef QCONG_SWEEP_HPP
#define QCONG_SWEEP_HPP

// Parameter sweeps over verification cases, run on a bounded worker pool.

#include "qcong/congruences.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace qcong {

/// Invalid sweep configuration; maps to exit status 2.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Inclusive integer range. `single` records that the user wrote one value
/// rather than a..b, which makes an inadmissible p an error instead of a skip.
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool single = true;

  bool operator==(const IntRange &) const = default;
};

inline IntRange parse_range(std::string_view text) {
  const auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw ConfigError("malformed range '" + std::string(text) + "'");
    return v;
  };
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    IntRange r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2)), false};
    if (r.lo > r.hi) throw ConfigError("empty range '" + std::string(text) + "'");
    return r;
  }
  const auto v = parse_int(text);
  return {v, v, true};
}

enum class StrategyChoice { automatic, full, modular, both };

inline std::optional<StrategyChoice> parse_strategy_choice(std::string_view s) {
  if (s == "auto") return StrategyChoice::automatic;
  if (s == "full") return StrategyChoice::full;
  if (s == "modular") return StrategyChoice::modular;
  if (s == "both") return StrategyChoice::both;
  return std::nullopt;
}

enum class OutputFormat { text, json, csv };

inline std::optional<OutputFormat> parse_format(std::string_view s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  return std::nullopt;
}

struct SweepConfig {
  Theorem theorem = Theorem::straub;
  std::optional<IntRange> p_range;
  std::optional<IntRange> k_range;
  std::optional<IntRange> s_range;
  std::optional<IntRange> m_range;
  std::optional<int> power; // default: the statement's exponent
  StrategyChoice strategy = StrategyChoice::automatic;
  unsigned jobs = 1;
  OutputFormat format = OutputFormat::text;
  std::string output; // empty: standard output
  bool record_timing = true;
};

struct SweepSummary {
  Theorem theorem = Theorem::straub;
  std::size_t total_cases = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped_nonprime = 0;
  std::size_t skipped_constraint = 0; // primes outside the theorem's hypotheses
  std::chrono::milliseconds wall_time{0};
  std::vector<VerificationReport> reports;

  bool operator==(const SweepSummary &) const = default;

  int exit_code() const { return failed == 0 ? 0 : 1; }
};

/// Size bound below which the full polynomial is computed under `auto`.
inline constexpr std::int64_t full_strategy_limit = 200;

inline Strategy auto_strategy(const CongruenceCase &c) {
  switch (c.theorem) {
  case Theorem::straub:
  case Theorem::pan: return c.k * c.p <= full_strategy_limit ? Strategy::full : Strategy::modular;
  case Theorem::q_lucas: return c.k <= full_strategy_limit ? Strategy::full : Strategy::modular;
  case Theorem::shi_pan: return c.p <= 50 ? Strategy::full : Strategy::modular;
  default: return Strategy::full;
  }
}

namespace detail {

struct Usage {
  bool p = false, k = false, s = false, m = false;
};

inline Usage parameters_used(Theorem t) {
  switch (t) {
  case Theorem::straub:
  case Theorem::pan:
  case Theorem::ljunggren:
  case Theorem::q_lucas:
  case Theorem::lucas: return {true, true, true, false};
  case Theorem::wolstenholme:
  case Theorem::shi_pan: return {true, false, false, false};
  case Theorem::glaisher:
  case Theorem::andrews: return {true, false, false, true};
  case Theorem::q_vandermonde: return {false, true, true, true};
  }
  return {};
}

struct Grid {
  std::vector<CongruenceCase> cases;
  std::size_t skipped_nonprime = 0;
  std::size_t skipped_constraint = 0;
};

inline Grid enumerate_cases(const SweepConfig &cfg) {
  const Usage use = parameters_used(cfg.theorem);
  const std::string name(to_string(cfg.theorem));
  const auto require = [&](bool needed, const std::optional<IntRange> &r, const char *flag) {
    if (needed && !r) throw ConfigError(name + " requires " + flag);
    if (needed && r->lo < 0) throw ConfigError(std::string(flag) + " must be nonnegative");
  };
  require(use.p, cfg.p_range, "--p");
  require(use.k, cfg.k_range, "--k");
  require(use.s, cfg.s_range, "--s");
  require(use.m, cfg.m_range, "--m");
  if (cfg.theorem == Theorem::andrews && cfg.m_range->lo < 1)
    throw ConfigError("andrews requires m >= 1");
  if (cfg.power && (*cfg.power < 1 || *cfg.power > 64))
    throw ConfigError("--power must lie in 1..64");
  if (cfg.jobs < 1) throw ConfigError("--jobs must be >= 1");

  const int power = cfg.theorem == Theorem::q_vandermonde ? 0 : cfg.power.value_or(default_power(cfg.theorem));
  const auto values = [](const std::optional<IntRange> &r, bool used) {
    std::vector<std::int64_t> v;
    if (!used) return std::vector<std::int64_t>{0};
    for (auto x = r->lo; x <= r->hi; ++x) v.push_back(x);
    return v;
  };

  Grid grid;
  std::vector<std::int64_t> primes;
  for (auto p : values(cfg.p_range, use.p)) {
    if (!use.p) {
      primes.push_back(0);
      continue;
    }
    const bool single = cfg.p_range->single;
    if (!is_prime(static_cast<std::uint64_t>(p))) {
      if (single) throw ConfigError(name + ": p = " + std::to_string(p) + " is not prime");
      ++grid.skipped_nonprime;
      continue;
    }
    if (!admissible_prime(cfg.theorem, p)) {
      if (single)
        throw ConfigError(name + ": p = " + std::to_string(p) + " violates the theorem's hypotheses");
      ++grid.skipped_constraint;
      continue;
    }
    primes.push_back(p);
  }
  for (auto p : primes)
    for (auto k : values(cfg.k_range, use.k))
      for (auto s : values(cfg.s_range, use.s))
        for (auto m : values(cfg.m_range, use.m))
          grid.cases.push_back(CongruenceCase::make(cfg.theorem, p, k, s, m, power));
  return grid;
}

struct Job {
  CongruenceCase c;
  Strategy strategy;
};

} // namespace detail

/// Runs every case of the grid. Reports come back sorted by
/// (theorem, p, k, s, m, strategy) whatever the worker count.
inline SweepSummary run_sweep(const SweepConfig &cfg) {
  const auto start = std::chrono::steady_clock::now();
  auto grid = detail::enumerate_cases(cfg);

  std::vector<detail::Job> jobs;
  for (const auto &c : grid.cases) {
    const bool dual = supports_modular(c.theorem);
    switch (cfg.strategy) {
    case StrategyChoice::automatic: jobs.push_back({c, auto_strategy(c)}); break;
    case StrategyChoice::full: jobs.push_back({c, Strategy::full}); break;
    case StrategyChoice::modular:
      jobs.push_back({c, dual ? Strategy::modular : Strategy::full});
      break;
    case StrategyChoice::both:
      jobs.push_back({c, Strategy::full});
      if (dual) jobs.push_back({c, Strategy::modular});
      break;
    }
  }

  std::vector<VerificationReport> reports(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++)
      reports[i] = verify(jobs[i].c, jobs[i].strategy);
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(jobs.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  std::sort(reports.begin(), reports.end(), [](const auto &a, const auto &b) {
    if (a.case_ != b.case_) return a.case_ < b.case_;
    return a.strategy < b.strategy;
  });

  // Dual runs of one case sit next to each other after sorting.
  for (std::size_t i = 0; i + 1 < reports.size(); ++i) {
    auto &a = reports[i];
    auto &b = reports[i + 1];
    if (a.case_ != b.case_) continue;
    if (a.residue != b.residue) {
      for (auto *r : {&a, &b}) {
        r->passed = false;
        r->note = r->note.empty() ? "strategy-mismatch" : r->note + ";strategy-mismatch";
      }
    }
  }

  SweepSummary out;
  out.theorem = cfg.theorem;
  out.skipped_nonprime = grid.skipped_nonprime;
  out.skipped_constraint = grid.skipped_constraint;
  out.total_cases = reports.size();
  for (auto &r : reports) {
    (r.passed ? out.passed : out.failed)++;
    if (!cfg.record_timing) r.elapsed = std::chrono::milliseconds{0};
  }
  out.reports = std::move(reports);
  if (cfg.record_timing)
    out.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
  return out;
}

} // namespace qcong

#endif // QCONG_SWEEP_HPP
