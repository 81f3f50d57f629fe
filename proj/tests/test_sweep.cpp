#include "qcong/bench.hpp"
#include "qcong/report.hpp"
#include "qcong/sweep.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace qcong;

namespace {

SweepConfig straub_config(IntRange p, IntRange k, IntRange s) {
  SweepConfig cfg;
  cfg.theorem = Theorem::straub;
  cfg.p_range = p;
  cfg.k_range = k;
  cfg.s_range = s;
  return cfg;
}

std::vector<bool> sieve(std::size_t n) {
  std::vector<bool> prime(n + 1, true);
  prime[0] = prime[1] = false;
  for (std::size_t i = 2; i * i <= n; ++i)
    if (prime[i])
      for (std::size_t j = i * i; j <= n; j += i) prime[j] = false;
  return prime;
}

} // namespace

TEST(IsPrime, Examples) {
  EXPECT_TRUE(is_prime(5));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(91));
  EXPECT_TRUE(is_prime(2));
}

TEST(IsPrime, MatchesSieve) {
  const auto prime = sieve(20000);
  for (std::uint64_t n = 0; n <= 20000; ++n) ASSERT_EQ(is_prime(n), prime[n]) << n;
}

TEST(IsPrime, LargeInputs) {
  EXPECT_TRUE(is_prime((1ULL << 61) - 1));
  EXPECT_TRUE(is_prime(18446744073709551557ULL)); // 2^64 - 59
  EXPECT_FALSE(is_prime(561));                   // Carmichael
  EXPECT_FALSE(is_prime(3215031751ULL));         // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_FALSE(is_prime(3825123056546413051ULL)); // strong pseudoprime to bases up to 23
  EXPECT_FALSE(is_prime(((1ULL << 31) - 1) * ((1ULL << 31) - 1)));
}

TEST(ParseRange, Forms) {
  EXPECT_EQ(parse_range("5..13"), (IntRange{5, 13, false}));
  EXPECT_EQ(parse_range("7"), (IntRange{7, 7, true}));
  EXPECT_EQ(parse_range("4..4"), (IntRange{4, 4, false}));
  EXPECT_THROW(parse_range("9..3"), ConfigError);
  EXPECT_THROW(parse_range("5.."), ConfigError);
  EXPECT_THROW(parse_range("x"), ConfigError);
  EXPECT_THROW(parse_range(""), ConfigError);
  EXPECT_THROW(parse_range("3x"), ConfigError);
}

TEST(RunSweep, StraubGridPasses) {
  const auto summary = run_sweep(straub_config({5, 13, false}, {0, 6, false}, {0, 6, false}));
  EXPECT_EQ(summary.total_cases, 4u * 7u * 7u);
  EXPECT_EQ(summary.failed, 0u);
  EXPECT_EQ(summary.passed, summary.total_cases);
  EXPECT_EQ(summary.skipped_nonprime, 5u); // 6, 8, 9, 10, 12
  EXPECT_EQ(summary.exit_code(), 0);
}

TEST(RunSweep, CompositeOnlyRangeIsEmpty) {
  const auto summary = run_sweep(straub_config({8, 10, false}, {0, 2, false}, {0, 2, false}));
  EXPECT_EQ(summary.total_cases, 0u);
  EXPECT_EQ(summary.skipped_nonprime, 3u);
  EXPECT_EQ(summary.exit_code(), 0);
}

TEST(RunSweep, InadmissiblePrimesInRangeAreSkipped) {
  const auto summary = run_sweep(straub_config({2, 7, false}, {2, 2}, {1, 1}));
  EXPECT_EQ(summary.skipped_constraint, 2u); // 2, 3
  EXPECT_EQ(summary.skipped_nonprime, 2u);   // 4, 6
  EXPECT_EQ(summary.total_cases, 2u);
}

TEST(RunSweep, ExplicitBadPrimeIsUsageError) {
  SweepConfig cfg;
  cfg.theorem = Theorem::andrews;
  cfg.p_range = IntRange{4, 4, true};
  cfg.m_range = IntRange{1, 1, true};
  EXPECT_THROW(run_sweep(cfg), ConfigError);
  EXPECT_THROW(run_sweep(straub_config({3, 3, true}, {1, 1}, {1, 1})), ConfigError);
  cfg.p_range = IntRange{5, 5, true};
  cfg.m_range = IntRange{0, 2, false};
  EXPECT_THROW(run_sweep(cfg), ConfigError);
}

TEST(RunSweep, MissingRangeIsUsageError) {
  SweepConfig cfg;
  cfg.theorem = Theorem::pan;
  cfg.p_range = IntRange{5, 5};
  EXPECT_THROW(run_sweep(cfg), ConfigError);
  cfg.k_range = IntRange{-1, 2, false};
  cfg.s_range = IntRange{0, 1, false};
  EXPECT_THROW(run_sweep(cfg), ConfigError);
}

TEST(RunSweep, FailedCaseGivesExitOne) {
  // C(5,1) = 5 is 0 mod 5 but not mod 25, while the digit product is 0.
  SweepConfig cfg;
  cfg.theorem = Theorem::lucas;
  cfg.p_range = IntRange{5, 5};
  cfg.k_range = IntRange{5, 5};
  cfg.s_range = IntRange{1, 1};
  cfg.power = 2;
  const auto summary = run_sweep(cfg);
  EXPECT_EQ(summary.failed, 1u);
  EXPECT_EQ(summary.exit_code(), 1);
  EXPECT_EQ(summary.reports[0].note, "non-default-power");
}

TEST(RunSweep, BothStrategiesRunEveryCaseTwice) {
  auto cfg = straub_config({5, 7, false}, {0, 4, false}, {0, 4, false});
  cfg.strategy = StrategyChoice::both;
  const auto summary = run_sweep(cfg);
  EXPECT_EQ(summary.total_cases, 2u * 2u * 25u);
  EXPECT_EQ(summary.failed, 0u);
  for (std::size_t i = 0; i < summary.reports.size(); i += 2) {
    EXPECT_EQ(summary.reports[i].case_, summary.reports[i + 1].case_);
    EXPECT_EQ(summary.reports[i].strategy, Strategy::full);
    EXPECT_EQ(summary.reports[i + 1].strategy, Strategy::modular);
  }
}

TEST(RunSweep, OutputIndependentOfJobCount) {
  auto cfg = straub_config({5, 11, false}, {0, 5, false}, {0, 5, false});
  cfg.record_timing = false;
  cfg.strategy = StrategyChoice::both;
  cfg.jobs = 1;
  const auto one = to_json(run_sweep(cfg)).dump();
  cfg.jobs = 8;
  const auto eight = to_json(run_sweep(cfg)).dump();
  EXPECT_EQ(one, eight);
}

TEST(RunSweep, ReportsSortedCanonically) {
  SweepConfig cfg;
  cfg.theorem = Theorem::q_lucas;
  cfg.p_range = IntRange{2, 7, false};
  cfg.k_range = IntRange{0, 9, false};
  cfg.s_range = IntRange{0, 9, false};
  cfg.jobs = 4;
  const auto summary = run_sweep(cfg);
  EXPECT_EQ(summary.failed, 0u);
  EXPECT_TRUE(std::is_sorted(summary.reports.begin(), summary.reports.end(),
                             [](const auto &a, const auto &b) { return a.case_ < b.case_; }));
}

TEST(RunSweep, EveryTheoremDispatches) {
  const auto run = [](Theorem t, auto &&configure) {
    SweepConfig cfg;
    cfg.theorem = t;
    configure(cfg);
    return run_sweep(cfg);
  };
  auto s = run(Theorem::q_vandermonde, [](SweepConfig &c) {
    c.m_range = IntRange{0, 3, false};
    c.k_range = IntRange{0, 3, false};
    c.s_range = IntRange{0, 6, false};
  });
  EXPECT_EQ(s.total_cases, 4u * 4u * 7u);
  EXPECT_EQ(s.failed, 0u);
  s = run(Theorem::shi_pan, [](SweepConfig &c) { c.p_range = IntRange{5, 13, false}; });
  EXPECT_EQ(s.total_cases, 4u);
  EXPECT_EQ(s.failed, 0u);
  s = run(Theorem::andrews, [](SweepConfig &c) {
    c.p_range = IntRange{3, 7, false};
    c.m_range = IntRange{1, 2, false};
  });
  EXPECT_EQ(s.total_cases, 6u);
  EXPECT_EQ(s.failed, 0u);
  for (Theorem t : {Theorem::wolstenholme, Theorem::glaisher}) {
    s = run(t, [](SweepConfig &c) {
      c.p_range = IntRange{5, 23, false};
      c.m_range = IntRange{0, 3, false};
    });
    EXPECT_GT(s.total_cases, 0u);
    EXPECT_EQ(s.failed, 0u);
  }
}

TEST(Report, JsonRoundTrip) {
  auto cfg = straub_config({5, 7, false}, {0, 3, false}, {0, 3, false});
  cfg.strategy = StrategyChoice::both;
  auto summary = run_sweep(cfg);
  // include a failing case with a nonzero residue
  auto bad = check_binomial_congruence(CongruenceCase::make(Theorem::straub, 5, 2, 1, 0),
                                       straub_rhs_with_constant(5, 2, 1, -2), Strategy::full);
  ASSERT_FALSE(bad.passed);
  summary.reports.push_back(bad);
  summary.failed += 1;
  summary.total_cases += 1;

  const auto parsed = summary_from_json(json::parse(to_json(summary).dump()));
  EXPECT_EQ(parsed, summary);
}

TEST(Report, JsonSchema) {
  const auto summary = run_sweep(straub_config({5, 5}, {2, 2}, {1, 1}));
  const auto j = to_json(summary);
  ASSERT_EQ(j.at("cases").size(), 1u);
  const auto &c = j.at("cases")[0];
  for (const char *key : {"theorem", "p", "k", "s", "m", "power", "strategy", "passed",
                          "residue_degree", "lhs_degree", "elapsed_ms"})
    EXPECT_TRUE(c.contains(key)) << key;
  EXPECT_EQ(c.at("residue_degree"), "zero");
  EXPECT_EQ(c.at("lhs_degree"), 25);
  EXPECT_EQ(c.at("power"), 3);
  EXPECT_EQ(c.at("theorem"), "straub");
}

TEST(Report, CsvAndText) {
  auto summary = run_sweep(straub_config({5, 7, false}, {1, 2, false}, {1, 1}));
  std::ostringstream csv, text;
  write_csv(csv, summary);
  write_text(text, summary);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, csv_header);
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line);) {
    ++rows;
    EXPECT_EQ(line.rfind("straub,", 0), 0u);
  }
  EXPECT_EQ(rows, summary.reports.size());
  EXPECT_NE(text.str().find("summary: straub total=4 passed=4 failed=0"), std::string::npos);
}

TEST(Bench, BothStrategiesAgree) {
  const auto r = run_bench(5, 3, 1, 2);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_TRUE(r.rows[0].ran);
  EXPECT_TRUE(r.rows[1].ran);
  ASSERT_TRUE(r.residues_equal.has_value());
  EXPECT_TRUE(*r.residues_equal);
  EXPECT_TRUE(r.straub_holds);
}

TEST(Bench, FullSkippedAboveLimit) {
  const auto r = run_bench(53, 4, 2, 1);
  EXPECT_FALSE(r.rows[0].ran);
  EXPECT_FALSE(r.rows[0].note.empty());
  EXPECT_TRUE(r.rows[1].ran);
  EXPECT_FALSE(r.residues_equal.has_value());
  EXPECT_LT(r.rows[1].residue.size(), static_cast<std::size_t>(3 * 52));
  EXPECT_TRUE(r.straub_holds);
}

TEST(Bench, UsageErrors) {
  EXPECT_THROW(run_bench(5, 3, 1, 0), ConfigError);
  EXPECT_THROW(run_bench(9, 3, 1, 1), ConfigError);
}
