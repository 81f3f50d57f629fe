// Acceptance suite: every criterion is an exact check (the residue must be
// the zero polynomial) plus a wall-clock budget. Prints one line per
// criterion and exits nonzero if any criterion fails.

#include "qcong/bench.hpp"
#include "qcong/congruences.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace qcong;

namespace {

struct Outcome {
  bool ok = true;
  std::size_t cases = 0;
  std::string detail;

  void require(bool condition, const std::string &what) {
    ++cases;
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<void(Outcome &)> body;
};

std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (auto p = lo; p <= hi; ++p)
    if (is_prime(static_cast<std::uint64_t>(p))) out.push_back(p);
  return out;
}

std::string tag(std::int64_t p, std::int64_t k, std::int64_t s) {
  return "p=" + std::to_string(p) + " k=" + std::to_string(k) + " s=" + std::to_string(s);
}

void straub_sweep(Outcome &o) {
  for (std::int64_t p : {5, 7, 11, 13})
    for (std::int64_t k = 0; k <= 6; ++k)
      for (std::int64_t s = 0; s <= k; ++s) {
        const auto full = verify_straub(p, k, s, Strategy::full);
        const auto mod = verify_straub(p, k, s, Strategy::modular);
        o.require(full.passed && mod.passed, "straub fails at " + tag(p, k, s));
        o.require(full.residue == mod.residue, "strategies disagree at " + tag(p, k, s));
      }
}

void q_wolstenholme(Outcome &o) {
  for (auto p : primes_between(5, 31)) o.require(verify_straub(p, 2, 1).passed, "p=" + std::to_string(p));
}

void q_glaisher(Outcome &o) {
  for (auto p : primes_between(5, 13))
    for (std::int64_t k = 1; k <= 8; ++k) o.require(verify_straub(p, k, 1).passed, tag(p, k, 1));
}

void shi_pan(Outcome &o) {
  for (auto p : primes_between(5, 31)) o.require(verify_shi_pan(p).passed, "p=" + std::to_string(p));
}

void q_lucas(Outcome &o) {
  for (std::int64_t p : {5, 7, 11})
    for (std::int64_t a = 0; a <= 4; ++a)
      for (std::int64_t r = 0; r <= a; ++r)
        for (std::int64_t b = 0; b < p; ++b)
          for (std::int64_t s = 0; s < p; ++s)
            o.require(verify_q_lucas(p, a, b, r, s, Strategy::modular).passed,
                      "p=" + std::to_string(p) + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                          " r=" + std::to_string(r) + " s=" + std::to_string(s));
}

void q_vandermonde(Outcome &o) {
  for (std::int64_t m = 0; m <= 10; ++m)
    for (std::int64_t n = 0; n <= 10; ++n)
      for (std::int64_t h = 0; h <= m + n; ++h)
        o.require(verify_q_vandermonde(m, n, h).passed,
                  "m=" + std::to_string(m) + " n=" + std::to_string(n) + " h=" + std::to_string(h));
  o.require(!verify_q_vandermonde(2, 2, 2, VandermondeForm::unweighted).passed,
            "unweighted form unexpectedly holds at (2,2,2)");
}

void andrews(Outcome &o) {
  for (std::int64_t p : {3, 5, 7, 11, 13})
    for (std::int64_t m = 1; m <= 4; ++m) {
      const auto r = verify_andrews(p, m);
      const std::string where = "p=" + std::to_string(p) + " m=" + std::to_string(m);
      o.require(r.note.find("divisibility-violation") == std::string::npos, "D does not divide N - cD at " + where);
      o.require(r.passed, "congruence fails at " + where);
    }
}

void pan(Outcome &o) {
  for (std::int64_t p : {5, 7, 11, 13}) {
    const Modulus cube = modulus_poly(p, 3);
    for (std::int64_t k = 0; k <= 5; ++k)
      for (std::int64_t s = 0; s <= k; ++s) {
        o.require(verify_pan(p, k, s).passed, "pan fails at " + tag(p, k, s));
        o.require(congruent(pan_rhs(p, k, s), straub_rhs(p, k, s), cube).holds,
                  "pan and straub right sides differ at " + tag(p, k, s));
      }
  }
}

void classical(Outcome &o) {
  for (std::int64_t p : {2, 3, 5, 7})
    for (std::int64_t n = 0; n <= 200; ++n)
      for (std::int64_t m = 0; m <= n; ++m)
        o.require(verify_lucas(p, n, m).passed, "lucas p=" + std::to_string(p) + " n=" + std::to_string(n));
  for (auto p : primes_between(5, 37))
    for (std::int64_t k = 0; k <= 8; ++k)
      for (std::int64_t s = 0; s <= k; ++s) o.require(verify_ljunggren(p, k, s).passed, "ljunggren " + tag(p, k, s));
  {
    Integer r = binomial_int(10, 5) - binomial_int(2, 1);
    o.require(binomial_int(10, 5) == 252 && r % 125 == 0, "C(10,5) = 252 == 2 mod 125");
  }
  for (auto p : primes_between(5, 97)) {
    o.require(verify_wolstenholme(p).passed, "wolstenholme p=" + std::to_string(p));
    for (std::int64_t m = 0; m <= 5; ++m)
      o.require(verify_glaisher(p, m).passed, "glaisher p=" + std::to_string(p) + " m=" + std::to_string(m));
  }
}

void oracles(Outcome &o) {
  for (std::int64_t n = 0; n <= 14; ++n)
    for (std::int64_t k = 0; k <= n; ++k)
      o.require(gaussian_subset_oracle(n, k) == gaussian_binomial(n, k),
                "subset oracle n=" + std::to_string(n) + " k=" + std::to_string(k));
  for (int e = 1; e <= 3; ++e) {
    const Modulus m = modulus_poly(5, e);
    for (std::int64_t n = 0; n <= 20; ++n)
      for (std::int64_t k = 0; k <= n; ++k)
        o.require(gaussian_binomial_mod(n, k, m) == poly_rem(gaussian_binomial(n, k), m),
                  "modular recurrence n=" + std::to_string(n) + " k=" + std::to_string(k) + " e=" + std::to_string(e));
  }
}

void decomposition(Outcome &o) {
  for (std::int64_t p : {5, 7})
    for (std::int64_t k = 2; k <= 5; ++k)
      for (std::int64_t s = 1; s < k; ++s) {
        const auto d = proof_decomposition(p, k, s);
        o.require(d.sum_exact, "L1+L2+L3+L4 != binom(kp,sp) at " + tag(p, k, s));
        for (std::size_t i = 0; i < 4; ++i)
          o.require(d.closed_form_ok[i], "L" + std::to_string(i + 1) + " closed form fails at " + tag(p, k, s));
        o.require(d.identity_ok, "closing identity fails at k=" + std::to_string(k) + " s=" + std::to_string(s));
      }
  const auto [lhs, rhs] = closing_identity(5, 2);
  o.require(lhs == 30 && rhs == 30, "closing identity at k=5, s=2 is not 30 = 30");
}

void performance(Outcome &o) {
  const std::int64_t p = 101;
  const auto bench = run_bench(p, 4, 2, 1);
  const auto &modular = bench.rows[1];
  o.require(modular.ran, "modular strategy did not run");
  o.require(!modular.residue_degree || *modular.residue_degree < static_cast<std::size_t>(3 * (p - 1)),
            "residue degree not below 3(p-1)");
  o.require(bench.straub_holds, "straub congruence fails at p=101 k=4 s=2");
  o.require(modular.best_ms < 5 * 60 * 1000.0, "modular strategy exceeded 5 minutes");

  const auto c = CongruenceCase::make(Theorem::straub, 5, 2, 1, 0);
  const Integer constant = straub_constant(5);
  for (Strategy strategy : {Strategy::full, Strategy::modular}) {
    o.require(!check_binomial_congruence(c, straub_rhs_with_constant(5, 2, 1, -constant), strategy).passed,
              "sign-flipped correction not detected");
    o.require(!check_binomial_congruence(c, straub_rhs_with_constant(5, 2, 1, constant + 1), strategy).passed,
              "off-by-one constant not detected");
  }
}

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Straub sweep p in {5,7,11,13}, 0<=s<=k<=6, both strategies", 120, straub_sweep},
      {2, "q-Wolstenholme (k,s)=(2,1), primes 5..31", 60, q_wolstenholme},
      {3, "q-Glaisher s=1, primes 5..13, 1<=k<=8", 60, q_glaisher},
      {4, "Shi-Pan sum, primes 5..31", 10, shi_pan},
      {5, "q-Lucas p in {5,7,11}, 0<=r<=a<=4, all digits", 60, q_lucas},
      {6, "q-Chu-Vandermonde (weighted) m,n<=10; unweighted fails at (2,2,2)", 10, q_vandermonde},
      {7, "Andrews p in {3,5,7,11,13}, m in 1..4, exact division", 30, andrews},
      {8, "Pan variant p in {5,7,11,13}, 0<=s<=k<=5, agrees with Straub mod [p]^3", 120, pan},
      {9, "Classical Lucas/Ljunggren/Wolstenholme/Glaisher", 10, classical},
      {10, "Subset oracle n<=14; modular recurrence n<=20, [5]_q^e e<=3", 60, oracles},
      {11, "Proof decomposition p in {5,7}, 1<=s<k<=5; identity 30 = 30", 60, decomposition},
      {12, "bench p=101 k=4 s=2 modular < 5 min; mutations detected on (5,2,1)", 300, performance},
  };

  int failed = 0;
  for (const auto &c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception &e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.budget_seconds) {
      o.ok = false;
      o.detail = "exceeded time budget";
    }
    if (!o.ok) ++failed;
    std::printf("[%s] %2d %s (%zu checks, %.2f s / %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.cases, secs, c.budget_seconds, o.ok ? "" : ": ", o.ok ? "" : o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
