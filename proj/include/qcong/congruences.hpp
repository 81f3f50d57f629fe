#ifndef QCONG_CONGRUENCES_HPP
#define QCONG_CONGRUENCES_HPP

// Instance verifiers for binomial congruences modulo powers of [p]_q.
//
// Every verifier reduces a difference of integer polynomials by a monic
// modulus and passes iff the remainder is the zero polynomial. There are no
// tolerances: a case either holds exactly or it does not.

#include "qcong/polyring.hpp"
#include "qcong/primes.hpp"
#include "qcong/qcombinatorics.hpp"

#include <array>
#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace qcong {

enum class Theorem {
  lucas,
  ljunggren,
  wolstenholme,
  glaisher,
  q_lucas,
  q_vandermonde,
  straub,
  shi_pan,
  andrews,
  pan,
};

inline constexpr std::array<Theorem, 10> all_theorems{
    Theorem::lucas,   Theorem::ljunggren,     Theorem::wolstenholme, Theorem::glaisher,
    Theorem::q_lucas, Theorem::q_vandermonde, Theorem::straub,       Theorem::shi_pan,
    Theorem::andrews, Theorem::pan};

inline std::string_view to_string(Theorem t) {
  switch (t) {
  case Theorem::lucas: return "lucas";
  case Theorem::ljunggren: return "ljunggren";
  case Theorem::wolstenholme: return "wolstenholme";
  case Theorem::glaisher: return "glaisher";
  case Theorem::q_lucas: return "q_lucas";
  case Theorem::q_vandermonde: return "q_vandermonde";
  case Theorem::straub: return "straub";
  case Theorem::shi_pan: return "shi_pan";
  case Theorem::andrews: return "andrews";
  case Theorem::pan: return "pan";
  }
  return "?";
}

inline std::optional<Theorem> parse_theorem(std::string_view name) {
  for (auto t : all_theorems)
    if (to_string(t) == name) return t;
  return std::nullopt;
}

enum class Strategy { full, modular };

inline std::string_view to_string(Strategy s) { return s == Strategy::full ? "full" : "modular"; }

inline std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "full") return Strategy::full;
  if (name == "modular") return Strategy::modular;
  return std::nullopt;
}

/// Theorems whose left side can be computed by the reduce-as-you-go path.
inline bool supports_modular(Theorem t) {
  return t == Theorem::straub || t == Theorem::pan || t == Theorem::q_lucas ||
         t == Theorem::shi_pan;
}

/// Exponent of the modulus in the statement of each congruence. Zero means
/// an exact identity (no modulus).
inline int default_power(Theorem t) {
  switch (t) {
  case Theorem::ljunggren:
  case Theorem::wolstenholme:
  case Theorem::glaisher:
  case Theorem::straub:
  case Theorem::pan: return 3;
  case Theorem::q_vandermonde: return 0;
  default: return 1;
  }
}

inline bool requires_p_at_least_5(Theorem t) {
  return t == Theorem::straub || t == Theorem::shi_pan || t == Theorem::ljunggren ||
         t == Theorem::wolstenholme || t == Theorem::glaisher || t == Theorem::pan;
}

/// Whether prime p satisfies the hypotheses of theorem t.
inline bool admissible_prime(Theorem t, std::int64_t p) {
  if (requires_p_at_least_5(t)) return p >= 5;
  if (t == Theorem::andrews) return p % 2 == 1;
  return true;
}

/// One verification instance.
///
/// Parameter roles by theorem:
///   straub, pan, ljunggren   p, k, s          binom(kp, sp)
///   q_lucas, lucas           p, k = n, s = m  binom(n, m), digits taken base p
///   wolstenholme, shi_pan    p
///   glaisher, andrews        p, m
///   q_vandermonde            m, k = n, s = h  (p = 0, power = 0)
struct CongruenceCase {
  Theorem theorem = Theorem::straub;
  std::int64_t p = 0;
  std::int64_t k = 0;
  std::int64_t s = 0;
  std::int64_t m = 0;
  int power = 0;

  auto operator<=>(const CongruenceCase &) const = default;
  bool operator==(const CongruenceCase &) const = default;

  /// Validated construction; power < 0 selects the statement's exponent.
  static CongruenceCase make(Theorem t, std::int64_t p, std::int64_t k, std::int64_t s,
                             std::int64_t m, int power = -1) {
    CongruenceCase c{t, p, k, s, m, power < 0 ? default_power(t) : power};
    c.validate();
    return c;
  }

  void validate() const {
    if (k < 0 || s < 0 || m < 0)
      throw std::invalid_argument("k, s and m must be nonnegative");
    if (theorem == Theorem::q_vandermonde) return;
    if (p < 0 || !is_prime(static_cast<std::uint64_t>(p)))
      throw std::invalid_argument(std::string(to_string(theorem)) + ": p must be prime");
    if (!admissible_prime(theorem, p))
      throw std::invalid_argument(std::string(to_string(theorem)) +
                                  (theorem == Theorem::andrews ? ": p must be odd"
                                                               : ": p must be >= 5"));
    if (power < 1) throw std::invalid_argument("modulus exponent must be >= 1");
    if (theorem == Theorem::andrews && m < 1) throw std::invalid_argument("andrews: m must be >= 1");
    // (p^2-1)/12 and p(p^2-1)/24 must be integers wherever they appear.
    if (requires_p_at_least_5(theorem) && (p * p - 1) % 12 != 0)
      throw std::logic_error("(p^2-1)/12 is not integral");
    if (theorem == Theorem::andrews && (p * (p * p - 1)) % 24 != 0)
      throw std::logic_error("p(p^2-1)/24 is not integral");
  }
};

struct VerificationReport {
  CongruenceCase case_;
  bool passed = false;
  std::optional<std::size_t> residue_degree; // nullopt: zero residue
  std::optional<std::size_t> lhs_degree;     // nullopt: zero left side
  std::chrono::milliseconds elapsed{0};
  Strategy strategy = Strategy::full;
  std::string note;
  IntPoly residue;

  bool operator==(const VerificationReport &) const = default;
};

namespace detail {

class Stopwatch {
public:
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::optional<std::size_t> analytic_binomial_degree(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return std::nullopt;
  return static_cast<std::size_t>(k * (n - k));
}

inline VerificationReport finish(const CongruenceCase &c, IntPoly residue,
                                 std::optional<std::size_t> lhs_degree, Strategy strategy,
                                 const Stopwatch &clock, std::string note = {}) {
  VerificationReport r;
  r.case_ = c;
  r.passed = residue.is_zero();
  r.residue_degree = residue.degree();
  r.lhs_degree = lhs_degree;
  r.strategy = strategy;
  r.elapsed = clock.elapsed();
  if (c.theorem != Theorem::q_vandermonde && c.power != default_power(c.theorem))
    note = note.empty() ? "non-default-power" : note + ";non-default-power";
  r.note = std::move(note);
  r.residue = std::move(residue);
  return r;
}

inline std::int64_t checked_power(std::int64_t p, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

} // namespace detail

/// [p]_q^e, carrying (q^p - 1)^e as a sparse multiple for fast reduction.
inline Modulus modulus_poly(std::int64_t p, int e) {
  if (p < 2 || e < 1) throw std::invalid_argument("modulus_poly requires p >= 2 and e >= 1");
  IntPoly base = q_integer(p);
  IntPoly sparse_base = IntPoly::monomial(static_cast<std::size_t>(p)) - IntPoly{1};
  IntPoly poly{1}, multiple{1};
  for (int i = 0; i < e; ++i) {
    poly = poly_mul(poly, base);
    multiple = poly_mul(multiple, sparse_base);
  }
  return Modulus(std::move(poly), multiple);
}

struct Congruence {
  bool holds = false;
  IntPoly residue;
};

/// Whether f == g modulo m, with residue rem(f - g, m).
inline Congruence congruent(const IntPoly &f, const IntPoly &g, const Modulus &m) {
  IntPoly r = poly_rem(f - g, m);
  const bool holds = r.is_zero();
  return {holds, std::move(r)};
}

/// The exponent ((p^2 - 1) / 12) appearing in the Straub correction term.
inline Integer straub_constant(std::int64_t p) {
  if (p < 5 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("straub constant requires a prime p >= 5");
  return Integer(p * p - 1) / 12;
}

/// (q^p - 1)^2
inline IntPoly qp_minus_one_squared(std::int64_t p) {
  IntPoly f = IntPoly::monomial(static_cast<std::size_t>(p)) - IntPoly{1};
  return poly_mul(f, f);
}

/// binom(k,s)_{q^{p^2}} - C(k,s+1) C(s+1,2) c (q^p-1)^2 for an arbitrary
/// constant c. With c = (p^2-1)/12 this is the Straub right side; other
/// values are used to check that mutated statements are rejected.
inline IntPoly straub_rhs_with_constant(std::int64_t p, std::int64_t k, std::int64_t s,
                                        const Integer &c) {
  IntPoly rhs = substitute_power(gaussian_binomial(k, s), static_cast<std::size_t>(p * p));
  const Integer weight = binomial_int(k, s + 1) * binomial_int(s + 1, 2) * c;
  rhs -= qp_minus_one_squared(p) * weight;
  return rhs;
}

inline IntPoly straub_rhs(std::int64_t p, std::int64_t k, std::int64_t s) {
  return straub_rhs_with_constant(p, k, s, straub_constant(p));
}

/// q^{(k-s)s C(p,2)} (binom(k,s)_{q^p} + k C(k,s+1) C(s+1,2) (p^2-1)/12 (q^p-1)^2)
inline IntPoly pan_rhs(std::int64_t p, std::int64_t k, std::int64_t s) {
  const Integer c = straub_constant(p);
  if (s > k) return {}; // both terms vanish
  IntPoly inner = substitute_power(gaussian_binomial(k, s), static_cast<std::size_t>(p));
  inner += qp_minus_one_squared(p) * (Integer(k) * binomial_int(k, s + 1) *
                                      binomial_int(s + 1, 2) * c);
  inner.shift_up(static_cast<std::size_t>((k - s) * s * (p * (p - 1) / 2)));
  return inner;
}

/// binom(kp, sp)_q reduced by [p]_q^power, by the chosen strategy.
inline IntPoly lhs_binomial_reduced(std::int64_t n, std::int64_t k, const Modulus &m,
                                    Strategy strategy) {
  if (strategy == Strategy::modular) return gaussian_binomial_mod(n, k, m);
  return poly_rem(gaussian_binomial(n, k), m);
}

/// Checks binom(kp, sp)_q == rhs mod [p]_q^power. Shared by the Straub and
/// Pan verifiers and by mutation checks.
inline VerificationReport check_binomial_congruence(const CongruenceCase &c, const IntPoly &rhs,
                                                    Strategy strategy) {
  detail::Stopwatch clock;
  const Modulus m = modulus_poly(c.p, c.power);
  IntPoly lhs = lhs_binomial_reduced(c.k * c.p, c.s * c.p, m, strategy);
  auto res = congruent(lhs, poly_rem(rhs, m), m);
  return detail::finish(c, std::move(res.residue),
                        detail::analytic_binomial_degree(c.k * c.p, c.s * c.p), strategy, clock);
}

inline VerificationReport verify_straub(std::int64_t p, std::int64_t k, std::int64_t s,
                                        Strategy strategy = Strategy::full, int power = 3) {
  const auto c = CongruenceCase::make(Theorem::straub, p, k, s, 0, power);
  return check_binomial_congruence(c, straub_rhs(p, k, s), strategy);
}

inline VerificationReport verify_pan(std::int64_t p, std::int64_t k, std::int64_t s,
                                     Strategy strategy = Strategy::full, int power = 3) {
  const auto c = CongruenceCase::make(Theorem::pan, p, k, s, 0, power);
  return check_binomial_congruence(c, pan_rhs(p, k, s), strategy);
}

enum class VandermondeForm {
  weighted,  ///< with q^{k(m-h+k)} on each summand
  unweighted ///< the form without q-power weights, which is not an identity
};

/// sum_k binom(m, h-k)_q binom(n, k)_q q^{k(m-h+k)} == binom(m+n, h)_q exactly.
inline VerificationReport verify_q_vandermonde(std::int64_t m, std::int64_t n, std::int64_t h,
                                               VandermondeForm form = VandermondeForm::weighted) {
  detail::Stopwatch clock;
  const auto c = CongruenceCase::make(Theorem::q_vandermonde, 0, n, h, m, 0);
  IntPoly lhs;
  for (std::int64_t k = 0; k <= h; ++k) {
    if (h - k > m || k > n) continue; // zero summand
    IntPoly term = poly_mul(gaussian_binomial(m, h - k), gaussian_binomial(n, k));
    if (form == VandermondeForm::weighted) term.shift_up(static_cast<std::size_t>(k * (m - h + k)));
    lhs += term;
  }
  auto lhs_degree = lhs.degree();
  IntPoly residue = lhs - gaussian_binomial(m + n, h);
  return detail::finish(c, std::move(residue), lhs_degree, Strategy::full, clock,
                        form == VandermondeForm::unweighted ? "unweighted" : "");
}

/// binom(n, m)_q == C(n div p, m div p) binom(n mod p, m mod p)_q mod [p]_q^power
inline VerificationReport verify_q_lucas_case(const CongruenceCase &c, Strategy strategy) {
  detail::Stopwatch clock;
  const Modulus mod = modulus_poly(c.p, c.power);
  const std::int64_t a = c.k / c.p, b = c.k % c.p, r = c.s / c.p, s = c.s % c.p;
  IntPoly lhs = lhs_binomial_reduced(c.k, c.s, mod, strategy);
  IntPoly rhs = gaussian_binomial(b, s) * binomial_int(a, r);
  auto res = congruent(lhs, rhs, mod);
  return detail::finish(c, std::move(res.residue), detail::analytic_binomial_degree(c.k, c.s),
                        strategy, clock);
}

inline VerificationReport verify_q_lucas(std::int64_t p, std::int64_t a, std::int64_t b,
                                         std::int64_t r, std::int64_t s,
                                         Strategy strategy = Strategy::full) {
  if (b < 0 || b >= p || s < 0 || s >= p)
    throw std::invalid_argument("q_lucas: digits b and s must lie in [0, p-1]");
  const auto c = CongruenceCase::make(Theorem::q_lucas, p, a * p + b, r * p + s, 0, 1);
  return verify_q_lucas_case(c, strategy);
}

/// Cleared-denominator form of sum_{i=1}^{p-1} q^i/(1-q^i)^2 == -(p^2-1)/12:
///   sum_i q^i prod_{j != i} (1-q^j)^2 + ((p^2-1)/12) prod_j (1-q^j)^2 == 0
inline VerificationReport verify_shi_pan(std::int64_t p, Strategy strategy = Strategy::full,
                                         int power = 1) {
  detail::Stopwatch clock;
  const auto c = CongruenceCase::make(Theorem::shi_pan, p, 0, 0, 0, power);
  const Modulus mod = modulus_poly(p, power);
  const auto reduce = [&](IntPoly f) {
    return strategy == Strategy::modular ? poly_rem(std::move(f), mod) : f;
  };

  const auto n = static_cast<std::size_t>(p - 1);
  std::vector<IntPoly> factor(n + 1);
  for (std::size_t j = 1; j <= n; ++j) {
    IntPoly one_minus = q_pochhammer(j, 1);
    factor[j] = reduce(poly_mul(one_minus, one_minus));
  }
  // prefix[i] = prod_{j < i}, suffix[i] = prod_{j > i}
  std::vector<IntPoly> prefix(n + 2), suffix(n + 2);
  prefix[1] = IntPoly{1};
  for (std::size_t i = 2; i <= n + 1; ++i) prefix[i] = reduce(poly_mul(prefix[i - 1], factor[i - 1]));
  suffix[n] = IntPoly{1};
  for (std::size_t i = n; i-- > 1;) suffix[i] = reduce(poly_mul(suffix[i + 1], factor[i + 1]));

  IntPoly sum = prefix[n + 1] * straub_constant(p);
  for (std::size_t i = 1; i <= n; ++i)
    sum.add_scaled_shifted(reduce(poly_mul(prefix[i], suffix[i])), Integer(1), i);

  // deg prod_j (1-q^j)^2 = p(p-1); every other summand has lower degree.
  const auto lhs_degree = static_cast<std::size_t>(p * (p - 1));
  return detail::finish(c, poly_rem(std::move(sum), mod), lhs_degree, strategy, clock);
}

/// Andrews' q-Glaisher congruence
///   N / D == p(p^2-1)/24 mod [p]_q,
///   N = (q^{mp+1}; q)_{p-1} - q^{mp(p-1)/2} (q; q)_{p-1},
///   D = (1 - q^{(m+1)p}) (1 - q^{mp}),
/// checked as: D divides R = N - cD exactly and R / D == 0 mod [p]_q^power.
inline VerificationReport verify_andrews(std::int64_t p, std::int64_t m, int power = 1) {
  detail::Stopwatch clock;
  const auto c = CongruenceCase::make(Theorem::andrews, p, 0, 0, m, power);
  const auto mp = static_cast<std::size_t>(m * p);
  IntPoly numer = q_pochhammer(mp + 1, static_cast<std::size_t>(p - 1));
  IntPoly tail = q_pochhammer(1, static_cast<std::size_t>(p - 1));
  numer.add_scaled_shifted(tail, Integer(-1), mp * static_cast<std::size_t>(p - 1) / 2);
  const IntPoly denom = poly_mul(q_pochhammer(static_cast<std::size_t>((m + 1) * p), 1),
                                 q_pochhammer(mp, 1));
  const Integer constant = Integer(p * (p * p - 1)) / 24;

  auto lhs_degree = numer.degree();
  auto division = poly_divide(numer - denom * constant, denom);
  if (!division.exact)
    return detail::finish(c, std::move(division.remainder), lhs_degree, Strategy::full, clock,
                          "divisibility-violation");
  const Modulus mod = modulus_poly(p, power);
  return detail::finish(c, poly_rem(std::move(division.quotient), mod), lhs_degree,
                        Strategy::full, clock);
}

// Integer congruences modulo p^power. The residue is reported as a constant
// polynomial holding (lhs - rhs) mod p^power.

namespace detail {

inline VerificationReport finish_integer(const CongruenceCase &c, const Integer &lhs,
                                         const Integer &rhs, const Stopwatch &clock) {
  Integer modulus = checked_power(c.p, c.power);
  Integer r = lhs - rhs;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  auto lhs_degree = lhs == 0 ? std::nullopt : std::optional<std::size_t>(0);
  return finish(c, IntPoly::constant(r), lhs_degree, Strategy::full, clock);
}

} // namespace detail

/// C(n, m) == prod C(b_i, c_i) mod p^power over base-p digits.
inline VerificationReport verify_lucas(std::int64_t p, std::int64_t n, std::int64_t m,
                                       int power = 1) {
  detail::Stopwatch clock;
  const auto c = CongruenceCase::make(Theorem::lucas, p, n, m, 0, power);
  Integer digits_product = 1;
  for (std::int64_t a = n, b = m; a > 0 || b > 0; a /= p, b /= p)
    digits_product *= binomial_int(a % p, b % p);
  return detail::finish_integer(c, binomial_int(n, m), digits_product, clock);
}

/// C(kp, sp) == C(k, s) mod p^power
inline VerificationReport verify_ljunggren(std::int64_t p, std::int64_t k, std::int64_t s,
                                           int power = 3) {
  detail::Stopwatch clock;
  const auto c = CongruenceCase::make(Theorem::ljunggren, p, k, s, 0, power);
  return detail::finish_integer(c, binomial_int(k * p, s * p), binomial_int(k, s), clock);
}

/// C(2p-1, p-1) == 1 mod p^power
inline VerificationReport verify_wolstenholme(std::int64_t p, int power = 3) {
  detail::Stopwatch clock;
  const auto c = CongruenceCase::make(Theorem::wolstenholme, p, 0, 0, 0, power);
  return detail::finish_integer(c, binomial_int(2 * p - 1, p - 1), 1, clock);
}

/// Both C(mp+p-1, p-1) == 1 and prod_{j=1}^{p-1} (mp+j) == (p-1)! mod p^power.
/// The residue polynomial carries the first form's residue in the constant
/// coefficient and the product form's residue in the linear one.
inline VerificationReport verify_glaisher(std::int64_t p, std::int64_t m, int power = 3) {
  detail::Stopwatch clock;
  const auto c = CongruenceCase::make(Theorem::glaisher, p, 0, 0, m, power);
  const Integer modulus = detail::checked_power(p, power);

  Integer r1 = binomial_int(m * p + p - 1, p - 1) - 1;
  Integer product = 1, factorial = 1;
  for (std::int64_t j = 1; j <= p - 1; ++j) {
    product *= m * p + j;
    factorial *= j;
  }
  Integer r2 = product - factorial;
  mpz_mod(r1.get_mpz_t(), r1.get_mpz_t(), modulus.get_mpz_t());
  mpz_mod(r2.get_mpz_t(), r2.get_mpz_t(), modulus.get_mpz_t());
  return detail::finish(c, IntPoly(std::vector<Integer>{r1, r2}), 0, Strategy::full, clock);
}

enum class ClassicalFamily { lucas, ljunggren, wolstenholme, glaisher };

/// Dispatch over the integer congruences; parameters follow CongruenceCase.
inline VerificationReport verify_classical(ClassicalFamily family, const CongruenceCase &c) {
  switch (family) {
  case ClassicalFamily::lucas: return verify_lucas(c.p, c.k, c.s, c.power);
  case ClassicalFamily::ljunggren: return verify_ljunggren(c.p, c.k, c.s, c.power);
  case ClassicalFamily::wolstenholme: return verify_wolstenholme(c.p, c.power);
  case ClassicalFamily::glaisher: return verify_glaisher(c.p, c.m, c.power);
  }
  throw std::invalid_argument("unknown classical family");
}

/// Runs one case. Theorems without a modular path ignore `strategy` and
/// report Strategy::full.
inline VerificationReport verify(const CongruenceCase &c, Strategy strategy) {
  c.validate();
  switch (c.theorem) {
  case Theorem::lucas: return verify_classical(ClassicalFamily::lucas, c);
  case Theorem::ljunggren: return verify_classical(ClassicalFamily::ljunggren, c);
  case Theorem::wolstenholme: return verify_classical(ClassicalFamily::wolstenholme, c);
  case Theorem::glaisher: return verify_classical(ClassicalFamily::glaisher, c);
  case Theorem::q_lucas: return verify_q_lucas_case(c, strategy);
  case Theorem::q_vandermonde: return verify_q_vandermonde(c.m, c.k, c.s);
  case Theorem::straub: return verify_straub(c.p, c.k, c.s, strategy, c.power);
  case Theorem::shi_pan: return verify_shi_pan(c.p, strategy, c.power);
  case Theorem::andrews: return verify_andrews(c.p, c.m, c.power);
  case Theorem::pan: return verify_pan(c.p, c.k, c.s, strategy, c.power);
  }
  throw std::invalid_argument("unknown theorem");
}

/// The four-way split of binom(kp, sp)_q from the inductive proof, with the
/// closed form each piece is claimed to take modulo [p]_q^3.
struct ProofDecomposition {
  std::array<IntPoly, 4> parts;        // L1..L4, exact
  std::array<IntPoly, 4> closed_forms; // claimed residues of L1..L4
  std::array<bool, 4> closed_form_ok{};
  bool sum_exact = false;   // L1 + L2 + L3 + L4 == binom(kp, sp)_q
  bool identity_ok = false; // closing binomial identity
  Integer identity_lhs;
  Integer identity_rhs;
};

/// C(k,s+1)C(s+1,2) == C(k-1,s+1)C(s+1,2) + C(k-1,s)C(s,2) + C(k-2,s)s
///                     + C(k-2,s-1)(s-1) + C(k-2,s-1)
inline std::pair<Integer, Integer> closing_identity(std::int64_t k, std::int64_t s) {
  const auto C = [](std::int64_t n, std::int64_t r) { return binomial_int(n, r); };
  Integer lhs = C(k, s + 1) * C(s + 1, 2);
  Integer rhs = C(k - 1, s + 1) * C(s + 1, 2) + C(k - 1, s) * C(s, 2) + C(k - 2, s) * s +
                C(k - 2, s - 1) * (s - 1) + C(k - 2, s - 1);
  return {lhs, rhs};
}

/// Requires p >= 5 prime and k > s >= 1. For s = 1 the split is the one used
/// for binom(kp, p)_q, where the i + j = p terms form L3.
inline ProofDecomposition proof_decomposition(std::int64_t p, std::int64_t k, std::int64_t s) {
  if (p < 5 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("proof_decomposition requires a prime p >= 5");
  if (k < 2 || s < 1 || s >= k)
    throw std::invalid_argument("proof_decomposition requires k > s >= 1 and k >= 2");

  const auto up = [](std::int64_t e) { return static_cast<std::size_t>(e); };
  std::vector<IntPoly> row_p(up(p) + 1);
  for (std::int64_t i = 0; i <= p; ++i) row_p[up(i)] = gaussian_binomial(p, i);
  const std::int64_t base = (k - 2) * p;
  std::vector<IntPoly> row_base(up(s * p) + 1);
  for (std::int64_t t = 0; t <= s * p; ++t) row_base[up(t)] = gaussian_binomial(base, t);
  const auto binom_base = [&](std::int64_t t) -> const IntPoly & {
    static const IntPoly zero;
    return (t < 0 || t > s * p) ? zero : row_base[up(t)];
  };
  // term * q^e, where e may only be negative when the term vanishes
  const auto add_weighted = [](IntPoly &acc, const IntPoly &term, std::int64_t e) {
    if (term.is_zero()) return;
    if (e < 0) throw std::logic_error("negative exponent on a nonzero term");
    acc.add_scaled_shifted(term, Integer(1), static_cast<std::size_t>(e));
  };

  ProofDecomposition out;
  auto &[l1, l2, l3, l4] = out.parts;

  l1 = gaussian_binomial((k - 1) * p, s * p);
  add_weighted(l1, gaussian_binomial((k - 1) * p, (s - 1) * p), (k - s) * p * p);

  for (std::int64_t i = 1; i <= p - 1; ++i)
    add_weighted(l2, poly_mul(row_p[up(i)], binom_base(s * p - i)), i * ((k - s - 1) * p + i));

  if (s == 1) {
    for (std::int64_t i = 1; i <= p - 1; ++i)
      add_weighted(l3, poly_mul(row_p[up(i)], row_p[up(p - i)]), p * p * (k - 2) + i * i);
    for (std::int64_t i = 1; i <= p - 1; ++i)
      for (std::int64_t j = 1; j <= p - i - 1; ++j) {
        const IntPoly &inner = binom_base(p - i - j);
        if (inner.is_zero()) continue;
        const std::int64_t e = i * ((k - 2) * p + i) + j * ((k - 3) * p + i + j);
        add_weighted(l4, poly_mul(poly_mul(row_p[up(i)], inner), row_p[up(j)]), e);
      }
  } else {
    for (std::int64_t i = 1; i <= p - 1; ++i)
      add_weighted(l3, poly_mul(row_p[up(i)], binom_base((s - 1) * p - i)),
                   (p + i) * ((k - 1 - s) * p + i));
    for (std::int64_t i = 1; i <= p - 1; ++i)
      for (std::int64_t j = 1; j <= p - 1; ++j) {
        const IntPoly &inner = binom_base(s * p - i - j);
        if (inner.is_zero()) continue;
        const std::int64_t e = i * ((k - 1 - s) * p + i) + j * ((k - 2 - s) * p + i + j);
        add_weighted(l4, poly_mul(poly_mul(row_p[up(i)], inner), row_p[up(j)]), e);
      }
  }

  out.sum_exact = (l1 + l2 + l3 + l4) == gaussian_binomial(k * p, s * p);

  // T = ((p^2-1)/12) (q^p-1)^2 = ((p^2-1)/12) (1-q)^2 [p]_q^2
  const IntPoly t = qp_minus_one_squared(p) * straub_constant(p);
  const auto C = [](std::int64_t n, std::int64_t r) { return binomial_int(n, r); };
  auto &forms = out.closed_forms;
  forms[0] = substitute_power(gaussian_binomial(k, s), up(p * p)) -
             t * (C(k - 1, s + 1) * C(s + 1, 2) + C(k - 1, s) * C(s, 2));
  forms[1] = t * (-(C(k - 2, s) * s));
  if (s == 1) {
    forms[2] = -t;
    forms[3] = IntPoly{};
  } else {
    forms[2] = t * (-(C(k - 2, s - 1) * (s - 1)));
    forms[3] = t * (-C(k - 2, s - 1));
  }

  const Modulus cube = modulus_poly(p, 3);
  for (std::size_t i = 0; i < 4; ++i) out.closed_form_ok[i] = congruent(out.parts[i], forms[i], cube).holds;

  std::tie(out.identity_lhs, out.identity_rhs) = closing_identity(k, s);
  out.identity_ok = out.identity_lhs == out.identity_rhs;
  return out;
}

} // namespace qcong

#endif // QCONG_CONGRUENCES_HPP
