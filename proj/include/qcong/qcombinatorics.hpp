#ifndef QCONG_QCOMBINATORICS_HPP
#define QCONG_QCOMBINATORICS_HPP

// q-integers, q-factorials and Gaussian binomial coefficients.
//
// Binomials with k < 0 or k > n are the zero polynomial everywhere in this
// header; sums in the verifiers rely on that convention.

#include "qcong/polyring.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qcong {

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
inline IntPoly q_integer(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("q_integer requires n >= 0");
  return IntPoly(std::vector<Integer>(static_cast<std::size_t>(n), Integer(1)));
}

/// [n]!_q = [n]_q [n-1]_q ... [1]_q
inline IntPoly q_factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("q_factorial requires n >= 0");
  IntPoly acc{1};
  for (std::int64_t i = 2; i <= n; ++i) acc = poly_mul(acc, q_integer(i));
  return acc;
}

/// Exact classical binomial coefficient, zero outside 0 <= k <= n.
inline Integer binomial_int(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace detail {

// Runs binom(m, j)_q = binom(m-1, j-1)_q + q^j binom(m-1, j)_q over a single
// rolling row. `step(poly, j)` must return q^j * poly (possibly reduced).
// Only the columns that can still reach binom(n, k) are updated.
template <class ShiftFn>
IntPoly pascal_rolling(std::int64_t n, std::int64_t k, ShiftFn &&step) {
  std::vector<IntPoly> row(static_cast<std::size_t>(k) + 1);
  row[0] = IntPoly{1};
  for (std::int64_t m = 1; m <= n; ++m) {
    const std::int64_t hi = std::min(m, k);
    const std::int64_t lo = std::max<std::int64_t>(1, k - (n - m));
    for (std::int64_t j = hi; j >= lo; --j) {
      auto &cell = row[static_cast<std::size_t>(j)];
      cell = step(std::move(cell), static_cast<std::size_t>(j));
      cell += row[static_cast<std::size_t>(j - 1)];
    }
  }
  return std::move(row[static_cast<std::size_t>(k)]);
}

} // namespace detail

/// binom(n, k)_q by the Pascal recurrence; zero for k outside [0, n].
inline IntPoly gaussian_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("gaussian_binomial requires n >= 0");
  if (k < 0 || k > n) return {};
  k = std::min(k, n - k); // palindromic symmetry binom(n,k) = binom(n,n-k)
  return detail::pascal_rolling(n, k, [](IntPoly f, std::size_t j) {
    f.shift_up(j);
    return f;
  });
}

/// binom(n, k)_q reduced by `m`, with every intermediate kept below deg(m).
inline IntPoly gaussian_binomial_mod(std::int64_t n, std::int64_t k, const Modulus &m) {
  if (n < 0) throw std::invalid_argument("gaussian_binomial_mod requires n >= 0");
  if (k < 0 || k > n) return {};
  k = std::min(k, n - k);
  return detail::pascal_rolling(n, k, [&m](IntPoly f, std::size_t j) {
    return shift_rem(std::move(f), j, m);
  });
}

/// binom(n, k)_q as [n]!_q / ([k]!_q [n-k]!_q); slow, kept as a cross-check.
inline IntPoly gaussian_binomial_by_factorials(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("gaussian_binomial_by_factorials requires n >= 0");
  if (k < 0 || k > n) return {};
  return poly_exact_div(q_factorial(n), poly_mul(q_factorial(k), q_factorial(n - k)));
}

inline constexpr std::int64_t subset_oracle_max_n = 16;

/// Sum over k-subsets S of {0..n-1} of q^{sum(S) - k(k-1)/2}.
///
/// Independent of the recurrence: it is the partition-in-a-box count by
/// enumeration. Exponential in n, hence the bound.
inline IntPoly gaussian_subset_oracle(std::int64_t n, std::int64_t k) {
  if (n < 0 || n > subset_oracle_max_n)
    throw std::invalid_argument("gaussian_subset_oracle requires 0 <= n <= 16");
  if (k < 0 || k > n) return {};
  const std::int64_t base = k * (k - 1) / 2;
  std::vector<Integer> counts(static_cast<std::size_t>(k * (n - k) + 1));
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sum += i;
    ++counts[static_cast<std::size_t>(sum - base)];
  }
  return IntPoly(std::move(counts));
}

} // namespace qcong

#endif // QCONG_QCOMBINATORICS_HPP
