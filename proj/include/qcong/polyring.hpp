#ifndef QCONG_POLYRING_HPP
#define QCONG_POLYRING_HPP

// Dense univariate polynomials over arbitrary-precision integers.
//
// IntPoly stores coefficients in ascending order and is kept canonical
// (no trailing zeros, zero polynomial == empty vector) after every
// operation. Modulus wraps a monic IntPoly used as a Euclidean divisor.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcong {

using Integer = mpz_class;

class IntPoly {
public:
  IntPoly() = default;

  explicit IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static IntPoly constant(const Integer &c) { return IntPoly(std::vector<Integer>{c}); }

  /// c * q^d
  static IntPoly monomial(std::size_t d, const Integer &c = 1) {
    if (c == 0) return {};
    std::vector<Integer> v(d + 1);
    v[d] = c;
    return IntPoly(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree, or nullopt for the zero polynomial (degree minus infinity).
  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Number of stored coefficients; 0 for the zero polynomial.
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Coefficient of q^i; zero beyond the degree.
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

  const Integer &leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  bool operator==(const IntPoly &) const = default;

  IntPoly &operator+=(const IntPoly &g) {
    if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size());
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
    trim();
    return *this;
  }

  IntPoly &operator-=(const IntPoly &g) {
    if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size());
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] -= g.coeffs_[i];
    trim();
    return *this;
  }

  IntPoly &operator*=(const Integer &c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto &a : coeffs_) a *= c;
    return *this;
  }

  IntPoly &operator*=(const IntPoly &g);

  /// this += c * q^shift * g, without materialising the shifted product.
  IntPoly &add_scaled_shifted(const IntPoly &g, const Integer &c, std::size_t shift) {
    if (g.is_zero() || c == 0) return *this;
    if (coeffs_.size() < g.coeffs_.size() + shift) coeffs_.resize(g.coeffs_.size() + shift);
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i)
      mpz_addmul(coeffs_[i + shift].get_mpz_t(), g.coeffs_[i].get_mpz_t(), c.get_mpz_t());
    trim();
    return *this;
  }

  /// Multiply by q^d in place.
  IntPoly &shift_up(std::size_t d) {
    if (!coeffs_.empty() && d > 0) coeffs_.insert(coeffs_.begin(), d, Integer(0));
    return *this;
  }

  /// Largest coefficient bit length (0 for the zero polynomial).
  std::size_t max_bits() const {
    std::size_t b = 0;
    for (const auto &c : coeffs_) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
    return is_zero() ? 0 : b;
  }

  /// Mutable access for in-place kernels; caller must call normalize().
  std::vector<Integer> &raw() noexcept { return coeffs_; }
  void normalize() { trim(); }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

inline IntPoly operator+(IntPoly f, const IntPoly &g) { return f += g; }
inline IntPoly operator-(IntPoly f, const IntPoly &g) { return f -= g; }
inline IntPoly operator-(IntPoly f) { return f *= Integer(-1); }
inline IntPoly operator*(IntPoly f, const Integer &c) { return f *= c; }
inline IntPoly operator*(const Integer &c, IntPoly f) { return f *= c; }

namespace detail {

inline constexpr std::size_t karatsuba_threshold = 32;

// out[0 .. a.size()+b.size()-1) += a * b
inline void mul_schoolbook(std::span<const Integer> a, std::span<const Integer> b,
                           std::span<Integer> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
}

// out += a * b, requires a.size() == b.size() == n and out.size() >= 2n - 1.
inline void mul_karatsuba(std::span<const Integer> a, std::span<const Integer> b,
                          std::span<Integer> out) {
  const std::size_t n = a.size();
  if (n < karatsuba_threshold) {
    mul_schoolbook(a, b, out);
    return;
  }
  const std::size_t lo = n / 2;
  const std::size_t hi = n - lo;
  auto a0 = a.first(lo), a1 = a.subspan(lo);
  auto b0 = b.first(lo), b1 = b.subspan(lo);

  std::vector<Integer> z0(2 * lo - 1), z2(2 * hi - 1), z1(2 * hi - 1);
  mul_karatsuba(a0, b0, z0);
  mul_karatsuba(a1, b1, z2);

  std::vector<Integer> sa(a1.begin(), a1.end()), sb(b1.begin(), b1.end());
  for (std::size_t i = 0; i < lo; ++i) {
    sa[i] += a0[i];
    sb[i] += b0[i];
  }
  mul_karatsuba(sa, sb, z1);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[i + lo] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * lo] += z2[i];
}

// Unbalanced operands are split into chunks of the shorter length.
inline void mul_dispatch(std::span<const Integer> a, std::span<const Integer> b,
                         std::span<Integer> out) {
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t m = b.size();
  if (m < karatsuba_threshold) {
    mul_schoolbook(a, b, out);
    return;
  }
  for (std::size_t start = 0; start < a.size(); start += m) {
    const std::size_t len = std::min(m, a.size() - start);
    if (len < m) {
      mul_schoolbook(a.subspan(start, len), b, out.subspan(start));
      break;
    }
    mul_karatsuba(a.subspan(start, m), b, out.subspan(start));
  }
}

} // namespace detail

inline IntPoly poly_mul(const IntPoly &f, const IntPoly &g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Integer> out(f.size() + g.size() - 1);
  detail::mul_dispatch(f.coeffs(), g.coeffs(), out);
  return IntPoly(std::move(out));
}

/// Reference product used to cross-check the Karatsuba path.
inline IntPoly poly_mul_schoolbook(const IntPoly &f, const IntPoly &g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Integer> out(f.size() + g.size() - 1);
  detail::mul_schoolbook(f.coeffs(), g.coeffs(), out);
  return IntPoly(std::move(out));
}

inline IntPoly &IntPoly::operator*=(const IntPoly &g) { return *this = poly_mul(*this, g); }
inline IntPoly operator*(const IntPoly &f, const IntPoly &g) { return poly_mul(f, g); }

/// A monic divisor of degree >= 1.
///
/// A modulus may also carry a sparse monic multiple W (M divides W). When
/// present, reduction first folds high coefficients through W, which costs
/// a handful of operations per coefficient, and only then performs the dense
/// Euclidean step by M.
class Modulus {
public:
  explicit Modulus(IntPoly poly) : poly_(std::move(poly)) {
    if (poly_.is_zero() || *poly_.degree() < 1)
      throw std::invalid_argument("modulus must have degree >= 1");
    if (poly_.leading() != 1) throw std::invalid_argument("modulus must be monic");
  }

  Modulus(IntPoly poly, const IntPoly &sparse_multiple) : Modulus(std::move(poly)) {
    if (sparse_multiple.is_zero() || sparse_multiple.leading() != 1)
      throw std::invalid_argument("sparse multiple must be monic");
    const auto coeffs = sparse_multiple.coeffs();
    multiple_degree_ = coeffs.size() - 1;
    for (std::size_t i = 0; i < multiple_degree_; ++i)
      if (coeffs[i] != 0) multiple_tail_.emplace_back(i, coeffs[i]);
    has_multiple_ = true;
    if (!divides_multiple(sparse_multiple))
      throw std::invalid_argument("sparse multiple is not divisible by the modulus");
  }

  const IntPoly &poly() const noexcept { return poly_; }
  std::size_t degree() const noexcept { return *poly_.degree(); }

  bool has_sparse_multiple() const noexcept { return has_multiple_; }

  /// Reduce coefficient storage in place to degree < degree().
  void reduce_in_place(std::vector<Integer> &v) const {
    if (has_multiple_ && v.size() > multiple_degree_) {
      for (std::size_t i = v.size() - 1; i >= multiple_degree_; --i) {
        if (v[i] != 0) {
          const std::size_t base = i - multiple_degree_;
          for (const auto &[e, w] : multiple_tail_)
            mpz_submul(v[base + e].get_mpz_t(), v[i].get_mpz_t(), w.get_mpz_t());
          v[i] = 0;
        }
      }
      v.resize(multiple_degree_);
    }
    const std::size_t d = degree();
    const auto m = poly_.coeffs();
    for (std::size_t i = v.size(); i-- > d;) {
      if (v[i] == 0) continue;
      const std::size_t base = i - d;
      for (std::size_t j = 0; j < d; ++j)
        if (m[j] != 0) mpz_submul(v[base + j].get_mpz_t(), v[i].get_mpz_t(), m[j].get_mpz_t());
      v[i] = 0;
    }
    if (v.size() > d) v.resize(d);
  }

private:
  bool divides_multiple(const IntPoly &w) const {
    std::vector<Integer> v(w.coeffs().begin(), w.coeffs().end());
    const std::size_t d = degree();
    const auto m = poly_.coeffs();
    for (std::size_t i = v.size(); i-- > d;) {
      const std::size_t base = i - d;
      for (std::size_t j = 0; j < d; ++j) v[base + j] -= v[i] * m[j];
      v[i] = 0;
    }
    return std::all_of(v.begin(), v.end(), [](const Integer &c) { return c == 0; });
  }

  IntPoly poly_;
  bool has_multiple_ = false;
  std::size_t multiple_degree_ = 0;
  std::vector<std::pair<std::size_t, Integer>> multiple_tail_;
};

/// Euclidean remainder of f by a monic modulus.
inline IntPoly poly_rem(IntPoly f, const Modulus &m) {
  if (f.size() <= m.degree()) return f;
  m.reduce_in_place(f.raw());
  f.normalize();
  return f;
}

/// f * q^d reduced by m.
inline IntPoly shift_rem(IntPoly f, std::size_t d, const Modulus &m) {
  return poly_rem(std::move(f.shift_up(d)), m);
}

/// Thrown when a claimed exact division leaves a remainder.
class InexactDivision : public std::runtime_error {
public:
  explicit InexactDivision(IntPoly remainder)
      : std::runtime_error("polynomial division is not exact"), remainder_(std::move(remainder)) {}
  const IntPoly &remainder() const noexcept { return remainder_; }

private:
  IntPoly remainder_;
};

struct DivisionResult {
  IntPoly quotient;
  IntPoly remainder;
  bool exact = false;
};

/// Long division over the integers. Each step divides the running leading
/// coefficient by lc(g); it stops as soon as that division is not exact,
/// leaving the dividend at that point as the remainder.
inline DivisionResult poly_divide(const IntPoly &f, const IntPoly &g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  const std::size_t dg = *g.degree();
  if (f.size() <= dg) return {IntPoly{}, f, f.is_zero()};

  std::vector<Integer> r(f.coeffs().begin(), f.coeffs().end());
  std::vector<Integer> quo(r.size() - dg);
  const auto gc = g.coeffs();
  const Integer &lc = g.leading();
  Integer c;
  for (std::size_t i = r.size(); i-- > dg;) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lc.get_mpz_t())) {
      r.resize(i + 1);
      return {IntPoly(std::move(quo)), IntPoly(std::move(r)), false};
    }
    mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), lc.get_mpz_t());
    const std::size_t base = i - dg;
    for (std::size_t j = 0; j < dg; ++j)
      if (gc[j] != 0) mpz_submul(r[base + j].get_mpz_t(), c.get_mpz_t(), gc[j].get_mpz_t());
    r[i] = 0;
    quo[base] = c;
  }
  r.resize(dg);
  IntPoly rem(std::move(r));
  const bool exact = rem.is_zero();
  return {IntPoly(std::move(quo)), std::move(rem), exact};
}

/// h with f == g * h, or InexactDivision carrying the remainder.
inline IntPoly poly_exact_div(const IntPoly &f, const IntPoly &g) {
  auto res = poly_divide(f, g);
  if (!res.exact) throw InexactDivision(std::move(res.remainder));
  return std::move(res.quotient);
}

/// f(q^t)
inline IntPoly substitute_power(const IntPoly &f, std::size_t t) {
  if (t == 0) throw std::invalid_argument("substitute_power requires t >= 1");
  if (f.is_zero() || t == 1) return f;
  const auto c = f.coeffs();
  std::vector<Integer> out((c.size() - 1) * t + 1);
  for (std::size_t i = 0; i < c.size(); ++i) out[i * t] = c[i];
  return IntPoly(std::move(out));
}

/// (q^a; q)_n = prod_{j=0}^{n-1} (1 - q^{a+j})
inline IntPoly q_pochhammer(std::size_t a, std::size_t n) {
  IntPoly acc{1};
  for (std::size_t j = 0; j < n; ++j) {
    // acc *= (1 - q^{a+j}) as a shifted subtraction.
    IntPoly next = acc;
    next.add_scaled_shifted(acc, Integer(-1), a + j);
    acc = std::move(next);
  }
  return acc;
}

/// Horner evaluation at an integer point.
inline Integer eval_int(const IntPoly &f, const Integer &x) {
  Integer acc = 0;
  const auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

/// "c0 + c1*q + c2*q^2 + ..." ascending, zero terms omitted.
inline std::string to_string(const IntPoly &f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto c = f.coeffs();
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const bool neg = c[i] < 0;
    Integer mag = abs(c[i]);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "q";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

} // namespace qcong

#endif // QCONG_POLYRING_HPP
