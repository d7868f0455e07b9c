#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace clusterseed {

/// Exponents of a Laurent monomial x_1^{e_1} ... x_m^{e_m}; entries may be
/// negative. Ordered lexicographically.
using ExponentVector = std::vector<int>;

/// Sparse element of Z[x_1^{±1}, ..., x_m^{±1}] with arbitrary precision
/// integer coefficients.
///
/// Terms are kept in a sorted map keyed by exponent vector, so iteration is
/// lexicographic and two equal polynomials always have identical term
/// streams. No stored coefficient is ever zero.
class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVector, mpz_class>;

  /// The zero polynomial in `m` variables.
  explicit LaurentPoly(std::size_t m = 0) : m_(m) {}

  static LaurentPoly constant(std::size_t m, const mpz_class& c);
  /// x_{index+1}; `index` is zero-based.
  static LaurentPoly variable(std::size_t m, std::size_t index);
  static LaurentPoly monomial(std::size_t m, ExponentVector exponents,
                              const mpz_class& c = 1);

  std::size_t ambient() const { return m_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Monomial with coefficient ±1, i.e. a unit of the ring.
  bool is_unit() const;

  /// Coefficient of x^e (zero when absent).
  mpz_class coefficient(const ExponentVector& e) const;

  /// Componentwise minimum / maximum exponent over all terms. Zero vector for
  /// the zero polynomial.
  ExponentVector min_exponents() const;
  ExponentVector max_exponents() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  LaurentPoly& operator*=(const LaurentPoly& q);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);

  friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) {
    return p.m_ == q.m_ && p.terms_ == q.terms_;
  }

  /// Multiply every exponent vector by x^shift.
  LaurentPoly shifted(const ExponentVector& shift) const;

  /// p^k. Negative k is only defined for units (±x^e); anything else throws
  /// InexactDivision.
  LaurentPoly pow(long k) const;

  /// Stable 64-bit hash of the canonical term stream.
  std::uint64_t digest() const;

  /// Renders e.g. "x1^-1*x2 + 2". Terms appear in lexicographic order of
  /// their exponent vectors.
  std::string to_string() const;

 private:
  void add_term(const ExponentVector& e, const mpz_class& c);

  std::size_t m_;
  TermMap terms_;
};

/// Returns q with q * d == p, or throws InexactDivision.
///
/// Negative exponents are cleared by a monomial shift; the remaining
/// polynomial quotient is computed by leading-term elimination in graded
/// lexicographic order.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d);

/// Image of p under the ring map x_i -> images[i]. Negative powers of
/// non-monomial images are handled by multiplying through by a common
/// denominator and dividing once at the end, so the result only needs to be a
/// Laurent polynomial as a whole.
LaurentPoly substitute(const LaurentPoly& p, std::span<const LaurentPoly> images);

/// Inverse of LaurentPoly::to_string. Variables are named x1..xm; a variable
/// index above `m` is a parse error.
LaurentPoly parse_laurent(std::string_view text, std::size_t m);

/// 64-bit FNV-1a, used for every digest in the library.
class Fnv1a {
 public:
  void bytes(const void* data, std::size_t len);
  void u64(std::uint64_t v);
  void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
  void str(std::string_view s);
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 14695981039346656037ULL;
};

std::string hex_digest(std::uint64_t d);

}  // namespace clusterseed
