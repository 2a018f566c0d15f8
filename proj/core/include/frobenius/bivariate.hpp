#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "frobenius/int_polynomial.hpp"
#include "frobenius/numeric.hpp"

namespace frobenius {

/// x^i y^j. The defaulted comparison is the lex order: compare i, then j.
struct Monomial2 {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  friend auto operator<=>(const Monomial2&, const Monomial2&) = default;

  friend Monomial2 operator*(Monomial2 m, Monomial2 n) { return {m.i + n.i, m.j + n.j}; }

  bool divides(Monomial2 other) const noexcept { return i <= other.i && j <= other.j; }

  /// other / *this; requires divides(other).
  Monomial2 cofactor(Monomial2 other) const noexcept { return {other.i - i, other.j - j}; }
};

std::string to_string(Monomial2 m);

/// Sparse polynomial in E[x, y] over the rationals. Zero coefficients are
/// never stored; the map is ordered by lex, so rbegin() is the leading term.
class BivariatePolynomial {
 public:
  using TermMap = std::map<Monomial2, Rational>;

  BivariatePolynomial() = default;

  static BivariatePolynomial constant(Rational c);
  static BivariatePolynomial term(Monomial2 m, Rational c = Rational(1));
  static BivariatePolynomial x() { return term({1, 0}); }
  static BivariatePolynomial y() { return term({0, 1}); }

  /// Parses `c*x^i*y^j` terms joined by + or -. Factors within a term may
  /// appear in any order; exponents of 0 and 1 may be omitted. Throws
  /// ParseError with a 1-based column on malformed input.
  static BivariatePolynomial parse(std::string_view text);

  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(Monomial2 m) const;

  /// Adds c * m, dropping the entry if it cancels.
  void add_term(Monomial2 m, const Rational& c);

  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  friend BivariatePolynomial operator+(BivariatePolynomial p, const BivariatePolynomial& q) {
    return p += q;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial p, const BivariatePolynomial& q) {
    return p -= q;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& p, const BivariatePolynomial& q);

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  TermMap terms_;
};

/// Terms in lex-descending order, e.g. "x^3 - 1/2*x*y^2 + 7"; "0" for zero.
std::string to_string(const BivariatePolynomial& p);

/// Lex-largest monomial with a nonzero coefficient. Throws DomainError on 0.
Monomial2 leading_monomial(const BivariatePolynomial& f);

/// x^b - y^a, the generator of ker Φ.
BivariatePolynomial toric_binomial(std::int64_t a, std::int64_t b);

struct DivisionResult {
  BivariatePolynomial quotient;
  BivariatePolynomial remainder;
};

/// Single-divisor division in lex order: g = quotient * f + remainder, with
/// no remainder term divisible by LM(f). The lex-largest reducible term is
/// reduced first. Throws DomainError for f = 0.
DivisionResult divide(const BivariatePolynomial& g, const BivariatePolynomial& f);

/// g(t^a, t^b).
RationalPolynomial phi_evaluate(const BivariatePolynomial& g, std::int64_t a, std::int64_t b);

enum class KernelTest { evaluate, divide };

/// Membership of g in ker Φ, either by Φ(g) = 0 or by a zero remainder
/// modulo x^b - y^a. Requires gcd(a, b) = 1 and a != b.
bool in_kernel(const BivariatePolynomial& g, std::int64_t a, std::int64_t b, KernelTest method);

/// Exhaustively checks that (i, j) -> ai + bj is injective on
/// {0..b-1} x {0..j_cap}. The default cap, 3a, covers every value up to
/// 3ab. Requires gcd(a, b) = 1 and a != b.
bool distinct_exponent_check(std::int64_t a, std::int64_t b,
                             std::optional<std::int64_t> j_cap = std::nullopt);

}  // namespace frobenius
