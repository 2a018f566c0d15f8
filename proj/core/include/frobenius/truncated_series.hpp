#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "frobenius/int_polynomial.hpp"
#include "frobenius/numeric.hpp"

namespace frobenius {

/// Formal power series with integer coefficients, known modulo q^{N+1}.
/// All arithmetic is exact to that order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

  /// 1 + q + q^2 + ... mod q^{N+1}.
  static TruncatedSeries geometric(std::size_t order) { return geometric(1, order); }
  /// 1/(1 - q^m) = Σ q^{km}.
  static TruncatedSeries geometric(std::size_t m, std::size_t order);
  /// The polynomial p reduced mod q^{N+1}.
  static TruncatedSeries from_polynomial(const IntPolynomial& p, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  const Integer& operator[](std::size_t n) const { return coeffs_[n]; }
  Integer& operator[](std::size_t n) { return coeffs_[n]; }

  /// Multiplies in place by 1/(1 - q^m), a running sum with stride m.
  TruncatedSeries& divide_by_one_minus_power(std::size_t m);

  /// Multiplies by q^k, dropping what falls past the order.
  TruncatedSeries shifted(std::size_t k) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries x, const TruncatedSeries& y) { return x += y; }
  friend TruncatedSeries operator-(TruncatedSeries x, const TruncatedSeries& y) { return x -= y; }
  friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void require_same_order(const TruncatedSeries& o) const;

  std::vector<Integer> coeffs_;
};

/// "c0 + c1*q + c2*q^2 + ... + cN*q^N + O(q^{N+1})", every coefficient
/// printed, zeros included.
std::string to_string(const TruncatedSeries& s);

}  // namespace frobenius
