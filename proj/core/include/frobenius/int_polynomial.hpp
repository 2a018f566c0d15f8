#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frobenius/numeric.hpp"

namespace frobenius {

/// Dense univariate polynomial with exact coefficients. Index n of
/// coefficients() is the coefficient of q^n. Trailing zeros are never
/// stored, so the zero polynomial has an empty coefficient vector and no
/// degree.
template <class Coeff>
class DensePolynomial {
 public:
  using coefficient_type = Coeff;

  DensePolynomial() = default;
  explicit DensePolynomial(std::vector<Coeff> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
  }

  static DensePolynomial constant(Coeff c) { return DensePolynomial(std::vector<Coeff>{std::move(c)}); }

  static DensePolynomial monomial(std::size_t exponent, Coeff c = Coeff(1)) {
    std::vector<Coeff> v(exponent + 1);
    v[exponent] = std::move(c);
    return DensePolynomial(std::move(v));
  }

  /// 1 + q + ... + q^d.
  static DensePolynomial all_ones(std::size_t d) {
    return DensePolynomial(std::vector<Coeff>(d + 1, Coeff(1)));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  const std::vector<Coeff>& coefficients() const noexcept { return coeffs_; }

  Coeff coefficient(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Coeff(0); }

  /// Coefficients of q^0..q^n, zero-padded.
  std::vector<Coeff> dense(std::size_t n) const {
    std::vector<Coeff> v(n + 1);
    for (std::size_t i = 0; i < std::min(n + 1, coeffs_.size()); ++i) v[i] = coeffs_[i];
    return v;
  }

  Coeff evaluate(const Coeff& x) const {
    Coeff acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  DensePolynomial& operator+=(const DensePolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  DensePolynomial& operator-=(const DensePolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  friend DensePolynomial operator+(DensePolynomial x, const DensePolynomial& y) { return x += y; }
  friend DensePolynomial operator-(DensePolynomial x, const DensePolynomial& y) { return x -= y; }

  friend DensePolynomial operator-(DensePolynomial x) {
    for (auto& c : x.coeffs_) c = -c;
    return x;
  }

  // Schoolbook; zero coefficients on either side are skipped, which makes
  // products of sparse factors such as q^a - 1 linear in practice.
  friend DensePolynomial operator*(const DensePolynomial& x, const DensePolynomial& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<std::size_t> ys;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
      if (y.coeffs_[j] != 0) ys.push_back(j);
    std::vector<Coeff> out(x.coeffs_.size() + y.coeffs_.size() - 1);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i] == 0) continue;
      for (auto j : ys) out[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    return DensePolynomial(std::move(out));
  }

  DensePolynomial& operator*=(const DensePolynomial& o) { return *this = *this * o; }

  friend bool operator==(const DensePolynomial&, const DensePolynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = DensePolynomial<Integer>;
using RationalPolynomial = DensePolynomial<Rational>;

/// q^d f(1/q) with d = deg(f). Throws DomainError for the zero polynomial.
IntPolynomial reciprocal(const IntPolynomial& f);

/// Sparse ascending text form, e.g. "1 + q^3 - 2*q^5"; "0" for zero.
std::string to_string(const IntPolynomial& f, std::string_view var = "q");
std::string to_string(const RationalPolynomial& f, std::string_view var = "t");

/// Ascending (exponent, coefficient) pairs of the nonzero terms.
std::vector<std::pair<std::size_t, Integer>> sparse_terms(const IntPolynomial& f);

}  // namespace frobenius
