#include "frobenius/truncated_series.hpp"

#include <sstream>

namespace frobenius {

TruncatedSeries TruncatedSeries::geometric(std::size_t m, std::size_t order) {
  if (m == 0) throw DomainError("1/(1 - q^0) is not a power series");
  TruncatedSeries s(order);
  for (std::size_t n = 0; n <= order; n += m) s.coeffs_[n] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const IntPolynomial& p, std::size_t order) {
  TruncatedSeries s(order);
  const auto& c = p.coefficients();
  for (std::size_t n = 0; n < c.size() && n <= order; ++n) s.coeffs_[n] = c[n];
  return s;
}

TruncatedSeries& TruncatedSeries::divide_by_one_minus_power(std::size_t m) {
  if (m == 0) throw DomainError("1/(1 - q^0) is not a power series");
  for (std::size_t n = m; n < coeffs_.size(); ++n) coeffs_[n] += coeffs_[n - m];
  return *this;
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
  TruncatedSeries s(order());
  for (std::size_t n = k; n < coeffs_.size(); ++n) s.coeffs_[n] = coeffs_[n - k];
  return s;
}

void TruncatedSeries::require_same_order(const TruncatedSeries& o) const {
  if (o.order() != order())
    throw DomainError("series orders differ: " + std::to_string(order()) + " vs " +
                      std::to_string(o.order()));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_order(o);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_order(o);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
  x.require_same_order(y);
  TruncatedSeries r(x.order());
  const auto size = x.coeffs_.size();
  for (std::size_t i = 0; i < size; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < size; ++j)
      if (y.coeffs_[j] != 0) r.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return r;
}

std::string to_string(const TruncatedSeries& s) {
  std::ostringstream out;
  const auto& c = s.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (n == 0) {
      out << c[0];
      continue;
    }
    out << (c[n] < 0 ? " - " : " + ");
    out << (c[n] < 0 ? Integer(-c[n]) : c[n]) << "*q";
    if (n > 1) out << '^' << n;
  }
  out << " + O(q^" << c.size() << ')';
  return out.str();
}

}  // namespace frobenius
