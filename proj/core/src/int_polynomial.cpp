#include "frobenius/int_polynomial.hpp"

#include <sstream>

namespace frobenius {
namespace {

template <class Coeff>
std::string format_ascending(const DensePolynomial<Coeff>& f, std::string_view var) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = f.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n] == 0) continue;
    const bool negative = c[n] < 0;
    const Coeff magnitude = negative ? Coeff(-c[n]) : c[n];
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (n == 0) {
      out << magnitude;
      continue;
    }
    if (magnitude != 1) out << magnitude << '*';
    out << var;
    if (n > 1) out << '^' << n;
  }
  return out.str();
}

}  // namespace

IntPolynomial reciprocal(const IntPolynomial& f) {
  if (f.is_zero()) throw DomainError("reciprocal of the zero polynomial is undefined");
  std::vector<Integer> reversed(f.coefficients().rbegin(), f.coefficients().rend());
  return IntPolynomial(std::move(reversed));
}

std::string to_string(const IntPolynomial& f, std::string_view var) { return format_ascending(f, var); }

std::string to_string(const RationalPolynomial& f, std::string_view var) {
  return format_ascending(f, var);
}

std::vector<std::pair<std::size_t, Integer>> sparse_terms(const IntPolynomial& f) {
  std::vector<std::pair<std::size_t, Integer>> terms;
  const auto& c = f.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n)
    if (c[n] != 0) terms.emplace_back(n, c[n]);
  return terms;
}

}  // namespace frobenius
