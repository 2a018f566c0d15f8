#include "frobenius/gap_polynomials.hpp"

#include <stdexcept>

namespace frobenius {
namespace {

// q^e - 1
IntPolynomial power_minus_one(std::int64_t e) {
  auto p = IntPolynomial::monomial(static_cast<std::size_t>(e));
  p -= IntPolynomial::constant(1);
  return p;
}

void require_gaps(const SemigroupTable& table) {
  if (table.frobenius() < 0) throw DomainError("S(A) has no gaps, F(A) is not a degree");
}

}  // namespace

IntPolynomial gap_polynomial(const SemigroupTable& table) {
  std::vector<Integer> c(static_cast<std::size_t>(table.frobenius() + 1));
  for (auto n : table.gaps()) c[static_cast<std::size_t>(n)] = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial gap_polynomial(const GeneratorSet& generators) {
  return gap_polynomial(SemigroupTable::build(generators));
}

IntPolynomial g_polynomial(const SemigroupTable& table) {
  require_gaps(table);
  return IntPolynomial::all_ones(static_cast<std::size_t>(table.frobenius())) - gap_polynomial(table);
}

IntPolynomial g_polynomial(const GeneratorSet& generators) {
  return g_polynomial(SemigroupTable::build(generators));
}

IntPolynomial pair_gap_polynomial(std::int64_t a, std::int64_t b) {
  require_coprime_pair(a, b);
  return gap_polynomial(GeneratorSet::validate({a, b}));
}

IntPolynomial functional_equation_lhs(std::int64_t a, std::int64_t b, const IntPolynomial& gaps) {
  const auto inner = power_minus_one(1) * gaps + IntPolynomial::constant(1);
  return power_minus_one(a) * power_minus_one(b) * inner;
}

IntPolynomial functional_equation_rhs(std::int64_t a, std::int64_t b) {
  return power_minus_one(1) * power_minus_one(checked::mul(a, b, "q^{ab}"));
}

bool verify_functional_equation(std::int64_t a, std::int64_t b) {
  const auto f = pair_gap_polynomial(a, b);
  return functional_equation_lhs(a, b, f) == functional_equation_rhs(a, b);
}

std::int64_t frobenius_from_degree(std::int64_t a, std::int64_t b) {
  const auto f = pair_gap_polynomial(a, b);
  const auto d = static_cast<std::int64_t>(*f.degree());
  if (d != a * b - a - b) throw std::logic_error("deg f_A differs from ab - a - b");
  return d;
}

bool reciprocal_duality(std::int64_t a, std::int64_t b) {
  require_coprime_pair(a, b);
  const auto table = SemigroupTable::build(GeneratorSet::validate({a, b}));
  const auto f = gap_polynomial(table);
  const auto f_hat = reciprocal(f);
  if (f_hat != g_polynomial(table)) return false;

  const auto shift = static_cast<std::size_t>(a * b - a - b + 1);
  const auto inner = -(power_minus_one(1) * f_hat) + IntPolynomial::monomial(shift);
  const auto lhs = power_minus_one(a) * power_minus_one(b) * inner;
  return lhs == functional_equation_rhs(a, b);
}

EpsilonSequence epsilon_sequence(const SemigroupTable& table) {
  require_gaps(table);
  const auto& m = table.members();
  return {std::vector<std::uint8_t>(m.begin(), m.begin() + table.frobenius() + 1)};
}

std::vector<std::int64_t> epsilon_symmetry_violations(const SemigroupTable& table) {
  const auto eps = epsilon_sequence(table);
  const auto f = eps.frobenius();
  std::vector<std::int64_t> bad;
  for (std::int64_t n = 0; n <= f; ++n)
    if (eps.values[static_cast<std::size_t>(n)] + eps.values[static_cast<std::size_t>(f - n)] != 1)
      bad.push_back(n);
  return bad;
}

std::vector<std::int64_t> epsilon_symmetry_violations(const GeneratorSet& generators) {
  return epsilon_symmetry_violations(SemigroupTable::build(generators));
}

}  // namespace frobenius
