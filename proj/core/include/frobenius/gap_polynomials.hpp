#pragma once

#include <cstdint>
#include <vector>

#include "frobenius/int_polynomial.hpp"
#include "frobenius/semigroup.hpp"

namespace frobenius {

/// Membership indicator eps_0..eps_F over the closed interval [0, F(A)].
struct EpsilonSequence {
  std::vector<std::uint8_t> values;

  std::int64_t frobenius() const noexcept { return static_cast<std::int64_t>(values.size()) - 1; }
};

/// Σ q^n over the gaps n of S(A). Zero polynomial when S(A) = N_0.
IntPolynomial gap_polynomial(const SemigroupTable& table);
IntPolynomial gap_polynomial(const GeneratorSet& generators);

/// Σ_{n=0}^{F(A)} q^n - f_A(q): the members of S(A) up to F(A).
/// Throws DomainError when S(A) has no gaps.
IntPolynomial g_polynomial(const SemigroupTable& table);
IntPolynomial g_polynomial(const GeneratorSet& generators);

/// The gap polynomial of {a, b} after checking that a, b are distinct,
/// coprime and at least 2.
IntPolynomial pair_gap_polynomial(std::int64_t a, std::int64_t b);

/// (q^a - 1)(q^b - 1)((q - 1) f_A(q) + 1), expanded exactly.
IntPolynomial functional_equation_lhs(std::int64_t a, std::int64_t b, const IntPolynomial& gaps);
/// (q - 1)(q^{ab} - 1).
IntPolynomial functional_equation_rhs(std::int64_t a, std::int64_t b);

/// Expands both sides of the gap-polynomial functional equation for {a, b}
/// and compares them coefficient by coefficient.
bool verify_functional_equation(std::int64_t a, std::int64_t b);

/// deg f_{a,b}. Throws std::logic_error if it differs from ab - a - b,
/// which is what the degree comparison of the two sides forces.
std::int64_t frobenius_from_degree(std::int64_t a, std::int64_t b);

/// Checks reciprocal(f_A) == g_A and the reciprocal form of the functional
/// equation, (q^a-1)(q^b-1)(-(q-1) f^(q) + q^{ab-a-b+1}) = (q-1)(q^{ab}-1).
bool reciprocal_duality(std::int64_t a, std::int64_t b);

EpsilonSequence epsilon_sequence(const SemigroupTable& table);

/// All n in [0, F(A)] with eps_n + eps_{F-n} != 1. Empty iff S(A) is
/// symmetric. Throws DomainError when S(A) has no gaps.
std::vector<std::int64_t> epsilon_symmetry_violations(const SemigroupTable& table);
std::vector<std::int64_t> epsilon_symmetry_violations(const GeneratorSet& generators);

}  // namespace frobenius
