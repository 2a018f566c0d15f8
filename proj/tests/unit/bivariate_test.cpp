#include "frobenius/bivariate.hpp"

#include <gtest/gtest.h>

#include "generators.hpp"

using namespace frobenius;

namespace {

BivariatePolynomial P(std::string_view s) { return BivariatePolynomial::parse(s); }

void expect_valid_division(const BivariatePolynomial& g, const BivariatePolynomial& f, const DivisionResult& d) {
  EXPECT_EQ(d.quotient * f + d.remainder, g);
  const auto lead = leading_monomial(f);
  for (const auto& [m, c] : d.remainder.terms()) EXPECT_FALSE(lead.divides(m)) << to_string(m);
}

}  // namespace

TEST(Monomial2, LexOrder) {
  EXPECT_LT((Monomial2{0, 7}), (Monomial2{1, 0}));
  EXPECT_LT((Monomial2{2, 1}), (Monomial2{2, 3}));
  EXPECT_EQ((Monomial2{2, 1} * Monomial2{1, 4}), (Monomial2{3, 5}));
  EXPECT_TRUE((Monomial2{1, 1}).divides({2, 1}));
  EXPECT_FALSE((Monomial2{1, 2}).divides({2, 1}));
}

TEST(Monomial2, LexIsMultiplicative) {
  gen::Rng rng(3);
  std::uniform_int_distribution<std::uint32_t> e(0, 20);
  for (int k = 0; k < 2000; ++k) {
    Monomial2 m1{e(rng), e(rng)}, m2{e(rng), e(rng)}, m{e(rng), e(rng)};
    if (m1 < m2) EXPECT_LT(m1 * m, m2 * m);
    EXPECT_TRUE(m1 < m2 || m2 < m1 || m1 == m2);
  }
}

TEST(Parse, AcceptsGrammar) {
  const auto p = P("x^3 - y^2");
  EXPECT_EQ(p.coefficient({3, 0}), 1);
  EXPECT_EQ(p.coefficient({0, 2}), -1);
  EXPECT_EQ(P("-2*y^3*x + 3/4 + x*x"), P("x^2 - 2*x*y^3 + 3/4"));
  EXPECT_EQ(P("x - x"), BivariatePolynomial{});
  EXPECT_EQ(to_string(P("7 + x*y^5 + x^2*y")), "x^2*y + x*y^5 + 7");
  EXPECT_EQ(to_string(P("-1/2*x*y^2 + x^3")), "x^3 - 1/2*x*y^2");
}

TEST(Parse, RoundTripsThroughPrinter) {
  gen::Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const auto p = gen::polynomial(rng);
    if (p.is_zero()) continue;
    EXPECT_EQ(P(to_string(p)), p);
  }
}

TEST(Parse, ReportsColumns) {
  auto column_of = [](std::string_view s) -> std::size_t {
    try {
      BivariatePolynomial::parse(s);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  EXPECT_EQ(column_of(""), 1u);
  EXPECT_EQ(column_of("x^3 +"), 6u);
  EXPECT_EQ(column_of("x ^ 2 z"), 7u);
  EXPECT_EQ(column_of("x^"), 3u);
  EXPECT_EQ(column_of("3/0*x"), 2u);
  EXPECT_EQ(column_of("x**y"), 3u);
}

TEST(LeadingMonomial, Examples) {
  EXPECT_EQ(leading_monomial(toric_binomial(3, 5)), (Monomial2{5, 0}));
  EXPECT_EQ(leading_monomial(toric_binomial(7, 2)), (Monomial2{2, 0}));
  EXPECT_EQ(leading_monomial(BivariatePolynomial::constant(7)), (Monomial2{0, 0}));
  EXPECT_EQ(leading_monomial(P("x^2*y + x*y^5")), (Monomial2{2, 1}));
  EXPECT_THROW(leading_monomial(BivariatePolynomial{}), DomainError);
}

TEST(Divide, Examples) {
  const auto f = P("x^3 - y^2");
  auto d = divide(f, f);
  EXPECT_EQ(d.quotient, BivariatePolynomial::constant(1));
  EXPECT_TRUE(d.remainder.is_zero());

  d = divide(P("x^4"), f);
  EXPECT_EQ(d.quotient, P("x"));
  EXPECT_EQ(d.remainder, P("x*y^2"));
  expect_valid_division(P("x^4"), f, d);

  d = divide(P("x^2*y^3"), f);
  EXPECT_TRUE(d.quotient.is_zero());
  EXPECT_EQ(d.remainder, P("x^2*y^3"));

  EXPECT_THROW(divide(f, BivariatePolynomial{}), DomainError);
}

TEST(Divide, MixedLeadingMonomialAndNonMonicDivisor) {
  gen::Rng rng(5);
  const auto f = P("3*x*y^2 - 2*y^5 + x + 1/3");
  for (int k = 0; k < 50; ++k) {
    const auto g = gen::polynomial(rng, 15, 8);
    expect_valid_division(g, f, divide(g, f));
  }
}

TEST(Divide, RandomInstancesReexpandExactly) {
  gen::Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    const auto g = gen::polynomial(rng);
    const auto [a, b] = gen::coprime_pair(rng, 1, 9);
    const auto f = toric_binomial(a, b);
    const auto d = divide(g, f);
    expect_valid_division(g, f, d);
    for (const auto& [m, c] : d.remainder.terms()) EXPECT_LT(m.i, static_cast<std::uint32_t>(b));
  }
}

TEST(Phi, Examples) {
  EXPECT_TRUE(phi_evaluate(toric_binomial(3, 5), 3, 5).is_zero());
  EXPECT_TRUE(phi_evaluate(toric_binomial(4, 9), 4, 9).is_zero());
  EXPECT_EQ(phi_evaluate(BivariatePolynomial::constant(1), 3, 5), RationalPolynomial::constant(1));
  EXPECT_EQ(phi_evaluate(P("x*y"), 3, 5), RationalPolynomial::monomial(8));
  EXPECT_EQ(to_string(phi_evaluate(P("1/2*x + y"), 2, 3)), "1/2*t^2 + t^3");
}

TEST(Phi, IsARingHomomorphism) {
  gen::Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    const auto g1 = gen::polynomial(rng, 10, 8);
    const auto g2 = gen::polynomial(rng, 10, 8);
    const auto [a, b] = gen::coprime_pair(rng, 1, 9);
    EXPECT_EQ(phi_evaluate(g1 + g2, a, b), phi_evaluate(g1, a, b) + phi_evaluate(g2, a, b));
    EXPECT_EQ(phi_evaluate(g1 * g2, a, b), phi_evaluate(g1, a, b) * phi_evaluate(g2, a, b));
  }
}

TEST(InKernel, Examples) {
  for (auto method : {KernelTest::evaluate, KernelTest::divide}) {
    EXPECT_TRUE(in_kernel(toric_binomial(3, 5), 3, 5, method));
    EXPECT_FALSE(in_kernel(P("x"), 3, 5, method));
    EXPECT_TRUE(in_kernel(P("x^3 - y^2") * P("x + y^4"), 2, 3, method));
    EXPECT_THROW(in_kernel(P("x"), 4, 6, method), DomainError);
    EXPECT_THROW(in_kernel(P("x"), 5, 5, method), DomainError);
  }
}

TEST(InKernel, MethodsAgreeOnRandomInstances) {
  gen::Rng rng(29);
  for (int k = 0; k < 300; ++k) {
    const auto [a, b] = gen::coprime_pair(rng, 1, 9);
    const auto h = gen::polynomial(rng, 10, 6);
    const auto multiple = h * toric_binomial(a, b);
    EXPECT_TRUE(in_kernel(multiple, a, b, KernelTest::evaluate));
    EXPECT_TRUE(in_kernel(multiple, a, b, KernelTest::divide));

    const auto g = k % 2 ? gen::polynomial(rng) : multiple + gen::polynomial(rng, 3, 4);
    EXPECT_EQ(in_kernel(g, a, b, KernelTest::evaluate), in_kernel(g, a, b, KernelTest::divide));
  }
}

TEST(DistinctExponents, Examples) {
  EXPECT_TRUE(distinct_exponent_check(3, 5));
  EXPECT_TRUE(distinct_exponent_check(2, 3));
  EXPECT_TRUE(distinct_exponent_check(9, 4, 100));
  EXPECT_THROW(distinct_exponent_check(1, 1), DomainError);
  EXPECT_THROW(distinct_exponent_check(4, 6), DomainError);
}
