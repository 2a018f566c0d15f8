#include "frobenius/bivariate.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace frobenius {

std::string to_string(Monomial2 m) {
  std::string s;
  auto var = [&s](char v, std::uint32_t e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += v;
    if (e > 1) s += '^' + std::to_string(e);
  };
  var('x', m.i);
  var('y', m.j);
  return s.empty() ? "1" : s;
}

BivariatePolynomial BivariatePolynomial::constant(Rational c) { return term({0, 0}, std::move(c)); }

BivariatePolynomial BivariatePolynomial::term(Monomial2 m, Rational c) {
  BivariatePolynomial p;
  p.add_term(m, c);
  return p;
}

Rational BivariatePolynomial::coefficient(Monomial2 m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePolynomial::add_term(Monomial2 m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  BivariatePolynomial r;
  for (const auto& [m, c] : p.terms_)
    for (const auto& [n, d] : q.terms_) r.add_term(m * n, c * d);
  return r;
}

std::string to_string(const BivariatePolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    const bool unit_monomial = m.i == 0 && m.j == 0;
    if (unit_monomial) {
      out << magnitude;
    } else {
      if (magnitude != 1) out << magnitude << '*';
      out << to_string(m);
    }
  }
  return out.str();
}

Monomial2 leading_monomial(const BivariatePolynomial& f) {
  if (f.is_zero()) throw DomainError("the zero polynomial has no leading monomial");
  return f.terms().rbegin()->first;
}

BivariatePolynomial toric_binomial(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw DomainError("x^b - y^a needs positive a, b");
  if (a > std::numeric_limits<std::uint32_t>::max() || b > std::numeric_limits<std::uint32_t>::max())
    throw CapacityError("exponent does not fit in 32 bits");
  auto f = BivariatePolynomial::term({static_cast<std::uint32_t>(b), 0});
  f.add_term({0, static_cast<std::uint32_t>(a)}, Rational(-1));
  return f;
}

DivisionResult divide(const BivariatePolynomial& g, const BivariatePolynomial& f) {
  const Monomial2 lead = leading_monomial(f);
  const Rational lead_coeff = f.terms().rbegin()->second;

  DivisionResult result;
  BivariatePolynomial work = g;
  const auto& terms = work.terms();

  // Reducing the term at m only introduces terms strictly below m, and the
  // terms above m are already irreducible, so one downward sweep suffices.
  std::optional<Monomial2> cursor;
  while (true) {
    auto it = cursor ? terms.lower_bound(*cursor) : terms.end();
    bool found = false;
    while (it != terms.begin()) {
      --it;
      if (lead.divides(it->first)) {
        found = true;
        break;
      }
    }
    if (!found) break;

    const Monomial2 m = it->first;
    const Monomial2 shift = lead.cofactor(m);
    const Rational factor = it->second / lead_coeff;
    result.quotient.add_term(shift, factor);
    for (const auto& [n, c] : f.terms()) work.add_term(shift * n, -factor * c);
    cursor = m;
  }
  result.remainder = std::move(work);
  return result;
}

RationalPolynomial phi_evaluate(const BivariatePolynomial& g, std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw DomainError("Phi needs positive a, b");
  constexpr std::int64_t kMaxDegree = 100'000'000;
  std::int64_t top = 0;
  for (const auto& [m, c] : g.terms()) {
    const auto e = checked::add(checked::mul(a, m.i, "Phi exponent"), checked::mul(b, m.j, "Phi exponent"),
                                "Phi exponent");
    top = std::max(top, e);
  }
  if (top > kMaxDegree) throw CapacityError("Phi image degree " + std::to_string(top) + " is too large");
  if (g.is_zero()) return {};
  std::vector<Rational> c(static_cast<std::size_t>(top) + 1);
  for (const auto& [m, coeff] : g.terms()) c[static_cast<std::size_t>(a * m.i + b * m.j)] += coeff;
  return RationalPolynomial(std::move(c));
}

bool in_kernel(const BivariatePolynomial& g, std::int64_t a, std::int64_t b, KernelTest method) {
  require_coprime_pair(a, b, 1);
  switch (method) {
    case KernelTest::evaluate:
      return phi_evaluate(g, a, b).is_zero();
    case KernelTest::divide:
      return divide(g, toric_binomial(a, b)).remainder.is_zero();
  }
  return false;
}

bool distinct_exponent_check(std::int64_t a, std::int64_t b, std::optional<std::int64_t> j_cap) {
  require_coprime_pair(a, b, 1);
  const std::int64_t cap = j_cap.value_or(3 * a);
  if (cap < 0) throw DomainError("j cap must be nonnegative");
  std::unordered_set<std::int64_t> seen;
  for (std::int64_t i = 0; i < b; ++i)
    for (std::int64_t j = 0; j <= cap; ++j)
      if (!seen.insert(a * i + b * j).second) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  BivariatePolynomial run() {
    BivariatePolynomial p;
    skip_ws();
    if (at_end()) fail("expected a term");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = take() == '-';
      skip_ws();
    }
    while (true) {
      auto [m, c] = parse_term();
      p.add_term(m, negative ? Rational(-c) : c);
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = take() == '-';
      skip_ws();
    }
    return p;
  }

 private:
  std::pair<Monomial2, Rational> parse_term() {
    Monomial2 m;
    Rational c(1);
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= parse_number();
      } else if (ch == 'x' || ch == 'y') {
        take();
        std::uint64_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          take();
          skip_ws();
          e = parse_uint();
        }
        auto& slot = ch == 'x' ? m.i : m.j;
        const std::uint64_t total = slot + e;
        if (total > std::numeric_limits<std::uint32_t>::max()) fail("exponent too large");
        slot = static_cast<std::uint32_t>(total);
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      take();
    }
    return {m, c};
  }

  Rational parse_number() {
    Integer num = parse_integer();
    skip_ws();
    if (!at_end() && peek() == '/') {
      const auto col = pos_ + 1;
      take();
      skip_ws();
      Integer den = parse_integer();
      if (den == 0) throw ParseError("zero denominator", col);
      return Rational(num, den);
    }
    return Rational(num);
  }

  Integer parse_integer() {
    const auto start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) take();
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint64_t parse_uint() {
    const auto start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) take();
    if (start == pos_) fail("expected an exponent");
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc()) throw ParseError("exponent out of range", start + 1);
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BivariatePolynomial BivariatePolynomial::parse(std::string_view text) { return TermParser(text).run(); }

}  // namespace frobenius
