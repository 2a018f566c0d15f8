#include "frobenius/graded_hilbert.hpp"

#include <array>
#include <utility>

#include "frobenius/gap_polynomials.hpp"
#include "frobenius/semigroup.hpp"

namespace frobenius {
namespace {

void require_positive_weights(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1)
    throw DomainError("weights must be positive, got (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

constexpr std::array<std::pair<HilbertKind, std::string_view>, 5> kKindNames{{
    {HilbertKind::full_ring_degree, "full_ring_degree"},
    {HilbertKind::full_ring_frobenius, "full_ring_frobenius"},
    {HilbertKind::semigroup_ring, "semigroup_ring"},
    {HilbertKind::kernel, "kernel"},
    {HilbertKind::univariate, "univariate"},
}};

std::string pair_denominator(std::int64_t a, std::int64_t b) {
  return "((1-q^" + std::to_string(a) + ")(1-q^" + std::to_string(b) + "))";
}

}  // namespace

std::uint64_t partition_count(std::int64_t a, std::int64_t b, std::int64_t n) {
  require_positive_weights(a, b);
  if (n < 0) return 0;
  std::uint64_t count = 0;
  for (std::int64_t i = 0; a * i <= n; ++i)
    if ((n - a * i) % b == 0) ++count;
  return count;
}

std::vector<Monomial2> enumerate_basis(std::int64_t a, std::int64_t b, std::int64_t n) {
  require_positive_weights(a, b);
  std::vector<Monomial2> basis;
  if (n < 0) return basis;
  for (std::int64_t i = 0; a * i <= n; ++i)
    if ((n - a * i) % b == 0)
      basis.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>((n - a * i) / b)});
  return basis;
}

GradedDims GradedDims::tabulate(std::int64_t a, std::int64_t b, std::int64_t nmax) {
  require_coprime_pair(a, b);
  if (nmax < 0) throw DomainError("nmax must be nonnegative");
  const auto table = SemigroupTable::build(GeneratorSet::validate({a, b}));
  const std::int64_t ab = checked::mul(a, b, "ab");

  GradedDims d;
  d.a_ = a;
  d.b_ = b;
  const auto size = static_cast<std::size_t>(nmax) + 1;
  d.dim_e_.resize(size);
  d.dim_r_.resize(size);
  d.dim_k_.resize(size);
  for (std::int64_t n = 0; n <= nmax; ++n) {
    const auto k = static_cast<std::size_t>(n);
    d.dim_e_[k] = partition_count(a, b, n);
    d.dim_r_[k] = table.contains(n) ? 1 : 0;
    d.dim_k_[k] = n < ab ? 0 : partition_count(a, b, n - ab);
  }
  return d;
}

bool rank_nullity_check(std::int64_t a, std::int64_t b, std::int64_t nmax) {
  const auto d = GradedDims::tabulate(a, b, nmax);
  for (std::int64_t n = 0; n <= nmax; ++n)
    if (d.dim_e(n) != d.dim_r(n) + d.dim_k(n)) return false;
  return true;
}

Monomial2 surjectivity_witness(std::int64_t a, std::int64_t b, std::int64_t n) {
  require_coprime_pair(a, b);
  const auto basis = enumerate_basis(a, b, n);
  if (basis.empty()) throw DomainError(std::to_string(n) + " is not in S(" + std::to_string(a) + "," +
                                       std::to_string(b) + ")");
  return basis.front();
}

std::string_view to_string(HilbertKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<HilbertKind> parse_hilbert_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  return std::nullopt;
}

bool uses_pair(HilbertKind kind) {
  return kind != HilbertKind::univariate && kind != HilbertKind::full_ring_degree;
}

HilbertSeries hilbert_series(HilbertKind kind, std::int64_t a, std::int64_t b, std::size_t order) {
  if (uses_pair(kind)) require_coprime_pair(a, b);

  switch (kind) {
    case HilbertKind::univariate:
      return {kind, "1/(1-q)", TruncatedSeries::geometric(order)};

    case HilbertKind::full_ring_degree: {
      auto s = TruncatedSeries::geometric(order);
      s.divide_by_one_minus_power(1);
      return {kind, "1/(1-q)^2", std::move(s)};
    }

    case HilbertKind::full_ring_frobenius: {
      auto s = TruncatedSeries::geometric(static_cast<std::size_t>(a), order);
      s.divide_by_one_minus_power(static_cast<std::size_t>(b));
      return {kind, "1/" + pair_denominator(a, b), std::move(s)};
    }

    case HilbertKind::semigroup_ring: {
      const auto f = pair_gap_polynomial(a, b);
      auto s = TruncatedSeries::geometric(order) - TruncatedSeries::from_polynomial(f, order);
      return {kind, "1/(1-q) - (" + to_string(f) + ")", std::move(s)};
    }

    case HilbertKind::kernel: {
      const auto ab = checked::mul(a, b, "ab");
      auto s = TruncatedSeries::geometric(static_cast<std::size_t>(a), order);
      s.divide_by_one_minus_power(static_cast<std::size_t>(b));
      return {kind, "q^" + std::to_string(ab) + "/" + pair_denominator(a, b),
              s.shifted(static_cast<std::size_t>(ab))};
    }
  }
  throw DomainError("unknown Hilbert series kind");
}

bool series_identity_check(std::int64_t a, std::int64_t b, std::size_t order) {
  require_coprime_pair(a, b);
  const auto ab = checked::mul(a, b, "ab");
  if (order < static_cast<std::size_t>(ab) + 1)
    throw DomainError("series order " + std::to_string(order) + " must be at least ab+1 = " +
                      std::to_string(ab + 1));

  const auto full = hilbert_series(HilbertKind::full_ring_frobenius, a, b, order).series;
  const auto ring = hilbert_series(HilbertKind::semigroup_ring, a, b, order).series;
  const auto kernel = hilbert_series(HilbertKind::kernel, a, b, order).series;
  if (full != ring + kernel) return false;
  return verify_functional_equation(a, b);
}

}  // namespace frobenius
