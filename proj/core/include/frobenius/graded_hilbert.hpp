#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobenius/bivariate.hpp"
#include "frobenius/truncated_series.hpp"

namespace frobenius {

/// p_{a,b}(n) = #{(i, j) in N_0^2 : ai + bj = n}. No coprimality needed.
std::uint64_t partition_count(std::int64_t a, std::int64_t b, std::int64_t n);

/// All x^i y^j with ai + bj = n, sorted by i.
std::vector<Monomial2> enumerate_basis(std::int64_t a, std::int64_t b, std::int64_t n);

/// Dimensions of the degree-n pieces of E[x,y], E[t^a,t^b] and ker Φ under
/// the weighting x^i y^j -> ai + bj, tabulated for n = 0..nmax.
class GradedDims {
 public:
  /// Requires a, b distinct, coprime and at least 2.
  static GradedDims tabulate(std::int64_t a, std::int64_t b, std::int64_t nmax);

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  std::int64_t nmax() const noexcept { return static_cast<std::int64_t>(dim_e_.size()) - 1; }

  std::uint64_t dim_e(std::int64_t n) const { return dim_e_.at(static_cast<std::size_t>(n)); }
  std::uint64_t dim_r(std::int64_t n) const { return dim_r_.at(static_cast<std::size_t>(n)); }
  std::uint64_t dim_k(std::int64_t n) const { return dim_k_.at(static_cast<std::size_t>(n)); }

 private:
  std::int64_t a_ = 0, b_ = 0;
  std::vector<std::uint64_t> dim_e_, dim_r_, dim_k_;
};

/// dim E_n = dim R_n + dim K_n for every n <= nmax.
bool rank_nullity_check(std::int64_t a, std::int64_t b, std::int64_t nmax);

/// Some x^i y^j with ai + bj = n. Throws DomainError if n is a gap.
Monomial2 surjectivity_witness(std::int64_t a, std::int64_t b, std::int64_t n);

enum class HilbertKind { full_ring_degree, full_ring_frobenius, semigroup_ring, kernel, univariate };

std::string_view to_string(HilbertKind kind);
std::optional<HilbertKind> parse_hilbert_kind(std::string_view name);

/// Whether the (a, b) pair enters the series at all.
bool uses_pair(HilbertKind kind);

struct HilbertSeries {
  HilbertKind kind;
  /// The closed rational form, e.g. "q^15/((1-q^3)(1-q^5))".
  std::string closed_form;
  TruncatedSeries series;
};

/// Expands the closed form of the chosen Hilbert series to order N. The
/// pair is ignored for univariate and full_ring_degree; otherwise it must
/// be distinct, coprime and at least 2.
HilbertSeries hilbert_series(HilbertKind kind, std::int64_t a, std::int64_t b, std::size_t order);

/// H_{E[x,y]} = H_{E[t^a,t^b]} + H_K to order N (N >= ab + 1), together
/// with the denominator-cleared polynomial identity for f_A.
bool series_identity_check(std::int64_t a, std::int64_t b, std::size_t order);

}  // namespace frobenius
