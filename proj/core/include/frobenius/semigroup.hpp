#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frobenius/numeric.hpp"

namespace frobenius {

/// A finite set A of positive integers, kept sorted and deduplicated, along
/// with gcd(A). Construction does not require gcd(A) = 1; the semigroup
/// operations check that themselves.
class GeneratorSet {
 public:
  /// Sorts and deduplicates `raw`. Throws DomainError if `raw` is empty or
  /// holds a non-positive element.
  static GeneratorSet validate(std::span<const std::int64_t> raw);
  static GeneratorSet validate(std::initializer_list<std::int64_t> raw) {
    return validate(std::span<const std::int64_t>(raw.begin(), raw.size()));
  }

  const std::vector<std::int64_t>& elements() const noexcept { return elements_; }
  std::int64_t gcd() const noexcept { return gcd_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::int64_t smallest() const noexcept { return elements_.front(); }
  std::int64_t largest() const noexcept { return elements_.back(); }

  /// True when S(A) is a numerical semigroup, i.e. gcd(A) = 1.
  bool admissible() const noexcept { return gcd_ == 1; }

  /// Throws DomainError with "gcd(A)=g, not a numerical semigroup" unless
  /// admissible().
  void require_admissible() const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  GeneratorSet(std::vector<std::int64_t> elements, std::int64_t gcd)
      : elements_(std::move(elements)), gcd_(gcd) {}

  std::vector<std::int64_t> elements_;
  std::int64_t gcd_;
};

/// Nonnegative coefficients r_1..r_k aligned with GeneratorSet::elements().
struct Representation {
  std::vector<std::int64_t> coefficients;

  /// Σ a_i r_i, overflow-checked.
  std::int64_t value(const GeneratorSet& generators) const;

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// Limits on the membership table built for a generator set.
struct TableLimits {
  static constexpr std::int64_t kDefaultMaxCells = 10'000'000;
  std::int64_t max_cells = kDefaultMaxCells;
};

/// (a_k - 1) * Σ_{i<k} a_i: every integer at or above this value lies in
/// S(A). Zero for A = {1}.
std::int64_t conductor_bound(const GeneratorSet& generators);

/// Membership of S(A) on 0..bound() with a predecessor per member cell, so
/// any member can be decomposed by walking back through the table.
class SemigroupTable {
 public:
  /// Forward dynamic programming up to conductor_bound(A). Throws
  /// DomainError if gcd(A) != 1 and CapacityError if the table would
  /// exceed `limits.max_cells`.
  static SemigroupTable build(const GeneratorSet& generators, TableLimits limits = {});

  const GeneratorSet& generators() const noexcept { return generators_; }
  std::int64_t bound() const noexcept { return bound_; }

  /// Membership for any n >= 0; values above bound() are members.
  bool contains(std::int64_t n) const;

  /// Largest gap, or -1 when S(A) = N_0.
  std::int64_t frobenius() const noexcept { return frobenius_; }
  std::int64_t genus() const noexcept { return static_cast<std::int64_t>(gaps_.size()); }
  const std::vector<std::int64_t>& gaps() const noexcept { return gaps_; }

  /// Membership cells 0..bound().
  const std::vector<std::uint8_t>& members() const noexcept { return member_; }

  /// n not in S(A) implies F(A) - n in S(A). Vacuously true when gap-free.
  bool symmetric() const;

  /// A nonnegative decomposition of n, or nullopt iff n is a gap.
  std::optional<Representation> represent(std::int64_t n) const;

 private:
  SemigroupTable() = default;

  GeneratorSet generators_ = GeneratorSet::validate({1});
  std::int64_t bound_ = 0;
  std::vector<std::uint8_t> member_;
  // Index into generators().elements() of the last generator added to reach
  // this cell; meaningless for gaps and for cell 0.
  std::vector<std::uint32_t> via_;
  std::int64_t frobenius_ = -1;
  std::vector<std::int64_t> gaps_;
};

std::int64_t frobenius_number(const GeneratorSet& generators);
std::int64_t genus(const GeneratorSet& generators);
bool is_symmetric(const GeneratorSet& generators);
std::optional<Representation> represent(std::int64_t n, const GeneratorSet& generators);

}  // namespace frobenius
