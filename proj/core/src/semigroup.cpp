#include "frobenius/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace frobenius {

void require_coprime_pair(std::int64_t a, std::int64_t b, std::int64_t min) {
  if (a < min || b < min)
    throw DomainError("generators must be at least " + std::to_string(min) + ", got (" +
                      std::to_string(a) + "," + std::to_string(b) + ")");
  if (a == b) throw DomainError("generators must be distinct, got a = b = " + std::to_string(a));
  const auto g = std::gcd(a, b);
  if (g != 1)
    throw DomainError("gcd(" + std::to_string(a) + "," + std::to_string(b) + ")=" +
                      std::to_string(g) + ", not a numerical semigroup");
}

GeneratorSet GeneratorSet::validate(std::span<const std::int64_t> raw) {
  if (raw.empty()) throw DomainError("generator set is empty");
  std::vector<std::int64_t> elements(raw.begin(), raw.end());
  for (auto v : elements)
    if (v <= 0) throw DomainError("generators must be positive, got " + std::to_string(v));
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::int64_t g = 0;
  for (auto v : elements) g = std::gcd(g, v);
  return GeneratorSet(std::move(elements), g);
}

void GeneratorSet::require_admissible() const {
  if (!admissible())
    throw DomainError("gcd(A)=" + std::to_string(gcd_) + ", not a numerical semigroup");
}

std::int64_t Representation::value(const GeneratorSet& generators) const {
  const auto& a = generators.elements();
  if (a.size() != coefficients.size())
    throw std::invalid_argument("representation length does not match generator count");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    total = checked::add(total, checked::mul(a[i], coefficients[i], "representation"),
                         "representation");
  return total;
}

std::int64_t conductor_bound(const GeneratorSet& generators) {
  generators.require_admissible();
  const auto& a = generators.elements();
  // {1} is the only admissible singleton; the empty sum gives 0.
  std::int64_t sum = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    sum = checked::add(sum, a[i], "conductor bound");
  return checked::mul(a.back() - 1, sum, "conductor bound");
}

SemigroupTable SemigroupTable::build(const GeneratorSet& generators, TableLimits limits) {
  const std::int64_t bound = conductor_bound(generators);
  if (bound >= limits.max_cells)
    throw CapacityError("membership table needs " + std::to_string(bound) +
                        "+1 cells, limit is " + std::to_string(limits.max_cells));

  SemigroupTable t;
  t.generators_ = generators;
  t.bound_ = bound;
  const auto cells = static_cast<std::size_t>(bound) + 1;
  t.member_.assign(cells, 0);
  t.via_.assign(cells, 0);
  t.member_[0] = 1;

  const auto& a = generators.elements();
  for (std::size_t n = 0; n < cells; ++n) {
    if (!t.member_[n]) continue;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::size_t next = n + static_cast<std::size_t>(a[i]);
      if (next >= cells) break;
      if (!t.member_[next]) {
        t.member_[next] = 1;
        t.via_[next] = static_cast<std::uint32_t>(i);
      }
    }
  }

  for (std::size_t n = 0; n < cells; ++n)
    if (!t.member_[n]) t.gaps_.push_back(static_cast<std::int64_t>(n));
  t.frobenius_ = t.gaps_.empty() ? -1 : t.gaps_.back();
  return t;
}

bool SemigroupTable::contains(std::int64_t n) const {
  if (n < 0) return false;
  if (n > bound_) return true;
  return member_[static_cast<std::size_t>(n)] != 0;
}

bool SemigroupTable::symmetric() const {
  for (std::int64_t n = 0; n <= frobenius_; ++n)
    if (contains(n) == contains(frobenius_ - n)) return false;
  return true;
}

std::optional<Representation> SemigroupTable::represent(std::int64_t n) const {
  if (n < 0) throw DomainError("cannot represent a negative integer");
  const auto& a = generators_.elements();
  Representation rep{std::vector<std::int64_t>(a.size(), 0)};

  // Above the table, fold n down along its residue class mod a_1. Membership
  // is closed under adding a_1, so the largest class representative inside
  // the table is a member whenever n is.
  std::int64_t cell = n;
  if (n > bound_) {
    const std::int64_t step = a.front();
    const std::int64_t folds = (n - bound_ + step - 1) / step;
    cell = n - folds * step;
    rep.coefficients.front() = folds;
    if (!contains(cell))
      throw std::logic_error("residue class representative below the conductor bound is a gap");
  }
  if (!contains(cell)) return std::nullopt;

  while (cell > 0) {
    const auto i = via_[static_cast<std::size_t>(cell)];
    ++rep.coefficients[i];
    cell -= a[i];
  }
  return rep;
}

std::int64_t frobenius_number(const GeneratorSet& generators) {
  const auto table = SemigroupTable::build(generators);
  if (generators.size() == 2) {
    const auto a = generators.elements()[0];
    const auto b = generators.elements()[1];
    if (table.frobenius() != a * b - a - b)
      throw std::logic_error("table Frobenius number disagrees with ab - a - b");
  }
  return table.frobenius();
}

std::int64_t genus(const GeneratorSet& generators) {
  const auto table = SemigroupTable::build(generators);
  if (generators.size() == 2) {
    const auto a = generators.elements()[0];
    const auto b = generators.elements()[1];
    if (2 * table.genus() != (a - 1) * (b - 1))
      throw std::logic_error("table genus disagrees with (a-1)(b-1)/2");
  }
  return table.genus();
}

bool is_symmetric(const GeneratorSet& generators) {
  return SemigroupTable::build(generators).symmetric();
}

std::optional<Representation> represent(std::int64_t n, const GeneratorSet& generators) {
  return SemigroupTable::build(generators).represent(n);
}

}  // namespace frobenius
