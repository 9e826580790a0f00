#include "incmax/subset.hpp"

#include "incmax/errors.hpp"

#include <algorithm>

namespace incmax {

namespace {

void check_index(std::size_t universe, std::size_t i) {
  if (i >= universe)
    throw InputError("element index " + std::to_string(i) + " out of range for ground set of size " +
                     std::to_string(universe));
}

}  // namespace

Subset Subset::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe < 64 && (mask >> universe) != 0)
    throw InputError("bitmask has bits beyond the ground set");
  Subset s(universe);
  s.low_ = mask;
  return s;
}

Subset Subset::from_indices(std::size_t universe, std::span<const std::size_t> indices) {
  Subset s(universe);
  for (std::size_t i : indices) s.insert(i);
  return s;
}

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  s.low_ = universe >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << universe) - 1);
  for (std::size_t i = 64; i < universe; ++i) s.high_.push_back(i);
  return s;
}

bool Subset::contains(std::size_t i) const {
  if (i < 64) return (low_ >> i) & 1U;
  return std::binary_search(high_.begin(), high_.end(), i);
}

void Subset::insert(std::size_t i) {
  check_index(universe_, i);
  if (i < 64) {
    low_ |= std::uint64_t{1} << i;
    return;
  }
  auto it = std::lower_bound(high_.begin(), high_.end(), i);
  if (it == high_.end() || *it != i) high_.insert(it, i);
}

void Subset::erase(std::size_t i) {
  if (i < 64) {
    low_ &= ~(std::uint64_t{1} << i);
    return;
  }
  auto it = std::lower_bound(high_.begin(), high_.end(), i);
  if (it != high_.end() && *it == i) high_.erase(it);
}

std::vector<std::size_t> Subset::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

Subset Subset::operator|(const Subset& o) const {
  Subset s(std::max(universe_, o.universe_));
  s.low_ = low_ | o.low_;
  std::set_union(high_.begin(), high_.end(), o.high_.begin(), o.high_.end(),
                 std::back_inserter(s.high_));
  return s;
}

Subset Subset::operator&(const Subset& o) const {
  Subset s(std::max(universe_, o.universe_));
  s.low_ = low_ & o.low_;
  std::set_intersection(high_.begin(), high_.end(), o.high_.begin(), o.high_.end(),
                        std::back_inserter(s.high_));
  return s;
}

Subset Subset::operator-(const Subset& o) const {
  Subset s(universe_);
  s.low_ = low_ & ~o.low_;
  std::set_difference(high_.begin(), high_.end(), o.high_.begin(), o.high_.end(),
                      std::back_inserter(s.high_));
  return s;
}

bool Subset::is_subset_of(const Subset& o) const {
  return (low_ & ~o.low_) == 0 && std::includes(o.high_.begin(), o.high_.end(), high_.begin(), high_.end());
}

std::string Subset::str() const {
  std::string out = "{";
  bool first = true;
  for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  });
  return out + "}";
}

bool lex_less(const Subset& a, const Subset& b) {
  const std::uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) {
    const auto ai = a.indices();
    const auto bi = b.indices();
    return std::lexicographical_compare(ai.begin(), ai.end(), bi.begin(), bi.end());
  }
  // Both lists agree below p; exactly one of them contains p.
  const int p = std::countr_zero(diff);
  const bool p_in_a = (a.mask() >> p) & 1U;
  const Subset& other = p_in_a ? b : a;
  const std::uint64_t above = p == 63 ? 0 : (other.mask() >> (p + 1));
  const bool other_continues =
      above != 0 || other.size() > static_cast<std::size_t>(std::popcount(other.mask()));
  // If `other` has no further element it is a proper prefix and sorts first.
  return p_in_a == other_continues;
}

}  // namespace incmax
