#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace incmax {

/// A subset of the dense index space 0..universe-1.
///
/// Indices below 64 live in a bitmask; larger indices (only present when the
/// universe exceeds 64 elements) are kept as a sorted list.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : universe_(universe) {}

  static Subset from_mask(std::size_t universe, std::uint64_t mask);
  /// Throws InputError for indices outside the universe. Duplicates collapse.
  static Subset from_indices(std::size_t universe, std::span<const std::size_t> indices);
  static Subset from_indices(std::size_t universe, std::initializer_list<std::size_t> indices) {
    return from_indices(universe, std::span<const std::size_t>(indices.begin(), indices.size()));
  }
  static Subset full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(low_)) + high_.size(); }
  bool empty() const { return low_ == 0 && high_.empty(); }
  bool contains(std::size_t i) const;

  void insert(std::size_t i);
  void erase(std::size_t i);
  Subset with(std::size_t i) const {
    Subset s = *this;
    s.insert(i);
    return s;
  }
  Subset without(std::size_t i) const {
    Subset s = *this;
    s.erase(i);
    return s;
  }

  /// Bits of the indices below 64; the whole set when universe() <= 64.
  std::uint64_t mask() const { return low_; }
  bool fits_mask() const { return universe_ <= 64; }

  std::vector<std::size_t> indices() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t m = low_; m != 0; m &= m - 1) f(static_cast<std::size_t>(std::countr_zero(m)));
    for (std::size_t i : high_) f(i);
  }

  Subset operator|(const Subset& o) const;
  Subset operator&(const Subset& o) const;
  Subset operator-(const Subset& o) const;
  bool is_subset_of(const Subset& o) const;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.universe_ == b.universe_ && a.low_ == b.low_ && a.high_ == b.high_;
  }

  /// "{0,3,5}"
  std::string str() const;

 private:
  std::size_t universe_ = 0;
  std::uint64_t low_ = 0;
  std::vector<std::size_t> high_;
};

/// Lexicographic order on the sorted index lists (a proper prefix sorts first).
bool lex_less(const Subset& a, const Subset& b);

}  // namespace incmax
