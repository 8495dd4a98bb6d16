#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>

namespace fintop {

/// Largest supported point count. Every subset of the carrier fits in one
/// 64-bit word, which keeps set algebra constant-time.
inline constexpr std::size_t kMaxPoints = 62;

/// A subset of {0, ..., n-1} stored as a bitmask. The ambient n is not
/// stored; operations that need it (complement, full set) take it explicitly.
class PointSet {
 public:
  using word_type = std::uint64_t;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t*;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(word_type rest) : rest_(rest) {}

    constexpr std::size_t operator*() const {
      return static_cast<std::size_t>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    word_type rest_ = 0;
  };

  constexpr PointSet() = default;
  constexpr explicit PointSet(word_type bits) : bits_(bits) {}
  PointSet(std::initializer_list<std::size_t> members) {
    for (std::size_t x : members) bits_ |= word_type{1} << x;
  }

  static constexpr PointSet full(std::size_t n) {
    return PointSet(n == 0 ? 0 : (~word_type{0} >> (64 - n)));
  }
  static constexpr PointSet singleton(std::size_t x) {
    return PointSet(word_type{1} << x);
  }

  constexpr word_type bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t x) const {
    return x < 64 && ((bits_ >> x) & 1U) != 0;
  }
  /// Smallest member; undefined on the empty set.
  constexpr std::size_t front() const {
    return static_cast<std::size_t>(std::countr_zero(bits_));
  }
  constexpr bool subset_of(PointSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(PointSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  constexpr PointSet complement(std::size_t n) const {
    return PointSet(~bits_ & full(n).bits_);
  }
  constexpr PointSet with(std::size_t x) const {
    return PointSet(bits_ | (word_type{1} << x));
  }
  constexpr PointSet without(std::size_t x) const {
    return PointSet(bits_ & ~(word_type{1} << x));
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  constexpr PointSet& operator|=(PointSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr PointSet& operator&=(PointSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr PointSet& operator-=(PointSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr PointSet operator|(PointSet a, PointSet b) { return a |= b; }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return a &= b; }
  friend constexpr PointSet operator-(PointSet a, PointSet b) { return a -= b; }

  friend constexpr bool operator==(PointSet, PointSet) = default;
  friend constexpr auto operator<=>(PointSet a, PointSet b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  word_type bits_ = 0;
};

/// Canonical order on point sets: ascending cardinality, then ascending
/// numeric encoding.
constexpr bool canonical_less(PointSet a, PointSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

struct CanonicalLess {
  constexpr bool operator()(PointSet a, PointSet b) const {
    return canonical_less(a, b);
  }
};

/// "{0,2,5}"
std::string to_string(PointSet s);

}  // namespace fintop

template <>
struct std::hash<fintop::PointSet> {
  std::size_t operator()(fintop::PointSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
