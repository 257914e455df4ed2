#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace settop {

/// Storage width of a PointSet.
inline constexpr std::size_t kBitmaskWidth = 64;
/// Default bound on the number of points of a Space.
inline constexpr std::size_t kDefaultMaxPoints = 16;

/// Subset of {0..n-1} stored as a bitmask. The ground size lives in the
/// owning Space.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

  PointSet(std::initializer_list<std::size_t> points) {
    for (auto p : points) insert(p);
  }

  static constexpr PointSet full(std::size_t n) {
    return PointSet(n >= kBitmaskWidth ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr PointSet singleton(std::size_t p) { return PointSet(std::uint64_t{1} << p); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t p) const { return (bits_ >> p) & 1u; }
  constexpr void insert(std::size_t p) { bits_ |= std::uint64_t{1} << p; }
  constexpr void erase(std::size_t p) { bits_ &= ~(std::uint64_t{1} << p); }
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr bool is_subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(PointSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
  constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
  constexpr PointSet operator-(PointSet o) const { return PointSet(bits_ & ~o.bits_); }
  constexpr PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
  constexpr PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }

  constexpr PointSet complement(std::size_t n) const { return full(n) - *this; }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (auto b = bits_; b != 0; b &= b - 1) f(static_cast<std::size_t>(std::countr_zero(b)));
  }

  constexpr auto operator<=>(const PointSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// "{0 2}" style, "{}" for the empty set.
std::string to_string(PointSet s);

/// Space-separated point list as used in the text format, "-" for the empty set.
std::string to_line(PointSet s);

}  // namespace settop
