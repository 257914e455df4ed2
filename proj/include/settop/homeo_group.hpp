#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "settop/point_set.hpp"
#include "settop/space.hpp"

namespace settop {

/// A permutation of points; perm[i] is the image of point i.
struct Homeo {
  std::vector<std::uint8_t> perm;

  std::size_t size() const { return perm.size(); }
  std::size_t operator()(std::size_t x) const { return perm[x]; }

  static Homeo identity(std::size_t n);

  friend auto operator<=>(const Homeo&, const Homeo&) = default;
};

PointSet image(const Homeo& h, PointSet a);
/// (a ∘ b)(x) = a(b(x)).
Homeo compose(const Homeo& a, const Homeo& b);
Homeo inverse(const Homeo& h);
/// Disjoint-cycle notation on 0-based points, "id" for the identity.
std::string to_cycles(const Homeo& h);

/// True iff h is a bijection sending every open onto an open.
bool is_homeomorphism(const Space& s, const Homeo& h);

/// A finite permutation group with elements in lexicographic order.
class HomeoGroup {
 public:
  /// Sorts the elements and verifies closure under composition and inverse.
  /// Throws InvalidArgument if the set is not a group.
  static HomeoGroup from_elements(std::size_t degree, std::vector<Homeo> elements);

  std::size_t size() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const std::vector<Homeo>& elements() const { return elements_; }
  const Homeo& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t identity_index() const { return identity_; }

  /// Index of elements[i] ∘ elements[j].
  std::size_t compose(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  std::optional<std::size_t> index_of(const Homeo& h) const;

  friend bool operator==(const HomeoGroup& a, const HomeoGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  std::size_t degree_ = 0;
  std::vector<Homeo> elements_;
  std::size_t identity_ = 0;
  // Row-major; left empty for large groups, where products are computed.
  std::vector<std::uint32_t> compose_;
  std::vector<std::size_t> inverse_;
};

/// Default bound on the degree accepted by enumerate_homeomorphisms.
inline constexpr std::size_t kDefaultMaxPermutationPoints = 8;

/// H(X) by filtering all n! permutations.
HomeoGroup enumerate_homeomorphisms(const Space& s, std::size_t max_points = kDefaultMaxPermutationPoints);

/// Orbits of the H-action on s.opens(); each orbit sorted, orbits ordered by least member.
std::vector<std::vector<PointSet>> orbits_of_opens(const Space& s, const HomeoGroup& h);
/// Orbits of the H-action on points, ordered by least point.
std::vector<PointSet> point_orbits(const HomeoGroup& h);

HomeoGroup stabilizer(const HomeoGroup& h, std::size_t a);
bool is_homogeneous(const Space& s, const HomeoGroup& h);

}  // namespace settop
