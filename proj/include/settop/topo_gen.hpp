#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "settop/point_set.hpp"
#include "settop/space.hpp"

namespace settop {

/// A family of subsets of {0..n-1}, members sorted ascending without duplicates.
struct SubsetFamily {
  std::size_t n = 0;
  std::vector<PointSet> members;

  SubsetFamily() = default;
  SubsetFamily(std::size_t points, std::vector<PointSet> sets);

  bool contains(PointSet s) const;
  std::size_t size() const { return members.size(); }

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;
};

std::string to_string(const SubsetFamily& f);

struct SubbaseSpec {
  std::size_t n = 0;
  std::vector<PointSet> members;
};

/// Closes the members (plus the full set, the empty intersection) under
/// pairwise intersection, then closes that base (plus ∅) under pairwise union.
Space topology_from_subbase(const SubbaseSpec& spec, std::size_t max_points = kDefaultMaxPoints);

SubsetFamily close_under_finite_unions(const SubsetFamily& f);

struct EnumerationLimits {
  std::size_t max_labeled = 5;
  std::size_t max_up_to_iso = 6;

  /// Both bounds replaced by SETTOP_MAX_POINTS when that variable is set.
  static EnumerationLimits from_environment();
};

/// Every topology on n labelled points once, or one representative (the
/// canonical relabelling) per homeomorphism class. Ordered by number of
/// opens, then by the sorted open list.
std::vector<Space> enumerate_topologies(std::size_t n, bool up_to_iso,
                                        const EnumerationLimits& limits = {});

/// Calls `visit` once per labelled topology on n points, in search order.
void for_each_labeled_topology(std::size_t n, const std::function<void(const Space&)>& visit);

struct CanonicalForm {
  std::size_t n = 0;
  /// Lexicographically least sorted open list over all n! relabellings.
  std::vector<PointSet> label;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Space& s);
bool homeomorphic(const Space& a, const Space& b);

}  // namespace settop
