#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "settop/homeo_group.hpp"
#include "settop/set_open.hpp"
#include "settop/space.hpp"
#include "settop/topo_gen.hpp"

namespace settop {

/// A function between finite spaces given by its value table. Continuity is
/// not assumed.
struct MapTable {
  Space dom;
  Space cod;
  std::vector<std::size_t> values;
};

/// Preimage of every open of `cod` is open in `dom`. The check runs once
/// over all opens and once over the minimal base of `cod`; a disagreement
/// throws std::logic_error.
bool is_continuous(const MapTable& m);
bool preimages_open(const MapTable& m, std::span<const PointSet> targets);

// Literal product-space forms of the group maps. They need |H|^2 (resp.
// |H|·n) to fit `max_points` and exist to cross-check the predicates below.
MapTable composition_map(const GroupTopology& t, std::size_t max_points = kDefaultMaxPoints);
MapTable inversion_map(const GroupTopology& t, std::size_t max_points = kDefaultMaxPoints);
MapTable evaluation_map(const Space& s, const GroupTopology& t, std::size_t max_points = kDefaultMaxPoints);

// Continuity of a map out of a finite (product) space holds iff it carries
// each minimal neighbourhood into the minimal neighbourhood of the image.
// The finders return the first point where that fails.
std::optional<std::pair<std::size_t, std::size_t>> find_composition_discontinuity(const GroupTopology& t);
std::optional<std::size_t> find_inversion_discontinuity(const GroupTopology& t);
/// (element, point) where evaluation H × X → X fails.
std::optional<std::pair<std::size_t, std::size_t>> find_evaluation_discontinuity(const Space& s,
                                                                                 const GroupTopology& t);

bool is_paratopological_group(const GroupTopology& t);
bool is_topological_group(const GroupTopology& t);
bool is_admissible(const Space& s, const GroupTopology& t);

/// Description of the first failing clause of acceptability, or nullopt.
std::optional<std::string> acceptability_failure(const Space& s, const GroupTopology& t);
bool is_acceptable(const Space& s, const GroupTopology& t);

bool is_slh(const Space& s, const HomeoGroup& h);

struct QuotientCheck {
  bool ok = false;
  std::string reason;
  /// A point outside the orbit of the base point, when the action is not transitive.
  std::optional<std::size_t> witness_point;
};

/// Is coset g·G_a ↦ g(a) a homeomorphism from T.space / left cosets of G_a onto S?
QuotientCheck quotient_check(const Space& s, const GroupTopology& t, std::size_t a);

/// Left cosets g·G_a of the stabilizer of a, as element sets ordered by least member.
std::vector<ElementSet> left_cosets_of_stabilizer(const HomeoGroup& h, std::size_t a);

enum class Condition { a, b, c, d, base, connected_cover, regular_open_members, hereditarily_open };
inline constexpr std::size_t kConditionCount = 8;
std::string_view to_string(Condition c);

struct ConditionOptions {
  /// Require W \ cl(V) ∈ B in (b) even when the difference is empty.
  bool strict_b = false;
  /// Read the inclusions of (c) and (d) as proper.
  bool strict_inclusion = false;
};

/// Concrete violation of one condition: the sets involved (see
/// witness_violates for their roles) and, for (a), the homeomorphism index.
struct Witness {
  std::vector<PointSet> sets;
  std::optional<std::size_t> homeo;
};

std::string describe(Condition c, const Witness& w, const HomeoGroup& h);

struct ConditionReport {
  std::array<std::optional<Witness>, kConditionCount> witnesses;

  bool holds(Condition c) const { return !witnesses[static_cast<std::size_t>(c)].has_value(); }
  const std::optional<Witness>& witness(Condition c) const { return witnesses[static_cast<std::size_t>(c)]; }
  bool urysohn() const {
    return holds(Condition::a) && holds(Condition::b) && holds(Condition::c) && holds(Condition::d);
  }
  bool encircling() const { return holds(Condition::a) && holds(Condition::b) && holds(Condition::c); }
};

/// Throws InvalidArgument if a member of `b` is not open in `s`.
ConditionReport check_family_conditions(const Space& s, const HomeoGroup& h, const SubsetFamily& b,
                                        const ConditionOptions& options = {});
/// True iff `w` is a genuine violation of condition `c`.
bool witness_violates(const Space& s, const HomeoGroup& h, const SubsetFamily& b, const ConditionOptions& options,
                      Condition c, const Witness& w);

/// Closure of every member lies in the union of the connected members.
bool check_connected_cover(const Space& s, const SubsetFamily& b);

}  // namespace settop
