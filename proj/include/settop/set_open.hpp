#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "settop/homeo_group.hpp"
#include "settop/space.hpp"
#include "settop/topo_gen.hpp"

namespace settop {

/// A set of group element indices.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

/// A finite topology on the element indices 0..m-1 of a group.
///
/// Groups can be far larger than a PointSet bitmask (|S5| = 120), and their
/// topologies can have astronomically many opens, so only the minimal
/// neighbourhood of each element is stored. The opens are exactly the unions
/// of minimal neighbourhoods.
class ElementSpace {
 public:
  ElementSpace() = default;

  /// The topology generated by `subbase`: the minimal neighbourhood of g is
  /// the intersection of the members containing g (all of 0..m-1 if none).
  static ElementSpace from_subbase(std::size_t m, std::span<const ElementSet> subbase);
  /// Validates the neighbourhood conditions; throws InvalidSpace otherwise.
  static ElementSpace from_neighborhoods(std::vector<ElementSet> nbhd);

  std::size_t size() const { return nbhd_.size(); }
  const ElementSet& neighborhood(std::size_t g) const { return nbhd_[g]; }
  bool is_open(const ElementSet& a) const;
  /// Smallest open superset.
  ElementSet open_hull(const ElementSet& a) const;
  /// True iff every open of `other` is open here.
  bool refines(const ElementSpace& other) const;

  /// All opens, sorted, or nullopt when there are more than `limit`.
  std::optional<std::vector<ElementSet>> opens(std::size_t limit) const;
  /// Distinct minimal neighbourhoods, sorted.
  std::vector<ElementSet> minimal_base() const;

  /// The same topology as a bitmask Space. Throws BoundExceeded past `max_points`.
  Space as_space(std::size_t max_points = kDefaultMaxPoints) const;

  friend bool operator==(const ElementSpace&, const ElementSpace&) = default;

 private:
  explicit ElementSpace(std::vector<ElementSet> nbhd) : nbhd_(std::move(nbhd)) {}
  std::vector<ElementSet> nbhd_;
};

/// Quotient of an element topology by a partition of its points; block b
/// of the result is `blocks[b]`.
ElementSpace quotient(const ElementSpace& t, std::span<const ElementSet> blocks);

enum class Mode { b_open, closure_b, compact_open, closed_open, zero_cozero, regular_open };

std::string_view to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view name);
bool needs_family(Mode m);

struct GroupTopology {
  std::shared_ptr<const HomeoGroup> group;
  ElementSpace space;
  /// Stable identifier of the construction, e.g. "b_open".
  std::string provenance;
};

/// {h ∈ H : h(U) ⊆ V}.
ElementSet bracket(const HomeoGroup& h, PointSet u, PointSet v);

/// The (U, V) pairs whose brackets generate the topology of `mode`.
std::vector<std::pair<PointSet, PointSet>> subbase_pairs(const Space& s, Mode mode, const SubsetFamily* family);

/// For modes without a family argument.
GroupTopology set_open_topology(const Space& s, std::shared_ptr<const HomeoGroup> h, Mode mode);
/// For b_open and closure_b. Throws InvalidArgument if a member is not open.
GroupTopology set_open_topology(const Space& s, std::shared_ptr<const HomeoGroup> h, Mode mode,
                                const SubsetFamily& family);

/// Topology generated by arbitrary brackets over the group.
GroupTopology topology_from_brackets(std::shared_ptr<const HomeoGroup> h, std::span<const ElementSet> brackets,
                                     std::string provenance);

enum class Comparison { equal, finer, coarser, incomparable };
std::string_view to_string(Comparison c);

/// `finer` means t1 has strictly more opens than t2. Throws Mismatch when
/// the two topologies live on different groups.
Comparison compare_topologies(const GroupTopology& t1, const GroupTopology& t2);

/// Group order, elements in cycle notation, and the open family over element
/// indices (minimal base instead when the family exceeds `open_limit`).
std::string format_group_topology(const GroupTopology& t, std::size_t open_limit = 256);
std::string format_element_set(const ElementSet& s);

}  // namespace settop
