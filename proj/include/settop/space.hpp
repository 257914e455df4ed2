#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "settop/point_set.hpp"

namespace settop {

/// A finite topological space on points {0..n-1}.
///
/// Both the open family (sorted by ascending bitmask) and the minimal
/// neighbourhood of every point are kept; either determines the other.
class Space {
 public:
  /// The empty space: no points, opens = {∅}.
  Space();

  /// Validates that `opens` contains ∅ and the full set and is closed under
  /// pairwise union and intersection. Throws InvalidSpace naming the first
  /// failing pair otherwise.
  static Space from_opens(std::size_t n, std::vector<PointSet> opens,
                          std::size_t max_points = kDefaultMaxPoints);

  /// `nbhd[x]` must contain x, and y ∈ nbhd[x] must imply nbhd[y] ⊆ nbhd[x].
  static Space from_neighborhoods(std::size_t n, std::vector<PointSet> nbhd,
                                  std::size_t max_points = kDefaultMaxPoints);

  std::size_t size() const { return n_; }
  PointSet full() const { return PointSet::full(n_); }
  const std::vector<PointSet>& opens() const { return opens_; }
  /// Intersection of all opens containing x.
  PointSet neighborhood(std::size_t x) const { return nbhd_[x]; }
  const std::vector<PointSet>& neighborhoods() const { return nbhd_; }

  bool is_open(PointSet a) const;
  bool is_closed(PointSet a) const { return is_open(a.complement(n_)); }
  /// Smallest open set containing `a`.
  PointSet open_hull(PointSet a) const;

  friend bool operator==(const Space& a, const Space& b) { return a.n_ == b.n_ && a.opens_ == b.opens_; }

 private:
  Space(std::size_t n, std::vector<PointSet> opens, std::vector<PointSet> nbhd)
      : n_(n), opens_(std::move(opens)), nbhd_(std::move(nbhd)) {}

  std::size_t n_ = 0;
  std::vector<PointSet> opens_;
  std::vector<PointSet> nbhd_;
};

/// All unions of the given sets (including the empty union), sorted.
std::vector<PointSet> all_unions(std::span<const PointSet> generators);

struct SpaceClassification {
  bool t0 = false;
  bool t1 = false;
  bool regular = false;
  bool semiregular = false;
  bool zero_dimensional = false;

  friend bool operator==(const SpaceClassification&, const SpaceClassification&) = default;
};

PointSet interior(const Space& s, PointSet a);
PointSet closure(const Space& s, PointSet a);
bool is_regular_open(const Space& s, PointSet w);
std::vector<PointSet> regular_opens(const Space& s);
std::vector<PointSet> closed_sets(const Space& s);

/// Components of the subspace on `a`, ordered by least point. Empty for ∅.
std::vector<PointSet> connected_components(const Space& s, PointSet a);
bool is_connected(const Space& s, PointSet a);

SpaceClassification classify(const Space& s);

/// Point (i, j) gets index i * s2.size() + j.
Space product(const Space& s1, const Space& s2, std::size_t max_points = kDefaultMaxPoints);
/// Points of `a` relabelled in ascending order.
Space subspace(const Space& s, PointSet a);
/// Points of the result are the blocks, in the given order. Throws
/// InvalidArgument on overlapping, empty, or missing blocks.
Space quotient(const Space& s, std::span<const PointSet> blocks);

/// Zero sets of continuous real functions; on a finite space these are the
/// unions of connected components. Also the cozero sets.
std::vector<PointSet> zero_sets(const Space& s);
/// Distinct minimal neighbourhoods, ascending.
std::vector<PointSet> minimal_base(const Space& s);

/// The space whose point perm[x] plays the role of x.
Space relabel(const Space& s, std::span<const std::size_t> perm);
PointSet relabel(PointSet a, std::span<const std::size_t> perm);

// Text format: "n <count>" then one open per line ("-" = ∅); ∅ and the full
// set may be omitted; '#' starts a comment line.
Space parse_space(const std::string& text, std::size_t max_points = kDefaultMaxPoints);
/// Splits a stream of stanzas on their "n" lines.
std::vector<Space> parse_spaces(const std::string& text, std::size_t max_points = kDefaultMaxPoints);
std::string format_space(const Space& s);
/// Lines of point sets, optionally preceded by an "n" line which must equal `n`.
std::vector<PointSet> parse_set_list(const std::string& text, std::size_t n);

}  // namespace settop
