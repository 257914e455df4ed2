#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "settop/homeo_group.hpp"
#include "settop/set_open.hpp"
#include "settop/space.hpp"

namespace fx {

using namespace settop;

inline Space opens(std::size_t n, std::vector<PointSet> sets) {
  sets.push_back(PointSet{});
  sets.push_back(PointSet::full(n));
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return Space::from_opens(n, sets);
}

// Sierpinski space with 1 open.
inline Space s2() { return opens(2, {{1}}); }
inline Space d2() { return opens(2, {{0}, {1}}); }
inline Space i2() { return opens(2, {}); }
inline Space discrete(std::size_t n) {
  std::vector<PointSet> all;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) all.emplace_back(m);
  return Space::from_opens(n, all);
}
// Pseudocircle, points 0 and 1 open.
inline Space c4() { return opens(4, {{0}, {1}, {0, 1}, {0, 1, 2}, {0, 1, 3}}); }

inline std::shared_ptr<const HomeoGroup> group_of(const Space& s) {
  return std::make_shared<const HomeoGroup>(enumerate_homeomorphisms(s));
}

inline std::vector<PointSet> nonempty_opens(const Space& s) {
  return {s.opens().begin() + 1, s.opens().end()};
}

inline ElementSet elements(std::size_t m, std::initializer_list<std::size_t> items) {
  ElementSet e(m);
  for (auto i : items) e.set(i);
  return e;
}

// Literal topology test on an explicit family of subsets, no shortcuts.
inline bool is_topology(std::size_t n, const std::vector<PointSet>& family) {
  auto has = [&](PointSet p) { return std::find(family.begin(), family.end(), p) != family.end(); };
  if (!has(PointSet{}) || !has(PointSet::full(n))) return false;
  for (auto a : family) {
    for (auto b : family) {
      if (!has(a | b) || !has(a & b)) return false;
    }
  }
  return true;
}

// Every topology on n points by filtering all 2^(2^n) families.
inline std::vector<std::vector<PointSet>> brute_force_topologies(std::size_t n) {
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::vector<PointSet>> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    std::vector<PointSet> family;
    for (std::size_t m = 0; m < subsets; ++m) {
      if ((fam >> m) & 1u) family.emplace_back(m);
    }
    if (is_topology(n, family)) out.push_back(family);
  }
  return out;
}

inline std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Literal closure: intersection of every closed superset.
inline PointSet closure_oracle(const Space& s, PointSet a) {
  PointSet out = s.full();
  for (auto o : s.opens()) {
    auto c = o.complement(s.size());
    if (a.is_subset_of(c)) out &= c;
  }
  return out;
}

inline PointSet interior_oracle(const Space& s, PointSet a) {
  PointSet out;
  for (auto o : s.opens()) {
    if (o.is_subset_of(a)) out |= o;
  }
  return out;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261016);
  return gen;
}

}  // namespace fx
