#include <map>
#include <set>

#include "doctest.h"
#include "settop/topo_gen.hpp"
#include "support.hpp"

using namespace settop;
using namespace fx;

namespace {

// Brute-force homeomorphism test: some permutation carries opens onto opens.
bool homeomorphic_oracle(const Space& a, const Space& b) {
  if (a.size() != b.size() || a.opens().size() != b.opens().size()) return false;
  auto perm = identity_perm(a.size());
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::size_t iso_classes_oracle(const std::vector<Space>& spaces) {
  std::vector<Space> reps;
  for (const auto& s : spaces) {
    bool found = false;
    for (const auto& r : reps) {
      if (homeomorphic_oracle(s, r)) {
        found = true;
        break;
      }
    }
    if (!found) reps.push_back(s);
  }
  return reps.size();
}

}  // namespace

TEST_CASE("subbase examples") {
  CHECK(topology_from_subbase({2, {}}).opens() == std::vector<PointSet>{{}, {0, 1}});
  CHECK(topology_from_subbase({2, {{1}}}).opens() == std::vector<PointSet>{{}, {1}, {0, 1}});
  CHECK(topology_from_subbase({3, {{0, 1}, {1, 2}}}).opens() ==
        std::vector<PointSet>{{}, {1}, {0, 1}, {1, 2}, {0, 1, 2}});
}

TEST_CASE("subbase topology is the least topology containing the members") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto all = brute_force_topologies(n);
    const std::size_t subsets = std::size_t{1} << n;
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
      SubbaseSpec spec{n, {}};
      for (std::size_t m = 0; m < subsets; ++m) {
        if ((fam >> m) & 1u) spec.members.emplace_back(m);
      }
      const auto t = topology_from_subbase(spec);
      const std::vector<PointSet>* least = nullptr;
      for (const auto& cand : all) {
        bool holds = std::all_of(spec.members.begin(), spec.members.end(), [&](PointSet p) {
          return std::find(cand.begin(), cand.end(), p) != cand.end();
        });
        if (holds && (!least || cand.size() < least->size())) least = &cand;
      }
      REQUIRE(least);
      CHECK(t.opens() == *least);
    }
  }
}

TEST_CASE("subbase of a topology is a fixpoint") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& s : enumerate_topologies(n, false)) CHECK(topology_from_subbase({n, s.opens()}) == s);
  }
}

TEST_CASE("finite-union closure") {
  SubsetFamily f(4, {{1}, {3}});
  CHECK(close_under_finite_unions(f).members == std::vector<PointSet>{{1}, {3}, {1, 3}});
  auto closed = close_under_finite_unions(f);
  CHECK(close_under_finite_unions(closed) == closed);
  // The four minimal opens of the pseudocircle saturate to its six nonempty opens.
  auto base = close_under_finite_unions(SubsetFamily(4, minimal_base(c4())));
  CHECK(base.members == nonempty_opens(c4()));
  CHECK(base.size() == 6);
  SubsetFamily bigger(4, {{1}, {3}, {0}});
  for (auto m : closed.members) CHECK(close_under_finite_unions(bigger).contains(m));
}

TEST_CASE("finite-union closure against nonempty unions") {
  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << 8); ++fam) {
    std::vector<PointSet> members;
    for (std::size_t m = 0; m < 8; ++m) {
      if ((fam >> m) & 1u) members.emplace_back(m);
    }
    std::set<PointSet> expected;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << members.size()); ++pick) {
      PointSet u;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if ((pick >> i) & 1u) u |= members[i];
      }
      expected.insert(u);
    }
    auto got = close_under_finite_unions(SubsetFamily(3, members)).members;
    CHECK(got == std::vector<PointSet>(expected.begin(), expected.end()));
  }
}

TEST_CASE("labelled counts match the 2^(2^n) oracle") {
  CHECK(enumerate_topologies(0, false).size() == 1);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto oracle = brute_force_topologies(n);
    std::vector<std::vector<PointSet>> generated;
    for (const auto& s : enumerate_topologies(n, false)) generated.push_back(s.opens());
    std::sort(oracle.begin(), oracle.end());
    std::sort(generated.begin(), generated.end());
    CHECK(generated == oracle);
  }
}

TEST_CASE("four-point labelled topologies") {
  const auto spaces = enumerate_topologies(4, false);
  CHECK(spaces.size() == 355);
  std::set<std::vector<PointSet>> distinct;
  for (const auto& s : spaces) {
    CHECK(is_topology(4, s.opens()));
    distinct.insert(s.opens());
  }
  CHECK(distinct.size() == 355);
  // Independent route: filter every family of subsets that contains ∅ and X
  // and is closed under ∩, then keep the ones closed under ∪.
  std::size_t filtered = 0;
  for (std::uint64_t mid = 0; mid < (std::uint64_t{1} << 14); ++mid) {
    std::vector<PointSet> family{PointSet{}};
    for (std::size_t m = 1; m < 15; ++m) {
      if ((mid >> (m - 1)) & 1u) family.emplace_back(m);
    }
    family.push_back(PointSet::full(4));
    if (is_topology(4, family)) {
      ++filtered;
      CHECK(distinct.count(family) == 1);
    }
  }
  CHECK(filtered == 355);
}

TEST_CASE("five-point labelled count") {
  std::size_t count = 0;
  for_each_labeled_topology(5, [&](const Space&) { ++count; });
  CHECK(count == 6942);
}

TEST_CASE("enumeration order") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto v = enumerate_topologies(n, false);
    for (std::size_t i = 1; i < v.size(); ++i) {
      auto key = [](const Space& s) { return std::make_pair(s.opens().size(), s.opens()); };
      CHECK(key(v[i - 1]) < key(v[i]));
    }
  }
}

TEST_CASE("classes up to homeomorphism") {
  const std::vector<std::size_t> expected{1, 1, 3, 9, 33, 139, 718};
  for (std::size_t n = 0; n <= 6; ++n) CHECK(enumerate_topologies(n, true).size() == expected[n]);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto labeled = enumerate_topologies(n, false);
    CHECK(iso_classes_oracle(labeled) == expected[n]);
    auto reps = enumerate_topologies(n, true);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(homeomorphic_oracle(reps[i], reps[j]));
    }
  }
}

TEST_CASE("canonical forms") {
  std::vector<std::size_t> swap{1, 0};
  CHECK(canonical_form(s2()) == canonical_form(relabel(s2(), swap)));
  CHECK(canonical_form(s2()) != canonical_form(d2()));
  std::vector<std::size_t> swap34{0, 1, 3, 2};
  CHECK(canonical_form(c4()) == canonical_form(relabel(c4(), swap34)));
  std::vector<std::size_t> shuffle{2, 3, 0, 1};
  CHECK(homeomorphic(c4(), relabel(c4(), shuffle)));

  auto labeled = enumerate_topologies(3, false);
  for (const auto& a : labeled) {
    for (const auto& b : labeled) CHECK(homeomorphic(a, b) == homeomorphic_oracle(a, b));
  }
}

TEST_CASE("enumeration bounds") {
  EnumerationLimits tight{3, 3};
  CHECK_THROWS(enumerate_topologies(4, false, tight));
  CHECK_THROWS(enumerate_topologies(4, true, tight));
  CHECK(enumerate_topologies(3, true, tight).size() == 9);
}
