#include "doctest.h"
#include "settop/errors.hpp"
#include "settop/topo_gen.hpp"
#include "support.hpp"

using namespace settop;
using namespace fx;

namespace {

Homeo perm(std::vector<std::uint8_t> p) { return Homeo{std::move(p)}; }

std::vector<std::string> cycles(const HomeoGroup& g) {
  std::vector<std::string> out;
  for (const auto& h : g.elements()) out.push_back(to_cycles(h));
  return out;
}

// Homeomorphism by the two-sided definition: images and preimages of opens are open.
bool homeo_oracle(const Space& s, const Homeo& h) {
  auto inv = inverse(h);
  for (auto o : s.opens()) {
    if (!s.is_open(image(h, o)) || !s.is_open(image(inv, o))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("permutation helpers") {
  auto a = perm({1, 2, 0});
  auto b = perm({1, 0, 2});
  CHECK(compose(a, b)(0) == a(b(0)));
  CHECK(compose(a, inverse(a)) == Homeo::identity(3));
  CHECK(to_cycles(a) == "(0 1 2)");
  CHECK(to_cycles(Homeo::identity(3)) == "id");
  CHECK(to_cycles(perm({1, 0, 3, 2})) == "(0 1)(2 3)");
  CHECK(image(a, {0, 1}) == PointSet{1, 2});
}

TEST_CASE("homeomorphism group examples") {
  CHECK(enumerate_homeomorphisms(s2()).size() == 1);
  CHECK(cycles(enumerate_homeomorphisms(d2())) == std::vector<std::string>{"id", "(0 1)"});
  auto c = enumerate_homeomorphisms(c4());
  CHECK(c.size() == 4);
  CHECK(cycles(c) == std::vector<std::string>{"id", "(2 3)", "(0 1)", "(0 1)(2 3)"});
  CHECK(enumerate_homeomorphisms(discrete(4)).size() == 24);
  CHECK(enumerate_homeomorphisms(discrete(5)).size() == 120);
}

TEST_CASE("open orbit examples") {
  using Orbits = std::vector<std::vector<PointSet>>;
  CHECK(orbits_of_opens(s2(), enumerate_homeomorphisms(s2())) == Orbits{{{}}, {{1}}, {{0, 1}}});
  CHECK(orbits_of_opens(d2(), enumerate_homeomorphisms(d2())) == Orbits{{{}}, {{0}, {1}}, {{0, 1}}});
  CHECK(orbits_of_opens(c4(), enumerate_homeomorphisms(c4())) ==
        Orbits{{{}}, {{0}, {1}}, {{0, 1}}, {{0, 1, 2}, {0, 1, 3}}, {{0, 1, 2, 3}}});
}

TEST_CASE("stabilizer examples") {
  auto c = enumerate_homeomorphisms(c4());
  CHECK(cycles(stabilizer(c, 0)) == std::vector<std::string>{"id", "(2 3)"});
  CHECK(cycles(stabilizer(enumerate_homeomorphisms(d2()), 0)) == std::vector<std::string>{"id"});
  for (std::size_t a = 0; a < 4; ++a) CHECK(stabilizer(c, a).index_of(Homeo::identity(4)).has_value());
}

TEST_CASE("homogeneity examples") {
  CHECK(is_homogeneous(d2(), enumerate_homeomorphisms(d2())));
  CHECK_FALSE(is_homogeneous(c4(), enumerate_homeomorphisms(c4())));
  CHECK(is_homogeneous(i2(), enumerate_homeomorphisms(i2())));
  CHECK(point_orbits(enumerate_homeomorphisms(c4())) == std::vector<PointSet>{{0, 1}, {2, 3}});
}

TEST_CASE("from_elements validates") {
  CHECK_THROWS_AS(HomeoGroup::from_elements(3, {Homeo::identity(3), perm({1, 2, 0})}), InvalidArgument);
  auto g = HomeoGroup::from_elements(3, {perm({1, 2, 0}), perm({2, 0, 1}), Homeo::identity(3)});
  CHECK(g.size() == 3);
  CHECK(g[g.identity_index()] == Homeo::identity(3));
  CHECK(g.elements().front() == Homeo::identity(3));
}

TEST_CASE("group tables on every space up to 4 points") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& s : enumerate_topologies(n, false)) {
      auto g = enumerate_homeomorphisms(s);
      const auto e = g.identity_index();
      std::size_t brute = 0;
      auto p = identity_perm(n);
      do {
        Homeo h;
        for (auto x : p) h.perm.push_back(static_cast<std::uint8_t>(x));
        CHECK(is_homeomorphism(s, h) == homeo_oracle(s, h));
        if (homeo_oracle(s, h)) ++brute;
      } while (std::next_permutation(p.begin(), p.end()));
      CHECK(g.size() == brute);
      for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(g.compose(i, e) == i);
        CHECK(g.compose(e, i) == i);
        CHECK(g.compose(i, g.inverse(i)) == e);
        for (std::size_t j = 0; j < g.size(); ++j) {
          CHECK(g[g.compose(i, j)] == compose(g[i], g[j]));
          for (std::size_t k = 0; k < g.size(); ++k) {
            CHECK(g.compose(g.compose(i, j), k) == g.compose(i, g.compose(j, k)));
          }
        }
      }
      for (std::size_t a = 0; a < n; ++a) {
        auto st = stabilizer(g, a);
        for (const auto& x : st.elements()) {
          CHECK(x(a) == a);
          for (const auto& y : st.elements()) CHECK(st.index_of(compose(x, y)).has_value());
        }
      }
    }
  }
}

TEST_CASE("homeomorphisms preserve the operators") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& s : enumerate_topologies(n, false)) {
      auto g = enumerate_homeomorphisms(s);
      for (const auto& h : g.elements()) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
          PointSet a(m);
          auto ha = image(h, a);
          CHECK(image(h, interior(s, a)) == interior(s, ha));
          CHECK(image(h, closure(s, a)) == closure(s, ha));
          CHECK(is_regular_open(s, a) == is_regular_open(s, ha));
          CHECK(is_connected(s, a) == is_connected(s, ha));
        }
      }
    }
  }
}

TEST_CASE("group order is relabelling invariant") {
  for (const auto& s : enumerate_topologies(4, true)) {
    auto p = identity_perm(4);
    const auto order = enumerate_homeomorphisms(s).size();
    do {
      CHECK(enumerate_homeomorphisms(relabel(s, p)).size() == order);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST_CASE("large groups compute products without a table") {
  auto g = enumerate_homeomorphisms(discrete(7));
  CHECK(g.size() == 5040);
  for (std::size_t i = 0; i < g.size(); i += 517) {
    for (std::size_t j = 0; j < g.size(); j += 311) CHECK(g[g.compose(i, j)] == compose(g[i], g[j]));
  }
  CHECK_THROWS_AS(enumerate_homeomorphisms(discrete(9)), BoundExceeded);
}
