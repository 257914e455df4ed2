#include "doctest.h"
#include "settop/errors.hpp"
#include "settop/group_check.hpp"
#include "settop/topo_gen.hpp"
#include "support.hpp"

using namespace settop;
using namespace fx;

namespace {

// Preimage of every open is open, by scanning the explicit open lists.
bool continuous_literal(const Space& dom, const Space& cod, const std::vector<std::size_t>& values) {
  for (auto o : cod.opens()) {
    PointSet pre;
    for (std::size_t x = 0; x < dom.size(); ++x) {
      if (o.contains(values[x])) pre.insert(x);
    }
    if (!std::binary_search(dom.opens().begin(), dom.opens().end(), pre)) return false;
  }
  return true;
}

// P ⊆ A × B is open iff every point of P sits in a box U × V ⊆ P with U, V open.
bool box_open(const Space& a, const Space& b, const std::vector<char>& in) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!in[i * b.size() + j]) continue;
      bool boxed = false;
      for (auto u : a.opens()) {
        if (!u.contains(i)) continue;
        for (auto v : b.opens()) {
          if (boxed || !v.contains(j)) continue;
          bool inside = true;
          u.for_each([&](std::size_t x) { v.for_each([&](std::size_t y) { inside = inside && in[x * b.size() + y]; }); });
          boxed = inside;
        }
      }
      if (!boxed) return false;
    }
  }
  return true;
}

bool continuous_from_product(const Space& a, const Space& b, const Space& cod, const std::vector<std::size_t>& values) {
  for (auto o : cod.opens()) {
    std::vector<char> in(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) in[k] = o.contains(values[k]);
    if (!box_open(a, b, in)) return false;
  }
  return true;
}

struct Literal {
  bool composition;
  bool inversion;
};

Literal group_maps_literal(const GroupTopology& t) {
  const auto& h = *t.group;
  const auto m = h.size();
  const auto x = t.space.as_space();
  std::vector<std::size_t> comp(m * m);
  std::vector<std::size_t> inv(m);
  for (std::size_t i = 0; i < m; ++i) {
    inv[i] = *h.index_of(inverse(h[i]));
    for (std::size_t j = 0; j < m; ++j) comp[i * m + j] = *h.index_of(compose(h[i], h[j]));
  }
  return {continuous_from_product(x, x, x, comp), continuous_literal(x, x, inv)};
}

bool evaluation_literal(const Space& s, const GroupTopology& t) {
  const auto& h = *t.group;
  std::vector<std::size_t> values(h.size() * s.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t x = 0; x < s.size(); ++x) values[i * s.size() + x] = h[i](x);
  }
  return continuous_from_product(t.space.as_space(), s, s, values);
}

bool acceptable_literal(const Space& s, const GroupTopology& t) {
  auto g = group_maps_literal(t);
  if (!g.composition || !g.inversion) return false;
  const auto& h = *t.group;
  const auto ts = t.space.as_space();
  for (std::size_t x = 0; x < s.size(); ++x) {
    std::vector<std::size_t> orbit(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) orbit[i] = h[i](x);
    if (!continuous_literal(ts, s, orbit)) return false;
  }
  const auto e = h.identity_index();
  for (auto u : ts.opens()) {
    if (!u.contains(e)) continue;
    for (std::size_t b = 0; b < s.size(); ++b) {
      bool some = false;
      for (auto v : s.opens()) {
        if (!v.contains(b)) continue;
        bool inside = true;
        for (std::size_t i = 0; i < h.size(); ++i) {
          bool fixes_outside = true;
          for (std::size_t y = 0; y < s.size(); ++y) {
            if (!v.contains(y) && h[i](y) != y) fixes_outside = false;
          }
          if (fixes_outside && !u.contains(i)) inside = false;
        }
        some = some || inside;
      }
      if (!some) return false;
    }
  }
  return true;
}

// SLH by trying every base made of nonempty opens.
bool slh_literal(const Space& s, const HomeoGroup& h) {
  auto opens = nonempty_opens(s);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << opens.size()); ++pick) {
    std::vector<PointSet> base;
    for (std::size_t i = 0; i < opens.size(); ++i) {
      if ((pick >> i) & 1u) base.push_back(opens[i]);
    }
    bool is_base = true;
    for (auto o : s.opens()) {
      PointSet u;
      for (auto b : base) {
        if (b.is_subset_of(o)) u |= b;
      }
      is_base = is_base && u == o;
    }
    if (!is_base) continue;
    bool ok = true;
    for (auto w : base) {
      for (std::size_t x = 0; x < s.size(); ++x) {
        for (std::size_t y = 0; y < s.size(); ++y) {
          if (!w.contains(x) || !w.contains(y)) continue;
          bool moved = false;
          for (const auto& g : h.elements()) {
            bool supported = true;
            for (std::size_t z = 0; z < s.size(); ++z) {
              if (!w.contains(z) && g(z) != z) supported = false;
            }
            moved = moved || (supported && g(x) == y);
          }
          ok = ok && moved;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

bool quotient_literal(const Space& s, const GroupTopology& t, std::size_t a) {
  const auto& h = *t.group;
  const auto ts = t.space.as_space();
  std::vector<PointSet> cosets;
  PointSet seen;
  for (std::size_t g = 0; g < h.size(); ++g) {
    if (seen.contains(g)) continue;
    PointSet coset;
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (h[k](a) == a) coset.insert(*h.index_of(compose(h[g], h[k])));
    }
    seen |= coset;
    cosets.push_back(coset);
  }
  if (cosets.size() != s.size()) return false;
  std::vector<std::size_t> forward(cosets.size());
  std::vector<std::size_t> backward(s.size(), cosets.size());
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    forward[c] = h[cosets[c].first()](a);
    if (backward[forward[c]] != cosets.size()) return false;
    backward[forward[c]] = c;
  }
  for (auto b : backward) {
    if (b == cosets.size()) return false;
  }
  auto q = quotient(ts, cosets);
  return continuous_literal(q, s, forward) && continuous_literal(s, q, backward);
}

std::vector<GroupTopology> all_modes(const Space& s, const std::shared_ptr<const HomeoGroup>& h) {
  std::vector<GroupTopology> out;
  for (auto m : {Mode::compact_open, Mode::closed_open, Mode::zero_cozero, Mode::regular_open}) {
    out.push_back(set_open_topology(s, h, m));
  }
  SubsetFamily all(s.size(), nonempty_opens(s));
  out.push_back(set_open_topology(s, h, Mode::b_open, all));
  out.push_back(set_open_topology(s, h, Mode::closure_b, all));
  return out;
}

GroupTopology custom(const std::shared_ptr<const HomeoGroup>& h, const Space& on_elements) {
  std::vector<ElementSet> nbhd;
  for (std::size_t g = 0; g < on_elements.size(); ++g) {
    ElementSet e(h->size(), on_elements.neighborhood(g).bits());
    nbhd.push_back(e);
  }
  return GroupTopology{h, ElementSpace::from_neighborhoods(nbhd), "custom"};
}

}  // namespace

TEST_CASE("continuity examples") {
  for (const auto& s : {s2(), c4(), d2(), i2()}) {
    CHECK(is_continuous({s, s, identity_perm(s.size())}));
    CHECK(is_continuous({s, s, std::vector<std::size_t>(s.size(), 0)}));
  }
  CHECK_FALSE(is_continuous({s2(), s2(), {1, 0}}));
  std::vector<PointSet> targets{{1}};
  CHECK_FALSE(preimages_open({s2(), s2(), {1, 0}}, targets));
}

TEST_CASE("group predicates on the 2-element group") {
  auto h = group_of(d2());
  auto discrete_t = custom(h, d2());
  auto indiscrete_t = custom(h, i2());
  auto sierpinski_t = custom(h, opens(2, {{0}}));
  CHECK(is_paratopological_group(discrete_t));
  CHECK(is_paratopological_group(indiscrete_t));
  CHECK_FALSE(is_paratopological_group(sierpinski_t));
  CHECK(is_topological_group(discrete_t));
  CHECK_FALSE(is_topological_group(sierpinski_t));

  CHECK(is_admissible(d2(), discrete_t));
  CHECK(is_admissible(i2(), custom(group_of(i2()), i2())));
  CHECK_FALSE(is_admissible(d2(), indiscrete_t));
}

TEST_CASE("S3 with the cosets of its rotation subgroup") {
  auto h = group_of(discrete(3));
  REQUIRE(h->size() == 6);
  ElementSet rotations(6);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& g = (*h)[i];
    std::size_t fixed = 0;
    for (std::size_t x = 0; x < 3; ++x) fixed += g(x) == x;
    if (fixed != 1) rotations.set(i);
  }
  REQUIRE(rotations.count() == 3);
  std::vector<ElementSet> cosets{rotations, ~rotations};
  GroupTopology t{h, ElementSpace::from_subbase(6, cosets), "cosets"};
  CHECK(is_topological_group(t));
  auto lit = group_maps_literal(t);
  CHECK(lit.composition);
  CHECK(lit.inversion);
}

TEST_CASE("acceptability examples") {
  auto h = group_of(d2());
  CHECK(is_acceptable(d2(), set_open_topology(d2(), h, Mode::zero_cozero)));
  CHECK(is_acceptable(i2(), custom(group_of(i2()), i2())));
  CHECK_FALSE(is_acceptable(d2(), custom(h, i2())));
  auto why = acceptability_failure(d2(), custom(h, i2()));
  REQUIRE(why);
  CHECK(why->find("orbit map") != std::string::npos);
  // The pseudocircle is connected, so its zero-cozero topology is indiscrete
  // and h -> h(0) cannot be continuous.
  CHECK_FALSE(is_acceptable(c4(), set_open_topology(c4(), group_of(c4()), Mode::zero_cozero)));
}

TEST_CASE("SLH examples") {
  CHECK(is_slh(d2(), enumerate_homeomorphisms(d2())));
  CHECK_FALSE(is_slh(s2(), enumerate_homeomorphisms(s2())));
  CHECK(is_slh(i2(), enumerate_homeomorphisms(i2())));
}

TEST_CASE("quotient examples") {
  auto h = group_of(d2());
  CHECK(quotient_check(d2(), set_open_topology(d2(), h, Mode::zero_cozero), 0).ok);
  auto h3 = group_of(discrete(3));
  auto q3 = quotient_check(discrete(3), set_open_topology(discrete(3), h3, Mode::zero_cozero), 0);
  CHECK(q3.ok);
  CHECK(left_cosets_of_stabilizer(*h3, 0).size() == 3);
  auto qs = quotient_check(s2(), set_open_topology(s2(), group_of(s2()), Mode::compact_open), 0);
  CHECK_FALSE(qs.ok);
  CHECK(qs.witness_point == std::optional<std::size_t>(1));
}

TEST_CASE("family condition examples") {
  auto hd = enumerate_homeomorphisms(d2());
  auto r = check_family_conditions(d2(), hd, SubsetFamily(2, {{0}, {1}, {0, 1}}));
  CHECK(r.urysohn());
  auto rs = check_family_conditions(s2(), enumerate_homeomorphisms(s2()), SubsetFamily(2, {{1}}));
  CHECK_FALSE(rs.holds(Condition::c));
  REQUIRE(rs.witness(Condition::c));
  CHECK(rs.witness(Condition::c)->sets.front() == PointSet{1});
  for (const auto& s : {s2(), c4(), d2(), i2()}) {
    auto all = check_family_conditions(s, enumerate_homeomorphisms(s), SubsetFamily(s.size(), nonempty_opens(s)));
    CHECK(all.holds(Condition::c));
    CHECK(all.holds(Condition::base));
  }
  CHECK_THROWS_AS(check_family_conditions(s2(), enumerate_homeomorphisms(s2()), SubsetFamily(2, {{0}})),
                  InvalidArgument);
}

TEST_CASE("connected cover examples") {
  CHECK(check_connected_cover(c4(), SubsetFamily(4, nonempty_opens(c4()))));
  CHECK_FALSE(check_connected_cover(s2(), SubsetFamily(2, {{1}})));
  CHECK(check_connected_cover(d2(), SubsetFamily(2, {{0}, {1}})));
  CHECK(check_connected_cover(d2(), SubsetFamily(2, {{}})));
}

TEST_CASE("fast group predicates agree with product-space maps") {
  // Every topology on the element set of each group of order <= 4.
  for (const auto& s : {s2(), d2(), c4(), opens(3, {{0}, {0, 1}}), discrete(3)}) {
    auto h = group_of(s);
    if (h->size() > 4) {
      for (const auto& t : all_modes(s, h)) {
        auto lit = group_maps_literal(t);
        CHECK(is_paratopological_group(t) == lit.composition);
        CHECK(is_topological_group(t) == (lit.composition && lit.inversion));
        CHECK(is_admissible(s, t) == evaluation_literal(s, t));
      }
      continue;
    }
    for (const auto& on : enumerate_topologies(h->size(), false)) {
      auto t = custom(h, on);
      auto lit = group_maps_literal(t);
      CHECK(is_paratopological_group(t) == lit.composition);
      CHECK(is_topological_group(t) == (lit.composition && lit.inversion));
      CHECK(is_admissible(s, t) == evaluation_literal(s, t));
      CHECK(is_acceptable(s, t) == acceptable_literal(s, t));
      CHECK(is_continuous(composition_map(t)) == lit.composition);
      CHECK(is_continuous(inversion_map(t)) == lit.inversion);
      CHECK(is_continuous(evaluation_map(s, t)) == evaluation_literal(s, t));
    }
  }
}

TEST_CASE("predicates on every class up to 4 points against literal definitions") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& s : enumerate_topologies(n, true)) {
      auto h = group_of(s);
      if (n <= 3) CHECK(is_slh(s, *h) == slh_literal(s, *h));
      if (h->size() > 6) continue;
      for (const auto& t : all_modes(s, h)) {
        auto lit = group_maps_literal(t);
        CHECK(is_paratopological_group(t) == lit.composition);
        CHECK(is_topological_group(t) == (lit.composition && lit.inversion));
        CHECK(is_admissible(s, t) == evaluation_literal(s, t));
        CHECK(is_acceptable(s, t) == acceptable_literal(s, t));
        for (std::size_t a = 0; a < n; ++a) CHECK(quotient_check(s, t, a).ok == quotient_literal(s, t, a));
      }
    }
  }
}

TEST_CASE("zero-cozero acceptability on regular classes") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& s : enumerate_topologies(n, true)) {
      auto t = set_open_topology(s, group_of(s), Mode::zero_cozero);
      CHECK(is_topological_group(t));
      // Finite regular spaces are completely regular: every open is clopen.
      if (classify(s).regular) CHECK(is_acceptable(s, t));
    }
  }
}

TEST_CASE("finite paratopological groups are topological") {
  for (std::size_t m : {1, 2, 3, 4}) {
    auto h = group_of(discrete(m));
    if (h->size() > 6) continue;
    std::size_t para = 0;
    for_each_labeled_topology(h->size(), [&](const Space& on) {
      auto t = custom(h, on);
      if (!is_paratopological_group(t)) return;
      ++para;
      CHECK(is_topological_group(t));
    });
    CHECK(para > 0);
  }
}

TEST_CASE("family conditions against literal quantification") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& s : enumerate_topologies(n, false)) {
      auto h = enumerate_homeomorphisms(s);
      auto opens = nonempty_opens(s);
      for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << opens.size()); ++pick) {
        std::vector<PointSet> members;
        for (std::size_t i = 0; i < opens.size(); ++i) {
          if ((pick >> i) & 1u) members.push_back(opens[i]);
        }
        SubsetFamily b(n, members);
        auto in = [&](PointSet p) { return std::find(members.begin(), members.end(), p) != members.end(); };
        auto cl = [&](PointSet p) { return closure_oracle(s, p); };

        bool a = true, bl = true, bs = true, c = true, d = true, base = true, cover = true, ro = true, her = true;
        for (auto v : members) {
          for (const auto& g : h.elements()) a = a && in(image(g, v));
          bool enclosed = false;
          for (auto w : members) enclosed = enclosed || cl(v).is_subset_of(w);
          c = c && enclosed;
          for (auto w : members) {
            if (!cl(v).is_subset_of(w)) continue;
            auto diff = w - cl(v);
            bl = bl && (diff.empty() || in(diff));
            bs = bs && in(diff);
            bool between = false;
            for (auto u : members) between = between || (cl(v).is_subset_of(u) && cl(u).is_subset_of(w));
            d = d && between;
          }
          ro = ro && interior_oracle(s, cl(v)) == v;
          for (auto o : s.opens()) her = her && (o.empty() || !o.is_subset_of(v) || in(o));
        }
        PointSet connected;
        for (auto v : members) {
          if (is_connected(s, v)) connected |= v;
        }
        for (auto v : members) cover = cover && cl(v).is_subset_of(connected);
        for (auto o : s.opens()) {
          PointSet u;
          for (auto v : members) {
            if (v.is_subset_of(o)) u |= v;
          }
          base = base && u == o;
        }

        ConditionOptions lenient;
        ConditionOptions strict{true, false};
        auto r = check_family_conditions(s, h, b, lenient);
        auto rs = check_family_conditions(s, h, b, strict);
        CHECK(r.holds(Condition::a) == a);
        CHECK(r.holds(Condition::b) == bl);
        CHECK(rs.holds(Condition::b) == bs);
        CHECK(r.holds(Condition::c) == c);
        CHECK(r.holds(Condition::d) == d);
        CHECK(r.holds(Condition::base) == base);
        CHECK(r.holds(Condition::connected_cover) == cover);
        CHECK(check_connected_cover(s, b) == cover);
        CHECK(r.holds(Condition::regular_open_members) == ro);
        CHECK(r.holds(Condition::hereditarily_open) == her);
        CHECK(r.urysohn() == (a && bl && c && d));
        for (std::size_t k = 0; k < kConditionCount; ++k) {
          auto cond = static_cast<Condition>(k);
          if (auto w = r.witness(cond)) {
            CHECK(witness_violates(s, h, b, lenient, cond, *w));
            CHECK_FALSE(describe(cond, *w, h).empty());
          }
        }
      }
    }
  }
}

TEST_CASE("strict inclusion toggle") {
  // With proper inclusions a family whose only enclosure of X is X itself fails (c).
  auto r = check_family_conditions(i2(), enumerate_homeomorphisms(i2()), SubsetFamily(2, {{0, 1}}),
                                   ConditionOptions{false, true});
  CHECK_FALSE(r.holds(Condition::c));
  auto lenient = check_family_conditions(i2(), enumerate_homeomorphisms(i2()), SubsetFamily(2, {{0, 1}}));
  CHECK(lenient.holds(Condition::c));
}
