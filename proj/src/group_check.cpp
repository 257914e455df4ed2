#include "settop/group_check.hpp"

#include <algorithm>
#include <stdexcept>

#include "settop/errors.hpp"

namespace settop {

namespace {

template <class F>
void for_each_element(const ElementSet& s, F&& f) {
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) f(i);
}

PointSet preimage(const MapTable& m, PointSet target) {
  PointSet out;
  for (std::size_t x = 0; x < m.values.size(); ++x) {
    if (target.contains(m.values[x])) out.insert(x);
  }
  return out;
}

void check_group(const Space& s, const GroupTopology& t) {
  if (!t.group || t.group->degree() != s.size() || t.space.size() != t.group->size()) {
    throw Mismatch("group topology does not belong to this space");
  }
}

}  // namespace

bool preimages_open(const MapTable& m, std::span<const PointSet> targets) {
  return std::all_of(targets.begin(), targets.end(), [&](PointSet o) { return m.dom.is_open(preimage(m, o)); });
}

bool is_continuous(const MapTable& m) {
  if (m.values.size() != m.dom.size()) throw InvalidArgument("map table is not total on its domain");
  for (auto v : m.values) {
    if (v >= m.cod.size()) throw InvalidArgument("map value outside the codomain");
  }
  const bool all = preimages_open(m, m.cod.opens());
  const auto base = minimal_base(m.cod);
  const bool on_base = preimages_open(m, base);
  if (all != on_base) throw std::logic_error("continuity differs between the open family and its minimal base");
  return all;
}

MapTable composition_map(const GroupTopology& t, std::size_t max_points) {
  const auto& h = *t.group;
  auto space = t.space.as_space(max_points);
  MapTable m{product(space, space, max_points), space, {}};
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) m.values.push_back(h.compose(i, j));
  }
  return m;
}

MapTable inversion_map(const GroupTopology& t, std::size_t max_points) {
  const auto& h = *t.group;
  auto space = t.space.as_space(max_points);
  MapTable m{space, space, {}};
  for (std::size_t i = 0; i < h.size(); ++i) m.values.push_back(h.inverse(i));
  return m;
}

MapTable evaluation_map(const Space& s, const GroupTopology& t, std::size_t max_points) {
  check_group(s, t);
  const auto& h = *t.group;
  MapTable m{product(t.space.as_space(max_points), s, max_points), s, {}};
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t x = 0; x < s.size(); ++x) m.values.push_back(h[i](x));
  }
  return m;
}

std::optional<std::pair<std::size_t, std::size_t>> find_composition_discontinuity(const GroupTopology& t) {
  const auto& h = *t.group;
  const auto& sp = t.space;
  for (std::size_t g = 0; g < h.size(); ++g) {
    for (std::size_t k = 0; k < h.size(); ++k) {
      const auto& target = sp.neighborhood(h.compose(g, k));
      if (target.all()) continue;
      bool ok = true;
      for_each_element(sp.neighborhood(g), [&](std::size_t a) {
        if (!ok) return;
        for_each_element(sp.neighborhood(k), [&](std::size_t b) {
          if (ok && !target.test(h.compose(a, b))) ok = false;
        });
      });
      if (!ok) return std::pair{g, k};
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> find_inversion_discontinuity(const GroupTopology& t) {
  const auto& h = *t.group;
  const auto& sp = t.space;
  for (std::size_t g = 0; g < h.size(); ++g) {
    const auto& target = sp.neighborhood(h.inverse(g));
    bool ok = true;
    for_each_element(sp.neighborhood(g), [&](std::size_t a) { ok = ok && target.test(h.inverse(a)); });
    if (!ok) return g;
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> find_evaluation_discontinuity(const Space& s,
                                                                                 const GroupTopology& t) {
  check_group(s, t);
  const auto& h = *t.group;
  for (std::size_t g = 0; g < h.size(); ++g) {
    for (std::size_t x = 0; x < s.size(); ++x) {
      const auto target = s.neighborhood(h[g](x));
      bool ok = true;
      for_each_element(t.space.neighborhood(g),
                       [&](std::size_t a) { ok = ok && image(h[a], s.neighborhood(x)).is_subset_of(target); });
      if (!ok) return std::pair{g, x};
    }
  }
  return std::nullopt;
}

bool is_paratopological_group(const GroupTopology& t) { return !find_composition_discontinuity(t); }

bool is_topological_group(const GroupTopology& t) {
  return is_paratopological_group(t) && !find_inversion_discontinuity(t);
}

bool is_admissible(const Space& s, const GroupTopology& t) { return !find_evaluation_discontinuity(s, t); }

std::optional<std::string> acceptability_failure(const Space& s, const GroupTopology& t) {
  check_group(s, t);
  const auto& h = *t.group;
  if (auto c = find_composition_discontinuity(t)) {
    return "composition discontinuous at (" + to_cycles(h[c->first]) + ", " + to_cycles(h[c->second]) + ")";
  }
  if (auto g = find_inversion_discontinuity(t)) return "inversion discontinuous at " + to_cycles(h[*g]);

  // h ↦ h(x) is continuous iff each minimal neighbourhood of g lands in
  // the minimal neighbourhood of g(x).
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t g = 0; g < h.size(); ++g) {
      const auto target = s.neighborhood(h[g](x));
      bool ok = true;
      for_each_element(t.space.neighborhood(g), [&](std::size_t a) { ok = ok && target.contains(h[a](x)); });
      if (!ok) {
        return "orbit map h -> h(" + std::to_string(x) + ") discontinuous at " + to_cycles(h[g]);
      }
    }
  }

  // Id_V grows with V and every neighbourhood of e contains the minimal
  // one, so it suffices to test Id_{U_b} ⊆ U_e.
  const auto& ue = t.space.neighborhood(h.identity_index());
  for (std::size_t b = 0; b < s.size(); ++b) {
    const auto outside = s.neighborhood(b).complement(s.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
      bool supported = true;
      outside.for_each([&](std::size_t x) { supported = supported && h[i](x) == x; });
      if (supported && !ue.test(i)) {
        return "Id over the neighbourhood " + to_string(s.neighborhood(b)) + " of " + std::to_string(b) +
               " contains " + to_cycles(h[i]) + " outside the minimal neighbourhood of the identity";
      }
    }
  }
  return std::nullopt;
}

bool is_acceptable(const Space& s, const GroupTopology& t) { return !acceptability_failure(s, t); }

bool is_slh(const Space& s, const HomeoGroup& h) {
  if (h.degree() != s.size()) throw Mismatch("group degree differs from the space");
  for (auto m : minimal_base(s)) {
    const auto outside = m.complement(s.size());
    std::vector<const Homeo*> supported;
    for (const auto& g : h.elements()) {
      bool fixes = true;
      outside.for_each([&](std::size_t x) { fixes = fixes && g(x) == x; });
      if (fixes) supported.push_back(&g);
    }
    bool ok = true;
    m.for_each([&](std::size_t x) {
      m.for_each([&](std::size_t y) {
        if (ok && std::none_of(supported.begin(), supported.end(), [&](const Homeo* g) { return (*g)(x) == y; })) {
          ok = false;
        }
      });
    });
    if (!ok) return false;
  }
  return true;
}

std::vector<ElementSet> left_cosets_of_stabilizer(const HomeoGroup& h, std::size_t a) {
  if (a >= h.degree()) throw InvalidArgument("base point " + std::to_string(a) + " out of range");
  std::vector<std::size_t> stab;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i](a) == a) stab.push_back(i);
  }
  std::vector<ElementSet> cosets;
  ElementSet covered(h.size());
  for (std::size_t g = 0; g < h.size(); ++g) {
    if (covered.test(g)) continue;
    ElementSet coset(h.size());
    for (auto s : stab) coset.set(h.compose(g, s));
    covered |= coset;
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

QuotientCheck quotient_check(const Space& s, const GroupTopology& t, std::size_t a) {
  check_group(s, t);
  const auto& h = *t.group;
  const auto cosets = left_cosets_of_stabilizer(h, a);

  std::vector<std::size_t> point_of(cosets.size());
  std::vector<std::size_t> coset_of(s.size(), cosets.size());
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    const auto first = cosets[c].find_first();
    point_of[c] = h[first](a);
    bool well_defined = true;
    for_each_element(cosets[c], [&](std::size_t g) { well_defined = well_defined && h[g](a) == point_of[c]; });
    if (!well_defined) return {false, "coset " + format_element_set(cosets[c]) + " moves the base point to several points", {}};
    if (coset_of[point_of[c]] != cosets.size()) {
      return {false, "two cosets map to point " + std::to_string(point_of[c]), point_of[c]};
    }
    coset_of[point_of[c]] = c;
  }
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (coset_of[x] == cosets.size()) {
      return {false, "point " + std::to_string(x) + " is not in the orbit of " + std::to_string(a), x};
    }
  }

  const auto q = quotient(t.space, cosets);
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    PointSet img;
    for_each_element(q.neighborhood(c), [&](std::size_t d) { img.insert(point_of[d]); });
    if (!img.is_subset_of(s.neighborhood(point_of[c]))) {
      return {false, "canonical map is discontinuous at coset of " + std::to_string(point_of[c]), {}};
    }
  }
  for (std::size_t x = 0; x < s.size(); ++x) {
    bool ok = true;
    s.neighborhood(x).for_each([&](std::size_t y) { ok = ok && q.neighborhood(coset_of[x]).test(coset_of[y]); });
    if (!ok) return {false, "inverse of the canonical map is discontinuous at " + std::to_string(x), {}};
  }
  return {true, "homeomorphism", {}};
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::a: return "a";
    case Condition::b: return "b";
    case Condition::c: return "c";
    case Condition::d: return "d";
    case Condition::base: return "base";
    case Condition::connected_cover: return "connected_cover";
    case Condition::regular_open_members: return "regular_open_members";
    case Condition::hereditarily_open: return "hereditarily_open";
  }
  return "?";
}

namespace {

bool included(PointSet inner, PointSet outer, bool strict) {
  return inner.is_subset_of(outer) && (!strict || inner != outer);
}

PointSet connected_union(const Space& s, const SubsetFamily& b) {
  PointSet out;
  for (auto m : b.members) {
    if (is_connected(s, m)) out |= m;
  }
  return out;
}

bool d_has_interpolant(const Space& s, const SubsetFamily& b, PointSet cl_inner, PointSet outer, bool strict) {
  return std::any_of(b.members.begin(), b.members.end(), [&](PointSet mid) {
    return included(cl_inner, mid, strict) && included(closure(s, mid), outer, strict);
  });
}

}  // namespace

bool witness_violates(const Space& s, const HomeoGroup& h, const SubsetFamily& b, const ConditionOptions& options,
                      Condition c, const Witness& w) {
  auto member = [&](std::size_t i) { return i < w.sets.size() && b.contains(w.sets[i]); };
  switch (c) {
    case Condition::a:
      return member(0) && w.homeo && *w.homeo < h.size() && !b.contains(image(h[*w.homeo], w.sets[0]));
    case Condition::b: {
      if (!member(0) || !member(1)) return false;
      auto cl = closure(s, w.sets[0]);
      if (!cl.is_subset_of(w.sets[1])) return false;
      auto diff = w.sets[1] - cl;
      return !b.contains(diff) && (options.strict_b || !diff.empty());
    }
    case Condition::c: {
      if (!member(0)) return false;
      auto cl = closure(s, w.sets[0]);
      return std::none_of(b.members.begin(), b.members.end(),
                          [&](PointSet m) { return included(cl, m, options.strict_inclusion); });
    }
    case Condition::d: {
      if (!member(0) || !member(1)) return false;
      auto cl = closure(s, w.sets[0]);
      return included(cl, w.sets[1], options.strict_inclusion) &&
             !d_has_interpolant(s, b, cl, w.sets[1], options.strict_inclusion);
    }
    case Condition::base: {
      if (w.sets.size() != 2 || w.sets[0].size() != 1) return false;
      auto x = w.sets[0].first();
      return x < s.size() && w.sets[1] == s.neighborhood(x) &&
             std::none_of(b.members.begin(), b.members.end(),
                          [&](PointSet m) { return m.contains(x) && m.is_subset_of(s.neighborhood(x)); });
    }
    case Condition::connected_cover:
      return member(0) && !closure(s, w.sets[0]).is_subset_of(connected_union(s, b));
    case Condition::regular_open_members:
      return member(0) && !is_regular_open(s, w.sets[0]);
    case Condition::hereditarily_open:
      return member(0) && w.sets.size() == 2 && !w.sets[1].empty() && s.is_open(w.sets[1]) &&
             w.sets[1].is_subset_of(w.sets[0]) && !b.contains(w.sets[1]);
  }
  return false;
}

ConditionReport check_family_conditions(const Space& s, const HomeoGroup& h, const SubsetFamily& b,
                                        const ConditionOptions& options) {
  if (b.n != s.size() || h.degree() != s.size()) throw Mismatch("family, group and space disagree on point count");
  for (auto m : b.members) {
    if (!s.is_open(m)) throw InvalidArgument("family member " + to_string(m) + " is not open");
  }
  ConditionReport r;
  auto set = [&](Condition c, Witness w) {
    auto& slot = r.witnesses[static_cast<std::size_t>(c)];
    if (!slot) slot = std::move(w);
  };
  const auto& members = b.members;
  std::vector<PointSet> cl(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) cl[i] = closure(s, members[i]);

  for (auto v : members) {
    for (std::size_t i = 0; i < h.size() && r.holds(Condition::a); ++i) {
      if (!b.contains(image(h[i], v))) set(Condition::a, {{v}, i});
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto w : members) {
      if (!cl[i].is_subset_of(w)) continue;
      auto diff = w - cl[i];
      if (!b.contains(diff) && (options.strict_b || !diff.empty())) set(Condition::b, {{members[i], w}, {}});
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    bool found = std::any_of(members.begin(), members.end(),
                             [&](PointSet m) { return included(cl[i], m, options.strict_inclusion); });
    if (!found) set(Condition::c, {{members[i]}, {}});
    for (auto outer : members) {
      if (included(cl[i], outer, options.strict_inclusion) &&
          !d_has_interpolant(s, b, cl[i], outer, options.strict_inclusion)) {
        set(Condition::d, {{members[i], outer}, {}});
      }
    }
  }
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (!b.contains(s.neighborhood(x))) set(Condition::base, {{PointSet::singleton(x), s.neighborhood(x)}, {}});
  }
  const auto covered = connected_union(s, b);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!cl[i].is_subset_of(covered)) set(Condition::connected_cover, {{members[i]}, {}});
    if (!is_regular_open(s, members[i])) set(Condition::regular_open_members, {{members[i]}, {}});
  }
  for (auto v : members) {
    for (auto o : s.opens()) {
      if (!o.empty() && o.is_subset_of(v) && !b.contains(o)) set(Condition::hereditarily_open, {{v, o}, {}});
    }
  }
  return r;
}

bool check_connected_cover(const Space& s, const SubsetFamily& b) {
  const auto covered = connected_union(s, b);
  return std::all_of(b.members.begin(), b.members.end(),
                     [&](PointSet v) { return closure(s, v).is_subset_of(covered); });
}

std::string describe(Condition c, const Witness& w, const HomeoGroup& h) {
  std::string out;
  for (auto set : w.sets) out += (out.empty() ? "" : " ") + to_string(set);
  if (w.homeo) out += " under " + to_cycles(h[*w.homeo]);
  if (c == Condition::b) out = "V, W = " + out;
  if (c == Condition::d) out = "B, B' = " + out;
  return out;
}

}  // namespace settop
