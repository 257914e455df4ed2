#include "settop/set_open.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "settop/errors.hpp"

namespace settop {

namespace {

ElementSet full_set(std::size_t m) {
  ElementSet s(m);
  s.set();
  return s;
}

template <class F>
void for_each_element(const ElementSet& s, F&& f) {
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) f(i);
}

}  // namespace

ElementSpace ElementSpace::from_subbase(std::size_t m, std::span<const ElementSet> subbase) {
  std::vector<ElementSet> nbhd(m, full_set(m));
  for (const auto& member : subbase) {
    if (member.size() != m) throw Mismatch("subbase member over a different element count");
    for_each_element(member, [&](std::size_t g) { nbhd[g] &= member; });
  }
  return ElementSpace(std::move(nbhd));
}

ElementSpace ElementSpace::from_neighborhoods(std::vector<ElementSet> nbhd) {
  const auto m = nbhd.size();
  for (std::size_t g = 0; g < m; ++g) {
    if (nbhd[g].size() != m || !nbhd[g].test(g)) {
      throw InvalidSpace("neighbourhood of element " + std::to_string(g) + " is malformed");
    }
    for_each_element(nbhd[g], [&](std::size_t k) {
      if (!nbhd[k].is_subset_of(nbhd[g])) {
        throw InvalidSpace("element neighbourhoods are not transitive at " + std::to_string(g) + ", " +
                           std::to_string(k));
      }
    });
  }
  return ElementSpace(std::move(nbhd));
}

bool ElementSpace::is_open(const ElementSet& a) const {
  bool open = a.size() == size();
  if (!open) return false;
  for_each_element(a, [&](std::size_t g) { open = open && nbhd_[g].is_subset_of(a); });
  return open;
}

ElementSet ElementSpace::open_hull(const ElementSet& a) const {
  ElementSet out(size());
  for_each_element(a, [&](std::size_t g) { out |= nbhd_[g]; });
  return out;
}

bool ElementSpace::refines(const ElementSpace& other) const {
  if (other.size() != size()) return false;
  for (std::size_t g = 0; g < size(); ++g) {
    if (!nbhd_[g].is_subset_of(other.nbhd_[g])) return false;
  }
  return true;
}

std::optional<std::vector<ElementSet>> ElementSpace::opens(std::size_t limit) const {
  std::set<ElementSet> seen{ElementSet(size())};
  std::vector<ElementSet> out{ElementSet(size())};
  for (const auto& u : minimal_base()) {
    const auto count = out.size();
    for (std::size_t i = 0; i < count; ++i) {
      auto next = out[i] | u;
      if (seen.insert(next).second) {
        if (seen.size() > limit) return std::nullopt;
        out.push_back(std::move(next));
      }
    }
  }
  // dynamic_bitset orders by numeric value, matching PointSet order.
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementSet> ElementSpace::minimal_base() const {
  auto out = nbhd_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Space ElementSpace::as_space(std::size_t max_points) const {
  if (size() > std::min(max_points, kBitmaskWidth)) {
    throw BoundExceeded("group of order " + std::to_string(size()) + " does not fit a " +
                        std::to_string(std::min(max_points, kBitmaskWidth)) + "-point space");
  }
  std::vector<PointSet> nbhd(size());
  for (std::size_t g = 0; g < size(); ++g) nbhd[g] = PointSet(nbhd_[g].to_ulong());
  return Space::from_neighborhoods(size(), std::move(nbhd), max_points);
}

ElementSpace quotient(const ElementSpace& t, std::span<const ElementSet> blocks) {
  const auto m = t.size();
  std::vector<std::size_t> block_of(m, blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].size() != m || blocks[b].none()) throw InvalidArgument("malformed partition block");
    for_each_element(blocks[b], [&](std::size_t g) {
      if (block_of[g] != blocks.size()) throw InvalidArgument("element " + std::to_string(g) + " lies in two blocks");
      block_of[g] = b;
    });
  }
  for (std::size_t g = 0; g < m; ++g) {
    if (block_of[g] == blocks.size()) throw InvalidArgument("element " + std::to_string(g) + " is in no block");
  }
  std::vector<ElementSet> nbhd(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    ElementSet q(blocks.size());
    q.set(b);
    while (true) {
      ElementSet pre(m);
      for_each_element(q, [&](std::size_t c) { pre |= blocks[c]; });
      ElementSet next(blocks.size());
      for_each_element(t.open_hull(pre), [&](std::size_t g) { next.set(block_of[g]); });
      if (next == q) break;
      q = std::move(next);
    }
    nbhd[b] = std::move(q);
  }
  return ElementSpace::from_neighborhoods(std::move(nbhd));
}

namespace {
constexpr std::array<std::pair<Mode, std::string_view>, 6> kModeNames{{
    {Mode::b_open, "b_open"},
    {Mode::closure_b, "closure_b"},
    {Mode::compact_open, "compact_open"},
    {Mode::closed_open, "closed_open"},
    {Mode::zero_cozero, "zero_cozero"},
    {Mode::regular_open, "regular_open"},
}};
}  // namespace

std::string_view to_string(Mode m) {
  for (const auto& [mode, name] : kModeNames) {
    if (mode == m) return name;
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view name) {
  for (const auto& [mode, n] : kModeNames) {
    if (n == name) return mode;
  }
  return std::nullopt;
}

bool needs_family(Mode m) { return m == Mode::b_open || m == Mode::closure_b; }

ElementSet bracket(const HomeoGroup& h, PointSet u, PointSet v) {
  ElementSet out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (image(h[i], u).is_subset_of(v)) out.set(i);
  }
  return out;
}

std::vector<std::pair<PointSet, PointSet>> subbase_pairs(const Space& s, Mode mode, const SubsetFamily* family) {
  if (needs_family(mode) != (family != nullptr)) {
    throw InvalidArgument(std::string("mode ") + std::string(to_string(mode)) +
                          (family ? " takes no family" : " requires a family"));
  }
  std::vector<PointSet> sources;
  std::vector<PointSet> targets = s.opens();
  switch (mode) {
    case Mode::b_open:
    case Mode::closure_b:
      if (family->n != s.size()) throw Mismatch("family is over a different number of points");
      for (auto b : family->members) {
        if (!s.is_open(b)) throw InvalidArgument("family member " + to_string(b) + " is not open");
        sources.push_back(mode == Mode::b_open ? b : closure(s, b));
      }
      break;
    case Mode::compact_open:
      for (std::uint64_t bits = 0; bits <= s.full().bits(); ++bits) sources.push_back(PointSet(bits));
      break;
    case Mode::closed_open:
      sources = closed_sets(s);
      break;
    case Mode::zero_cozero:
      sources = zero_sets(s);
      targets = sources;
      break;
    case Mode::regular_open:
      sources = regular_opens(s);
      break;
  }
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  std::vector<std::pair<PointSet, PointSet>> out;
  out.reserve(sources.size() * targets.size());
  for (auto u : sources) {
    for (auto v : targets) out.emplace_back(u, v);
  }
  return out;
}

namespace {

GroupTopology build(const Space& s, std::shared_ptr<const HomeoGroup> h, Mode mode, const SubsetFamily* family) {
  if (!h || h->degree() != s.size()) throw Mismatch("group does not act on this space");
  const auto pairs = subbase_pairs(s, mode, family);
  // Images of each source set under every element, computed once per source.
  std::vector<ElementSet> brackets;
  brackets.reserve(pairs.size());
  std::vector<PointSet> images(h->size());
  std::optional<PointSet> current;
  for (const auto& [u, v] : pairs) {
    if (!current || *current != u) {
      for (std::size_t i = 0; i < h->size(); ++i) images[i] = image((*h)[i], u);
      current = u;
    }
    ElementSet b(h->size());
    for (std::size_t i = 0; i < h->size(); ++i) {
      if (images[i].is_subset_of(v)) b.set(i);
    }
    brackets.push_back(std::move(b));
  }
  return topology_from_brackets(std::move(h), brackets, std::string(to_string(mode)));
}

}  // namespace

GroupTopology set_open_topology(const Space& s, std::shared_ptr<const HomeoGroup> h, Mode mode) {
  return build(s, std::move(h), mode, nullptr);
}

GroupTopology set_open_topology(const Space& s, std::shared_ptr<const HomeoGroup> h, Mode mode,
                                const SubsetFamily& family) {
  return build(s, std::move(h), mode, &family);
}

GroupTopology topology_from_brackets(std::shared_ptr<const HomeoGroup> h, std::span<const ElementSet> brackets,
                                     std::string provenance) {
  const auto m = h->size();
  return GroupTopology{std::move(h), ElementSpace::from_subbase(m, brackets), std::move(provenance)};
}

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::equal: return "equal";
    case Comparison::finer: return "finer";
    case Comparison::coarser: return "coarser";
    case Comparison::incomparable: return "incomparable";
  }
  return "?";
}

Comparison compare_topologies(const GroupTopology& t1, const GroupTopology& t2) {
  if (t1.group != t2.group && !(t1.group && t2.group && *t1.group == *t2.group)) {
    throw Mismatch("topologies are over different groups");
  }
  const bool ge = t1.space.refines(t2.space);
  const bool le = t2.space.refines(t1.space);
  if (ge && le) return Comparison::equal;
  if (ge) return Comparison::finer;
  if (le) return Comparison::coarser;
  return Comparison::incomparable;
}

std::string format_element_set(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for_each_element(s, [&](std::size_t g) {
    if (!first) out += ' ';
    out += std::to_string(g);
    first = false;
  });
  return out + "}";
}

std::string format_group_topology(const GroupTopology& t, std::size_t open_limit) {
  const auto& h = *t.group;
  std::string out = "topology: " + t.provenance + "\n";
  out += "group order: " + std::to_string(h.size()) + "\n";
  out += "elements:\n";
  for (std::size_t i = 0; i < h.size(); ++i) out += "  " + std::to_string(i) + ": " + to_cycles(h[i]) + "\n";
  auto base = t.space.minimal_base();
  out += "minimal base:\n";
  for (const auto& b : base) out += "  " + format_element_set(b) + "\n";
  if (auto opens = t.space.opens(open_limit)) {
    out += "opens (" + std::to_string(opens->size()) + "):\n";
    for (const auto& o : *opens) out += "  " + format_element_set(o) + "\n";
  } else {
    out += "opens: more than " + std::to_string(open_limit) + ", omitted\n";
  }
  return out;
}

}  // namespace settop
