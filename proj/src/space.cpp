#include "settop/space.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "settop/errors.hpp"

namespace settop {

std::string to_string(PointSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t p) {
    if (!first) out += ' ';
    out += std::to_string(p);
    first = false;
  });
  return out + "}";
}

std::string to_line(PointSet s) {
  if (s.empty()) return "-";
  std::string out;
  s.for_each([&](std::size_t p) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p);
  });
  return out;
}

namespace {

void check_point_count(std::size_t n, std::size_t max_points) {
  if (n > std::min(max_points, kBitmaskWidth)) {
    throw BoundExceeded("space has " + std::to_string(n) + " points, bound is " +
                        std::to_string(std::min(max_points, kBitmaskWidth)));
  }
}

std::vector<PointSet> neighborhoods_of(std::size_t n, const std::vector<PointSet>& opens) {
  std::vector<PointSet> nbhd(n, PointSet::full(n));
  for (auto o : opens) o.for_each([&](std::size_t x) { nbhd[x] &= o; });
  return nbhd;
}

}  // namespace

Space::Space() : n_(0), opens_{PointSet{}}, nbhd_{} {}

std::vector<PointSet> all_unions(std::span<const PointSet> generators) {
  std::unordered_set<std::uint64_t> seen{0};
  std::vector<PointSet> out{PointSet{}};
  for (auto g : generators) {
    const auto count = out.size();
    for (std::size_t i = 0; i < count; ++i) {
      auto u = out[i] | g;
      if (seen.insert(u.bits()).second) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Space Space::from_opens(std::size_t n, std::vector<PointSet> opens, std::size_t max_points) {
  check_point_count(n, max_points);
  const auto full = PointSet::full(n);
  for (auto o : opens) {
    if (!o.is_subset_of(full)) throw InvalidSpace("open set " + to_string(o) + " is not a subset of the points");
  }
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  if (!std::binary_search(opens.begin(), opens.end(), PointSet{})) throw InvalidSpace("opens do not contain the empty set");
  if (!std::binary_search(opens.begin(), opens.end(), full)) throw InvalidSpace("opens do not contain the full set");

  auto nbhd = neighborhoods_of(n, opens);
  auto generated = all_unions(nbhd);
  if (generated != opens) {
    // Some pairwise union or intersection escapes the family; find it.
    for (std::size_t i = 0; i < opens.size(); ++i) {
      for (std::size_t j = i + 1; j < opens.size(); ++j) {
        auto u = opens[i] | opens[j];
        if (!std::binary_search(opens.begin(), opens.end(), u)) {
          throw InvalidSpace("opens not closed under union: " + to_string(opens[i]) + " ∪ " + to_string(opens[j]) +
                             " = " + to_string(u) + " is missing");
        }
        auto m = opens[i] & opens[j];
        if (!std::binary_search(opens.begin(), opens.end(), m)) {
          throw InvalidSpace("opens not closed under intersection: " + to_string(opens[i]) + " ∩ " +
                             to_string(opens[j]) + " = " + to_string(m) + " is missing");
        }
      }
    }
    throw InvalidSpace("opens do not form a topology");
  }
  return Space(n, std::move(opens), std::move(nbhd));
}

Space Space::from_neighborhoods(std::size_t n, std::vector<PointSet> nbhd, std::size_t max_points) {
  check_point_count(n, max_points);
  if (nbhd.size() != n) throw InvalidSpace("expected one neighbourhood per point");
  const auto full = PointSet::full(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (!nbhd[x].contains(x) || !nbhd[x].is_subset_of(full)) {
      throw InvalidSpace("neighbourhood of " + std::to_string(x) + " is malformed: " + to_string(nbhd[x]));
    }
    nbhd[x].for_each([&](std::size_t y) {
      if (!nbhd[y].is_subset_of(nbhd[x])) {
        throw InvalidSpace("neighbourhoods are not transitive at " + std::to_string(x) + ", " + std::to_string(y));
      }
    });
  }
  auto opens = all_unions(nbhd);
  return Space(n, std::move(opens), std::move(nbhd));
}

bool Space::is_open(PointSet a) const {
  bool open = a.is_subset_of(full());
  a.for_each([&](std::size_t x) { open = open && nbhd_[x].is_subset_of(a); });
  return open;
}

PointSet Space::open_hull(PointSet a) const {
  PointSet out;
  a.for_each([&](std::size_t x) { out |= nbhd_[x]; });
  return out;
}

PointSet interior(const Space& s, PointSet a) {
  PointSet out;
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (s.neighborhood(x).is_subset_of(a)) out |= s.neighborhood(x);
  }
  return out;
}

PointSet closure(const Space& s, PointSet a) {
  const auto n = s.size();
  return interior(s, a.complement(n)).complement(n);
}

bool is_regular_open(const Space& s, PointSet w) { return interior(s, closure(s, w)) == w; }

std::vector<PointSet> regular_opens(const Space& s) {
  std::vector<PointSet> out;
  for (auto o : s.opens()) {
    if (is_regular_open(s, o)) out.push_back(o);
  }
  return out;
}

std::vector<PointSet> closed_sets(const Space& s) {
  std::vector<PointSet> out;
  out.reserve(s.opens().size());
  for (auto o : s.opens()) out.push_back(o.complement(s.size()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointSet> connected_components(const Space& s, PointSet a) {
  // In a finite space two points of A are in one component iff they are
  // linked by a chain of specialization-comparable points of A.
  std::vector<PointSet> out;
  PointSet remaining = a;
  while (!remaining.empty()) {
    PointSet comp = PointSet::singleton(remaining.first());
    PointSet frontier = comp;
    while (!frontier.empty()) {
      PointSet next;
      frontier.for_each([&](std::size_t x) {
        next |= s.neighborhood(x) & a;
        remaining.for_each([&](std::size_t y) {
          if (s.neighborhood(y).contains(x)) next.insert(y);
        });
      });
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    remaining = remaining - comp;
  }
  return out;
}

bool is_connected(const Space& s, PointSet a) { return connected_components(s, a).size() == 1; }

SpaceClassification classify(const Space& s) {
  const auto n = s.size();
  SpaceClassification c;
  c.t0 = true;
  c.t1 = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (s.neighborhood(x) != PointSet::singleton(x)) c.t1 = false;
    for (std::size_t y = x + 1; y < n; ++y) {
      if (s.neighborhood(x).contains(y) && s.neighborhood(y).contains(x)) c.t0 = false;
    }
  }

  c.regular = true;
  for (auto f : closed_sets(s)) {
    const auto hull = s.open_hull(f);
    for (std::size_t x = 0; x < n && c.regular; ++x) {
      if (!f.contains(x) && s.neighborhood(x).intersects(hull)) c.regular = false;
    }
  }

  // A family is a base iff it squeezes a member between each x and its
  // minimal neighbourhood.
  const auto ro = regular_opens(s);
  std::vector<PointSet> clopen;
  for (auto o : s.opens()) {
    if (s.is_closed(o)) clopen.push_back(o);
  }
  auto squeezes = [&](const std::vector<PointSet>& family) {
    for (std::size_t x = 0; x < n; ++x) {
      bool found = std::any_of(family.begin(), family.end(), [&](PointSet m) {
        return m.contains(x) && m.is_subset_of(s.neighborhood(x));
      });
      if (!found) return false;
    }
    return true;
  };
  c.semiregular = squeezes(ro);
  c.zero_dimensional = squeezes(clopen);
  return c;
}

Space product(const Space& s1, const Space& s2, std::size_t max_points) {
  const auto n1 = s1.size();
  const auto n2 = s2.size();
  if (n1 * n2 > std::min(max_points, kBitmaskWidth)) {
    throw BoundExceeded("product of " + std::to_string(n1) + " and " + std::to_string(n2) +
                        " points exceeds the bitmask width " + std::to_string(std::min(max_points, kBitmaskWidth)));
  }
  std::vector<PointSet> nbhd(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      PointSet box;
      s1.neighborhood(i).for_each([&](std::size_t a) {
        s2.neighborhood(j).for_each([&](std::size_t b) { box.insert(a * n2 + b); });
      });
      nbhd[i * n2 + j] = box;
    }
  }
  return Space::from_neighborhoods(n1 * n2, std::move(nbhd), max_points);
}

namespace {

// Packs the points of `a` that lie in `domain` into ranks within `domain`.
PointSet compress(PointSet a, PointSet domain) {
  PointSet out;
  std::size_t rank = 0;
  domain.for_each([&](std::size_t x) {
    if (a.contains(x)) out.insert(rank);
    ++rank;
  });
  return out;
}

}  // namespace

Space subspace(const Space& s, PointSet a) {
  a &= s.full();
  std::vector<PointSet> nbhd;
  a.for_each([&](std::size_t x) { nbhd.push_back(compress(s.neighborhood(x) & a, a)); });
  return Space::from_neighborhoods(a.size(), std::move(nbhd), kBitmaskWidth);
}

Space quotient(const Space& s, std::span<const PointSet> blocks) {
  const auto n = s.size();
  std::vector<std::size_t> block_of(n, blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InvalidArgument("partition has an empty block");
    if (!blocks[b].is_subset_of(s.full())) throw InvalidArgument("partition block " + to_string(blocks[b]) + " leaves the space");
    blocks[b].for_each([&](std::size_t x) {
      if (block_of[x] != blocks.size()) throw InvalidArgument("point " + std::to_string(x) + " lies in two blocks");
      block_of[x] = b;
    });
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (block_of[x] == blocks.size()) throw InvalidArgument("point " + std::to_string(x) + " is in no block");
  }

  auto preimage = [&](PointSet q) {
    PointSet p;
    q.for_each([&](std::size_t b) { p |= blocks[b]; });
    return p;
  };
  std::vector<PointSet> nbhd(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    PointSet q = PointSet::singleton(b);
    while (true) {
      PointSet next;
      s.open_hull(preimage(q)).for_each([&](std::size_t x) { next.insert(block_of[x]); });
      if (next == q) break;
      q = next;
    }
    nbhd[b] = q;
  }
  return Space::from_neighborhoods(blocks.size(), std::move(nbhd), kBitmaskWidth);
}

std::vector<PointSet> zero_sets(const Space& s) {
  auto comps = connected_components(s, s.full());
  return all_unions(comps);
}

std::vector<PointSet> minimal_base(const Space& s) {
  auto out = s.neighborhoods();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PointSet relabel(PointSet a, std::span<const std::size_t> perm) {
  PointSet out;
  a.for_each([&](std::size_t x) { out.insert(perm[x]); });
  return out;
}

Space relabel(const Space& s, std::span<const std::size_t> perm) {
  std::vector<PointSet> nbhd(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) nbhd[perm[x]] = relabel(s.neighborhood(x), perm);
  return Space::from_neighborhoods(s.size(), std::move(nbhd), kBitmaskWidth);
}

namespace {

std::string trim(const std::string& line) {
  auto b = line.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = line.find_last_not_of(" \t\r");
  return line.substr(b, e - b + 1);
}

PointSet parse_set_line(const std::string& line, std::size_t n) {
  if (line == "-") return {};
  std::istringstream in(line);
  PointSet out;
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    unsigned long p = 0;
    try {
      p = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      throw InvalidArgument("bad point index '" + tok + "'");
    }
    if (pos != tok.size()) throw InvalidArgument("bad point index '" + tok + "'");
    if (p >= n) throw InvalidArgument("point " + tok + " out of range for n = " + std::to_string(n));
    out.insert(p);
  }
  return out;
}

std::size_t parse_count_line(const std::string& line) {
  std::istringstream in(line);
  std::string tag;
  long long count = -1;
  std::string rest;
  if (!(in >> tag >> count) || tag != "n" || count < 0 || (in >> rest)) {
    throw InvalidArgument("expected 'n <count>', got '" + line + "'");
  }
  return static_cast<std::size_t>(count);
}

}  // namespace

Space parse_space(const std::string& text, std::size_t max_points) {
  std::istringstream in(text);
  std::string raw;
  std::optional<std::size_t> n;
  std::vector<PointSet> opens;
  while (std::getline(in, raw)) {
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!n) {
      n = parse_count_line(line);
      if (*n > std::min(max_points, kBitmaskWidth)) {
        throw BoundExceeded("space has " + std::to_string(*n) + " points, bound is " +
                            std::to_string(std::min(max_points, kBitmaskWidth)));
      }
      continue;
    }
    if (line.front() == 'n') throw InvalidArgument("more than one space in input");
    opens.push_back(parse_set_line(line, *n));
  }
  if (!n) throw InvalidArgument("missing 'n <count>' line");
  opens.push_back(PointSet{});
  opens.push_back(PointSet::full(*n));
  return Space::from_opens(*n, std::move(opens), max_points);
}

std::vector<Space> parse_spaces(const std::string& text, std::size_t max_points) {
  std::vector<Space> out;
  std::istringstream in(text);
  std::string raw;
  std::string stanza;
  bool has_count = false;
  while (std::getline(in, raw)) {
    auto line = trim(raw);
    if (!line.empty() && line.front() == 'n') {
      if (has_count) out.push_back(parse_space(stanza, max_points));
      stanza.clear();
      has_count = true;
    }
    stanza += raw + "\n";
  }
  if (has_count) out.push_back(parse_space(stanza, max_points));
  return out;
}

std::string format_space(const Space& s) {
  std::string out = "n " + std::to_string(s.size()) + "\n";
  for (auto o : s.opens()) out += to_line(o) + "\n";
  return out;
}

std::vector<PointSet> parse_set_list(const std::string& text, std::size_t n) {
  std::istringstream in(text);
  std::string raw;
  std::vector<PointSet> out;
  bool first = true;
  while (std::getline(in, raw)) {
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (first && line.front() == 'n') {
      if (parse_count_line(line) != n) throw Mismatch("family is over a different number of points");
      first = false;
      continue;
    }
    first = false;
    out.push_back(parse_set_line(line, n));
  }
  return out;
}

}  // namespace settop
