#include "settop/homeo_group.hpp"

#include <algorithm>
#include <numeric>

#include "settop/errors.hpp"

namespace settop {

namespace {
constexpr std::size_t kMaxTabulatedOrder = 1024;
}

Homeo Homeo::identity(std::size_t n) {
  Homeo h;
  h.perm.resize(n);
  std::iota(h.perm.begin(), h.perm.end(), std::uint8_t{0});
  return h;
}

PointSet image(const Homeo& h, PointSet a) {
  PointSet out;
  a.for_each([&](std::size_t x) { out.insert(h.perm[x]); });
  return out;
}

Homeo compose(const Homeo& a, const Homeo& b) {
  Homeo out;
  out.perm.resize(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out.perm[x] = a.perm[b.perm[x]];
  return out;
}

Homeo inverse(const Homeo& h) {
  Homeo out;
  out.perm.resize(h.size());
  for (std::size_t x = 0; x < h.size(); ++x) out.perm[h.perm[x]] = static_cast<std::uint8_t>(x);
  return out;
}

std::string to_cycles(const Homeo& h) {
  std::string out;
  std::vector<bool> seen(h.size(), false);
  for (std::size_t start = 0; start < h.size(); ++start) {
    if (seen[start] || h.perm[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = h.perm[x];
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

bool is_homeomorphism(const Space& s, const Homeo& h) {
  if (h.size() != s.size()) return false;
  std::vector<bool> hit(s.size(), false);
  for (auto p : h.perm) {
    if (p >= s.size() || hit[p]) return false;
    hit[p] = true;
  }
  // Opens are finite and h is injective on them, so mapping opens into
  // opens already makes h a bijection of the open family.
  const auto& opens = s.opens();
  return std::all_of(opens.begin(), opens.end(),
                     [&](PointSet o) { return std::binary_search(opens.begin(), opens.end(), image(h, o)); });
}

HomeoGroup HomeoGroup::from_elements(std::size_t degree, std::vector<Homeo> elements) {
  HomeoGroup g;
  g.degree_ = degree;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (const auto& e : elements) {
    if (e.size() != degree) throw InvalidArgument("group element has the wrong degree");
  }
  g.elements_ = std::move(elements);
  auto id = g.index_of(Homeo::identity(degree));
  if (!id) throw InvalidArgument("element set lacks the identity");
  g.identity_ = *id;

  const auto m = g.elements_.size();
  g.inverse_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto inv = g.index_of(settop::inverse(g.elements_[i]));
    if (!inv) throw InvalidArgument("element set is not closed under inverse");
    g.inverse_[i] = *inv;
  }
  if (m <= kMaxTabulatedOrder) {
    g.compose_.resize(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        auto k = g.index_of(settop::compose(g.elements_[i], g.elements_[j]));
        if (!k) throw InvalidArgument("element set is not closed under composition");
        g.compose_[i * m + j] = static_cast<std::uint32_t>(*k);
      }
    }
  }
  return g;
}

std::size_t HomeoGroup::compose(std::size_t i, std::size_t j) const {
  if (!compose_.empty()) return compose_[i * elements_.size() + j];
  return *index_of(settop::compose(elements_[i], elements_[j]));
}

std::optional<std::size_t> HomeoGroup::index_of(const Homeo& h) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), h);
  if (it == elements_.end() || *it != h) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

HomeoGroup enumerate_homeomorphisms(const Space& s, std::size_t max_points) {
  const auto n = s.size();
  if (n > max_points) {
    throw BoundExceeded("homeomorphism search is bounded to " + std::to_string(max_points) + " points, got " +
                        std::to_string(n));
  }
  std::vector<Homeo> found;
  Homeo h = Homeo::identity(n);
  do {
    if (is_homeomorphism(s, h)) found.push_back(h);
  } while (std::next_permutation(h.perm.begin(), h.perm.end()));
  return HomeoGroup::from_elements(n, std::move(found));
}

std::vector<std::vector<PointSet>> orbits_of_opens(const Space& s, const HomeoGroup& h) {
  std::vector<std::vector<PointSet>> out;
  std::vector<bool> done(s.opens().size(), false);
  const auto& opens = s.opens();
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (done[i]) continue;
    std::vector<PointSet> orbit;
    for (const auto& g : h.elements()) orbit.push_back(image(g, opens[i]));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (auto o : orbit) {
      auto it = std::lower_bound(opens.begin(), opens.end(), o);
      if (it == opens.end() || *it != o) throw Mismatch("group does not act on the open family");
      done[static_cast<std::size_t>(it - opens.begin())] = true;
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<PointSet> point_orbits(const HomeoGroup& h) {
  std::vector<PointSet> out;
  PointSet covered;
  for (std::size_t x = 0; x < h.degree(); ++x) {
    if (covered.contains(x)) continue;
    PointSet orbit;
    for (const auto& g : h.elements()) orbit.insert(g(x));
    covered |= orbit;
    out.push_back(orbit);
  }
  return out;
}

HomeoGroup stabilizer(const HomeoGroup& h, std::size_t a) {
  if (a >= h.degree()) throw InvalidArgument("stabilizer point " + std::to_string(a) + " out of range");
  std::vector<Homeo> fixing;
  for (const auto& g : h.elements()) {
    if (g(a) == a) fixing.push_back(g);
  }
  return HomeoGroup::from_elements(h.degree(), std::move(fixing));
}

bool is_homogeneous(const Space& s, const HomeoGroup& h) {
  if (h.degree() != s.size()) throw Mismatch("group degree differs from the space");
  return s.size() == 0 || point_orbits(h).size() == 1;
}

}  // namespace settop
