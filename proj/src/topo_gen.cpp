#include "settop/topo_gen.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <unordered_set>

#include "settop/errors.hpp"

namespace settop {

SubsetFamily::SubsetFamily(std::size_t points, std::vector<PointSet> sets) : n(points), members(std::move(sets)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool SubsetFamily::contains(PointSet s) const { return std::binary_search(members.begin(), members.end(), s); }

std::string to_string(const SubsetFamily& f) {
  std::string out;
  for (auto m : f.members) {
    if (!out.empty()) out += ' ';
    out += to_string(m);
  }
  return out.empty() ? "(empty family)" : out;
}

Space topology_from_subbase(const SubbaseSpec& spec, std::size_t max_points) {
  const auto full = PointSet::full(spec.n);
  std::vector<PointSet> base{full};
  std::unordered_set<std::uint64_t> seen{full.bits()};
  std::vector<PointSet> work;
  for (auto m : spec.members) {
    if (!m.is_subset_of(full)) throw InvalidArgument("subbase member " + to_string(m) + " leaves the space");
    if (seen.insert(m.bits()).second) {
      base.push_back(m);
      work.push_back(m);
    }
  }
  while (!work.empty()) {
    auto b = work.back();
    work.pop_back();
    const auto count = base.size();
    for (std::size_t i = 0; i < count; ++i) {
      auto m = b & base[i];
      if (seen.insert(m.bits()).second) {
        base.push_back(m);
        work.push_back(m);
      }
    }
  }
  return Space::from_opens(spec.n, all_unions(base), max_points);
}

SubsetFamily close_under_finite_unions(const SubsetFamily& f) {
  std::vector<PointSet> out;
  std::unordered_set<std::uint64_t> seen;
  for (auto m : f.members) {
    const auto count = out.size();
    for (std::size_t i = 0; i < count; ++i) {
      auto u = out[i] | m;
      if (seen.insert(u.bits()).second) out.push_back(u);
    }
    if (seen.insert(m.bits()).second) out.push_back(m);
  }
  return SubsetFamily(f.n, std::move(out));
}

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("SETTOP_MAX_POINTS")) {
    char* end = nullptr;
    auto v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      limits.max_labeled = v;
      limits.max_up_to_iso = v;
    }
  }
  return limits;
}

namespace {

// Backtracking over minimal neighbourhoods U_0..U_{n-1}. A complete
// assignment is a topology iff y ∈ U_x implies U_y ⊆ U_x for every pair.
class PreorderSearch {
 public:
  PreorderSearch(std::size_t n, bool sorted_sizes, const std::function<void(const std::vector<PointSet>&)>& visit)
      : n_(n), sorted_sizes_(sorted_sizes), visit_(visit), nbhd_(n) {}

  void run() { assign(0); }

 private:
  void assign(std::size_t x) {
    if (x == n_) {
      visit_(nbhd_);
      return;
    }
    const auto others = PointSet::full(n_) - PointSet::singleton(x);
    // Walk every subset of `others`, including ∅.
    std::uint64_t sub = 0;
    do {
      PointSet u = PointSet(sub) | PointSet::singleton(x);
      if (consistent(x, u)) {
        nbhd_[x] = u;
        assign(x + 1);
      }
      sub = (sub - others.bits()) & others.bits();
    } while (sub != 0);
  }

  bool consistent(std::size_t x, PointSet u) const {
    if (sorted_sizes_ && x > 0 && u.size() < nbhd_[x - 1].size()) return false;
    for (std::size_t y = 0; y < x; ++y) {
      if (u.contains(y) && !nbhd_[y].is_subset_of(u)) return false;
      if (nbhd_[y].contains(x) && !u.is_subset_of(nbhd_[y])) return false;
    }
    return true;
  }

  std::size_t n_;
  bool sorted_sizes_;
  const std::function<void(const std::vector<PointSet>&)>& visit_;
  std::vector<PointSet> nbhd_;
};

bool stream_order(const Space& a, const Space& b) {
  if (a.opens().size() != b.opens().size()) return a.opens().size() < b.opens().size();
  return a.opens() < b.opens();
}

}  // namespace

void for_each_labeled_topology(std::size_t n, const std::function<void(const Space&)>& visit) {
  std::function<void(const std::vector<PointSet>&)> emit = [&](const std::vector<PointSet>& nbhd) {
    visit(Space::from_neighborhoods(n, nbhd, kBitmaskWidth));
  };
  PreorderSearch(n, false, emit).run();
}

std::vector<Space> enumerate_topologies(std::size_t n, bool up_to_iso, const EnumerationLimits& limits) {
  const auto bound = up_to_iso ? limits.max_up_to_iso : limits.max_labeled;
  if (n > bound) {
    throw BoundExceeded("enumeration needs n <= " + std::to_string(bound) + ", got " + std::to_string(n));
  }
  if (n == 0) return {Space()};
  std::vector<Space> out;
  if (!up_to_iso) {
    for_each_labeled_topology(n, [&](const Space& s) { out.push_back(s); });
  } else {
    // Every class has a labelling whose points are sorted by
    // (|minimal neighbourhood|, |closure of the point|); only those are
    // canonicalised.
    std::set<CanonicalForm> classes;
    std::function<void(const std::vector<PointSet>&)> emit = [&](const std::vector<PointSet>& nbhd) {
      std::vector<std::size_t> up(n, 0);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) up[x] += nbhd[y].contains(x) ? 1 : 0;
      }
      for (std::size_t x = 1; x < n; ++x) {
        if (nbhd[x].size() == nbhd[x - 1].size() && up[x] < up[x - 1]) return;
      }
      classes.insert(canonical_form(Space::from_neighborhoods(n, nbhd, kBitmaskWidth)));
    };
    PreorderSearch(n, true, emit).run();
    for (const auto& c : classes) out.push_back(Space::from_opens(n, c.label, kBitmaskWidth));
  }
  std::sort(out.begin(), out.end(), stream_order);
  return out;
}

CanonicalForm canonical_form(const Space& s) {
  const auto n = s.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalForm best{n, s.opens()};
  std::vector<PointSet> image(s.opens().size());
  do {
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = relabel(s.opens()[i], perm);
    std::sort(image.begin(), image.end());
    if (image < best.label) best.label = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool homeomorphic(const Space& a, const Space& b) {
  return a.size() == b.size() && a.opens().size() == b.opens().size() && canonical_form(a) == canonical_form(b);
}

}  // namespace settop
