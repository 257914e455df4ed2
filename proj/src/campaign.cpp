#include "settop/campaign.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <iterator>
#include <memory>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "settop/errors.hpp"

namespace settop {

std::vector<SubsetFamily> enumerate_invariant_families(const Space& s, const HomeoGroup& h,
                                                       const FamilyOptions& options) {
  std::vector<std::vector<PointSet>> orbits;
  for (auto& orbit : orbits_of_opens(s, h)) {
    if (!orbit.front().empty()) orbits.push_back(std::move(orbit));
  }
  if (orbits.size() > options.max_orbits) {
    throw BoundExceeded(std::to_string(orbits.size()) + " orbits of nonempty opens exceed the bound of " +
                        std::to_string(options.max_orbits));
  }
  std::vector<SubsetFamily> out;
  std::vector<SubsetFamily> seen;
  for (int with_empty = 0; with_empty <= (options.include_empty ? 1 : 0); ++with_empty) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << orbits.size()); ++mask) {
      std::vector<PointSet> members;
      for (std::size_t k = 0; k < orbits.size(); ++k) {
        if ((mask >> k) & 1u) members.insert(members.end(), orbits[k].begin(), orbits[k].end());
      }
      if (with_empty) members.push_back(PointSet{});
      SubsetFamily f(s.size(), std::move(members));
      if (options.close_unions) {
        f = close_under_finite_unions(f);
        if (std::find(seen.begin(), seen.end(), f) != seen.end()) continue;
        seen.push_back(f);
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 12> kTheoremNames{{
    {TheoremId::main_theorem, "main_theorem"},
    {TheoremId::closure_variant, "closure_variant"},
    {TheoremId::cond_a_para, "cond_a_para"},
    {TheoremId::porter, "porter"},
    {TheoremId::zc_group, "zc_group"},
    {TheoremId::eval_base, "eval_base"},
    {TheoremId::hb_refines_hc, "hb_refines_hc"},
    {TheoremId::ford_slh, "ford_slh"},
    {TheoremId::quotient_rep, "quotient_rep"},
    {TheoremId::barb_vs_b, "barb_vs_b"},
    {TheoremId::strict_refinement_search, "strict_refinement_search"},
    {TheoremId::para_vs_topo, "para_vs_topo"},
}};

constexpr std::array<TheoremId, 12> kAllTheorems{
    TheoremId::main_theorem, TheoremId::closure_variant, TheoremId::cond_a_para,
    TheoremId::porter, TheoremId::zc_group, TheoremId::eval_base,
    TheoremId::hb_refines_hc, TheoremId::ford_slh, TheoremId::quotient_rep,
    TheoremId::barb_vs_b, TheoremId::strict_refinement_search, TheoremId::para_vs_topo,
};

}  // namespace

std::string_view to_string(TheoremId t) {
  for (const auto& [id, name] : kTheoremNames) {
    if (id == t) return name;
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (const auto& [id, n] : kTheoremNames) {
    if (n == name) return id;
  }
  return std::nullopt;
}

std::span<const TheoremId> all_theorems() { return kAllTheorems; }

bool is_proved(TheoremId t) {
  return t != TheoremId::barb_vs_b && t != TheoremId::strict_refinement_search && t != TheoremId::para_vs_topo;
}

bool sweeps_families(TheoremId t) {
  switch (t) {
    case TheoremId::main_theorem:
    case TheoremId::closure_variant:
    case TheoremId::cond_a_para:
    case TheoremId::eval_base:
    case TheoremId::barb_vs_b:
    case TheoremId::para_vs_topo:
      return true;
    default:
      return false;
  }
}

namespace {

struct Outcome {
  std::size_t families_checked = 0;
  std::size_t hypotheses_met = 0;
  std::size_t vacuous_covers = 0;
  bool skipped = false;
  std::vector<Record> violations;
  std::vector<Record> findings;
};

std::string group_failure(const GroupTopology& t, bool inversion_too) {
  const auto& h = *t.group;
  if (auto c = find_composition_discontinuity(t)) {
    return "composition discontinuous at (" + to_cycles(h[c->first]) + ", " + to_cycles(h[c->second]) + ")";
  }
  if (inversion_too) {
    if (auto g = find_inversion_discontinuity(t)) return "inversion discontinuous at " + to_cycles(h[*g]);
  }
  return {};
}

std::string evaluation_failure(const Space& s, const GroupTopology& t) {
  auto e = find_evaluation_discontinuity(s, t);
  if (!e) return {};
  return "evaluation discontinuous at (" + to_cycles((*t.group)[e->first]) + ", " + std::to_string(e->second) + ")";
}

class Evaluator {
 public:
  Evaluator(TheoremId theorem, const CampaignOptions& options) : theorem_(theorem), options_(options) {}

  // Evaluates one space; `only` restricts family sweeps to a single family (replay).
  Outcome evaluate(std::size_t index, const Space& s, const SubsetFamily* only = nullptr) const {
    Outcome out;
    auto group = std::make_shared<const HomeoGroup>(enumerate_homeomorphisms(s));
    auto record = [&](std::vector<Record>& into, const SubsetFamily* f, std::string predicate, std::string witness) {
      into.push_back(Record{index, s, f ? std::optional<SubsetFamily>(*f) : std::nullopt, std::move(predicate),
                            std::move(witness)});
    };

    if (!sweeps_families(theorem_)) {
      evaluate_space(s, group, out, record);
      return out;
    }
    std::vector<SubsetFamily> families;
    if (only) {
      families.push_back(*only);
    } else {
      try {
        families = enumerate_invariant_families(s, *group, options_.families);
      } catch (const BoundExceeded&) {
        out.skipped = true;
        return out;
      }
    }
    for (const auto& f : families) {
      ++out.families_checked;
      evaluate_family(s, group, f, out, record);
    }
    return out;
  }

 private:
  template <class Rec>
  void evaluate_space(const Space& s, const std::shared_ptr<const HomeoGroup>& group, Outcome& out, Rec& record) const {
    switch (theorem_) {
      case TheoremId::porter: {
        ++out.hypotheses_met;
        auto t = set_open_topology(s, group, Mode::regular_open);
        if (!is_topological_group(t)) record(out.violations, nullptr, "is_topological_group(regular_open)", group_failure(t, true));
        break;
      }
      case TheoremId::zc_group: {
        ++out.hypotheses_met;
        auto t = set_open_topology(s, group, Mode::zero_cozero);
        if (!is_topological_group(t)) record(out.violations, nullptr, "is_topological_group(zero_cozero)", group_failure(t, true));
        if (auto why = acceptability_failure(s, t)) record(out.findings, nullptr, "is_acceptable(zero_cozero)", *why);
        break;
      }
      case TheoremId::hb_refines_hc:
      case TheoremId::strict_refinement_search: {
        ++out.hypotheses_met;
        std::vector<PointSet> nonempty(s.opens().begin() + 1, s.opens().end());
        SubsetFamily all(s.size(), nonempty);
        auto hb = set_open_topology(s, group, Mode::b_open, all);
        auto hc = set_open_topology(s, group, Mode::compact_open);
        auto cmp = compare_topologies(hb, hc);
        if (theorem_ == TheoremId::hb_refines_hc && cmp != Comparison::equal && cmp != Comparison::finer) {
          record(out.violations, nullptr, "b_open(all opens) >= compact_open", std::string(to_string(cmp)));
        }
        if (theorem_ == TheoremId::strict_refinement_search && cmp == Comparison::finer) {
          record(out.findings, nullptr, "b_open(all opens) > compact_open", "strictly finer");
        }
        break;
      }
      case TheoremId::ford_slh: {
        auto c = classify(s);
        if (c.zero_dimensional && c.t1 && is_homogeneous(s, *group)) {
          ++out.hypotheses_met;
          if (!is_slh(s, *group)) record(out.violations, nullptr, "is_slh", "homogeneous zero-dimensional T1 space is not SLH");
        }
        break;
      }
      case TheoremId::quotient_rep: {
        if (!is_homogeneous(s, *group) || !is_slh(s, *group)) break;
        auto t = set_open_topology(s, group, Mode::zero_cozero);
        if (auto why = acceptability_failure(s, t)) {
          record(out.findings, nullptr, "is_acceptable(zero_cozero)", *why);
          break;
        }
        ++out.hypotheses_met;
        for (std::size_t a = 0; a < s.size(); ++a) {
          auto q = quotient_check(s, t, a);
          if (!q.ok) record(out.violations, nullptr, "quotient_check(zero_cozero, " + std::to_string(a) + ")", q.reason);
        }
        break;
      }
      default:
        break;
    }
  }

  template <class Rec>
  void evaluate_family(const Space& s, const std::shared_ptr<const HomeoGroup>& group, const SubsetFamily& f,
                       Outcome& out, Rec& record) const {
    const auto report = check_family_conditions(s, *group, f, options_.conditions);
    const bool uses_cover = theorem_ == TheoremId::main_theorem || theorem_ == TheoremId::closure_variant;
    if (uses_cover && f.contains(PointSet{}) && report.holds(Condition::connected_cover)) ++out.vacuous_covers;
    switch (theorem_) {
      case TheoremId::main_theorem: {
        if (!(report.encircling() && report.holds(Condition::regular_open_members) &&
              report.holds(Condition::connected_cover))) {
          break;
        }
        ++out.hypotheses_met;
        auto t = set_open_topology(s, group, Mode::b_open, f);
        if (!is_topological_group(t)) record(out.violations, &f, "is_topological_group(b_open)", group_failure(t, true));
        break;
      }
      case TheoremId::closure_variant: {
        if (!(report.urysohn() && report.holds(Condition::connected_cover))) break;
        ++out.hypotheses_met;
        auto t = set_open_topology(s, group, Mode::closure_b, f);
        if (!is_topological_group(t)) record(out.violations, &f, "is_topological_group(closure_b)", group_failure(t, true));
        break;
      }
      case TheoremId::cond_a_para: {
        if (!report.holds(Condition::a)) break;
        ++out.hypotheses_met;
        auto t = set_open_topology(s, group, Mode::b_open, f);
        if (!is_paratopological_group(t)) record(out.violations, &f, "is_paratopological_group(b_open)", group_failure(t, false));
        break;
      }
      case TheoremId::eval_base: {
        if (!report.holds(Condition::base)) break;
        ++out.hypotheses_met;
        auto t = set_open_topology(s, group, Mode::b_open, f);
        if (!is_admissible(s, t)) record(out.violations, &f, "is_admissible(b_open)", evaluation_failure(s, t));
        if (classify(s).regular) {
          auto tc = set_open_topology(s, group, Mode::closure_b, f);
          if (!is_admissible(s, tc)) record(out.violations, &f, "is_admissible(closure_b)", evaluation_failure(s, tc));
        }
        break;
      }
      case TheoremId::barb_vs_b: {
        if (!(report.urysohn() && report.holds(Condition::hereditarily_open))) break;
        ++out.hypotheses_met;
        auto hb = set_open_topology(s, group, Mode::b_open, f);
        auto hcl = set_open_topology(s, group, Mode::closure_b, f);
        auto cmp = compare_topologies(hb, hcl);
        if (cmp != Comparison::equal && cmp != Comparison::finer) {
          record(out.findings, &f, "b_open >= closure_b", std::string(to_string(cmp)));
        }
        break;
      }
      case TheoremId::para_vs_topo: {
        auto t = set_open_topology(s, group, Mode::b_open, f);
        if (!is_paratopological_group(t)) break;
        ++out.hypotheses_met;
        if (!is_topological_group(t)) record(out.findings, &f, "paratopological but not topological (b_open)", group_failure(t, true));
        break;
      }
      default:
        break;
    }
  }

  TheoremId theorem_;
  const CampaignOptions& options_;
};

std::string inline_space(const Space& s) {
  std::string out = "n " + std::to_string(s.size());
  for (auto o : s.opens()) out += " | " + to_line(o);
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

CampaignReport run_campaign(TheoremId theorem, std::size_t n_max, const CampaignOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  CampaignReport report;
  report.theorem = theorem;
  report.n_max = n_max;
  report.config = options;

  std::vector<Space> spaces;
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto classes = enumerate_topologies(n, true, options.limits);
    report.classes_by_points.push_back(classes.size());
    spaces.insert(spaces.end(), std::make_move_iterator(classes.begin()), std::make_move_iterator(classes.end()));
  }

  const Evaluator evaluator(theorem, options);
  std::vector<Outcome> outcomes(spaces.size());
  std::atomic<std::size_t> next{options.resume_from};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (auto i = next++; i < spaces.size(); i = next++) {
      try {
        outcomes[i] = evaluator.evaluate(i, spaces[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const auto jobs = std::max<std::size_t>(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = options.resume_from; i < spaces.size(); ++i) {
    auto& o = outcomes[i];
    ++report.spaces_checked;
    report.families_checked += o.families_checked;
    report.hypotheses_met += o.hypotheses_met;
    report.vacuous_empty_covers += o.vacuous_covers;
    if (o.skipped) report.skipped_spaces.push_back(i);
    std::move(o.violations.begin(), o.violations.end(), std::back_inserter(report.violations));
    std::move(o.findings.begin(), o.findings.end(), std::back_inserter(report.findings));
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

bool replay(TheoremId theorem, const Record& record, const CampaignOptions& options) {
  const Evaluator evaluator(theorem, options);
  const auto out = evaluator.evaluate(record.space_index, record.space, record.family ? &*record.family : nullptr);
  auto same = [&](const Record& r) { return r.predicate == record.predicate && r.family == record.family; };
  return std::any_of(out.violations.begin(), out.violations.end(), same) ||
         std::any_of(out.findings.begin(), out.findings.end(), same);
}

std::string format_report_body(const CampaignReport& r) {
  std::string out;
  auto line = [&](const std::string& key, const std::string& value) { out += key + ": " + value + "\n"; };
  line("theorem", std::string(to_string(r.theorem)));
  line("proved", yes_no(is_proved(r.theorem)));
  line("max_points", std::to_string(r.n_max));
  std::string classes;
  for (auto c : r.classes_by_points) classes += (classes.empty() ? "" : " ") + std::to_string(c);
  line("classes_by_points", classes);
  line("strict_b", yes_no(r.config.conditions.strict_b));
  line("strict_inclusion", yes_no(r.config.conditions.strict_inclusion));
  line("include_empty", yes_no(r.config.families.include_empty));
  line("close_unions", yes_no(r.config.families.close_unions));
  line("resume_from", std::to_string(r.config.resume_from));
  line("spaces_checked", std::to_string(r.spaces_checked));
  std::string skipped = std::to_string(r.skipped_spaces.size());
  for (auto i : r.skipped_spaces) skipped += " " + std::to_string(i);
  line("spaces_skipped", skipped);
  line("families_checked", std::to_string(r.families_checked));
  line("hypotheses_met", std::to_string(r.hypotheses_met));
  line("vacuous_empty_covers", std::to_string(r.vacuous_empty_covers));
  line("violations", std::to_string(r.violations.size()));
  line("findings", std::to_string(r.findings.size()));
  auto records = [&](const char* kind, const std::vector<Record>& list) {
    for (const auto& rec : list) {
      out += "\n" + std::string(kind) + ":\n";
      out += "  space_index: " + std::to_string(rec.space_index) + "\n";
      out += "  space: " + inline_space(rec.space) + "\n";
      if (rec.family) out += "  family: " + to_string(*rec.family) + "\n";
      out += "  predicate: " + rec.predicate + "\n";
      out += "  witness: " + rec.witness + "\n";
    }
  };
  records("violation", r.violations);
  records("finding", r.findings);
  return out;
}

std::string format_report(const CampaignReport& r) {
  char elapsed[64];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_seconds);
  return format_report_body(r) + "---\nelapsed_seconds: " + elapsed + "\n";
}

std::string format_summary(const CampaignReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = to_string(r.theorem);
  j["proved"] = is_proved(r.theorem);
  j["max_points"] = r.n_max;
  j["classes_by_points"] = r.classes_by_points;
  j["config"] = {{"strict_b", r.config.conditions.strict_b},
                 {"strict_inclusion", r.config.conditions.strict_inclusion},
                 {"include_empty", r.config.families.include_empty},
                 {"close_unions", r.config.families.close_unions},
                 {"max_orbits", r.config.families.max_orbits},
                 {"resume_from", r.config.resume_from}};
  j["spaces_checked"] = r.spaces_checked;
  j["spaces_skipped"] = r.skipped_spaces;
  j["families_checked"] = r.families_checked;
  j["hypotheses_met"] = r.hypotheses_met;
  j["vacuous_empty_covers"] = r.vacuous_empty_covers;
  auto records = [](const std::vector<Record>& list) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& rec : list) {
      nlohmann::ordered_json e;
      e["space_index"] = rec.space_index;
      e["space"] = inline_space(rec.space);
      if (rec.family) e["family"] = to_string(*rec.family);
      e["predicate"] = rec.predicate;
      e["witness"] = rec.witness;
      arr.push_back(std::move(e));
    }
    return arr;
  };
  j["violations"] = records(r.violations);
  j["findings"] = records(r.findings);
  return j.dump(2) + "\n";
}

LatticeReport lattice_report(const Space& s, std::span<const GroupTopology> topologies) {
  LatticeReport out;
  for (std::size_t i = 0; i < topologies.size(); ++i) {
    if (!topologies[i].group || topologies[i].group->degree() != s.size()) {
      throw Mismatch("topology " + topologies[i].provenance + " is not over H(X) of this space");
    }
    bool merged = false;
    for (auto& node : out.nodes) {
      if (compare_topologies(topologies[node.inputs.front()], topologies[i]) == Comparison::equal) {
        node.labels.push_back(topologies[i].provenance);
        node.inputs.push_back(i);
        merged = true;
        break;
      }
    }
    if (!merged) out.nodes.push_back({{topologies[i].provenance}, {i}});
  }
  const auto k = out.nodes.size();
  auto finer = [&](std::size_t upper, std::size_t lower) {
    return compare_topologies(topologies[out.nodes[upper].inputs.front()],
                              topologies[out.nodes[lower].inputs.front()]) == Comparison::finer;
  };
  for (std::size_t lo = 0; lo < k; ++lo) {
    for (std::size_t up = 0; up < k; ++up) {
      if (!finer(up, lo)) continue;
      bool covers = true;
      for (std::size_t mid = 0; mid < k && covers; ++mid) {
        if (finer(up, mid) && finer(mid, lo)) covers = false;
      }
      if (covers) out.covers.emplace_back(lo, up);
    }
  }
  return out;
}

std::string format_lattice(const LatticeReport& r) {
  std::string out = "nodes: " + std::to_string(r.nodes.size()) + "\n";
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    out += "  " + std::to_string(i) + ":";
    for (const auto& l : r.nodes[i].labels) out += " " + l;
    out += "\n";
  }
  out += "covers: " + std::to_string(r.covers.size()) + "\n";
  for (const auto& [lo, up] : r.covers) out += "  " + std::to_string(lo) + " < " + std::to_string(up) + "\n";
  return out;
}

}  // namespace settop
