#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "settop/group_check.hpp"
#include "settop/homeo_group.hpp"
#include "settop/set_open.hpp"
#include "settop/space.hpp"
#include "settop/topo_gen.hpp"

namespace settop {

struct FamilyOptions {
  /// Also emit families containing ∅.
  bool include_empty = false;
  /// Close every emitted family under finite unions (duplicates dropped).
  bool close_unions = false;
  std::size_t max_orbits = 20;
};

/// Every nonempty union of orbits of nonempty opens under H, in order of
/// the orbit bitmask. Throws BoundExceeded past `max_orbits` orbits.
std::vector<SubsetFamily> enumerate_invariant_families(const Space& s, const HomeoGroup& h,
                                                       const FamilyOptions& options = {});

enum class TheoremId {
  main_theorem,
  closure_variant,
  cond_a_para,
  porter,
  zc_group,
  eval_base,
  hb_refines_hc,
  ford_slh,
  quotient_rep,
  barb_vs_b,
  strict_refinement_search,
  para_vs_topo,
};

std::string_view to_string(TheoremId t);
std::optional<TheoremId> parse_theorem(std::string_view name);
std::span<const TheoremId> all_theorems();
/// Implications with a proof behind them; violations of these are errors.
/// The rest are exploratory and only collect findings.
bool is_proved(TheoremId t);
bool sweeps_families(TheoremId t);

struct CampaignOptions {
  FamilyOptions families;
  ConditionOptions conditions;
  EnumerationLimits limits;
  std::size_t jobs = 1;
  /// First space index evaluated; earlier ones are skipped (resumption).
  std::size_t resume_from = 0;
};

/// One failing (or, for exploratory campaigns, noteworthy) instance.
struct Record {
  std::size_t space_index = 0;
  Space space;
  std::optional<SubsetFamily> family;
  std::string predicate;
  std::string witness;
};

struct CampaignReport {
  TheoremId theorem = TheoremId::porter;
  std::size_t n_max = 0;
  CampaignOptions config;
  std::vector<std::size_t> classes_by_points;
  std::size_t spaces_checked = 0;
  std::size_t families_checked = 0;
  std::size_t hypotheses_met = 0;
  /// Families containing ∅ whose connected cover held only because ∅ has
  /// no components.
  std::size_t vacuous_empty_covers = 0;
  /// Spaces whose orbit count exceeded the family bound.
  std::vector<std::size_t> skipped_spaces;
  std::vector<Record> violations;
  std::vector<Record> findings;
  double elapsed_seconds = 0;
};

/// Sweeps every homeomorphism class with 1..n_max points (and, where the
/// theorem quantifies over families, every invariant family).
CampaignReport run_campaign(TheoremId theorem, std::size_t n_max, const CampaignOptions& options = {});

/// Re-evaluates the instance of `record`; true iff the same predicate fails again.
bool replay(TheoremId theorem, const Record& record, const CampaignOptions& options = {});

/// Deterministic key/value records; elapsed time only in the footer after "---".
std::string format_report(const CampaignReport& report);
std::string format_report_body(const CampaignReport& report);
/// Machine-readable summary (JSON), without timing.
std::string format_summary(const CampaignReport& report);

struct LatticeNode {
  /// Provenance labels of the merged (equal) topologies.
  std::vector<std::string> labels;
  std::vector<std::size_t> inputs;
};

struct LatticeReport {
  std::vector<LatticeNode> nodes;
  /// Covering pairs (lower, upper) by node index: upper is strictly finer.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

LatticeReport lattice_report(const Space& s, std::span<const GroupTopology> topologies);
std::string format_lattice(const LatticeReport& report);

}  // namespace settop
