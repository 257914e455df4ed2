#include "settop/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "settop/campaign.hpp"
#include "settop/errors.hpp"
#include "settop/group_check.hpp"
#include "settop/homeo_group.hpp"
#include "settop/set_open.hpp"
#include "settop/space.hpp"
#include "settop/topo_gen.hpp"

namespace settop {

namespace {

constexpr std::size_t kOpenCountLimit = 4096;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<PointSet>& sets) {
  std::string out;
  for (auto s : sets) out += (out.empty() ? "" : " ") + to_string(s);
  return out.empty() ? "(none)" : out;
}

SubsetFamily nonempty_opens(const Space& s) {
  return SubsetFamily(s.size(), std::vector<PointSet>(s.opens().begin() + 1, s.opens().end()));
}

void print_check(const Space& s, const ConditionOptions& conditions, std::ostream& out) {
  out << "# space\n";
  out << "points: " << s.size() << "\n";
  out << "opens (" << s.opens().size() << "): " << join(s.opens()) << "\n";
  out << "minimal base: " << join(minimal_base(s)) << "\n";
  const auto c = classify(s);
  out << "t0: " << yes_no(c.t0) << "\n";
  out << "t1: " << yes_no(c.t1) << "\n";
  out << "regular: " << yes_no(c.regular) << "\n";
  out << "semiregular: " << yes_no(c.semiregular) << "\n";
  out << "zero_dimensional: " << yes_no(c.zero_dimensional) << "\n";
  out << "regular opens: " << join(regular_opens(s)) << "\n";
  out << "components: " << join(connected_components(s, s.full())) << "\n";
  out << "zero sets: " << join(zero_sets(s)) << "\n";

  auto group = std::make_shared<const HomeoGroup>(enumerate_homeomorphisms(s));
  out << "\n# homeomorphism group\n";
  out << "order: " << group->size() << "\n";
  out << "elements:";
  for (const auto& g : group->elements()) out << " " << to_cycles(g);
  out << "\n";
  out << "homogeneous: " << yes_no(is_homogeneous(s, *group)) << "\n";
  out << "point orbits: " << join(point_orbits(*group)) << "\n";
  const auto orbits = orbits_of_opens(s, *group);
  out << "open orbits (" << orbits.size() << "):";
  for (const auto& o : orbits) out << " [" << join(o) << "]";
  out << "\n";
  out << "slh: " << yes_no(is_slh(s, *group)) << "\n";

  const auto family = nonempty_opens(s);
  const auto report = check_family_conditions(s, *group, family, conditions);
  out << "\n# family of all nonempty opens\n";
  out << "strict_b: " << yes_no(conditions.strict_b) << "\n";
  for (std::size_t i = 0; i < kConditionCount; ++i) {
    const auto cond = static_cast<Condition>(i);
    out << to_string(cond) << ": " << yes_no(report.holds(cond));
    if (const auto& w = report.witness(cond)) out << "  (witness " << describe(cond, *w, *group) << ")";
    out << "\n";
  }
  out << "urysohn: " << yes_no(report.urysohn()) << "\n";

  out << "\n# group topologies\n";
  for (auto mode : {Mode::b_open, Mode::closure_b, Mode::compact_open, Mode::closed_open, Mode::zero_cozero,
                    Mode::regular_open}) {
    auto t = needs_family(mode) ? set_open_topology(s, group, mode, family) : set_open_topology(s, group, mode);
    auto opens = t.space.opens(kOpenCountLimit);
    out << to_string(mode) << ": opens=" << (opens ? std::to_string(opens->size()) : ">" + std::to_string(kOpenCountLimit))
        << " paratopological=" << yes_no(is_paratopological_group(t))
        << " topological=" << yes_no(is_topological_group(t)) << " admissible=" << yes_no(is_admissible(s, t))
        << " acceptable=" << yes_no(is_acceptable(s, t)) << "\n";
  }

  out << "\n# quotient by stabilizers (zero_cozero)\n";
  auto zc = set_open_topology(s, group, Mode::zero_cozero);
  for (std::size_t a = 0; a < s.size(); ++a) {
    auto q = quotient_check(s, zc, a);
    out << "base point " << a << ": " << yes_no(q.ok) << " (" << q.reason << ")\n";
  }
}

GroupTopology build_topology(const Space& s, const std::shared_ptr<const HomeoGroup>& group, Mode mode,
                             const std::optional<SubsetFamily>& family) {
  if (!needs_family(mode)) return set_open_topology(s, group, mode);
  return set_open_topology(s, group, mode, family ? *family : nonempty_opens(s));
}

std::optional<SubsetFamily> load_family(const std::string& path, const Space& s) {
  if (path.empty()) return std::nullopt;
  return SubsetFamily(s.size(), parse_set_list(read_file(path), s.size()));
}

int campaign_exit(const CampaignReport& report) {
  return is_proved(report.theorem) && !report.violations.empty() ? kExitViolations : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Set-open topologies on homeomorphism groups of finite spaces", "settop"};
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads for campaigns")->default_val(1)->check(CLI::PositiveNumber);

  std::size_t points = 0;
  bool up_to_iso = false;
  auto* enumerate = app.add_subcommand("enumerate", "Print every topology on N points");
  enumerate->add_option("--points", points, "Number of points")->required();
  enumerate->add_flag("--up-to-iso", up_to_iso, "One space per homeomorphism class");

  std::string file;
  bool strict_b = false;
  bool strict_inclusion = false;
  auto* check = app.add_subcommand("check", "Run every predicate on a space file");
  check->add_option("file", file, "Space file")->required();
  check->add_flag("--strict-b", strict_b, "Require W \\ cl(V) in B even when empty");
  check->add_flag("--strict-inclusion", strict_inclusion, "Proper inclusions in conditions (c) and (d)");

  std::string mode_name;
  std::string family_file;
  auto* topology = app.add_subcommand("topology", "Print a group topology on H(X)");
  topology->add_option("file", file, "Space file")->required();
  topology->add_option("--mode", mode_name, "b_open, closure_b, compact_open, closed_open, zero_cozero, regular_open")
      ->required();
  topology->add_option("--family", family_file, "Family file (default: all nonempty opens)");

  std::string theorem_name;
  std::size_t max_points = 0;
  bool include_empty = false;
  bool close_unions = false;
  std::size_t resume_from = 0;
  std::string summary_file;
  auto* verify = app.add_subcommand("verify", "Run a theorem-verification campaign");
  verify->add_option("theorem", theorem_name, "Theorem id")->required();
  std::string search_name;
  auto* search = app.add_subcommand("search", "Run an exploratory search");
  search->add_option("name", search_name, "strict-refinement, para-vs-topo or barb-vs-b")->required();
  for (auto* sub : {verify, search}) {
    sub->add_option("--max-points", max_points, "Largest point count swept")->required();
    sub->add_flag("--strict-b", strict_b, "Require W \\ cl(V) in B even when empty");
    sub->add_flag("--strict-inclusion", strict_inclusion, "Proper inclusions in conditions (c) and (d)");
    sub->add_flag("--include-empty", include_empty, "Also sweep families containing the empty set");
    sub->add_flag("--close-unions", close_unions, "Close swept families under finite unions");
    sub->add_option("--resume-from", resume_from, "First space index to evaluate");
    sub->add_option("--summary", summary_file, "Write a JSON summary to this file");
  }

  std::string modes_list;
  auto* lattice = app.add_subcommand("lattice", "Order the group topologies of several modes");
  lattice->add_option("file", file, "Space file")->required();
  lattice->add_option("--modes", modes_list, "Comma-separated modes")->required();
  lattice->add_option("--family", family_file, "Family file for b_open / closure_b");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    const auto limits = EnumerationLimits::from_environment();
    if (*enumerate) {
      bool first = true;
      for (const auto& s : enumerate_topologies(points, up_to_iso, limits)) {
        if (!first) out << "\n";
        out << format_space(s);
        first = false;
      }
      return kExitOk;
    }
    if (*check) {
      print_check(parse_space(read_file(file)), ConditionOptions{strict_b, strict_inclusion}, out);
      return kExitOk;
    }
    if (*topology) {
      auto mode = parse_mode(mode_name);
      if (!mode) {
        err << "error: unknown mode '" << mode_name << "'\n\n" << topology->help();
        return kExitUsage;
      }
      auto s = parse_space(read_file(file));
      auto group = std::make_shared<const HomeoGroup>(enumerate_homeomorphisms(s));
      out << format_group_topology(build_topology(s, group, *mode, load_family(family_file, s)));
      return kExitOk;
    }
    if (*verify || *search) {
      std::optional<TheoremId> theorem;
      if (*verify) {
        theorem = parse_theorem(theorem_name);
      } else if (search_name == "strict-refinement") {
        theorem = TheoremId::strict_refinement_search;
      } else if (search_name == "para-vs-topo") {
        theorem = TheoremId::para_vs_topo;
      } else if (search_name == "barb-vs-b") {
        theorem = TheoremId::barb_vs_b;
      }
      if (!theorem) {
        err << "error: unknown campaign '" << (*verify ? theorem_name : search_name) << "'\n\n"
            << (*verify ? verify : search)->help();
        return kExitUsage;
      }
      CampaignOptions options;
      options.conditions = {strict_b, strict_inclusion};
      options.families.include_empty = include_empty;
      options.families.close_unions = close_unions;
      options.limits = limits;
      options.jobs = jobs;
      options.resume_from = resume_from;
      auto report = run_campaign(*theorem, max_points, options);
      out << format_report(report);
      if (!summary_file.empty()) {
        std::ofstream summary(summary_file);
        if (!summary) throw InvalidArgument("cannot write " + summary_file);
        summary << format_summary(report);
      }
      return campaign_exit(report);
    }
    if (*lattice) {
      auto s = parse_space(read_file(file));
      auto group = std::make_shared<const HomeoGroup>(enumerate_homeomorphisms(s));
      auto family = load_family(family_file, s);
      std::vector<GroupTopology> topologies;
      std::stringstream names(modes_list);
      std::string name;
      while (std::getline(names, name, ',')) {
        auto mode = parse_mode(name);
        if (!mode) {
          err << "error: unknown mode '" << name << "'\n\n" << lattice->help();
          return kExitUsage;
        }
        topologies.push_back(build_topology(s, group, *mode, family));
      }
      out << format_lattice(lattice_report(s, topologies));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitUsage;
}

}  // namespace settop
