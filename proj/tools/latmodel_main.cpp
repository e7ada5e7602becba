#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latmodel/io.hpp"
#include "latmodel/reproduce.hpp"

namespace {

using namespace latmodel;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

int default_jobs() {
  if (const char* env = std::getenv("LATMODEL_JOBS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

ArrowSet arrow_set_from_file(const std::string& path, const Lattice& l) {
  return arrow_set_from_json(load_json_file(path), l);
}

void print_lattice(const Lattice& l) {
  std::cout << "lattice";
  if (!l.family_spec().empty()) std::cout << " " << l.family_spec();
  std::cout << ": " << l.size() << " elements, " << l.arrow_count()
            << " non-identity arrows, " << l.covers().size() << " covers\n";
  std::cout << "elements:";
  for (int x = 0; x < l.size(); ++x) std::cout << " " << display_label(l, x);
  std::cout << "\ncovers:";
  for (auto [x, y] : l.covers())
    std::cout << " " << display_label(l, x) << "->" << display_label(l, y);
  std::cout << "\nbottom: " << display_label(l, l.bottom())
            << "  top: " << display_label(l, l.top()) << "\n";
}

int cmd_enumerate(const std::string& lattice_spec, const std::string& kind_name,
                  bool count_only, const std::string& within_path,
                  const std::string& superset_path, int jobs) {
  const Lattice l = parse_lattice(lattice_spec);
  const auto kind = enumeration_kind_from_name(kind_name);
  if (!kind) {
    std::cerr << "unknown kind '" << kind_name << "'\n";
    return kExitUsage;
  }

  EnumerationRequest req;
  req.lattice = &l;
  req.kind = *kind;
  req.jobs = jobs;
  req.count_only = count_only;
  if (!within_path.empty()) req.within = arrow_set_from_file(within_path, l);
  if (!superset_path.empty())
    req.superset_of = arrow_set_from_file(superset_path, l);

  if (count_only) {
    std::cout << count_report_to_json(run_count_report(req)).dump() << "\n";
    return kExitOk;
  }

  switch (*kind) {
    case EnumerationKind::transfer:
      for (const ArrowSet& s : enumerate_transfer_systems(req))
        std::cout << arrow_set_to_json(s).dump() << "\n";
      break;
    case EnumerationKind::cotransfer:
      for (const ArrowSet& s : enumerate_cotransfer_systems(req))
        std::cout << arrow_set_to_json(s).dump() << "\n";
      break;
    case EnumerationKind::decomposable:
      for (const ArrowSet& s : enumerate_wide_decomposable(l, jobs))
        std::cout << arrow_set_to_json(s).dump() << "\n";
      break;
    case EnumerationKind::weq_set:
      for (const ArrowSet& s : enumerate_weak_equivalence_sets(l, jobs))
        std::cout << arrow_set_to_json(s).dump() << "\n";
      break;
    case EnumerationKind::model_structure:
      for (const ModelStructure& m : enumerate_model_structures(l, jobs))
        std::cout << model_structure_to_json(m).dump() << "\n";
      break;
  }
  return kExitOk;
}

int cmd_check(const std::string& lattice_spec, const std::string& weq_path,
              const std::string& af_path, const std::string& ac_path) {
  const Lattice l = parse_lattice(lattice_spec);
  const ArrowSet w = arrow_set_from_file(weq_path, l);
  json out;
  bool pass = false;
  if (!af_path.empty()) {
    pass = check_pair_afw(w, arrow_set_from_file(af_path, l));
    out["check"] = "afw";
  } else if (!ac_path.empty()) {
    pass = check_pair_acw(w, arrow_set_from_file(ac_path, l));
    out["check"] = "acw";
  } else {
    pass = is_weak_equivalence_set(w);
    out["check"] = "weq";
  }
  out["result"] = pass;
  std::cout << out.dump() << "\n";
  return pass ? kExitOk : kExitMismatch;
}

int cmd_interval(const std::string& lattice_spec, const std::string& weq_path) {
  const Lattice l = parse_lattice(lattice_spec);
  const ArrowSet w = arrow_set_from_file(weq_path, l);
  const AfInterval interval = af_interval(w);
  json members = json::array();
  for (const ArrowSet& t : interval.members)
    members.push_back(arrow_set_to_json(t)["arrows"]);
  json out{{"lattice", lattice_ref_json(l)},
           {"weq", arrow_set_to_json(interval.weq)["arrows"]},
           {"af_min", arrow_set_to_json(interval.min)["arrows"]},
           {"af_max", arrow_set_to_json(interval.max)["arrows"]},
           {"members", members}};
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int cmd_export(const std::string& lattice_spec, const std::string& format,
               const std::vector<std::string>& overlay_paths) {
  const Lattice l = parse_lattice(lattice_spec);
  if (format == "json") {
    std::cout << lattice_to_json(l).dump() << "\n";
    return kExitOk;
  }
  static const char* kPalette[] = {"color=blue,penwidth=2",
                                   "color=red,penwidth=2,style=dashed",
                                   "color=forestgreen,penwidth=2",
                                   "color=orange,penwidth=2,style=dotted"};
  std::vector<std::pair<ArrowSet, std::string>> overlays;
  for (size_t i = 0; i < overlay_paths.size(); ++i)
    overlays.emplace_back(arrow_set_from_file(overlay_paths[i], l),
                          kPalette[i % 4]);
  std::cout << dot_export(l, overlays);
  return kExitOk;
}

int cmd_reproduce(const std::string& family, int max_n, int jobs) {
  ReproduceOptions options;
  if (!family.empty()) options.family = family;
  if (max_n >= 0) options.max_n = max_n;
  options.jobs = jobs;
  const ReproduceReport report = run_reproduction(options);
  for (const ReproduceRow& row : report.rows) {
    std::printf("[%s] %-70s expected %-28s computed %s\n",
                row.ok ? " OK " : "FAIL", row.name.c_str(),
                row.expected.c_str(), row.computed.c_str());
  }
  std::printf("%zu rows, %s\n", report.rows.size(),
              report.all_ok ? "all matching" : "MISMATCHES FOUND");
  return report.all_ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-lattice transfer systems, weak factorization systems, "
               "and model structures"};
  app.require_subcommand(1);
  int jobs = default_jobs();

  // lattice show|validate
  auto* lattice_cmd = app.add_subcommand("lattice", "inspect a lattice");
  lattice_cmd->require_subcommand(1);
  std::string lat_spec;
  auto* show = lattice_cmd->add_subcommand("show", "print elements and covers");
  show->add_option("--lattice", lat_spec, "lattice spec")->required();
  auto* validate =
      lattice_cmd->add_subcommand("validate", "check the lattice axioms");
  validate->add_option("--lattice", lat_spec, "lattice spec")->required();

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "enumerate or count");
  std::string enum_kind = "transfer", enum_lattice, within_path, superset_path;
  bool count_only = false;
  enumerate->add_option("--kind", enum_kind,
                        "transfer|cotransfer|decomposable|weq|model");
  enumerate->add_option("--lattice", enum_lattice, "lattice spec")->required();
  enumerate->add_flag("--count", count_only, "count instead of listing");
  enumerate->add_option("--within", within_path,
                        "arrow-set file: upper bound");
  enumerate->add_option("--superset-of", superset_path,
                        "arrow-set file: lower bound");
  enumerate->add_option("--jobs", jobs, "worker threads");

  // check
  auto* check = app.add_subcommand("check", "weak-equivalence-set and class "
                                            "pair checks");
  std::string check_lattice, weq_path, af_path, ac_path;
  check->add_option("--lattice", check_lattice, "lattice spec")->required();
  check->add_option("--weq", weq_path, "arrow-set file: weak equivalences")
      ->required();
  auto* af_opt =
      check->add_option("--af", af_path, "arrow-set file: acyclic fibrations");
  check->add_option("--ac", ac_path, "arrow-set file: acyclic cofibrations")
      ->excludes(af_opt);

  // interval
  auto* interval = app.add_subcommand(
      "interval", "acyclic-fibration interval of a weak equivalence set");
  std::string interval_lattice, interval_weq;
  interval->add_option("--lattice", interval_lattice, "lattice spec")
      ->required();
  interval->add_option("--weq", interval_weq, "arrow-set file")->required();

  // export
  auto* export_cmd = app.add_subcommand("export", "write JSON or DOT");
  std::string export_lattice, export_format = "json";
  std::vector<std::string> overlay_paths;
  export_cmd->add_option("--lattice", export_lattice, "lattice spec")
      ->required();
  export_cmd->add_option("--format", export_format, "json|dot")
      ->check(CLI::IsMember({"json", "dot"}));
  export_cmd->add_option("--overlay", overlay_paths,
                         "arrow-set files drawn over the Hasse diagram");

  // reproduce
  auto* reproduce =
      app.add_subcommand("reproduce", "verify every published count and "
                                      "worked example");
  std::string repro_family;
  int repro_max_n = -1;
  reproduce->add_option("--family", repro_family,
                        "chain|grid|diamond|pentagon|examples");
  reproduce->add_option("--max-n", repro_max_n, "cap family size parameter");
  reproduce->add_option("--jobs", jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (show->parsed()) {
      print_lattice(parse_lattice(lat_spec));
      return kExitOk;
    }
    if (validate->parsed()) {
      try {
        const Lattice l = parse_lattice(lat_spec);
        std::cout << "valid lattice: " << l.size() << " elements, "
                  << l.covers().size() << " covers\n";
        return kExitOk;
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::parse_error) throw;
        std::cout << "invalid: " << e.what() << "\n";
        return kExitMismatch;
      }
    }
    if (enumerate->parsed())
      return cmd_enumerate(enum_lattice, enum_kind, count_only, within_path,
                           superset_path, jobs);
    if (check->parsed())
      return cmd_check(check_lattice, weq_path, af_path, ac_path);
    if (interval->parsed()) return cmd_interval(interval_lattice, interval_weq);
    if (export_cmd->parsed())
      return cmd_export(export_lattice, export_format, overlay_paths);
    if (reproduce->parsed())
      return cmd_reproduce(repro_family, repro_max_n, jobs);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
