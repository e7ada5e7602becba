#include "latmodel/reproduce.hpp"

#include <sstream>

#include "latmodel/io.hpp"

namespace latmodel {

namespace {

using LabelArrows = std::vector<std::pair<std::string, std::string>>;

std::string arrows_by_label(const ArrowSet& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const Arrow& f : s.arrows()) {
    if (!first) out << ", ";
    first = false;
    out << s.lattice().label(f.src) << "->" << s.lattice().label(f.tgt);
  }
  out << "}";
  return out.str();
}

struct TableBuilder {
  const ReproduceOptions& options;
  ReproduceReport report;

  bool family_enabled(const std::string& family, int n = -1) const {
    if (options.family && *options.family != family) return false;
    if (n >= 0 && options.max_n && n > *options.max_n) return false;
    return true;
  }

  void add(const std::string& family, const std::string& name,
           const std::string& expected, const std::string& computed) {
    ReproduceRow row{family, name, expected, computed, expected == computed};
    report.all_ok = report.all_ok && row.ok;
    report.rows.push_back(std::move(row));
  }

  void add_count(const std::string& family, const std::string& name,
                 std::uint64_t expected, std::uint64_t computed) {
    add(family, name, std::to_string(expected), std::to_string(computed));
  }

  void add_bool(const std::string& name, bool expected, bool computed) {
    add("examples", name, expected ? "true" : "false",
        computed ? "true" : "false");
  }

  void add_set(const std::string& name, const ArrowSet& expected,
               const ArrowSet& computed) {
    add("examples", name, arrows_by_label(expected), arrows_by_label(computed));
  }
};

std::uint64_t count_kind(const Lattice& l, EnumerationKind kind, int jobs) {
  EnumerationRequest req;
  req.lattice = &l;
  req.kind = kind;
  req.jobs = jobs;
  req.count_only = true;
  return count_systems(req);
}

void count_rows(TableBuilder& b) {
  const int jobs = b.options.jobs;

  // transfer / cotransfer system counts
  for (int n = 0; n <= 5; ++n) {
    if (!b.family_enabled("chain", n)) continue;
    const Lattice l = Lattice::chain(n);
    b.add_count("chain", "transfer systems on chain:" + std::to_string(n),
                catalan(n + 1), count_kind(l, EnumerationKind::transfer, jobs));
  }
  if (b.family_enabled("grid", 2)) {
    const Lattice l = Lattice::product(Lattice::chain(2), Lattice::chain(1));
    b.add_count("grid", "transfer systems on grid:2,1", 68,
                count_kind(l, EnumerationKind::transfer, jobs));
    b.add_count("grid", "cotransfer systems on grid:2,1", 68,
                count_kind(l, EnumerationKind::cotransfer, jobs));
  }
  for (int n = 1; n <= 6; ++n) {
    if (!b.family_enabled("diamond", n)) continue;
    const Lattice l = Lattice::diamond(n);
    b.add_count("diamond", "transfer systems on diamond:" + std::to_string(n),
                *expected_count(Family::diamond, n, EnumerationKind::transfer),
                count_kind(l, EnumerationKind::transfer, jobs));
  }
  if (b.family_enabled("pentagon")) {
    const Lattice l = Lattice::pentagon();
    b.add_count("pentagon", "transfer systems on pentagon", 26,
                count_kind(l, EnumerationKind::transfer, jobs));
    b.add_count("pentagon", "cotransfer systems on pentagon", 26,
                count_kind(l, EnumerationKind::cotransfer, jobs));
  }

  // model structure counts
  for (int n = 1; n <= 2; ++n) {
    if (!b.family_enabled("chain", n)) continue;
    const Lattice l = Lattice::chain(n);
    b.add_count("chain", "model structures on chain:" + std::to_string(n),
                n == 1 ? 3 : 10,
                count_kind(l, EnumerationKind::model_structure, jobs));
  }
  if (b.family_enabled("grid", 1)) {
    const Lattice l = Lattice::product(Lattice::chain(1), Lattice::chain(1));
    b.add_count("grid", "model structures on grid:1,1", 23,
                count_kind(l, EnumerationKind::model_structure, jobs));
  }
  for (int n = 1; n <= 5; ++n) {
    if (!b.family_enabled("diamond", n)) continue;
    const Lattice l = Lattice::diamond(n);
    b.add_count(
        "diamond", "model structures on diamond:" + std::to_string(n),
        *expected_count(Family::diamond, n, EnumerationKind::model_structure),
        count_kind(l, EnumerationKind::model_structure, jobs));
  }
  if (b.family_enabled("pentagon")) {
    const Lattice l = Lattice::pentagon();
    b.add_count("pentagon", "model structures on pentagon", 70,
                count_kind(l, EnumerationKind::model_structure, jobs));
  }

  // weak equivalence set counts
  for (int n = 1; n <= 3; ++n) {
    if (!b.family_enabled("grid", n)) continue;
    const Lattice l = Lattice::product(Lattice::chain(n), Lattice::chain(1));
    b.add_count(
        "grid",
        "weak equivalence sets on grid:" + std::to_string(n) + ",1",
        *expected_count(Family::grid_n_by_1, n, EnumerationKind::weq_set),
        count_kind(l, EnumerationKind::weq_set, jobs));
  }
  for (int n = 1; n <= 6; ++n) {
    if (!b.family_enabled("diamond", n)) continue;
    const Lattice l = Lattice::diamond(n);
    b.add_count(
        "diamond",
        "weak equivalence sets on diamond:" + std::to_string(n),
        *expected_count(Family::diamond, n, EnumerationKind::weq_set),
        count_kind(l, EnumerationKind::weq_set, jobs));
  }
  if (b.family_enabled("pentagon")) {
    const Lattice l = Lattice::pentagon();
    b.add_count("pentagon", "weak equivalence sets on pentagon", 22,
                count_kind(l, EnumerationKind::weq_set, jobs));
  }
}

void pentagon_breakdown_rows(TableBuilder& b) {
  if (!b.family_enabled("pentagon")) return;
  const Lattice l = Lattice::pentagon();
  int transfer_only = 0, cotransfer_only = 0, both = 0, neither = 0;
  for (const ArrowSet& w : enumerate_weak_equivalence_sets(l, b.options.jobs)) {
    const bool tr = is_transfer_system(w);
    const bool co = is_cotransfer_system(w);
    if (tr && co)
      ++both;
    else if (tr)
      ++transfer_only;
    else if (co)
      ++cotransfer_only;
    else
      ++neither;
  }
  std::ostringstream computed;
  computed << transfer_only << "/" << cotransfer_only << "/" << both << "/"
           << neither;
  b.add("pentagon",
        "pentagon weq breakdown (transfer-only/cotransfer-only/both/neither)",
        "8/8/5/1", computed.str());
}

void worked_example_rows(TableBuilder& b) {
  if (!b.family_enabled("examples")) return;

  {  // generated transfer system on grid:2,1
    const Lattice l = Lattice::product(Lattice::chain(2), Lattice::chain(1));
    const ArrowSet seed =
        arrow_set_of_labels(l, {{"(1,0)", "(2,0)"}, {"(2,0)", "(2,1)"}});
    const ArrowSet expected = arrow_set_of_labels(l, {{"(0,0)", "(0,1)"},
                                                      {"(1,0)", "(1,1)"},
                                                      {"(1,0)", "(2,0)"},
                                                      {"(1,0)", "(2,1)"},
                                                      {"(2,0)", "(2,1)"}});
    b.add_set("generate_transfer of the two-arrow seed on grid:2,1", expected,
              generate_transfer(seed));
  }

  {  // downward extension of the three verticals on grid:2,1
    const Lattice l = Lattice::product(Lattice::chain(2), Lattice::chain(1));
    const ArrowSet verticals = arrow_set_of_labels(
        l, {{"(0,0)", "(0,1)"}, {"(1,0)", "(1,1)"}, {"(2,0)", "(2,1)"}});
    const ArrowSet expected = arrow_set_of_labels(l, {{"(0,0)", "(0,1)"},
                                                      {"(0,0)", "(1,1)"},
                                                      {"(0,0)", "(2,1)"},
                                                      {"(1,0)", "(1,1)"},
                                                      {"(1,0)", "(2,1)"},
                                                      {"(2,0)", "(2,1)"}});
    b.add_set("downward extension of the three verticals on grid:2,1",
              expected, downward_extension(verticals));
  }

  {  // left lifts on grid:1,1
    const Lattice l = Lattice::product(Lattice::chain(1), Lattice::chain(1));
    b.add_set("left lift of the complete transfer system on grid:1,1",
              ArrowSet(l), left_lift(ArrowSet::complete(l)));
    const ArrowSet horizontals =
        arrow_set_of_labels(l, {{"(0,0)", "(1,0)"}, {"(0,1)", "(1,1)"}});
    const ArrowSet verticals =
        arrow_set_of_labels(l, {{"(0,0)", "(0,1)"}, {"(1,0)", "(1,1)"}});
    b.add_set("left lift of the two horizontals on grid:1,1", verticals,
              left_lift(horizontals));
  }

  {  // the grid:2,2 walkthrough
    const Lattice l = Lattice::product(Lattice::chain(2), Lattice::chain(2));
    const ArrowSet w = arrow_set_of_labels(l, {{"(0,0)", "(0,1)"},
                                               {"(0,1)", "(0,2)"},
                                               {"(0,0)", "(0,2)"},
                                               {"(1,1)", "(1,2)"},
                                               {"(2,0)", "(2,1)"},
                                               {"(2,1)", "(2,2)"},
                                               {"(2,0)", "(2,2)"}});
    const ArrowSet expected_tmax = arrow_set_of_labels(l, {{"(0,0)", "(0,1)"},
                                                           {"(0,1)", "(0,2)"},
                                                           {"(0,0)", "(0,2)"},
                                                           {"(1,1)", "(1,2)"},
                                                           {"(2,1)", "(2,2)"}});
    const ArrowSet expected_kmax = arrow_set_of_labels(l, {{"(0,1)", "(0,2)"},
                                                           {"(1,1)", "(1,2)"},
                                                           {"(2,0)", "(2,1)"},
                                                           {"(2,1)", "(2,2)"},
                                                           {"(2,0)", "(2,2)"}});
    const ArrowSet expected_kmax_lift = arrow_set_of_labels(
        l, {{"(0,0)", "(0,1)"}, {"(0,0)", "(0,2)"}, {"(0,0)", "(1,0)"},
            {"(0,0)", "(1,1)"}, {"(0,0)", "(1,2)"}, {"(0,0)", "(2,0)"},
            {"(0,0)", "(2,1)"}, {"(0,0)", "(2,2)"}, {"(0,1)", "(1,1)"},
            {"(0,1)", "(2,1)"}, {"(0,2)", "(1,2)"}, {"(0,2)", "(2,2)"},
            {"(1,0)", "(1,1)"}, {"(1,0)", "(1,2)"}, {"(1,0)", "(2,0)"},
            {"(1,0)", "(2,1)"}, {"(1,0)", "(2,2)"}, {"(1,1)", "(2,1)"},
            {"(1,2)", "(2,2)"}});
    const ArrowSet expected_afmin =
        arrow_set_of_labels(l, {{"(0,0)", "(0,1)"}, {"(0,0)", "(0,2)"}});
    b.add_set("grid:2,2 walkthrough: maximum transfer system", expected_tmax,
              t_max(w));
    b.add_set("grid:2,2 walkthrough: maximum cotransfer system", expected_kmax,
              k_max(w));
    b.add_set("grid:2,2 walkthrough: right lift of the maximum cotransfer "
              "system",
              expected_kmax_lift, right_lift(k_max(w)));
    b.add_set("grid:2,2 walkthrough: minimum acyclic fibrations",
              expected_afmin, af_min(w));
    b.add_count("examples", "grid:2,2 walkthrough: interval size", 4,
                af_interval(w).members.size());
  }

  {  // the square: W = {vertical, horizontal}, T = {horizontal} fails
    const Lattice l = Lattice::product(Lattice::chain(1), Lattice::chain(1));
    const ArrowSet w =
        arrow_set_of_labels(l, {{"(0,0)", "(0,1)"}, {"(0,0)", "(1,0)"}});
    const ArrowSet t = arrow_set_of_labels(l, {{"(0,0)", "(1,0)"}});
    b.add_bool("grid:1,1: corner W with the horizontal as acyclic fibrations",
               false, check_pair_afw(w, t));
  }

  {  // the lone middle vertical on grid:2,1 is not a weak equivalence set
    const Lattice l = Lattice::product(Lattice::chain(2), Lattice::chain(1));
    const ArrowSet q = arrow_set_of_labels(l, {{"(1,0)", "(1,1)"}});
    b.add_bool("grid:2,1: lone middle vertical as weak equivalences", false,
               is_weak_equivalence_set(q));
  }

  {  // the five-arrow corner subcategory on grid:2,1
    const Lattice l = Lattice::product(Lattice::chain(2), Lattice::chain(1));
    const ArrowSet q = arrow_set_of_labels(l, {{"(0,0)", "(0,1)"},
                                               {"(0,0)", "(1,0)"},
                                               {"(0,0)", "(1,1)"},
                                               {"(1,0)", "(1,1)"},
                                               {"(0,1)", "(1,1)"}});
    b.add_bool("grid:2,1: corner subcategory with trivial acyclic fibrations",
               false, check_pair_afw(q, ArrowSet(l)));
    b.add_bool("grid:2,1: corner subcategory with trivial acyclic "
               "cofibrations",
               true, check_pair_acw(q, ArrowSet(l)));
  }

  {  // the two grid:2,2 factorization-condition cases
    const Lattice l = Lattice::product(Lattice::chain(2), Lattice::chain(2));
    const ArrowSet q1 = arrow_set_of_labels(l, {{"(0,0)", "(0,1)"},
                                                {"(1,0)", "(1,1)"},
                                                {"(1,1)", "(1,2)"},
                                                {"(2,1)", "(2,2)"},
                                                {"(1,0)", "(1,2)"}});
    const ArrowSet q2 = arrow_set_of_labels(l, {{"(0,1)", "(0,2)"},
                                                {"(1,0)", "(1,1)"},
                                                {"(1,1)", "(1,2)"},
                                                {"(2,0)", "(2,1)"},
                                                {"(1,0)", "(1,2)"}});
    b.add_bool("grid:2,2: staircase failing the factorization condition",
               false, satisfies_factorization_condition(q1));
    b.add_bool("grid:2,2: staircase passing the factorization condition", true,
               satisfies_factorization_condition(q2));
  }

  {  // pentagon intervals
    const Lattice l = Lattice::pentagon();
    const ArrowSet w1 = arrow_set_of_labels(
        l, {{"0", "a"}, {"a", "c"}, {"0", "c"}, {"0", "b"}});
    const AfInterval iv1 = af_interval(w1);
    const ArrowSet expected_min =
        arrow_set_of_labels(l, {{"0", "a"}, {"0", "b"}, {"0", "c"}});
    b.add_count("examples", "pentagon W1 interval size", 2,
                iv1.members.size());
    b.add_set("pentagon W1 minimum acyclic fibrations", expected_min, iv1.min);
    b.add_set("pentagon W1 maximum acyclic fibrations", w1, iv1.max);

    const ArrowSet w2 = arrow_set_of_labels(l, {{"0", "a"}, {"c", "1"}});
    const AfInterval iv2 = af_interval(w2);
    b.add_count("examples", "pentagon W2 interval size", 1,
                iv2.members.size());
    b.add_set("pentagon W2 unique acyclic fibrations",
              arrow_set_of_labels(l, {{"0", "a"}}), iv2.members.front());
  }
}

}  // namespace

ReproduceReport run_reproduction(const ReproduceOptions& options) {
  TableBuilder b{options, {}};
  count_rows(b);
  worked_example_rows(b);
  pentagon_breakdown_rows(b);
  return std::move(b.report);
}

}  // namespace latmodel
