// Acceptance suite: runs each published-result criterion end to end and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.
// argv[1] must be the CLI binary (used by the determinism criterion).

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "latmodel/io.hpp"
#include "latmodel/reproduce.hpp"

using namespace latmodel;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok,
            const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
              what.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::uint64_t count_of(const Lattice& l, EnumerationKind kind) {
  EnumerationRequest req;
  req.lattice = &l;
  req.kind = kind;
  req.count_only = true;
  req.jobs = 4;
  return count_systems(req);
}

struct Expect {
  std::string label;
  std::uint64_t expected;
  std::uint64_t computed;
};

bool check_all(std::vector<Expect> rows, std::string* detail) {
  bool ok = true;
  std::ostringstream bad;
  for (const Expect& row : rows)
    if (row.expected != row.computed) {
      ok = false;
      bad << row.label << " expected " << row.expected << " got "
          << row.computed << "; ";
    }
  *detail = bad.str();
  return ok;
}

std::vector<Lattice> oracle_lattices() {
  std::vector<Lattice> out;
  for (int n = 0; n <= 5; ++n) out.push_back(Lattice::chain(n));
  out.push_back(Lattice::product(Lattice::chain(1), Lattice::chain(1)));
  out.push_back(Lattice::product(Lattice::chain(2), Lattice::chain(1)));
  for (int n = 1; n <= 4; ++n) out.push_back(Lattice::diamond(n));
  out.push_back(Lattice::pentagon());
  return out;
}

void criterion_1() {
  std::vector<Expect> rows;
  for (int n = 0; n <= 5; ++n)
    rows.push_back({"transfer chain:" + std::to_string(n), catalan(n + 1),
                    count_of(Lattice::chain(n), EnumerationKind::transfer)});
  const Lattice g21 = Lattice::product(Lattice::chain(2), Lattice::chain(1));
  rows.push_back({"transfer grid:2,1", 68,
                  count_of(g21, EnumerationKind::transfer)});
  rows.push_back({"cotransfer grid:2,1", 68,
                  count_of(g21, EnumerationKind::cotransfer)});
  for (int n = 1; n <= 6; ++n)
    rows.push_back(
        {"transfer diamond:" + std::to_string(n),
         (std::uint64_t{1} << (n + 1)) + static_cast<std::uint64_t>(n),
         count_of(Lattice::diamond(n), EnumerationKind::transfer)});
  rows.push_back({"transfer pentagon", 26,
                  count_of(Lattice::pentagon(), EnumerationKind::transfer)});
  std::string detail;
  const bool ok = check_all(rows, &detail);
  report(1, "transfer-system counts (Catalan chains, 68 on grid:2,1, "
            "diamonds, pentagon)",
         ok, detail);
}

void criterion_2() {
  std::vector<Expect> rows;
  rows.push_back({"model chain:1", 3,
                  count_of(Lattice::chain(1), EnumerationKind::model_structure)});
  rows.push_back({"model chain:2", 10,
                  count_of(Lattice::chain(2), EnumerationKind::model_structure)});
  rows.push_back(
      {"model grid:1,1", 23,
       count_of(Lattice::product(Lattice::chain(1), Lattice::chain(1)),
                EnumerationKind::model_structure)});
  for (int n = 1; n <= 5; ++n)
    rows.push_back(
        {"model diamond:" + std::to_string(n),
         *expected_count(Family::diamond, n, EnumerationKind::model_structure),
         count_of(Lattice::diamond(n), EnumerationKind::model_structure)});
  rows.push_back({"model pentagon", 70,
                  count_of(Lattice::pentagon(),
                           EnumerationKind::model_structure)});
  std::string detail;
  const bool ok = check_all(rows, &detail);
  report(2, "model-structure counts (3, 10, 23, diamonds, 70)", ok, detail);
}

void criterion_3() {
  std::vector<Expect> rows;
  for (int n = 1; n <= 3; ++n)
    rows.push_back(
        {"weq grid:" + std::to_string(n) + ",1",
         *expected_count(Family::grid_n_by_1, n, EnumerationKind::weq_set),
         count_of(Lattice::product(Lattice::chain(n), Lattice::chain(1)),
                  EnumerationKind::weq_set)});
  for (int n = 1; n <= 6; ++n)
    rows.push_back(
        {"weq diamond:" + std::to_string(n),
         *expected_count(Family::diamond, n, EnumerationKind::weq_set),
         count_of(Lattice::diamond(n), EnumerationKind::weq_set)});
  rows.push_back({"weq pentagon", 22,
                  count_of(Lattice::pentagon(), EnumerationKind::weq_set)});
  std::string detail;
  const bool ok = check_all(rows, &detail);
  report(3, "weak-equivalence-set counts (grids 10/48/216, diamonds 3^n+1, "
            "pentagon 22)",
         ok, detail);
}

void criterion_4() {
  ReproduceOptions options;
  options.family = "examples";
  const ReproduceReport rep = run_reproduction(options);
  std::ostringstream detail;
  for (const ReproduceRow& row : rep.rows)
    if (!row.ok)
      detail << row.name << " expected " << row.expected << " got "
             << row.computed << "; ";
  report(4, "worked examples reproduced bit-exactly (" +
                std::to_string(rep.rows.size()) + " pinned values)",
         rep.all_ok, detail.str());
}

void criterion_5() {
  bool ok = true;
  std::ostringstream detail;
  for (const Lattice& l : oracle_lattices()) {
    if (l.arrow_count() > 20) continue;

    // lifting formulas == lifting oracle on every (co)transfer system
    const auto transfers = brute_force_filter(l, is_transfer_system);
    for (const ArrowSet& t : transfers)
      if (!(left_lift(t) == left_lifters_oracle(t))) {
        ok = false;
        detail << "left_lift mismatch; ";
      }
    const auto cotransfers = brute_force_filter(l, is_cotransfer_system);
    for (const ArrowSet& k : cotransfers)
      if (!(right_lift(k) == right_lifters_oracle(k))) {
        ok = false;
        detail << "right_lift mismatch; ";
      }

    // backtracking enumerators == brute force
    EnumerationRequest req;
    req.lattice = &l;
    req.kind = EnumerationKind::transfer;
    if (!(enumerate_transfer_systems(req) == transfers)) {
      ok = false;
      detail << "transfer enumeration mismatch; ";
    }
    req.kind = EnumerationKind::cotransfer;
    if (!(enumerate_cotransfer_systems(req) == cotransfers)) {
      ok = false;
      detail << "cotransfer enumeration mismatch; ";
    }
    if (!(enumerate_wide_decomposable(l) ==
          brute_force_filter(l, is_wide_decomposable_subcategory))) {
      ok = false;
      detail << "decomposable enumeration mismatch; ";
    }

    // the three weak-equivalence-set characterizations agree
    for (const ArrowSet& q : enumerate_wide_decomposable(l)) {
      const bool clause2 = check_pair_afw(q, t_max(q));
      const bool clause3 = satisfies_factorization_condition(q);
      bool clause1 = false;
      EnumerationRequest within_q;
      within_q.lattice = &l;
      within_q.kind = EnumerationKind::transfer;
      within_q.within = q;
      for (const ArrowSet& t : enumerate_transfer_systems(within_q))
        if (check_pair_afw(q, t)) {
          clause1 = true;
          break;
        }
      if (clause1 != clause2 || clause2 != clause3) {
        ok = false;
        detail << "characterization clauses disagree; ";
      }
    }
  }
  report(5, "oracle equivalences (lifting formulas, enumerators vs brute "
            "force, three-way characterization)",
         ok, detail.str());
}

void criterion_6() {
  bool ok = true;
  std::ostringstream detail;
  std::vector<Lattice> lattices;
  for (int n = 0; n <= 3; ++n) lattices.push_back(Lattice::chain(n));
  lattices.push_back(Lattice::product(Lattice::chain(1), Lattice::chain(1)));
  lattices.push_back(Lattice::product(Lattice::chain(2), Lattice::chain(1)));
  for (int n = 1; n <= 3; ++n) lattices.push_back(Lattice::diamond(n));
  lattices.push_back(Lattice::pentagon());

  for (const Lattice& l : lattices) {
    for (const ModelStructure& m : enumerate_model_structures(l, 4)) {
      if (!verify_model_structure(m).ok) {
        ok = false;
        detail << "verification failed on an enumerated structure; ";
      }
      for (auto [x, y] : l.covers()) {
        const Arrow f{x, y};
        if (m.weq.contains(f)) {
          if (m.afib.contains(f) == m.acof.contains(f)) {
            ok = false;
            detail << "weak-equivalence cover not in exactly one acyclic "
                      "class; ";
          }
        } else if (!m.cof.contains(f) || !m.fib.contains(f)) {
          ok = false;
          detail << "non-weak-equivalence cover missing from C n F; ";
        }
      }
    }
  }

  // mutation suite on grid:1,1
  const Lattice sq = Lattice::product(Lattice::chain(1), Lattice::chain(1));
  const auto structures = enumerate_model_structures(sq);
  if (structures.size() != 23) {
    ok = false;
    detail << "expected 23 structures on grid:1,1; ";
  }
  auto classes = {&ModelStructure::weq, &ModelStructure::acof,
                  &ModelStructure::cof, &ModelStructure::afib,
                  &ModelStructure::fib};
  for (const ModelStructure& m : structures)
    for (auto member : classes)
      for (const Arrow& f : (m.*member).arrows()) {
        ModelStructure mutated = m;
        (mutated.*member).erase_index(sq.arrow_index(f));
        if (verify_model_structure(mutated).ok) {
          ok = false;
          detail << "mutation not caught; ";
        }
      }
  report(6, "model-axiom verification (all structures pass; every "
            "single-arrow deletion on grid:1,1 is caught)",
         ok, detail.str());
}

void criterion_7() {
  const Lattice p = Lattice::pentagon();
  int transfer_only = 0, cotransfer_only = 0, both = 0, neither = 0;
  for (const ArrowSet& w : enumerate_weak_equivalence_sets(p)) {
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
  const bool ok =
      transfer_only == 8 && cotransfer_only == 8 && both == 5 && neither == 1;
  std::ostringstream detail;
  detail << transfer_only << "/" << cotransfer_only << "/" << both << "/"
         << neither;
  report(7, "pentagon weak-equivalence breakdown is 8/8/5/1", ok,
         detail.str());
}

std::string run_capture(const std::string& command, int* exit_code) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return output;
  }
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    output.append(buffer, got);
  *exit_code = pclose(pipe);
  return output;
}

void criterion_8(const char* cli) {
  if (!cli) {
    report(8, "determinism across thread counts", false,
           "CLI binary path not supplied");
    return;
  }
  const std::string base = std::string("\"") + cli +
                           "\" enumerate --kind model --lattice grid:1,1";
  int code8 = 0, code1 = 0;
  const std::string out8 = run_capture(base + " --jobs 8", &code8);
  const std::string out1 = run_capture(base + " --jobs 1", &code1);
  const bool ok = code8 == 0 && code1 == 0 && !out8.empty() && out8 == out1;
  report(8, "CLI output with --jobs 8 is byte-identical to --jobs 1", ok,
         ok ? "" : "outputs differ or nonzero exit");
}

}  // namespace

int main(int argc, char** argv) {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8(argc > 1 ? argv[1] : nullptr);
  std::printf("%s\n", failures == 0 ? "acceptance: all criteria pass"
                                    : "acceptance: FAILURES");
  return failures == 0 ? 0 : 1;
}
