#include "latmodel/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <thread>

namespace latmodel {

const char* enumeration_kind_name(EnumerationKind k) {
  switch (k) {
    case EnumerationKind::transfer: return "transfer";
    case EnumerationKind::cotransfer: return "cotransfer";
    case EnumerationKind::decomposable: return "decomposable";
    case EnumerationKind::weq_set: return "weq";
    case EnumerationKind::model_structure: return "model";
  }
  return "?";
}

std::optional<EnumerationKind> enumeration_kind_from_name(
    const std::string& s) {
  if (s == "transfer") return EnumerationKind::transfer;
  if (s == "cotransfer") return EnumerationKind::cotransfer;
  if (s == "decomposable") return EnumerationKind::decomposable;
  if (s == "weq" || s == "weq_set") return EnumerationKind::weq_set;
  if (s == "model" || s == "model_structure")
    return EnumerationKind::model_structure;
  return std::nullopt;
}

namespace {

constexpr int kSplitDepth = 8;  // arrow decisions before forking subtrees

void sort_canonical(std::vector<ArrowSet>& sets) {
  std::sort(sets.begin(), sets.end(),
            [](const ArrowSet& a, const ArrowSet& b) {
              return a.canonical_less(b);
            });
}

/// Runs fn(0..task_count) across `jobs` threads, any order. Callers make the
/// result deterministic by writing into per-task slots.
void run_tasks(int jobs, int task_count, const std::function<void(int)>& fn) {
  if (jobs <= 1 || task_count <= 1) {
    for (int t = 0; t < task_count; ++t) fn(t);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int t = next.fetch_add(1);
      if (t >= task_count) return;
      fn(t);
    }
  };
  std::vector<std::thread> pool;
  const int threads = std::min(jobs, task_count);
  pool.reserve(threads);
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

using ClosureFn = ArrowSet (*)(const ArrowSet&);

int lowest_undecided(const ArrowSet& t, const ArrowSet& x) {
  const int m = t.lattice().arrow_count();
  for (int i = 0; i < m; ++i)
    if (!t.contains_index(i) && !x.contains_index(i)) return i;
  return -1;
}

/// Full sequential walk of one subtree.
void walk_closed(const ClosureFn& closure, const ArrowSet& t, const ArrowSet& x,
                 const std::function<void(const ArrowSet&)>& emit) {
  const int i = lowest_undecided(t, x);
  if (i < 0) {
    emit(t);
    return;
  }
  {
    ArrowSet x2 = x;
    x2.insert_index(i);
    walk_closed(closure, t, x2, emit);
  }
  ArrowSet t2 = t;
  t2.insert_index(i);
  t2 = closure(t2);
  if (!t2.intersects(x)) walk_closed(closure, t2, x, emit);
}

struct Subtree {
  ArrowSet t;
  ArrowSet x;
};

/// Walks the first `depth` decisions, emitting completed systems on the way
/// and collecting subtree roots at the depth limit.
void split_closed(const ClosureFn& closure, const ArrowSet& t,
                  const ArrowSet& x, int depth,
                  const std::function<void(const ArrowSet&)>& emit,
                  std::vector<Subtree>& subtrees) {
  const int i = lowest_undecided(t, x);
  if (i < 0) {
    emit(t);
    return;
  }
  if (depth == 0) {
    subtrees.push_back({t, x});
    return;
  }
  {
    ArrowSet x2 = x;
    x2.insert_index(i);
    split_closed(closure, t, x2, depth - 1, emit, subtrees);
  }
  ArrowSet t2 = t;
  t2.insert_index(i);
  t2 = closure(t2);
  if (!t2.intersects(x)) split_closed(closure, t2, x, depth - 1, emit, subtrees);
}

struct ClosedEnumeration {
  std::vector<ArrowSet> sets;  // collect mode
  std::uint64_t count = 0;     // count mode
};

ClosedEnumeration enumerate_closed(const EnumerationRequest& req,
                                   const ClosureFn& closure) {
  const Lattice& l = *req.lattice;
  const ArrowSet within =
      req.within ? *req.within : ArrowSet::complete(l);
  const ArrowSet lower = req.superset_of ? *req.superset_of : ArrowSet(l);
  if (req.superset_of && req.within && !lower.subset_of(within))
    throw Error(ErrorKind::precondition_violated,
                "PreconditionViolated: superset_of must be contained in "
                "within");

  ClosedEnumeration out;
  ArrowSet base = closure(lower);
  ArrowSet excluded = within.complement();
  if (base.intersects(excluded)) return out;  // lower bound forces escape

  if (req.jobs <= 1) {
    if (req.count_only) {
      walk_closed(closure, base, excluded,
                  [&](const ArrowSet&) { ++out.count; });
    } else {
      walk_closed(closure, base, excluded,
                  [&](const ArrowSet& s) { out.sets.push_back(s); });
      sort_canonical(out.sets);
    }
    return out;
  }

  std::vector<Subtree> subtrees;
  std::vector<ArrowSet> prefix_done;
  split_closed(closure, base, excluded, kSplitDepth,
               [&](const ArrowSet& s) { prefix_done.push_back(s); },
               subtrees);

  if (req.count_only) {
    std::vector<std::uint64_t> per_task(subtrees.size(), 0);
    run_tasks(req.jobs, static_cast<int>(subtrees.size()), [&](int ti) {
      walk_closed(closure, subtrees[ti].t, subtrees[ti].x,
                  [&](const ArrowSet&) { ++per_task[ti]; });
    });
    out.count = prefix_done.size();
    for (std::uint64_t c : per_task) out.count += c;
    return out;
  }

  std::vector<std::vector<ArrowSet>> per_task(subtrees.size());
  run_tasks(req.jobs, static_cast<int>(subtrees.size()), [&](int ti) {
    walk_closed(closure, subtrees[ti].t, subtrees[ti].x,
                [&](const ArrowSet& s) { per_task[ti].push_back(s); });
  });
  out.sets = std::move(prefix_done);
  for (auto& chunk : per_task)
    out.sets.insert(out.sets.end(), chunk.begin(), chunk.end());
  sort_canonical(out.sets);
  return out;
}

void reject_bounds(const EnumerationRequest& req, const char* kind) {
  if (req.within || req.superset_of)
    throw Error(ErrorKind::precondition_violated,
                std::string("PreconditionViolated: within/superset_of bounds "
                            "only apply to transfer/cotransfer enumeration, "
                            "not ") +
                    kind);
}

/// Candidate subcategory generated by a cover subset: x->z is present iff z
/// is reachable from x through selected covers. Composition-closed by
/// construction.
ArrowSet cover_subset_candidate(const Lattice& l, std::uint64_t mask) {
  const auto& covers = l.covers();
  ArrowSet set(l);
  std::vector<char> reach(l.size() * l.size(), 0);
  for (int x = 0; x < l.size(); ++x) {
    reach[x * l.size() + x] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (size_t i = 0; i < covers.size(); ++i) {
        if (!((mask >> i) & 1)) continue;
        const auto [u, v] = covers[i];
        if (reach[x * l.size() + u] && !reach[x * l.size() + v]) {
          reach[x * l.size() + v] = 1;
          grew = true;
        }
      }
    }
    for (int z = 0; z < l.size(); ++z)
      if (z != x && reach[x * l.size() + z]) set.insert(Arrow{x, z});
  }
  assert(is_composition_closed(set));
  return set;
}

std::vector<ArrowSet> decomposables_for_masks(const Lattice& l,
                                              std::uint64_t begin,
                                              std::uint64_t end) {
  std::vector<ArrowSet> out;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    ArrowSet candidate = cover_subset_candidate(l, mask);
    if (is_decomposable(candidate)) out.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace

std::vector<ArrowSet> enumerate_transfer_systems(const EnumerationRequest& req) {
  return enumerate_closed(req, &generate_transfer).sets;
}

std::vector<ArrowSet> enumerate_cotransfer_systems(
    const EnumerationRequest& req) {
  return enumerate_closed(req, &generate_cotransfer).sets;
}

std::vector<ArrowSet> enumerate_wide_decomposable(const Lattice& l, int jobs) {
  const int m = static_cast<int>(l.covers().size());
  if (m > 25)
    throw Error(ErrorKind::too_large,
                "TooLarge: wide-decomposable enumeration iterates cover "
                "subsets; this lattice has " +
                    std::to_string(m) + " covers (limit 25)");
  const std::uint64_t total = std::uint64_t{1} << m;
  const int chunk_count =
      jobs <= 1 ? 1 : std::min<std::uint64_t>(total, jobs * 8);
  std::vector<std::vector<ArrowSet>> per_chunk(chunk_count);
  run_tasks(jobs, chunk_count, [&](int c) {
    const std::uint64_t begin = total * c / chunk_count;
    const std::uint64_t end = total * (c + 1) / chunk_count;
    per_chunk[c] = decomposables_for_masks(l, begin, end);
  });
  std::vector<ArrowSet> out;
  for (auto& chunk : per_chunk)
    out.insert(out.end(), chunk.begin(), chunk.end());
  sort_canonical(out);
  return out;
}

std::vector<ArrowSet> enumerate_weak_equivalence_sets(const Lattice& l,
                                                      int jobs) {
  std::vector<ArrowSet> all = enumerate_wide_decomposable(l, jobs);
  std::vector<char> keep(all.size(), 0);
  run_tasks(jobs, static_cast<int>(all.size()),
            [&](int i) { keep[i] = is_weak_equivalence_set(all[i]); });
  std::vector<ArrowSet> out;
  for (size_t i = 0; i < all.size(); ++i)
    if (keep[i]) out.push_back(std::move(all[i]));
  return out;
}

std::vector<ModelStructure> enumerate_model_structures(const Lattice& l,
                                                       int jobs) {
  const std::vector<ArrowSet> weqs = enumerate_weak_equivalence_sets(l, jobs);
  std::vector<std::vector<ModelStructure>> per_weq(weqs.size());
  run_tasks(jobs, static_cast<int>(weqs.size()), [&](int i) {
    const AfInterval interval = af_interval(weqs[i]);
    per_weq[i].reserve(interval.members.size());
    for (const ArrowSet& t : interval.members)
      per_weq[i].push_back(assemble_model_structure(weqs[i], t));
  });
  std::vector<ModelStructure> out;
  for (auto& chunk : per_weq)
    for (auto& m : chunk) out.push_back(std::move(m));
  return out;
}

std::uint64_t count_systems(const EnumerationRequest& req) {
  EnumerationRequest counting = req;
  counting.count_only = true;
  switch (req.kind) {
    case EnumerationKind::transfer:
      return enumerate_closed(counting, &generate_transfer).count;
    case EnumerationKind::cotransfer:
      return enumerate_closed(counting, &generate_cotransfer).count;
    case EnumerationKind::decomposable:
      reject_bounds(req, "decomposable");
      return enumerate_wide_decomposable(*req.lattice, req.jobs).size();
    case EnumerationKind::weq_set:
      reject_bounds(req, "weq");
      return enumerate_weak_equivalence_sets(*req.lattice, req.jobs).size();
    case EnumerationKind::model_structure: {
      reject_bounds(req, "model");
      // sum of interval sizes; members themselves are not materialized
      const std::vector<ArrowSet> weqs =
          enumerate_weak_equivalence_sets(*req.lattice, req.jobs);
      std::vector<std::uint64_t> per_weq(weqs.size(), 0);
      run_tasks(req.jobs, static_cast<int>(weqs.size()), [&](int i) {
        EnumerationRequest inner{&weqs[i].lattice(), EnumerationKind::transfer,
                                 t_max(weqs[i]), af_min(weqs[i]), true, 1};
        per_weq[i] = enumerate_closed(inner, &generate_transfer).count;
      });
      std::uint64_t total = 0;
      for (std::uint64_t c : per_weq) total += c;
      return total;
    }
  }
  return 0;
}

std::vector<ArrowSet> brute_force_filter(
    const Lattice& l, const std::function<bool(const ArrowSet&)>& predicate) {
  const int m = l.arrow_count();
  if (m > 20)
    throw Error(ErrorKind::too_large,
                "TooLarge: brute force iterates all arrow subsets; this "
                "lattice has " +
                    std::to_string(m) + " non-identity arrows (limit 20)");
  std::vector<ArrowSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    ArrowSet s(l);
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1) s.insert_index(i);
    if (predicate(s)) out.push_back(std::move(s));
  }
  sort_canonical(out);
  return out;
}

// -- closed-form oracles --------------------------------------------------------

std::optional<Family> family_from_name(const std::string& s) {
  if (s == "chain") return Family::chain;
  if (s == "grid") return Family::grid_n_by_1;
  if (s == "diamond") return Family::diamond;
  if (s == "pentagon") return Family::pentagon;
  return std::nullopt;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::chain: return "chain";
    case Family::grid_n_by_1: return "grid";
    case Family::diamond: return "diamond";
    case Family::pentagon: return "pentagon";
  }
  return "?";
}

std::uint64_t catalan(int k) {
  // C(k) = binom(2k, k) / (k + 1), exact in 64 bits well past desk scale
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

namespace {

std::uint64_t pow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::optional<std::uint64_t> expected_count(Family family, int n,
                                            EnumerationKind kind) {
  switch (family) {
    case Family::chain:
      if (n < 0) return std::nullopt;
      switch (kind) {
        case EnumerationKind::transfer:
        case EnumerationKind::cotransfer:
          return catalan(n + 1);
        case EnumerationKind::decomposable:
        case EnumerationKind::weq_set:
          return pow_u64(2, n);
        default:
          return std::nullopt;
      }
    case Family::grid_n_by_1:
      if (n < 1) return std::nullopt;
      if (kind == EnumerationKind::weq_set)
        return pow_u64(2, 2 * n + 2) - pow_u64(2, n + 1) -
               pow_u64(2, n) * static_cast<std::uint64_t>(n);
      return std::nullopt;
    case Family::diamond:
      if (n < 1) return std::nullopt;
      switch (kind) {
        case EnumerationKind::transfer:
        case EnumerationKind::cotransfer:
          return pow_u64(2, n + 1) + n;
        case EnumerationKind::decomposable:
        case EnumerationKind::weq_set:
          return pow_u64(3, n) + 1;
        case EnumerationKind::model_structure:
          return pow_u64(3, n) + pow_u64(2, n + 1) + 3 * n;
      }
      return std::nullopt;
    case Family::pentagon:
      switch (kind) {
        case EnumerationKind::transfer:
        case EnumerationKind::cotransfer:
          return 26;
        case EnumerationKind::decomposable:
        case EnumerationKind::weq_set:
          return 22;
        case EnumerationKind::model_structure:
          return 70;
      }
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

/// (family, n) back-parsed from a lattice's construction spec, for formula
/// lookup. Only grids of shape [n]x[1] get a grid formula.
std::optional<std::pair<Family, int>> family_of(const Lattice& l) {
  const std::string& spec = l.family_spec();
  if (spec.empty()) return std::nullopt;
  if (spec == "pentagon") return std::make_pair(Family::pentagon, 0);
  if (spec.rfind("chain:", 0) == 0)
    return std::make_pair(Family::chain, std::stoi(spec.substr(6)));
  if (spec.rfind("diamond:", 0) == 0)
    return std::make_pair(Family::diamond, std::stoi(spec.substr(8)));
  if (spec.rfind("grid:", 0) == 0) {
    const auto comma = spec.find(',');
    const int m = std::stoi(spec.substr(5, comma - 5));
    const int n = std::stoi(spec.substr(comma + 1));
    if (n == 1) return std::make_pair(Family::grid_n_by_1, m);
    if (m == 1) return std::make_pair(Family::grid_n_by_1, n);
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

CountReport run_count_report(const EnumerationRequest& req) {
  CountReport report;
  report.lattice_label = req.lattice->family_spec().empty()
                             ? "custom"
                             : req.lattice->family_spec();
  report.kind = req.kind;
  const auto start = std::chrono::steady_clock::now();
  report.count = count_systems(req);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (!req.within && !req.superset_of) {
    if (const auto fam = family_of(*req.lattice)) {
      report.expected = expected_count(fam->first, fam->second, req.kind);
      if (report.expected) report.match = *report.expected == report.count;
    }
  }
  return report;
}

}  // namespace latmodel
