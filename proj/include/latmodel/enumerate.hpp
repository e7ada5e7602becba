#ifndef LATMODEL_ENUMERATE_HPP
#define LATMODEL_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latmodel/model_structure.hpp"

namespace latmodel {

enum class EnumerationKind {
  transfer,
  cotransfer,
  decomposable,
  weq_set,
  model_structure,
};

const char* enumeration_kind_name(EnumerationKind k);
std::optional<EnumerationKind> enumeration_kind_from_name(const std::string& s);

/// What to enumerate, over which lattice, within which bounds. Bounds apply
/// to the transfer/cotransfer kinds only. superset_of must be contained in
/// within when both are present.
struct EnumerationRequest {
  const Lattice* lattice = nullptr;
  EnumerationKind kind = EnumerationKind::transfer;
  std::optional<ArrowSet> within;
  std::optional<ArrowSet> superset_of;
  bool count_only = false;
  int jobs = 1;
};

/// All arrow-set enumerators emit every system exactly once, in canonical
/// order (cardinality, then lexicographic on the arrow index), byte-identical
/// across thread counts.
///
/// Strategy for the (co)transfer enumerators: backtracking over the arrow
/// index. Each decision point picks the lowest undecided arrow; the include
/// branch propagates the pullback/composition closure and prunes when the
/// closure hits an excluded arrow or leaves the upper bound. Every closed set
/// is reached by exactly one decision path, so no deduplication is needed.
/// Parallel runs split the decision tree at a fixed depth into independent
/// subtrees.
std::vector<ArrowSet> enumerate_transfer_systems(const EnumerationRequest& req);
std::vector<ArrowSet> enumerate_cotransfer_systems(const EnumerationRequest& req);

/// All wide, composition-closed, decomposable subcategories. Such a set is
/// determined by its covers: enumerate cover subsets S, build the candidate
/// (x->z present iff some saturated chain from x to z uses only covers in S),
/// and keep candidates that are decomposable.
std::vector<ArrowSet> enumerate_wide_decomposable(const Lattice& l, int jobs = 1);

/// Wide decomposable subcategories passing the weak-equivalence-set check.
std::vector<ArrowSet> enumerate_weak_equivalence_sets(const Lattice& l,
                                                      int jobs = 1);

/// For each weak equivalence set W (canonical order) and each member T of
/// the acyclic-fibration interval over W (canonical order), the assembled
/// model structure.
std::vector<ModelStructure> enumerate_model_structures(const Lattice& l,
                                                       int jobs = 1);

/// Count without materializing.
std::uint64_t count_systems(const EnumerationRequest& req);

/// Exhaustive oracle: every subset of the arrow index passing the predicate,
/// canonical order. Guarded at 20 non-identity arrows (TooLarge).
std::vector<ArrowSet> brute_force_filter(
    const Lattice& l, const std::function<bool(const ArrowSet&)>& predicate);

// -- closed-form count oracles --------------------------------------------------

enum class Family { chain, grid_n_by_1, diamond, pentagon };

std::optional<Family> family_from_name(const std::string& s);
const char* family_name(Family f);

/// The closed-form count when one applies to (family, n, kind):
///   chain:      transfer/cotransfer Catalan(n+1); decomposable/weq 2^n
///   grid [n]x[1]: weq 2^(2n+2) - 2^(n+1) - 2^n * n
///   diamond:    transfer/cotransfer 2^(n+1) + n; decomposable/weq 3^n + 1;
///               model 3^n + 2^(n+1) + 3n
///   pentagon:   transfer/cotransfer 26; decomposable/weq 22; model 70
std::optional<std::uint64_t> expected_count(Family family, int n,
                                            EnumerationKind kind);

std::uint64_t catalan(int k);

/// One row of counting output.
struct CountReport {
  std::string lattice_label;
  EnumerationKind kind = EnumerationKind::transfer;
  std::uint64_t count = 0;
  std::optional<std::uint64_t> expected;
  std::optional<bool> match;
  double wall_seconds = 0.0;
};

/// Runs the count for the request and fills in the formula expectation when
/// the lattice came from a named family with a closed form.
CountReport run_count_report(const EnumerationRequest& req);

}  // namespace latmodel

#endif  // LATMODEL_ENUMERATE_HPP
