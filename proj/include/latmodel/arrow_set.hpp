#ifndef LATMODEL_ARROW_SET_HPP
#define LATMODEL_ARROW_SET_HPP

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "latmodel/lattice.hpp"

namespace latmodel {

/// A set of non-identity arrows over a fixed lattice, stored as a bitset over
/// the lattice's (src, tgt)-sorted comparable-pair index. Identity arrows are
/// implicitly present everywhere (wide-subcategory convention) and never
/// stored. Immutable in spirit: operations return new values.
///
/// The owning Lattice must outlive every ArrowSet built on it.
class ArrowSet {
 public:
  explicit ArrowSet(const Lattice& lattice);

  static ArrowSet empty(const Lattice& lattice) { return ArrowSet(lattice); }
  static ArrowSet complete(const Lattice& lattice);

  /// Builds from (src, tgt) element-id pairs. Throws NotComparable.
  static ArrowSet of(const Lattice& lattice,
                     std::initializer_list<std::pair<ElementId, ElementId>> arrows);

  const Lattice& lattice() const { return *lattice_; }

  bool contains(Arrow f) const;
  bool contains_index(int index) const {
    return (words_[index >> 6] >> (index & 63)) & 1;
  }
  void insert(Arrow f);
  void insert_index(int index) { words_[index >> 6] |= uint64_t{1} << (index & 63); }
  void erase_index(int index) { words_[index >> 6] &= ~(uint64_t{1} << (index & 63)); }

  int count() const;
  bool is_empty() const;

  /// Members in arrow-index order.
  std::vector<Arrow> arrows() const;

  ArrowSet operator|(const ArrowSet& o) const;
  ArrowSet operator&(const ArrowSet& o) const;
  ArrowSet operator-(const ArrowSet& o) const;
  ArrowSet complement() const;

  bool operator==(const ArrowSet& o) const;
  bool subset_of(const ArrowSet& o) const;
  bool intersects(const ArrowSet& o) const;

  /// Canonical order: cardinality, then lexicographic on ascending index
  /// sequences (lowest differing index wins). Total order used for all
  /// deterministic enumeration output.
  bool canonical_less(const ArrowSet& o) const;

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  const Lattice* lattice_;
  std::vector<uint64_t> words_;

  void check_same_lattice(const ArrowSet& o) const;
};

// -- predicates ---------------------------------------------------------------

/// x->y, y->z in a imply x->z in a.
bool is_composition_closed(const ArrowSet& a);

/// Every x->z in a has all its interval factors x->y, y->z in a.
bool is_decomposable(const ArrowSet& a);

/// Composition-closed and decomposable; "wide" is the storage convention.
bool is_wide_decomposable_subcategory(const ArrowSet& a);

/// Composition-closed and closed under (non-identity) pullbacks.
bool is_transfer_system(const ArrowSet& a);

/// Composition-closed and closed under (non-identity) pushouts.
bool is_cotransfer_system(const ArrowSet& a);

/// First member arrow whose pullback escapes the set, if any:
/// (member, missing pullback). Used for diagnostics.
struct ClosureViolation {
  Arrow member;
  Arrow missing;
};
bool transfer_violation(const ArrowSet& a, ClosureViolation* out);
bool cotransfer_violation(const ArrowSet& a, ClosureViolation* out);
bool composition_violation(const ArrowSet& a, ClosureViolation* out);

/// For a (co)transfer system, saturation == decomposability.
/// Throws NotTransferOrCotransfer on anything else.
bool is_saturated(const ArrowSet& a);

// -- closures -----------------------------------------------------------------

/// Least composition-closed superset (transitive closure).
ArrowSet composition_closure(const ArrowSet& a);

/// Smallest transfer system containing s: closure under pullbacks, then
/// composition (iterated to a fixpoint).
ArrowSet generate_transfer(const ArrowSet& s);

/// Smallest cotransfer system containing s (formal dual: pushout closure,
/// then composition).
ArrowSet generate_cotransfer(const ArrowSet& s);

// -- the lattice of (co)transfer systems ---------------------------------------

/// Meet = intersection. Inputs must be transfer systems on the same lattice.
ArrowSet ts_meet(const ArrowSet& t1, const ArrowSet& t2);

/// Join = the transfer system generated by the union; for valid inputs the
/// composition closure of the union already suffices, which is asserted
/// against full generation in debug builds.
ArrowSet ts_join(const ArrowSet& t1, const ArrowSet& t2);

ArrowSet cots_meet(const ArrowSet& k1, const ArrowSet& k2);
ArrowSet cots_join(const ArrowSet& k1, const ArrowSet& k2);

// -- maxima inside a subcategory ------------------------------------------------

/// Maximum transfer system contained in q. q must be a wide decomposable
/// subcategory (composition-closed + decomposable); throws NotDecomposable.
/// Computed as the composition closure of the covers of q all of whose
/// non-identity pullbacks stay in q.
ArrowSet t_max(const ArrowSet& q);

/// Dual: maximum cotransfer system contained in q.
ArrowSet k_max(const ArrowSet& q);

}  // namespace latmodel

#endif  // LATMODEL_ARROW_SET_HPP
