#ifndef LATMODEL_LATTICE_HPP
#define LATMODEL_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latmodel/errors.hpp"

namespace latmodel {

using ElementId = int;

/// A morphism of the lattice category: an ordered comparable pair src <= tgt.
/// Identity iff src == tgt. Arrows are plain values; validity is relative to
/// the owning lattice.
struct Arrow {
  ElementId src = 0;
  ElementId tgt = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;

  bool is_identity() const { return src == tgt; }
};

/// A finite lattice: dense element ids 0..n-1 with display labels, the full
/// order/meet/join tables precomputed at construction, and the cover digraph.
/// Instances are immutable after construction and safe to share across
/// threads. All construction paths validate the lattice axioms eagerly; there
/// is no poset-only mode.
///
/// The non-identity comparable pairs are indexed once, sorted by (src, tgt);
/// ArrowSet bitsets are laid out over that index.
class Lattice {
 public:
  /// Total order 0 < 1 < ... < n (n+1 elements).
  static Lattice chain(int n);

  /// Cartesian product with componentwise order. Labels "(i,j)" with i the
  /// label in p and j the label in q.
  static Lattice product(const Lattice& p, const Lattice& q);

  /// Disjoint union of p and q with the two tops identified and the two
  /// bottoms identified. Both inputs need >= 2 elements. Throws
  /// ErrorKind::not_a_lattice if the glued poset is missing a meet or join.
  static Lattice parallel_composition(const Lattice& p, const Lattice& q);

  /// Bottom, n pairwise-incomparable middles labeled "1".."n", top. Same
  /// shape as n-fold parallel composition of chain(2). n >= 1.
  static Lattice diamond(int n);

  /// The minimal non-modular lattice: 0 < a < c < 1 and 0 < b < 1.
  static Lattice pentagon();

  /// Builds the reflexive-transitive closure of the cover digraph and
  /// validates the lattice axioms. Throws CycleError, NonCover (a declared
  /// edge already implied transitively), or NotALattice naming a pair with
  /// no unique meet or join.
  static Lattice from_cover_relations(std::vector<std::string> labels,
                                      std::vector<std::pair<int, int>> covers);

  int size() const { return n_; }
  const std::string& label(ElementId x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(ElementId x, ElementId y) const { return leq_[x * n_ + y]; }
  bool lt(ElementId x, ElementId y) const { return x != y && leq(x, y); }
  ElementId meet(ElementId x, ElementId y) const { return meet_[x * n_ + y]; }
  ElementId join(ElementId x, ElementId y) const { return join_[x * n_ + y]; }

  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }

  /// Cover pairs (x, y) meaning y covers x, sorted by (x, y).
  const std::vector<std::pair<ElementId, ElementId>>& covers() const {
    return covers_;
  }

  /// Rank = length of the longest chain from bottom.
  int rank(ElementId x) const { return rank_[x]; }

  // -- arrow index ----------------------------------------------------------

  /// Number of non-identity comparable pairs.
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  /// Index of a non-identity arrow in the (src, tgt)-sorted pair index.
  /// Throws NotComparable for identities and incomparable pairs.
  int arrow_index(Arrow f) const;

  /// -1 instead of throwing.
  int arrow_index_or(Arrow f, int fallback) const;

  Arrow arrow_at(int index) const { return arrows_[index]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  bool is_cover(Arrow f) const;

  // -- arrow arithmetic -----------------------------------------------------

  /// Pullback of f along z <= tgt(f): the arrow (src(f) ^ z) -> z. May be an
  /// identity; callers filter. Throws NotBelowTarget.
  Arrow pullback(Arrow f, ElementId z) const;

  /// Pushout of f along z >= src(f): the arrow z -> (tgt(f) v z). Throws
  /// NotAboveSource.
  Arrow pushout(Arrow f, ElementId z) const;

  // -- misc -----------------------------------------------------------------

  /// The order-dual lattice (order reversed, same labels and ids).
  Lattice dual() const;

  /// Grid coordinates when this lattice was built as product(chain(m),
  /// chain(n)): dims (m, n) and per-element (i, j). Enables the Condition-5.3
  /// grid fast path.
  std::optional<std::pair<int, int>> grid_dims() const { return grid_dims_; }
  std::pair<int, int> grid_coord(ElementId x) const { return grid_coord_[x]; }

  /// Compact construction spec ("chain:3", "grid:2,1", ...) when this lattice
  /// came from a named family; used for compact serialization.
  const std::string& family_spec() const { return family_spec_; }
  void set_family_spec(std::string spec) { family_spec_ = std::move(spec); }

  /// Structural equality: same labels and same order table.
  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

  /// Order table after relabeling elements in (rank, label) order. Two
  /// constructor outputs are compared for isomorphism claims by comparing
  /// these tables.
  std::vector<bool> canonical_order_table() const;

 private:
  Lattice() = default;

  /// Shared tail of all constructors: tables from a validated leq matrix.
  static Lattice from_leq(std::vector<std::string> labels,
                          std::vector<char> leq);

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<char> leq_;          // n*n row-major: leq_[x*n+y] = (x <= y)
  std::vector<ElementId> meet_;    // n*n
  std::vector<ElementId> join_;    // n*n
  std::vector<std::pair<ElementId, ElementId>> covers_;
  std::vector<int> rank_;
  ElementId bottom_ = 0;
  ElementId top_ = 0;
  std::vector<Arrow> arrows_;      // non-identity pairs sorted by (src, tgt)
  std::vector<int> arrow_index_;   // n*n -> index or -1
  std::optional<std::pair<int, int>> grid_dims_;
  std::vector<std::pair<int, int>> grid_coord_;
  std::string family_spec_;
};

}  // namespace latmodel

#endif  // LATMODEL_LATTICE_HPP
