#ifndef LATMODEL_LIFTING_HPP
#define LATMODEL_LIFTING_HPP

#include <optional>

#include "latmodel/arrow_set.hpp"

namespace latmodel {

/// i has the left lifting property against p. In a poset the only possible
/// commutative square from i: a->b to p: x->y needs a <= x and b <= y, and a
/// lift is an arrow b -> x; so the property reduces to an order condition.
bool lifts_against(const Lattice& l, Arrow i, Arrow p);

/// Brute-force lifting classes over all non-identity arrows. These are the
/// semantic ground truth the closed-form implementations are checked against.
ArrowSet left_lifters_oracle(const ArrowSet& s);   // ^[] s
ArrowSet right_lifters_oracle(const ArrowSet& s);  // s ^[]

/// E_d(T) = { z->y | exists x with z <= x < y and x->y in T }. Contains every
/// non-identity member of T, never identities.
ArrowSet downward_extension(const ArrowSet& t);

/// E_u(K) = { z->y | exists x with z < x <= y and z->x in K }.
ArrowSet upward_extension(const ArrowSet& k);

/// ^[] T = complement of E_d(T) among non-identity arrows. Requires a
/// transfer system (NotTransferSystem otherwise).
ArrowSet left_lift(const ArrowSet& t);

/// K ^[] = complement of E_u(K). Requires a cotransfer system.
ArrowSet right_lift(const ArrowSet& k);

/// A validated weak factorization system (left set, right set).
struct Wfs {
  ArrowSet left;
  ArrowSet right;
};

/// Which WFS condition failed, with a witness arrow.
struct WfsDiagnosis {
  enum class Failure {
    none,
    factorization,   // witness: arrow with no L-then-R factorization
    left_mismatch,   // witness: arrow in exactly one of L, ^[] R
    right_mismatch,  // witness: arrow in exactly one of R, L ^[]
  };
  Failure failure = Failure::none;
  std::optional<Arrow> witness;

  bool ok() const { return failure == Failure::none; }
};

/// Oracle check of both WFS conditions: factorization of every arrow, and the
/// two lifting equalities.
WfsDiagnosis validate_wfs(const ArrowSet& l, const ArrowSet& r);

/// (^[] T, T) for a transfer system T; (K, K ^[]) for a cotransfer system K.
Wfs wfs_from_transfer(const ArrowSet& t);
Wfs wfs_from_cotransfer(const ArrowSet& k);

}  // namespace latmodel

#endif  // LATMODEL_LIFTING_HPP
