#ifndef LATMODEL_ERRORS_HPP
#define LATMODEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latmodel {

/// Everything thrown by this library derives from Error. `kind()` gives a
/// stable machine-readable tag; `what()` carries the human-readable detail
/// including witnesses (element labels, arrow endpoints, cycles).
enum class ErrorKind {
  cycle,                    // cover digraph has a directed cycle
  not_a_lattice,            // a pair with no unique meet or join
  non_cover,                // declared cover edge implied transitively
  not_below_target,         // pullback along z with z !<= tgt(f)
  not_above_source,         // pushout along z with z !>= src(f)
  mixed_lattices,           // arrow sets over different lattices
  not_transfer_system,
  not_cotransfer_system,
  not_transfer_or_cotransfer,
  not_decomposable,         // includes "not composition-closed" cases
  not_weak_equivalence_set,
  not_in_afw,
  not_a_model_structure,
  precondition_violated,
  too_large,                // brute force guard
  unknown_element,
  not_comparable,
  parse_error,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::cycle: return "CycleError";
    case ErrorKind::not_a_lattice: return "NotALattice";
    case ErrorKind::non_cover: return "NonCover";
    case ErrorKind::not_below_target: return "NotBelowTarget";
    case ErrorKind::not_above_source: return "NotAboveSource";
    case ErrorKind::mixed_lattices: return "MixedLattices";
    case ErrorKind::not_transfer_system: return "NotTransferSystem";
    case ErrorKind::not_cotransfer_system: return "NotCotransferSystem";
    case ErrorKind::not_transfer_or_cotransfer: return "NotTransferOrCotransfer";
    case ErrorKind::not_decomposable: return "NotDecomposable";
    case ErrorKind::not_weak_equivalence_set: return "NotWeakEquivalenceSet";
    case ErrorKind::not_in_afw: return "NotInAFW";
    case ErrorKind::not_a_model_structure: return "NotAModelStructure";
    case ErrorKind::precondition_violated: return "PreconditionViolated";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::unknown_element: return "UnknownElement";
    case ErrorKind::not_comparable: return "NotComparable";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::internal: return "InternalError";
  }
  return "Error";
}

}  // namespace latmodel

#endif  // LATMODEL_ERRORS_HPP
