#ifndef LATMODEL_REPRODUCE_HPP
#define LATMODEL_REPRODUCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "latmodel/enumerate.hpp"

namespace latmodel {

struct ReproduceOptions {
  std::optional<std::string> family;  // chain | grid | diamond | pentagon | examples
  std::optional<int> max_n;           // caps the n of family rows
  int jobs = 1;
};

struct ReproduceRow {
  std::string family;
  std::string name;
  std::string expected;
  std::string computed;
  bool ok = false;
};

struct ReproduceReport {
  std::vector<ReproduceRow> rows;
  bool all_ok = true;
};

/// Runs the full verification table: every published count (transfer and
/// cotransfer systems, weak equivalence sets, model structures on the named
/// families), the worked examples pinned arrow-by-arrow, and the pentagon
/// weak-equivalence breakdown. Honors family/max-n filters.
ReproduceReport run_reproduction(const ReproduceOptions& options);

}  // namespace latmodel

#endif  // LATMODEL_REPRODUCE_HPP
