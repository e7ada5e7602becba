#ifndef LATMODEL_IO_HPP
#define LATMODEL_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latmodel/enumerate.hpp"

namespace latmodel {

/// A lattice construction request: one of the named families or a file.
/// Accepted spellings: "chain:N", "grid:M,N", "diamond:N", "pentagon",
/// "file:PATH" (also a bare path to a .json file).
struct NamedFamilySpec {
  std::string family;       // chain | grid | diamond | pentagon | file
  std::vector<int> params;  // arity checked per family
  std::string path;         // for file
};

NamedFamilySpec parse_family_spec(const std::string& spec);

/// Builds the lattice named by a spec string (family or file).
Lattice parse_lattice(const std::string& spec);

/// Lattice JSON: { "labels": [...], "covers": [[srcIdx, tgtIdx], ...] }.
/// Exactly this shape is read and written.
Lattice lattice_from_json(const nlohmann::json& j);
nlohmann::json lattice_to_json(const Lattice& l);

/// Accepts either the lattice JSON object or a named-family string.
Lattice lattice_from_json_value(const nlohmann::json& j);

/// Family string when the lattice has one, else the full JSON object.
nlohmann::json lattice_ref_json(const Lattice& l);

/// ArrowSet JSON: { "lattice": <lattice JSON or family string>,
///                  "arrows": [[srcIdx, tgtIdx], ...] }.
/// When the document embeds a lattice it must structurally match `l`
/// (MixedLattices otherwise).
ArrowSet arrow_set_from_json(const nlohmann::json& j, const Lattice& l);
nlohmann::json arrow_set_to_json(const ArrowSet& s);

/// Convenience used by tests and the reproduction table.
ArrowSet arrow_set_of_labels(
    const Lattice& l,
    const std::vector<std::pair<std::string, std::string>>& arrows);

ElementId element_by_label(const Lattice& l, const std::string& label);

/// ModelStructure JSON:
/// {"lattice": ..., "W": [...], "AC": [...], "C": [...], "AF": [...],
///  "F": [...]}.
nlohmann::json model_structure_to_json(const ModelStructure& m);
ModelStructure model_structure_from_json(const nlohmann::json& j,
                                         const Lattice& l);

nlohmann::json wfs_to_json(const Wfs& w);

nlohmann::json count_report_to_json(const CountReport& r);

/// Display form of a label: bot/top become the usual lattice glyphs on
/// diamond-family lattices.
std::string display_label(const Lattice& l, ElementId x);

/// Hasse diagram as a DOT digraph: gray cover edges plus one styled edge per
/// overlay arrow, in deterministic order. `style` is raw DOT attribute text.
std::string dot_export(
    const Lattice& l,
    const std::vector<std::pair<ArrowSet, std::string>>& overlays = {});

nlohmann::json load_json_file(const std::string& path);

}  // namespace latmodel

#endif  // LATMODEL_IO_HPP
