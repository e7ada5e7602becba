#include "latmodel/io.hpp"

#include <fstream>
#include <sstream>

namespace latmodel {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& detail) {
  throw Error(ErrorKind::parse_error, "ParseError: " + detail);
}

int int_param(const std::string& s) {
  try {
    size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) parse_fail("bad integer '" + s + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    parse_fail("bad integer '" + s + "'");
  }
}

}  // namespace

NamedFamilySpec parse_family_spec(const std::string& spec) {
  NamedFamilySpec out;
  const auto colon = spec.find(':');
  out.family = spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (out.family == "file") {
    if (rest.empty()) parse_fail("file spec needs a path, e.g. file:lat.json");
    out.path = rest;
    return out;
  }
  if (out.family == "pentagon") {
    if (!rest.empty()) parse_fail("pentagon takes no parameters");
    return out;
  }
  if (out.family == "chain" || out.family == "diamond") {
    if (rest.empty()) parse_fail(out.family + " needs one parameter");
    out.params.push_back(int_param(rest));
    return out;
  }
  if (out.family == "grid") {
    const auto comma = rest.find(',');
    if (comma == std::string::npos)
      parse_fail("grid needs two parameters, e.g. grid:2,1");
    out.params.push_back(int_param(rest.substr(0, comma)));
    out.params.push_back(int_param(rest.substr(comma + 1)));
    return out;
  }
  // bare path to a json file reads naturally
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
    out.family = "file";
    out.path = spec;
    return out;
  }
  parse_fail("unknown lattice spec '" + spec +
             "' (expected chain:N, grid:M,N, diamond:N, pentagon, or "
             "file:PATH)");
}

Lattice parse_lattice(const std::string& spec) {
  const NamedFamilySpec s = parse_family_spec(spec);
  if (s.family == "chain") return Lattice::chain(s.params[0]);
  if (s.family == "grid")
    return Lattice::product(Lattice::chain(s.params[0]),
                            Lattice::chain(s.params[1]));
  if (s.family == "diamond") return Lattice::diamond(s.params[0]);
  if (s.family == "pentagon") return Lattice::pentagon();
  return lattice_from_json(load_json_file(s.path));
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    parse_fail("invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

Lattice lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("labels") || !j.contains("covers"))
    parse_fail("lattice JSON needs {\"labels\": [...], \"covers\": [...]}");
  std::vector<std::string> labels;
  try {
    labels = j.at("labels").get<std::vector<std::string>>();
  } catch (const json::exception&) {
    parse_fail("\"labels\" must be an array of strings");
  }
  std::vector<std::pair<int, int>> covers;
  if (!j.at("covers").is_array()) parse_fail("\"covers\" must be an array");
  for (const auto& e : j.at("covers")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      parse_fail("each cover must be an [srcIdx, tgtIdx] pair");
    covers.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Lattice::from_cover_relations(std::move(labels), std::move(covers));
}

json lattice_to_json(const Lattice& l) {
  json covers = json::array();
  for (auto [x, y] : l.covers()) covers.push_back(json::array({x, y}));
  return json{{"labels", l.labels()}, {"covers", covers}};
}

Lattice lattice_from_json_value(const json& j) {
  if (j.is_string()) return parse_lattice(j.get<std::string>());
  return lattice_from_json(j);
}

json lattice_ref_json(const Lattice& l) {
  if (!l.family_spec().empty()) return l.family_spec();
  return lattice_to_json(l);
}

namespace {

json arrow_array(const ArrowSet& s) {
  json arr = json::array();
  for (const Arrow& f : s.arrows()) arr.push_back(json::array({f.src, f.tgt}));
  return arr;
}

ArrowSet arrows_from_array(const json& arr, const Lattice& l) {
  if (!arr.is_array()) parse_fail("\"arrows\" must be an array");
  ArrowSet s(l);
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      parse_fail("each arrow must be an [srcIdx, tgtIdx] pair");
    s.insert(Arrow{e[0].get<int>(), e[1].get<int>()});
  }
  return s;
}

void check_embedded_lattice(const json& j, const Lattice& l) {
  if (!j.contains("lattice")) return;
  const Lattice embedded = lattice_from_json_value(j.at("lattice"));
  if (!(embedded == l))
    throw Error(ErrorKind::mixed_lattices,
                "MixedLattices: the document embeds a different lattice than "
                "the one in use");
}

}  // namespace

ArrowSet arrow_set_from_json(const json& j, const Lattice& l) {
  if (!j.is_object() || !j.contains("arrows"))
    parse_fail("arrow-set JSON needs {\"lattice\": ..., \"arrows\": [...]}");
  check_embedded_lattice(j, l);
  return arrows_from_array(j.at("arrows"), l);
}

json arrow_set_to_json(const ArrowSet& s) {
  return json{{"lattice", lattice_ref_json(s.lattice())},
              {"arrows", arrow_array(s)}};
}

ElementId element_by_label(const Lattice& l, const std::string& label) {
  for (int x = 0; x < l.size(); ++x)
    if (l.label(x) == label) return x;
  throw Error(ErrorKind::unknown_element,
              "UnknownElement: no element labeled '" + label + "'");
}

ArrowSet arrow_set_of_labels(
    const Lattice& l,
    const std::vector<std::pair<std::string, std::string>>& arrows) {
  ArrowSet s(l);
  for (const auto& [a, b] : arrows)
    s.insert(Arrow{element_by_label(l, a), element_by_label(l, b)});
  return s;
}

json model_structure_to_json(const ModelStructure& m) {
  return json{{"lattice", lattice_ref_json(m.lattice())},
              {"W", arrow_array(m.weq)},
              {"AC", arrow_array(m.acof)},
              {"C", arrow_array(m.cof)},
              {"AF", arrow_array(m.afib)},
              {"F", arrow_array(m.fib)}};
}

ModelStructure model_structure_from_json(const json& j, const Lattice& l) {
  for (const char* key : {"W", "AC", "C", "AF", "F"})
    if (!j.is_object() || !j.contains(key))
      parse_fail(std::string("model-structure JSON needs \"") + key + "\"");
  check_embedded_lattice(j, l);
  return ModelStructure{arrows_from_array(j.at("W"), l),
                        arrows_from_array(j.at("AC"), l),
                        arrows_from_array(j.at("C"), l),
                        arrows_from_array(j.at("AF"), l),
                        arrows_from_array(j.at("F"), l)};
}

json wfs_to_json(const Wfs& w) {
  return json{{"lattice", lattice_ref_json(w.left.lattice())},
              {"left", arrow_array(w.left)},
              {"right", arrow_array(w.right)}};
}

json count_report_to_json(const CountReport& r) {
  json j{{"lattice", r.lattice_label},
         {"kind", enumeration_kind_name(r.kind)},
         {"count", r.count},
         {"wall_time_s", r.wall_seconds}};
  j["expected"] = r.expected ? json(*r.expected) : json(nullptr);
  j["match"] = r.match ? json(*r.match) : json(nullptr);
  return j;
}

std::string display_label(const Lattice& l, ElementId x) {
  const std::string& raw = l.label(x);
  if (l.family_spec().rfind("diamond:", 0) == 0) {
    if (raw == "bot") return "⊥";
    if (raw == "top") return "⊤";
  }
  return raw;
}

std::string dot_export(
    const Lattice& l,
    const std::vector<std::pair<ArrowSet, std::string>>& overlays) {
  for (const auto& [set, style] : overlays)
    if (&set.lattice() != &l)
      throw Error(ErrorKind::mixed_lattices,
                  "MixedLattices: overlay belongs to a different lattice");

  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n";
  for (int x = 0; x < l.size(); ++x)
    out << "  n" << x << " [label=\"" << display_label(l, x) << "\"];\n";
  for (auto [x, y] : l.covers())
    out << "  n" << x << " -> n" << y << " [color=gray];\n";
  for (const auto& [set, style] : overlays)
    for (const Arrow& f : set.arrows())
      out << "  n" << f.src << " -> n" << f.tgt << " [" << style << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace latmodel
