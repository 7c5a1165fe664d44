#pragma once

// JSON structure files and analysis reports. Keys are emitted in sorted order
// and elements in index order, so equal inputs give byte-identical output.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "semibrace/error.hpp"
#include "semibrace/semibrace.hpp"
#include "semibrace/series.hpp"
#include "semibrace/subsets.hpp"
#include "semibrace/ybe.hpp"

namespace semibrace {

using json = nlohmann::json;

// Malformed files: bad JSON, missing fields, wrong shapes, bad indices.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StructureFile {
  std::size_t order = 0;
  CayleyTable add;
  CayleyTable mul;
  std::vector<std::string> labels;
  json meta = json::object();
};

namespace detail {

inline CayleyTable table_from_json(json const& j, std::size_t n, char const* name) {
  if (!j.is_array() || j.size() != n) {
    throw ParseError(std::string(name) + " must be an array of " + std::to_string(n) + " rows");
  }
  std::vector<element_t> cells;
  cells.reserve(n * n);
  for (auto const& row : j) {
    if (!row.is_array() || row.size() != n) {
      throw ParseError(std::string(name) + " rows must have length " + std::to_string(n));
    }
    for (auto const& v : row) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() >= n) {
        throw ParseError(std::string(name) + " entries must be indices in [0, " + std::to_string(n) + ")");
      }
      cells.push_back(v.get<element_t>());
    }
  }
  return CayleyTable(n, std::move(cells));
}

inline json table_to_json(CayleyTable const& t) { return t.rows(); }

}  // namespace detail

inline StructureFile parse_structure(std::string const& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (json::parse_error const& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j["order"].is_number_unsigned() || j["order"] == 0) {
    throw ParseError("missing positive integer field 'order'");
  }
  StructureFile f;
  f.order = j["order"].get<std::size_t>();
  if (!j.contains("add") || !j.contains("mul")) {
    throw ParseError("missing field 'add' or 'mul'");
  }
  f.add = detail::table_from_json(j["add"], f.order, "add");
  f.mul = detail::table_from_json(j["mul"], f.order, "mul");
  if (j.contains("labels")) {
    auto const& l = j["labels"];
    if (!l.is_array() || l.size() != f.order) {
      throw ParseError("labels must be an array of length order");
    }
    for (auto const& s : l) {
      if (!s.is_string()) {
        throw ParseError("labels must be strings");
      }
      f.labels.push_back(s.get<std::string>());
    }
    auto sorted = f.labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError("labels must be unique");
    }
  }
  if (j.contains("meta")) {
    f.meta = j["meta"];
  }
  return f;
}

inline StructureFile read_structure(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_structure(buffer.str());
}

inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(std::to_string(i));
  }
  return out;
}

// A validated structure with presentation labels in its own element order.
struct LabeledSemibrace {
  Semibrace structure;
  std::vector<std::string> labels;
  json meta = json::object();

  std::string const& label(element_t a) const { return labels[a]; }

  std::vector<std::string> labels_of(Subset const& s) const {
    std::vector<std::string> out;
    s.for_each([&](element_t a) { out.push_back(labels[a]); });
    return out;
  }

  std::vector<std::string> labels_of(std::vector<element_t> const& v) const {
    std::vector<std::string> out;
    for (auto a : v) {
      out.push_back(a < labels.size() ? labels[a] : std::to_string(a));
    }
    return out;
  }

  element_t find(std::string const& label) const {
    for (element_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == label) {
        return i;
      }
    }
    throw Error(ErrorKind::UnknownName, "no element labelled '" + label + "'");
  }
};

// Validates the tables of a file; labels follow the relabelling that moves the
// identity of o to index 0.
inline LabeledSemibrace load(StructureFile const& f) {
  auto b = validate(f.add, f.mul);
  auto input = f.labels.empty() ? default_labels(f.order) : f.labels;
  std::vector<std::string> labels(f.order);
  for (element_t i = 0; i < f.order; ++i) {
    labels[b.relabeling()[i]] = input[i];
  }
  return {std::move(b), std::move(labels), f.meta};
}

inline json structure_to_json(LabeledSemibrace const& b) {
  json j;
  j["order"] = b.structure.order();
  j["add"] = detail::table_to_json(b.structure.add_table());
  j["mul"] = detail::table_to_json(b.structure.mul_table());
  j["labels"] = b.labels;
  j["meta"] = b.meta;
  return j;
}

namespace detail {

inline void dump_to(std::string& out, json const& j, std::size_t indent) {
  auto pad = [&](std::size_t k) { out.append(k, ' '); };
  if (j.is_primitive() || j.empty()
      || (j.is_array() && std::all_of(j.begin(), j.end(), [](json const& v) { return v.is_primitive(); }))) {
    out += j.dump();
    return;
  }
  if (j.is_array()) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      pad(indent + 2);
      dump_to(out, j[i], indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    pad(indent);
    out += "]";
    return;
  }
  out += "{\n";
  std::size_t i = 0;
  for (auto const& [key, value] : j.items()) {
    pad(indent + 2);
    out += json(key).dump() + ": ";
    dump_to(out, value, indent + 2);
    out += ++i < j.size() ? ",\n" : "\n";
  }
  pad(indent);
  out += "}";
}

}  // namespace detail

// Two-space indentation with arrays of scalars (table rows, label lists) kept
// on one line.
inline std::string dump(json const& j) {
  std::string out;
  detail::dump_to(out, j, 0);
  return out + "\n";
}

inline json series_to_json(LabeledSemibrace const& b, SeriesReport const& r) {
  json terms = json::array();
  for (auto const& t : r.terms) {
    terms.push_back(b.labels_of(t));
  }
  return {{"kind", std::string(to_string(r.kind))},
          {"first_index", r.first_index},
          {"stabilized_at", r.stable_index()},
          {"terms", terms}};
}

inline json profile_to_json(NilpotencyProfile const& p) {
  json indices{{"right", p.indices.right},
               {"left", p.indices.left},
               {"strong", p.indices.strong},
               {"soc", p.indices.soc},
               {"ann", p.indices.ann},
               {"upper_central", p.indices.upper_central}};
  indices["zoc"] = p.indices.zoc ? json(*p.indices.zoc) : json(nullptr);
  return {{"right_nilpotent", p.right_nilpotent},
          {"left_nilpotent", p.left_nilpotent},
          {"strongly_nilpotent", p.strongly_nilpotent},
          {"nilpotent", p.nilpotent},
          {"right_nil", p.right_nil},
          {"left_nil", p.left_nil},
          {"has_z_series", p.has_z_series},
          {"mul_group_nilpotent", p.mul_group_nilpotent},
          {"add_group_G_nilpotent", p.add_group_G_nilpotent},
          {"E_is_ideal", p.E_is_ideal},
          {"indices", indices}};
}

inline json ybe_to_json(Semibrace const& b) {
  auto r = solution_of(b);
  auto props = properties(r);
  auto s = restrict_to_E(b, r);
  json period = nullptr;
  if (props.period_status == PeriodStatus::exact) {
    period = props.period;
  }
  return {{"braid", check_braid(r)},
          {"bijective", props.bijective},
          {"involutive", props.involutive},
          {"idempotent", props.idempotent},
          {"left_nondegenerate", props.left_nondegenerate},
          {"right_nondegenerate", props.right_nondegenerate},
          {"period", period},
          {"period_status", props.period_status == PeriodStatus::exact  ? "exact"
                            : props.period_status == PeriodStatus::none ? "none"
                                                                        : "overflow"},
          {"s_idempotent", properties(s.map).idempotent},
          {"s_braid", check_braid(s.map)}};
}

inline json ideals_to_json(LabeledSemibrace const& b) {
  auto const& s = b.structure;
  auto e = is_E_ideal(s);
  json routes = json::array();
  for (bool r : e.routes) {
    routes.push_back(r);
  }
  json out{{"E_is_ideal", e.is_ideal}, {"E_routes", routes}};
  out["E_witness"] = e.witness.empty() ? json(nullptr) : json(b.labels_of(e.witness));
  auto soc = socle(s);
  out["soc"] = b.labels_of(soc);
  out["ann"] = b.labels_of(annihilator(s));
  out["center"] = b.labels_of(center(s));
  out["zoc"] = e.is_ideal ? json(b.labels_of(zoc(s))) : json(nullptr);
  auto g = g_substructure(s);
  Subset soc_g(s.order());
  socle(g.structure).for_each([&](element_t x) { soc_g.insert(g.embedding[x]); });
  out["soc_G_plus_E"] = b.labels_of(sumset(s, soc_g, s.idempotents()));
  out["E_left_ideal"] = is_left_ideal(s, s.idempotents()).is_left_ideal;
  return out;
}

inline json analysis_report(LabeledSemibrace const& b) {
  auto const& s = b.structure;
  json report;
  report["structure"] = {{"order", s.order()},
                         {"G", b.labels_of(s.group_elements())},
                         {"E", b.labels_of(s.idempotents())},
                         {"G_order", s.group_elements().size()},
                         {"E_order", s.idempotents().size()},
                         {"is_skew_brace", s.is_skew_brace()},
                         {"is_trivial", s.is_trivial()}};
  report["ideals"] = ideals_to_json(b);
  auto profile = classify(s, Strictness::record);
  report["profile"] = profile_to_json(profile);
  json series = json::array();
  series.push_back(series_to_json(b, right_series(s)));
  series.push_back(series_to_json(b, left_series(s)));
  series.push_back(series_to_json(b, strong_series(s)));
  series.push_back(series_to_json(b, soc_series(s)));
  if (profile.E_is_ideal) {
    series.push_back(series_to_json(b, zoc_series(s)));
  }
  series.push_back(series_to_json(b, ann_series(s)));
  series.push_back(series_to_json(b, upper_central_report(s)));
  report["series"] = series;
  auto z = has_z_series(s);
  json chain = json::array();
  for (auto const& t : z.chain) {
    chain.push_back(b.labels_of(t));
  }
  report["z_series"] = {{"exists", z.exists}, {"chain", chain}};
  report["ybe"] = ybe_to_json(s);
  json warnings = json::array();
  for (auto const& v : profile.violations) {
    warnings.push_back("theorem violated: " + v);
  }
  if (profile.E_is_ideal) {
    for (auto const& a : zoc_agreement(s)) {
      if (!a.soc_plus_e) {
        warnings.push_back("Zoc_" + std::to_string(a.index) + " != Soc_" + std::to_string(a.index) + " + E");
      }
      if (!a.dot_commutator) {
        warnings.push_back("Zoc_" + std::to_string(a.index) + " differs from its dot/commutator description");
      }
    }
  }
  report["warnings"] = warnings;
  return report;
}

}  // namespace semibrace
