// semibrace: validate, analyze and build finite left semi-braces.
//
// Exit codes: 0 ok, 1 parse error, 2 semantic or validation error, 3 cap exceeded.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "semibrace/all.hpp"

namespace fs = std::filesystem;
using namespace semibrace;

namespace {

struct Options {
  std::string fixture_dir;
  std::string out;
  bool text = false;
};

Options opts;

// labels of the structure last loaded, used to name witnesses in errors
std::vector<std::string> loaded_labels;

std::string resolve(std::string const& path) {
  if (fs::exists(path) || opts.fixture_dir.empty()) {
    return path;
  }
  for (auto const& candidate : {fs::path(opts.fixture_dir) / path, fs::path(opts.fixture_dir) / (path + ".json")}) {
    if (fs::exists(candidate)) {
      return candidate.string();
    }
  }
  return path;
}

// Writes next to the target and renames, so readers never see half a file.
void emit(std::string const& content) {
  if (opts.out.empty()) {
    std::cout << content;
    return;
  }
  auto tmp = opts.out + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) {
      throw Error(ErrorKind::InvalidTable, "cannot write " + opts.out);
    }
    f << content;
  }
  fs::rename(tmp, opts.out);
}

std::vector<std::string> split(std::string const& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    depth += c == '(' ? 1 : c == ')' ? -1 : 0;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& t : out) {
    auto b = t.find_first_not_of(' ');
    auto e = t.find_last_not_of(' ');
    t = b == std::string::npos ? "" : t.substr(b, e - b + 1);
  }
  return out;
}

LabeledSemibrace load_file(std::string const& path) {
  auto b = load(read_structure(resolve(path)));
  loaded_labels = b.labels;
  return b;
}

std::string describe(Error const& e) {
  std::string out(to_string(e.kind()));
  if (!e.detail().empty()) {
    out += ": " + e.detail();
  }
  if (!e.witness().empty()) {
    out += " [witness ";
    for (std::size_t i = 0; i < e.witness().size(); ++i) {
      auto w = e.witness()[i];
      out += (i ? ", " : "") + (e.kind() != ErrorKind::CapExceeded && w < loaded_labels.size() ? loaded_labels[w] : std::to_string(w));
    }
    out += "]";
  }
  return out;
}

// A factor of a product: a named recipe or a structure file.
struct Piece {
  LabeledSemibrace b;
  std::optional<LabeledGroup> group;

  element_t find(std::string const& label) const;
};

Subset parse_subset(LabeledSemibrace const& b, std::string const& spec);
element_t lookup(LabeledSemibrace const& b, std::string const& label);

element_t Piece::find(std::string const& label) const { return group ? group->find_label(label) : lookup(b, label); }

Piece parse_piece(std::string const& spec) {
  for (std::string suffix : {"brace", "trivial"}) {
    if (spec.size() > suffix.size() && spec.ends_with(suffix)) {
      auto g = named_group(spec.substr(0, spec.size() - suffix.size()));
      auto s = suffix == "brace" ? group_skew_brace(g.group) : trivial_semibrace(g.group);
      return {{std::move(s), g.labels, json::object()}, g};
    }
  }
  return {load_file(spec), std::nullopt};
}

using Map = std::vector<element_t>;

// One action per generator of the acting factor, or one for all of them:
// "trivial", "inv", or "conj(x)" with x in the acted-on factor.
ActionTable parse_action(std::string const& spec, Piece const& acted, Semibrace const& acting) {
  auto const& target = acted.b.structure;
  auto const n = target.order();
  // conj(23) is read as conjugation by (23)
  auto conjugator = [&](std::string const& x) {
    try {
      return acted.find(x);
    } catch (Error const&) {
      return acted.find("(" + x + ")");
    }
  };
  auto one = [&](std::string const& s) {
    Map m(n);
    for (element_t y = 0; y < n; ++y) {
      if (s == "trivial") {
        m[y] = y;
      } else if (s == "inv") {
        m[y] = target.inv(y);
      } else if (s.starts_with("conj(") && s.ends_with(")")) {
        m[y] = target.mul_group().conjugate(conjugator(s.substr(5, s.size() - 6)), y);
      } else {
        throw Error(ErrorKind::UnknownName, "unknown action '" + s + "'");
      }
    }
    return m;
  };
  auto gens = acting.mul_group().generating_set();
  auto parts = split(spec, ';');
  if (parts.size() != 1 && parts.size() != gens.size()) {
    throw Error(ErrorKind::NotAHomomorphism,
                "expected 1 or " + std::to_string(gens.size()) + " actions, one per generator");
  }
  std::vector<Map> images;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    images.push_back(one(parts[parts.size() == 1 ? 0 : i]));
  }
  Map id(n);
  for (element_t y = 0; y < n; ++y) {
    id[y] = y;
  }
  auto act = extend_homomorphism<Map>(acting.mul_group(), gens, images, id, [](Map const& f, Map const& g) {
    Map h(g.size());
    for (std::size_t y = 0; y < g.size(); ++y) {
      h[y] = f[g[y]];
    }
    return h;
  });
  if (!act) {
    throw Error(ErrorKind::NotAHomomorphism, "the action does not extend to a homomorphism");
  }
  return {std::move(*act)};
}

std::vector<std::string> override_labels(std::vector<std::string> labels, std::string const& spec) {
  if (spec.empty()) {
    return labels;
  }
  auto parts = split(spec, ',');
  if (parts.size() != labels.size()) {
    throw Error(ErrorKind::InvalidTable, "expected " + std::to_string(labels.size()) + " labels");
  }
  return parts;
}

std::vector<std::string> product_labels(std::vector<std::string> const& x, std::vector<std::string> const& y) {
  std::vector<std::string> out;
  for (auto const& a : x) {
    for (auto const& b : y) {
      out.push_back("(" + a + ", " + b + ")");
    }
  }
  return out;
}

std::string join(std::vector<std::string> const& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? ", " : "") + v[i];
  }
  return out + "}";
}

// An exact label, or a permutation in any notation matching a cycle label.
element_t lookup(LabeledSemibrace const& b, std::string const& label) {
  try {
    return b.find(label);
  } catch (Error const&) {
    std::string normal;
    try {
      normal = cycle_string(parse_permutation(label, 9));
    } catch (Error const&) {
      throw Error(ErrorKind::UnknownName, "no element labelled '" + label + "'");
    }
    return b.find(normal);
  }
}

Subset parse_subset(LabeledSemibrace const& b, std::string const& spec) {
  Subset s(b.structure.order());
  for (auto const& l : split(spec, ',')) {
    if (!l.empty()) {
      s.insert(lookup(b, l));
    }
  }
  return s;
}

std::string summary(LabeledSemibrace const& b) {
  auto const& s = b.structure;
  return "order " + std::to_string(s.order()) + ", |G| = " + std::to_string(s.group_elements().size())
         + ", |E| = " + std::to_string(s.idempotents().size());
}

int cmd_validate(std::string const& path) {
  auto f = read_structure(resolve(path));
  if (auto err = find_violation(f.add, f.mul)) {
    auto labels = f.labels.empty() ? default_labels(f.order) : f.labels;
    std::string line(to_string(err->kind()));
    char const* names[] = {"a", "b", "c", "d"};
    for (std::size_t i = 0; i < err->witness().size() && i < 4; ++i) {
      auto w = err->witness()[i];
      line += std::string(" ") + names[i] + "=" + (w < labels.size() ? labels[w] : std::to_string(w));
    }
    std::cerr << line << "\n" << err->detail() << "\n";
    return 2;
  }
  std::cout << "valid: " << summary(load(f)) << "\n";
  return 0;
}

std::string text_report(LabeledSemibrace const& b, json const& r) {
  std::ostringstream out;
  auto list = [](json const& j) {
    if (j.is_null()) {
      return std::string("n/a");
    }
    return join(j.get<std::vector<std::string>>());
  };
  out << summary(b) << "\n";
  out << "G = " << list(r["structure"]["G"]) << "\n";
  out << "E = " << list(r["structure"]["E"]) << "\n";
  auto const& i = r["ideals"];
  out << "E ideal: " << (i["E_is_ideal"].get<bool>() ? "yes" : "no");
  if (!i["E_witness"].is_null()) {
    out << " (witness " << list(i["E_witness"]) << ")";
  }
  out << "\n";
  out << "Soc = " << list(i["soc"]) << "\nZoc = " << list(i["zoc"]) << "\nAnn = " << list(i["ann"])
      << "\nSoc(G) + E = " << list(i["soc_G_plus_E"]) << "\n";
  for (auto const& [k, v] : r["profile"].items()) {
    if (v.is_boolean()) {
      out << k << ": " << (v.get<bool>() ? "yes" : "no") << "\n";
    }
  }
  for (auto const& s : r["series"]) {
    out << s["kind"].get<std::string>() << " series:";
    auto k = s["first_index"].get<std::size_t>();
    for (auto const& t : s["terms"]) {
      out << "\n  " << k++ << ": " << list(t);
    }
    out << "\n";
  }
  auto const& y = r["ybe"];
  out << "braid: " << (y["braid"].get<bool>() ? "ok" : "fails") << ", period: "
      << (y["period"].is_null() ? y["period_status"].get<std::string>() : std::to_string(y["period"].get<std::uint64_t>()))
      << ", s idempotent: " << (y["s_idempotent"].get<bool>() ? "yes" : "no") << "\n";
  for (auto const& w : r["warnings"]) {
    out << "warning: " << w.get<std::string>() << "\n";
  }
  return out.str();
}

int cmd_analyze(std::string const& path) {
  auto b = load_file(path);
  auto r = analysis_report(b);
  emit(opts.text ? text_report(b, r) : dump(r));
  return 0;
}

int cmd_series(std::string const& path, std::string const& kind) {
  auto b = load_file(path);
  auto const& s = b.structure;
  json out = json::array();
  auto want = [&](std::string_view k) { return kind == "all" || kind == k; };
  if (want("right")) out.push_back(series_to_json(b, right_series(s)));
  if (want("left")) out.push_back(series_to_json(b, left_series(s)));
  if (want("strong")) out.push_back(series_to_json(b, strong_series(s)));
  if (want("soc")) out.push_back(series_to_json(b, soc_series(s)));
  if (want("zoc") && (kind == "zoc" || is_E_ideal(s).is_ideal)) out.push_back(series_to_json(b, zoc_series(s)));
  if (want("ann")) out.push_back(series_to_json(b, ann_series(s)));
  if (want("upper_central")) out.push_back(series_to_json(b, upper_central_report(s)));
  if (out.empty()) {
    throw Error(ErrorKind::UnknownName, "unknown series '" + kind + "'");
  }
  emit(dump(out));
  return 0;
}

json verdict_json(LabeledSemibrace const& b, IdealVerdict const& v) {
  json out{{"left_ideal", v.is_left_ideal}, {"ideal", v.is_ideal}};
  out["failed"] = v.failed ? json(std::string(to_string(*v.failed))) : json(nullptr);
  out["witness"] = b.labels_of(v.witness);
  return out;
}

int cmd_ideals(std::string const& path, std::string const& subset) {
  auto b = load_file(path);
  if (subset.empty()) {
    emit(dump(ideals_to_json(b)));
    return 0;
  }
  auto const& s = b.structure;
  auto i = parse_subset(b, subset);
  json out{{"subset", b.labels_of(i)},
           {"left_ideal", verdict_json(b, is_left_ideal(s, i))},
           {"theorem", verdict_json(b, is_ideal_thm(s, i))},
           {"definition", verdict_json(b, is_ideal_def17(s, i))}};
  try {
    out["proposition"] = verdict_json(b, is_ideal_prop(s, i));
  } catch (Error const& e) {
    if (e.kind() != ErrorKind::NotASubsemigroup) {
      throw;
    }
    out["proposition"] = std::string(to_string(e.kind()));
  }
  emit(dump(out));
  return 0;
}

struct ConstructArgs {
  std::string recipe, group, phi, left, right, action, orient = "S-acts", labels_left, labels_right;
};

int cmd_construct(ConstructArgs const& a) {
  LabeledSemibrace result{trivial_semibrace(cyclic_group(1).group), {}, json::object()};
  json meta{{"recipe", a.recipe}};
  auto need = [](std::string const& v, char const* flag) {
    if (v.empty()) {
      throw Error(ErrorKind::UnknownName, std::string("missing ") + flag);
    }
  };
  if (a.recipe == "trivial" || a.recipe == "skewbrace" || a.recipe == "endo") {
    need(a.group, "--group");
    auto g = named_group(a.group);
    meta["group"] = g.name;
    if (a.recipe == "trivial") {
      result.structure = trivial_semibrace(g.group);
    } else if (a.recipe == "skewbrace") {
      result.structure = group_skew_brace(g.group);
    } else {
      need(a.phi, "--phi");
      meta["phi"] = a.phi;
      std::vector<element_t> gens, images;
      for (auto const& part : split(a.phi, ',')) {
        auto arrow = part.find("->");
        if (arrow == std::string::npos) {
          throw Error(ErrorKind::UnknownName, "expected x->y in --phi, got '" + part + "'");
        }
        gens.push_back(g.find_label(split(part.substr(0, arrow), ',')[0]));
        images.push_back(g.find_label(split(part.substr(arrow + 2), ',')[0]));
      }
      if (!g.group.generated(gens).is_full()) {
        throw Error(ErrorKind::NotEndomorphism, "the elements given in --phi do not generate " + g.name);
      }
      auto phi = extend_homomorphism<element_t>(g.group, gens, images, element_t{0},
                                                [&](element_t u, element_t v) { return g.group.op(u, v); });
      if (!phi) {
        throw Error(ErrorKind::NotEndomorphism, "--phi does not extend to an endomorphism");
      }
      result.structure = from_idempotent_endomorphism(g.group, *phi);
    }
    result.labels = override_labels(g.labels, a.labels_left);
  } else if (a.recipe == "direct" || a.recipe == "semidirect") {
    need(a.left, "--left");
    need(a.right, "--right");
    auto x = parse_piece(a.left);
    auto y = parse_piece(a.right);
    meta["left"] = a.left;
    meta["right"] = a.right;
    if (a.recipe == "direct") {
      result.structure = direct_product(x.b.structure, y.b.structure);
    } else {
      need(a.action, "--action");
      meta["action"] = a.action;
      meta["orient"] = a.orient;
      auto act = parse_action(a.action, x, y.b.structure);
      if (a.orient == "S-acts") {
        result.structure = semidirect_product(y.b.structure, x.b.structure, act, Orientation::trivial_acts_on_skew);
      } else if (a.orient == "T-acts") {
        result.structure = semidirect_product(x.b.structure, y.b.structure, act, Orientation::skew_acts_on_trivial);
      } else {
        throw Error(ErrorKind::UnknownName, "--orient must be S-acts or T-acts");
      }
    }
    result.labels = product_labels(override_labels(x.b.labels, a.labels_left),
                                   override_labels(y.b.labels, a.labels_right));
  } else {
    throw Error(ErrorKind::UnknownName, "unknown recipe '" + a.recipe + "'");
  }
  result.meta = meta;
  emit(dump(structure_to_json(result)));
  (opts.out.empty() ? std::cerr : std::cout) << a.recipe << ": " << summary(result) << "\n";
  return 0;
}

int cmd_quotient(std::string const& path, std::string const& ideal) {
  auto b = load_file(path);
  auto q = quotient(b.structure, parse_subset(b, ideal));
  LabeledSemibrace out{q.structure, {}, json{{"quotient_of", b.labels}, {"ideal", b.labels_of(parse_subset(b, ideal))}}};
  for (auto r : q.representatives) {
    out.labels.push_back("[" + b.label(r) + "]");
  }
  emit(dump(structure_to_json(out)));
  return 0;
}

int cmd_ybe(std::string const& path) {
  auto b = load_file(path);
  auto out = ybe_to_json(b.structure);
  if (auto w = braid_witness(solution_of(b.structure))) {
    out["braid_witness"] = b.labels_of(std::vector<element_t>(w->begin(), w->end()));
  }
  emit(dump(out));
  return 0;
}

int cmd_enumerate(std::size_t n, std::size_t cap, bool family) {
  auto e = enumerate(n, cap, family ? EnumerationMode::family : EnumerationMode::raw);
  json list = json::array();
  for (std::size_t i = 0; i < e.structures.size(); ++i) {
    auto const& s = e.structures[i];
    auto p = classify(s, Strictness::record);
    list.push_back({{"group", e.group_names[i]},
                    {"G_order", s.group_elements().size()},
                    {"E_order", s.idempotents().size()},
                    {"add", s.add_table().rows()},
                    {"mul", s.mul_table().rows()},
                    {"profile", profile_to_json(p)}});
  }
  emit(dump({{"order", n},
             {"mode", family ? "family" : "raw"},
             {"complete", e.complete},
             {"count", e.structures.size()},
             {"structures", list}}));
  return 0;
}

int cmd_search(std::string const& question, std::size_t max_order, std::size_t cap) {
  Question q;
  if (question == "right_nil") {
    q = Question::right_nil_not_right_nilpotent;
  } else if (question == "left_nil") {
    q = Question::left_nil_not_left_nilpotent;
  } else {
    throw Error(ErrorKind::UnknownName, "question must be right_nil or left_nil");
  }
  auto r = search_counterexample(q, max_order, cap);
  json out{{"question", std::string(to_string(q))},
           {"max_order", max_order},
           {"cap", cap},
           {"orders_searched", r.orders_searched},
           {"structures_checked", r.structures_checked},
           {"rejected", r.rejected},
           {"exhaustive", r.exhaustive}};
  out["witness"] = r.witness ? json{{"add", r.witness->add_table().rows()}, {"mul", r.witness->mul_table().rows()}}
                             : json(nullptr);
  emit(dump(out));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite left semi-braces: validation, ideals, series and constructions"};
  app.require_subcommand(1);
  app.add_option("--fixture-dir", opts.fixture_dir, "directory searched for structure files not found as given");

  auto add_output = [](CLI::App* c) { c->add_option("--out", opts.out, "write the result here instead of stdout"); };

  std::string path;
  auto* validate_cmd = app.add_subcommand("validate", "check the semi-brace axioms");
  validate_cmd->add_option("path", path)->required();

  auto* analyze = app.add_subcommand("analyze", "full analysis report");
  analyze->add_option("path", path)->required();
  auto* as_json = analyze->add_flag("--json", "JSON report (default)");
  analyze->add_flag("--text", opts.text, "plain text report")->excludes(as_json);
  add_output(analyze);

  std::string kind = "all";
  auto* series = app.add_subcommand("series", "series of ideals");
  series->add_option("path", path)->required();
  series->add_option("--kind", kind, "right, left, strong, soc, zoc, ann, upper_central or all");
  series->add_flag("--json", "JSON output (the only format)");
  add_output(series);

  std::string subset;
  auto* ideals = app.add_subcommand("ideals", "socles and ideal tests");
  ideals->add_option("path", path)->required();
  ideals->add_option("--subset", subset, "comma-separated labels to test as an ideal");
  ideals->add_flag("--json", "JSON output (the only format)");
  add_output(ideals);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a structure file");
  construct->add_option("recipe", ca.recipe, "trivial, endo, skewbrace, direct or semidirect")->required();
  construct->add_option("--group", ca.group, "group name: Cn, Sn, An, Dn, Q8, Dic3, products like C2xC2");
  construct->add_option("--phi", ca.phi, "generator images of an idempotent endomorphism, e.g. \"(12)->(12),(123)->id\"");
  construct->add_option("--left", ca.left, "first factor: <group>brace, <group>trivial or a structure file");
  construct->add_option("--right", ca.right, "second factor, acting on the first");
  construct->add_option("--action", ca.action, "trivial, inv or conj(x), optionally one per generator separated by ';'");
  construct->add_option("--orient", ca.orient, "S-acts: the left factor is the skew brace; T-acts: the left factor is trivial")
      ->check(CLI::IsMember({"S-acts", "T-acts"}));
  construct->add_option("--labels-left", ca.labels_left, "comma-separated labels for the first factor");
  construct->add_option("--labels-right", ca.labels_right, "comma-separated labels for the second factor");
  add_output(construct);

  std::string ideal;
  auto* quotient_cmd = app.add_subcommand("quotient", "quotient by an ideal");
  quotient_cmd->add_option("path", path)->required();
  quotient_cmd->add_option("--ideal", ideal, "comma-separated labels")->required();
  add_output(quotient_cmd);

  auto* ybe = app.add_subcommand("ybe", "the associated solution of the braid equation");
  ybe->add_option("path", path)->required();
  ybe->add_flag("--json", "JSON output (the only format)");
  add_output(ybe);

  std::size_t n = 0;
  std::size_t cap = 6;
  bool family = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "all semi-braces of an order");
  enumerate_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--cap", cap, "largest order for the exhaustive search");
  enumerate_cmd->add_flag("--family", family, "constructive families instead of the exhaustive search");
  add_output(enumerate_cmd);

  std::string question;
  std::size_t max_order = 0;
  std::size_t max_order_flag = 0;
  auto* search = app.add_subcommand("search", "look for right/left nil structures that are not nilpotent");
  search->add_option("question", question, "right_nil or left_nil")->required();
  search->add_option("max_order", max_order);
  search->add_option("--max-order", max_order_flag);
  search->add_option("--cap", cap, "largest order for the exhaustive search");
  add_output(search);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*validate_cmd) return cmd_validate(path);
    if (*analyze) return cmd_analyze(path);
    if (*series) return cmd_series(path, kind);
    if (*ideals) return cmd_ideals(path, subset);
    if (*construct) return cmd_construct(ca);
    if (*quotient_cmd) return cmd_quotient(path, ideal);
    if (*ybe) return cmd_ybe(path);
    if (*enumerate_cmd) return cmd_enumerate(n, cap, family);
    if (*search) {
      auto m = max_order_flag ? max_order_flag : max_order;
      if (m == 0) {
        std::cerr << "search needs a maximum order\n";
        return 1;
      }
      return cmd_search(question, m, cap);
    }
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (Error const& e) {
    std::cerr << describe(e) << "\n";
    return e.kind() == ErrorKind::CapExceeded ? 3 : 2;
  }
  return 0;
}
