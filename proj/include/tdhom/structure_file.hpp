#pragma once

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tdhom/algebra.hpp"
#include "tdhom/coalgebra.hpp"
#include "tdhom/convolution.hpp"
#include "tdhom/error.hpp"
#include "tdhom/lie_rinehart.hpp"
#include "tdhom/multilinear_map.hpp"
#include "tdhom/scalar.hpp"

// Structure files: UTF-8 JSON with "format": "tdhom/1".
//
//   spaces      [{name, labels}]
//   coalgebras  [{name, builder: tensor|symmetric|exterior|zero, generators, maxdeg, counital}]
//               or [{name, space, coproduct: [{source, left, right, coeff}]}]
//   maps        [{name, domain: [space…], codomain, entries: [{in: [label…], out, coeff}]}]
//   homs        [{name, source, target, entries: [{in, out, coeff}]}]
//   structures  [{name, role, …parts}] with roles
//                 lie {bracket}, module {lie, action}, associative {product},
//                 poisson {bracket, product}, lie-rinehart {lie, product, module_product, action}
//
// Coefficients are strings "p" or "p/q". Labels refer to basis labels of the
// named spaces; coalgebra names double as space names.

namespace tdhom {

inline constexpr const char* kStructureFormat = "tdhom/1";

struct NamedMap {
  std::string name;
  MultilinearMap map;
};

struct CoalgebraSpec {
  std::string name;
  std::string builder;  // empty for an explicit coproduct
  std::string generators;
  std::size_t maxdeg = 0;
  bool counital = false;
  std::string space;  // explicit form only
  Coalgebra coalgebra;
};

struct NamedHom {
  std::string name;
  HomElement hom;
};

struct RoleSpec {
  std::string name;
  std::string role;
  std::map<std::string, std::string> parts;
};

struct StructureFile {
  std::string name;
  std::string description;
  std::vector<BasedSpace> spaces;
  std::vector<CoalgebraSpec> coalgebras;
  std::vector<NamedMap> maps;
  std::vector<NamedHom> homs;
  std::vector<RoleSpec> structures;
};

namespace detail {

using json = nlohmann::json;

inline const std::map<std::string, std::vector<std::string>>& role_parts() {
  static const std::map<std::string, std::vector<std::string>> parts{
      {"lie", {"bracket"}},
      {"module", {"lie", "action"}},
      {"associative", {"product"}},
      {"poisson", {"bracket", "product"}},
      {"lie-rinehart", {"lie", "product", "module_product", "action"}},
  };
  return parts;
}

class FileParser {
 public:
  explicit FileParser(std::string origin) : origin_(std::move(origin)) {}

  StructureFile parse(const std::string& text) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(origin_ + ": " + e.what());
    }
    if (!doc.is_object()) fail("", "top level must be an object");
    if (!doc.contains("format") || doc["format"] != kStructureFormat)
      fail("", std::string("missing or unsupported \"format\" (expected \"") + kStructureFormat + "\")");
    for (const auto& [key, _] : doc.items())
      if (key != "format" && key != "name" && key != "description" && key != "spaces" && key != "coalgebras" &&
          key != "maps" && key != "homs" && key != "structures")
        fail("", "unknown key \"" + key + "\"");

    StructureFile f;
    f.name = optional_string(doc, "name", "");
    f.description = optional_string(doc, "description", "");
    for_each(doc, "spaces", [&](const json& e, const std::string& where) { parse_space(f, e, where); });
    for_each(doc, "coalgebras", [&](const json& e, const std::string& where) { parse_coalgebra(f, e, where); });
    for_each(doc, "maps", [&](const json& e, const std::string& where) { parse_map(f, e, where); });
    for_each(doc, "homs", [&](const json& e, const std::string& where) { parse_hom(f, e, where); });
    for_each(doc, "structures", [&](const json& e, const std::string& where) { parse_role(f, e, where); });
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& where, const std::string& msg) const {
    throw ParseError(origin_ + (where.empty() ? "" : ": " + where) + ": " + msg);
  }

  std::string optional_string(const json& o, const char* key, std::string dflt) const {
    if (!o.contains(key)) return dflt;
    if (!o[key].is_string()) fail(key, "must be a string");
    return o[key].get<std::string>();
  }

  std::string string_field(const json& o, const char* key, const std::string& where) const {
    if (!o.is_object()) fail(where, "must be an object");
    if (!o.contains(key) || !o[key].is_string()) fail(where, std::string("missing string field \"") + key + "\"");
    return o[key].get<std::string>();
  }

  template <class F>
  void for_each(const json& doc, const char* key, F&& f) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_array()) fail(key, "must be an array");
    for (std::size_t i = 0; i < doc[key].size(); ++i) {
      std::string where = std::string(key) + "[" + std::to_string(i) + "]";
      if (doc[key][i].is_object() && doc[key][i].contains("name") && doc[key][i]["name"].is_string())
        where += " '" + doc[key][i]["name"].get<std::string>() + "'";
      f(doc[key][i], where);
    }
  }

  void claim_name(const std::string& name, const std::string& where) {
    if (name.empty()) fail(where, "empty name");
    if (!names_.emplace(name).second) fail(where, "duplicate name '" + name + "'");
  }

  const BasedSpace& space(const std::string& name, const std::string& where) const {
    auto it = spaces_.find(name);
    if (it == spaces_.end()) fail(where, "unknown space '" + name + "'");
    return it->second;
  }

  std::size_t label(const BasedSpace& s, const json& v, const std::string& where) const {
    if (!v.is_string()) fail(where, "basis label must be a string");
    const auto idx = s.index_of(v.get<std::string>());
    if (!idx) fail(where, "label '" + v.get<std::string>() + "' is not in space " + s.name);
    return *idx;
  }

  Scalar coeff(const json& e, const std::string& where) const {
    if (!e.contains("coeff") || !e["coeff"].is_string()) fail(where, "coeff must be a fraction string");
    try {
      return parse_scalar(e["coeff"].get<std::string>());
    } catch (const ParseError& err) {
      fail(where, err.what());
    }
  }

  void parse_space(StructureFile& f, const json& e, const std::string& where) {
    BasedSpace s{string_field(e, "name", where), {}};
    claim_name(s.name, where);
    if (!e.contains("labels") || !e["labels"].is_array()) fail(where, "missing labels array");
    for (const auto& l : e["labels"]) {
      if (!l.is_string()) fail(where, "labels must be strings");
      s.labels.push_back(l.get<std::string>());
    }
    std::set<std::string> seen(s.labels.begin(), s.labels.end());
    if (seen.size() != s.labels.size()) fail(where, "repeated basis label");
    spaces_[s.name] = s;
    f.spaces.push_back(std::move(s));
  }

  void parse_coalgebra(StructureFile& f, const json& e, const std::string& where) {
    CoalgebraSpec c;
    c.name = string_field(e, "name", where);
    claim_name(c.name, where);
    if (e.contains("builder")) {
      c.builder = string_field(e, "builder", where);
      if (c.builder == "zero") {
        c.space = string_field(e, "space", where);
        auto s = space(c.space, where);
        s.name = c.name;
        c.coalgebra = build_zero_coalgebra(s);
      } else {
        c.generators = string_field(e, "generators", where);
        const auto& v = space(c.generators, where);
        if (c.builder == "tensor" || c.builder == "symmetric") {
          if (!e.contains("maxdeg") || !e["maxdeg"].is_number_unsigned()) fail(where, "missing maxdeg");
          c.maxdeg = e["maxdeg"].get<std::size_t>();
        }
        if (e.contains("counital")) {
          if (!e["counital"].is_boolean() || c.builder != "tensor") fail(where, "counital is a tensor-builder flag");
          c.counital = e["counital"].get<bool>();
        }
        try {
          if (c.builder == "tensor")
            c.coalgebra = build_tensor_coalgebra(v, c.maxdeg, c.counital, c.name);
          else if (c.builder == "symmetric")
            c.coalgebra = build_symmetric_coalgebra(v, c.maxdeg, c.name);
          else if (c.builder == "exterior")
            c.coalgebra = build_exterior_square_coalgebra(v, c.name);
          else
            fail(where, "unknown builder '" + c.builder + "'");
        } catch (const ArgumentError& err) {
          fail(where, err.what());
        }
      }
    } else {
      c.space = string_field(e, "space", where);
      auto s = space(c.space, where);
      s.name = c.name;
      std::vector<CoproductTerm> terms;
      if (!e.contains("coproduct") || !e["coproduct"].is_array()) fail(where, "missing coproduct array");
      for (std::size_t i = 0; i < e["coproduct"].size(); ++i) {
        const auto& t = e["coproduct"][i];
        const auto at = where + " coproduct entry " + std::to_string(i);
        if (!t.is_object() || !t.contains("source") || !t.contains("left") || !t.contains("right"))
          fail(at, "needs source, left, right and coeff");
        terms.push_back({label(s, t["source"], at), label(s, t["left"], at), label(s, t["right"], at), coeff(t, at)});
      }
      c.coalgebra = Coalgebra(s, std::move(terms));
    }
    spaces_[c.name] = c.coalgebra.space();
    f.coalgebras.push_back(std::move(c));
  }

  void parse_map(StructureFile& f, const json& e, const std::string& where) {
    const auto name = string_field(e, "name", where);
    claim_name(name, where);
    if (!e.contains("domain") || !e["domain"].is_array()) fail(where, "missing domain array");
    std::vector<BasedSpace> dom;
    for (const auto& d : e["domain"]) {
      if (!d.is_string()) fail(where, "domain entries must be space names");
      dom.push_back(space(d.get<std::string>(), where));
    }
    MultilinearMap m(dom, space(string_field(e, "codomain", where), where));
    if (!e.contains("entries") || !e["entries"].is_array()) fail(where, "missing entries array");
    for (std::size_t i = 0; i < e["entries"].size(); ++i) {
      const auto& t = e["entries"][i];
      const auto at = where + " entry " + std::to_string(i);
      if (!t.is_object() || !t.contains("in") || !t["in"].is_array() || !t.contains("out"))
        fail(at, "needs in (label list), out and coeff");
      if (t["in"].size() != dom.size()) fail(at, "input tuple length does not match the domain");
      std::vector<std::size_t> in;
      for (std::size_t k = 0; k < dom.size(); ++k) in.push_back(label(dom[k], t["in"][k], at));
      m.add(in, label(m.codomain(), t["out"], at), coeff(t, at));
    }
    maps_[name] = m;
    f.maps.push_back({name, std::move(m)});
  }

  void parse_hom(StructureFile& f, const json& e, const std::string& where) {
    const auto name = string_field(e, "name", where);
    claim_name(name, where);
    HomElement h(space(string_field(e, "source", where), where), space(string_field(e, "target", where), where));
    if (!e.contains("entries") || !e["entries"].is_array()) fail(where, "missing entries array");
    for (std::size_t i = 0; i < e["entries"].size(); ++i) {
      const auto& t = e["entries"][i];
      const auto at = where + " entry " + std::to_string(i);
      if (!t.is_object() || !t.contains("in") || !t.contains("out")) fail(at, "needs in, out and coeff");
      h(label(h.target(), t["out"], at), label(h.source(), t["in"], at)) += coeff(t, at);
    }
    f.homs.push_back({name, std::move(h)});
  }

  void parse_role(StructureFile& f, const json& e, const std::string& where) {
    RoleSpec r;
    r.name = string_field(e, "name", where);
    claim_name(r.name, where);
    r.role = string_field(e, "role", where);
    const auto known = role_parts().find(r.role);
    if (known == role_parts().end()) fail(where, "unknown role '" + r.role + "'");
    for (const auto& [key, value] : e.items()) {
      if (key == "name" || key == "role") continue;
      if (std::find(known->second.begin(), known->second.end(), key) == known->second.end())
        fail(where, "unexpected field \"" + key + "\" for role " + r.role);
      if (!value.is_string()) fail(where, "field \"" + key + "\" must be a name");
    }
    for (const auto& part : known->second) r.parts[part] = string_field(e, part.c_str(), where);
    f.structures.push_back(std::move(r));
  }

  std::string origin_;
  std::set<std::string> names_;
  std::map<std::string, BasedSpace> spaces_;
  std::map<std::string, MultilinearMap> maps_;
};

}  // namespace detail

inline StructureFile parse_structure_file(const std::string& text, const std::string& origin = "<input>") {
  return detail::FileParser(origin).parse(text);
}

inline StructureFile read_structure_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_structure_file(ss.str(), path);
}

/// Canonical text: keys sorted, two-space indent, trailing newline.
inline std::string serialize(const StructureFile& f) {
  using detail::json;
  json doc = json::object();
  doc["format"] = kStructureFormat;
  if (!f.name.empty()) doc["name"] = f.name;
  if (!f.description.empty()) doc["description"] = f.description;
  if (!f.spaces.empty()) {
    doc["spaces"] = json::array();
    for (const auto& s : f.spaces) doc["spaces"].push_back({{"name", s.name}, {"labels", s.labels}});
  }
  if (!f.coalgebras.empty()) {
    doc["coalgebras"] = json::array();
    for (const auto& c : f.coalgebras) {
      json e{{"name", c.name}};
      if (c.builder.empty()) {
        e["space"] = c.space;
        e["coproduct"] = json::array();
        const auto& labels = c.coalgebra.space().labels;
        for (const auto& t : c.coalgebra.terms())
          e["coproduct"].push_back({{"source", labels[t.source]},
                                    {"left", labels[t.left]},
                                    {"right", labels[t.right]},
                                    {"coeff", to_string(t.coeff)}});
      } else {
        e["builder"] = c.builder;
        if (c.builder == "zero") {
          e["space"] = c.space;
        } else {
          e["generators"] = c.generators;
        }
        if (c.builder == "tensor" || c.builder == "symmetric") e["maxdeg"] = c.maxdeg;
        if (c.counital) e["counital"] = true;
      }
      doc["coalgebras"].push_back(std::move(e));
    }
  }
  if (!f.maps.empty()) {
    doc["maps"] = json::array();
    for (const auto& [name, m] : f.maps) {
      json dom = json::array();
      for (const auto& d : m.domain()) dom.push_back(d.name);
      json entries = json::array();
      for (const auto& [key, q] : m.terms()) {
        json in = json::array();
        for (std::size_t k = 0; k < m.arity(); ++k) in.push_back(m.domain()[k].labels[key[k]]);
        entries.push_back({{"in", in}, {"out", m.codomain().labels[key.back()]}, {"coeff", to_string(q)}});
      }
      doc["maps"].push_back({{"name", name}, {"domain", dom}, {"codomain", m.codomain().name}, {"entries", entries}});
    }
  }
  if (!f.homs.empty()) {
    doc["homs"] = json::array();
    for (const auto& [name, h] : f.homs) {
      json entries = json::array();
      for (std::size_t c = 0; c < h.source().dim(); ++c)
        for (std::size_t v = 0; v < h.target().dim(); ++v)
          if (h(v, c) != 0)
            entries.push_back({{"in", h.source().labels[c]}, {"out", h.target().labels[v]}, {"coeff", to_string(h(v, c))}});
      doc["homs"].push_back(
          {{"name", name}, {"source", h.source().name}, {"target", h.target().name}, {"entries", entries}});
    }
  }
  if (!f.structures.empty()) {
    doc["structures"] = json::array();
    for (const auto& r : f.structures) {
      json e{{"name", r.name}, {"role", r.role}};
      for (const auto& [k, v] : r.parts) e[k] = v;
      doc["structures"].push_back(std::move(e));
    }
  }
  return doc.dump(2) + "\n";
}

/// Loaded objects from one or more structure files, keyed by name.
struct Corpus {
  std::map<std::string, BasedSpace> spaces;
  std::map<std::string, MultilinearMap> maps;
  std::map<std::string, Coalgebra> coalgebras;
  std::map<std::string, HomElement> homs;
  std::map<std::string, LieAlgebra> lie;
  std::map<std::string, LieModule> modules;
  std::map<std::string, AssociativeAlgebra> associative;
  std::map<std::string, PoissonAlgebra> poisson;
  std::map<std::string, LieRinehartPair> lie_rinehart;

  /// Adds a file's contents. Eager axiom checks throw AxiomFailure with the
  /// first witness unless check_axioms is false.
  void add(const StructureFile& f, bool check_axioms = true) {
    auto claim = [&](const std::string& name) {
      if (names_.count(name)) throw ParseError("name '" + name + "' is defined twice");
      names_.insert(name);
    };
    auto axioms = [&](const CheckReport& r) {
      if (!check_axioms) return;
      if (const auto* bad = r.first_failure())
        throw AxiomFailure(r.subject + ": " + bad->name + " fails" +
                           (bad->witness ? " " + bad->witness->describe() : std::string()));
    };
    for (const auto& s : f.spaces) {
      // Identical redefinitions are shared between files.
      if (auto it = spaces.find(s.name); it != spaces.end() && it->second.labels == s.labels) continue;
      claim(s.name);
      spaces[s.name] = s;
    }
    for (const auto& c : f.coalgebras) {
      claim(c.name);
      if (check_axioms && !c.coalgebra.coassociativity().passed)
        throw AxiomFailure("coalgebra " + c.name + ": coassociativity fails " +
                           c.coalgebra.coassociativity().witness->describe());
      coalgebras[c.name] = c.coalgebra;
      spaces[c.name] = c.coalgebra.space();
    }
    for (const auto& [name, m] : f.maps) {
      claim(name);
      maps[name] = m;
    }
    for (const auto& [name, h] : f.homs) {
      claim(name);
      homs[name] = h;
    }
    for (const auto& r : f.structures) {
      claim(r.name);
      auto map_of = [&](const std::string& part) -> const MultilinearMap& {
        auto it = maps.find(r.parts.at(part));
        if (it == maps.end()) throw ParseError("structure '" + r.name + "': unknown map '" + r.parts.at(part) + "'");
        return it->second;
      };
      auto lie_of = [&](const std::string& part) -> const LieAlgebra& {
        auto it = lie.find(r.parts.at(part));
        if (it == lie.end()) throw ParseError("structure '" + r.name + "': unknown Lie algebra '" + r.parts.at(part) + "'");
        return it->second;
      };
      try {
        if (r.role == "lie") {
          LieAlgebra l(r.name, map_of("bracket"));
          axioms(check_lie(l));
          lie[r.name] = std::move(l);
        } else if (r.role == "module") {
          LieModule m(r.name, lie_of("lie"), map_of("action"));
          axioms(check_module(m));
          modules[r.name] = std::move(m);
        } else if (r.role == "associative") {
          AssociativeAlgebra a(r.name, map_of("product"));
          axioms(check_associative(a));
          associative[r.name] = std::move(a);
        } else if (r.role == "poisson") {
          PoissonAlgebra p(r.name, map_of("bracket"), map_of("product"));
          axioms(check_poisson(p));
          poisson[r.name] = std::move(p);
        } else if (r.role == "lie-rinehart") {
          LieRinehartPair p(r.name, lie_of("lie"), map_of("product"), map_of("module_product"), map_of("action"));
          axioms(check_lr(p));
          lie_rinehart[r.name] = std::move(p);
        }
      } catch (const ShapeError& e) {
        throw ParseError("structure '" + r.name + "': " + e.what());
      }
    }
  }

 private:
  std::set<std::string> names_;
};

inline Corpus load_corpus(const std::vector<StructureFile>& files, bool check_axioms = true) {
  Corpus c;
  for (const auto& f : files) c.add(f, check_axioms);
  return c;
}

}  // namespace tdhom
