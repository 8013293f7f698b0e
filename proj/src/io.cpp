#include "stg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "stg/errors.hpp"

namespace stg {

using nlohmann::json;

namespace {

void expect_schema(const json& doc, const std::string& want) {
  if (!doc.is_object() || !doc.contains("schema") || !doc["schema"].is_string())
    throw ValidationError("document has no schema field");
  if (doc["schema"] != want)
    throw ValidationError("expected schema '" + want + "', found '" +
                          doc["schema"].get<std::string>() + "'");
}

std::vector<std::string> str_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError(where + ": expected a list");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw ValidationError(where + ": expected strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

GroupElem elem_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError(where + ": expected an integer list");
  GroupElem out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ValidationError(where + ": expected integers");
    out.push_back(x.get<long long>());
  }
  return out;
}

AbelianGroup parse_group(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("moduli"))
    throw ValidationError(where + ": group needs a moduli list");
  return AbelianGroup(elem_list(j["moduli"], where + ".moduli"));
}

json group_to_json(const AbelianGroup& g) { return {{"moduli", g.moduli()}}; }

}  // namespace

Graph parse_graph(const json& doc) {
  expect_schema(doc, "graph/1");
  Graph g;
  g.vertices = str_list(doc.value("vertices", json::array()), "vertices");
  for (const auto& e : doc.value("edges", json::array())) {
    if (!e.is_object() || !e.contains("id") || !e.contains("src") || !e.contains("rng"))
      throw ValidationError("edges: each entry needs id, src, rng");
    g.edges.push_back({e["id"].get<std::string>(), e["src"].get<std::string>(),
                       e["rng"].get<std::string>()});
  }
  for (const auto& v :
       str_list(doc.value("infinite_emitters", json::array()), "infinite_emitters"))
    g.infinite_emitters.insert(v);
  for (const auto& r : doc.value("rays", json::array())) {
    if (!r.is_object() || !r.contains("id") || !r.contains("entries"))
      throw ValidationError("rays: each entry needs id and entries");
    Ray ray;
    ray.id = r["id"].get<std::string>();
    for (const auto& w : str_list(r["entries"], "rays.entries")) ray.entries.insert(w);
    g.rays.push_back(std::move(ray));
  }
  g.validate();
  return g;
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"id", e.id}, {"src", e.src}, {"rng", e.rng}});
  json rays = json::array();
  for (const auto& r : g.rays)
    rays.push_back({{"id", r.id}, {"entries", r.entries}});
  return {{"schema", "graph/1"},
          {"vertices", g.vertices},
          {"edges", edges},
          {"infinite_emitters", g.infinite_emitters},
          {"rays", rays}};
}

Groupoid parse_groupoid(const json& doc) {
  expect_schema(doc, "groupoid/1");
  Groupoid g;
  g.group = parse_group(doc.value("group", json()), "group");
  g.morphisms = str_list(doc.value("morphisms", json::array()), "morphisms");
  std::sort(g.morphisms.begin(), g.morphisms.end());
  for (const auto& u : str_list(doc.value("units", json::array()), "units"))
    g.units.insert(u);
  auto str_map = [&](const char* key) {
    std::map<std::string, std::string> out;
    // .items() must not run on a temporary: bind the copy first
    const json sub = doc.value(key, json::object());
    for (const auto& [k, v] : sub.items()) {
      if (!v.is_string()) throw ValidationError(std::string(key) + ": expected strings");
      out[k] = v.get<std::string>();
    }
    return out;
  };
  g.dom = str_map("dom");
  g.cod = str_map("cod");
  g.inv = str_map("inv");
  const json degs = doc.value("deg", json::object());
  for (const auto& [k, v] : degs.items()) g.deg[k] = elem_list(v, "deg." + k);
  for (const auto& t : doc.value("comp", json::array())) {
    if (!t.is_array() || t.size() != 3)
      throw ValidationError("comp: expected [x, y, xy] triples");
    g.comp[{t[0].get<std::string>(), t[1].get<std::string>()}] = t[2].get<std::string>();
  }
  return g;
}

json groupoid_to_json(const Groupoid& g) {
  json comp = json::array();
  for (const auto& [xy, z] : g.comp) comp.push_back({xy.first, xy.second, z});
  json deg = json::object();
  for (const auto& [m, d] : g.deg) deg[m] = d;
  return {{"schema", "groupoid/1"}, {"group", group_to_json(g.group)},
          {"morphisms", g.morphisms}, {"units", g.units},
          {"dom", g.dom},            {"cod", g.cod},
          {"inv", g.inv},            {"deg", deg},
          {"comp", comp}};
}

PartialAction parse_paction(const json& doc) {
  expect_schema(doc, "paction/1");
  PartialAction p;
  p.group = parse_group(doc.value("group", json()), "group");
  p.space = str_list(doc.value("space", json::array()), "space");
  for (const auto& d : doc.value("domains", json::array())) {
    if (!d.is_object() || !d.contains("gamma") || !d.contains("set"))
      throw ValidationError("domains: each entry needs gamma and set");
    GroupElem gamma = p.group.reduce(elem_list(d["gamma"], "domains.gamma"));
    std::set<std::string> s;
    for (const auto& x : str_list(d["set"], "domains.set")) s.insert(x);
    p.domains[gamma] = std::move(s);
  }
  for (const auto& m : doc.value("maps", json::array())) {
    if (!m.is_object() || !m.contains("gamma") || !m.contains("map"))
      throw ValidationError("maps: each entry needs gamma and map");
    GroupElem gamma = p.group.reduce(elem_list(m["gamma"], "maps.gamma"));
    std::map<std::string, std::string> theta;
    for (const auto& [y, x] : m["map"].items()) {
      if (!x.is_string()) throw ValidationError("maps.map: expected strings");
      theta[y] = x.get<std::string>();
    }
    p.maps[gamma] = std::move(theta);
  }
  return p;
}

json paction_to_json(const PartialAction& p) {
  json domains = json::array(), maps = json::array();
  for (const auto& [gamma, s] : p.domains)
    domains.push_back({{"gamma", gamma}, {"set", s}});
  for (const auto& [gamma, theta] : p.maps)
    maps.push_back({{"gamma", gamma}, {"map", theta}});
  return {{"schema", "paction/1"},
          {"group", group_to_json(p.group)},
          {"space", p.space},
          {"domains", domains},
          {"maps", maps}};
}

KGraph parse_kgraph(const json& doc) {
  expect_schema(doc, "kgraph/1");
  KGraph g;
  if (!doc.contains("k") || !doc["k"].is_number_integer())
    throw ValidationError("kgraph needs an integer rank k");
  g.k = doc["k"].get<int>();
  g.vertices = str_list(doc.value("vertices", json::array()), "vertices");
  for (const auto& e : doc.value("edges", json::array())) {
    if (!e.is_object() || !e.contains("id") || !e.contains("src") ||
        !e.contains("rng") || !e.contains("color"))
      throw ValidationError("edges: each entry needs id, src, rng, color");
    g.edges.push_back({e["id"].get<std::string>(), e["src"].get<std::string>(),
                       e["rng"].get<std::string>(), e["color"].get<int>()});
  }
  g.index();
  for (const auto& q : doc.value("squares", json::array())) {
    if (!q.is_array() || q.size() != 4)
      throw ValidationError("squares: expected quadruples");
    std::string a = q[0].get<std::string>(), b = q[1].get<std::string>();
    std::string b2 = q[2].get<std::string>(), a2 = q[3].get<std::string>();
    int i = g.edge(a).color, j = g.edge(b).color;
    if (i >= j) throw ValidationError("squares: colors must rise in the first pair");
    g.squares[{i, j}][{a, b}] = {b2, a2};
  }
  return g;
}

json kgraph_to_json(const KGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back(
        {{"id", e.id}, {"src", e.src}, {"rng", e.rng}, {"color", e.color}});
  json squares = json::array();
  for (const auto& [pair, tab] : g.squares)
    for (const auto& [ab, ba] : tab)
      squares.push_back({ab.first, ab.second, ba.first, ba.second});
  return {{"schema", "kgraph/1"},
          {"k", g.k},
          {"vertices", g.vertices},
          {"edges", edges},
          {"squares", squares}};
}

StructAlgebra parse_algebra(const json& doc) {
  expect_schema(doc, "algebra/1");
  StructAlgebra a;
  a.group = parse_group(doc.value("group", json()), "group");
  a.basis = str_list(doc.value("basis", json::array()), "basis");
  for (const auto& d : doc.value("deg", json::array()))
    a.deg.push_back(a.group.reduce(elem_list(d, "deg")));
  if (a.deg.size() != a.basis.size())
    throw ValidationError("deg list must match basis length");
  for (const auto& t : doc.value("mult", json::array())) {
    if (!t.is_array() || t.size() != 3)
      throw ValidationError("mult: expected [i, j, terms] triples");
    std::map<size_t, long long> v;
    for (const auto& kc : t[2]) {
      if (!kc.is_array() || kc.size() != 2)
        throw ValidationError("mult: terms are [index, coeff] pairs");
      v[kc[0].get<size_t>()] = kc[1].get<long long>();
    }
    a.mult[{t[0].get<size_t>(), t[1].get<size_t>()}] = std::move(v);
  }
  for (const auto& u : doc.value("local_units", json::array())) {
    std::map<size_t, long long> v;
    for (const auto& kc : u) {
      if (!kc.is_array() || kc.size() != 2)
        throw ValidationError("local_units: terms are [index, coeff] pairs");
      v[kc[0].get<size_t>()] = kc[1].get<long long>();
    }
    a.local_units.push_back(std::move(v));
  }
  return a;
}

json algebra_to_json(const StructAlgebra& a) {
  json mult = json::array();
  for (const auto& [ij, v] : a.mult) {
    json terms = json::array();
    for (const auto& [k, c] : v) terms.push_back({k, c});
    mult.push_back({ij.first, ij.second, terms});
  }
  json units = json::array();
  for (const auto& u : a.local_units) {
    json terms = json::array();
    for (const auto& [k, c] : u) terms.push_back({k, c});
    units.push_back(terms);
  }
  return {{"schema", "algebra/1"}, {"group", group_to_json(a.group)},
          {"basis", a.basis},      {"deg", a.deg},
          {"mult", mult},          {"local_units", units}};
}

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ValidationError("'" + path + "': " + e.what());
  }
  return doc;
}

std::string digest_bytes(const std::string& bytes) {
  unsigned long long h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string digest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return digest_bytes(ss.str());
}

}  // namespace stg
