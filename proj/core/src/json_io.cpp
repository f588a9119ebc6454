#include "crosslab/json_io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace crosslab {

namespace {

using nlohmann::json; // std::map-backed: keys sort themselves on dump

std::string edge_name(const EdgeKey& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

json point_json(const Point& p) {
  return json::array({format_rational(p.x), format_rational(p.y)});
}

json layout_json(const TwoPageLayout& l) {
  json pages = json::object();
  for (const auto& [e, p] : l.pages)
    pages[edge_name(e)] = (p == Page::top) ? "top" : "bottom";
  return json{{"pages", std::move(pages)}, {"spine", l.spine}};
}

json layout_json(const CylindricalLayout& l) {
  const auto ring = [](const std::vector<CylindricalLayout::RingVertex>& r) {
    json arr = json::array();
    for (const auto& v : r)
      arr.push_back(json{{"id", v.id}, {"turn", format_rational(v.turn)}});
    return arr;
  };
  json delta = json::object();
  for (const auto& [e, t] : l.delta) delta[edge_name(e)] = format_rational(t);
  return json{{"delta", std::move(delta)},
              {"inner", ring(l.inner)},
              {"outer", ring(l.outer)}};
}

json witness_json(const FaceRef& f) {
  if (f.is_unbounded()) return nullptr;
  return json{{"x", format_rational(f.point->x)},
              {"y", format_rational(f.point->y)}};
}

std::string canonical(const json& doc) { return doc.dump(2) + "\n"; }

// --- parsing helpers -------------------------------------------------------

[[noreturn]] void schema_error(const std::string& what) {
  throw std::invalid_argument("drawing document: " + what);
}

const json& field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(std::string("missing key \"") + key + "\"");
  return *it;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const char* where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) schema_error(std::string("unknown key \"") + key + "\" in " + where);
  }
}

long long integer_of(const json& j, const char* what) {
  if (!j.is_number_integer()) schema_error(std::string(what) + " must be an integer");
  return j.get<long long>();
}

Rational rational_of(const json& j, const char* what) {
  if (!j.is_string()) schema_error(std::string(what) + " must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Point point_of(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2)
    schema_error(std::string(what) + " must be a two-element array");
  return Point{rational_of(j[0], what), rational_of(j[1], what)};
}

EdgeKey edge_key_of(const std::string& name) {
  const auto dash = name.find('-', 1);
  if (dash == std::string::npos || dash + 1 >= name.size())
    schema_error("edge key \"" + name + "\" is not of the form \"u-v\"");
  const std::string left = name.substr(0, dash);
  const std::string right = name.substr(dash + 1);
  int u = 0, v = 0;
  std::size_t lpos = 0, rpos = 0;
  try {
    u = std::stoi(left, &lpos);
    v = std::stoi(right, &rpos);
  } catch (const std::exception&) {
    schema_error("edge key \"" + name + "\" is not of the form \"u-v\"");
  }
  if (lpos != left.size() || rpos != right.size())
    schema_error("edge key \"" + name + "\" is not of the form \"u-v\"");
  if (u == v) schema_error("edge key \"" + name + "\" repeats a vertex");
  return EdgeKey(u, v);
}

TwoPageLayout two_page_of(const json& j) {
  reject_unknown_keys(j, {"pages", "spine"}, "layout");
  TwoPageLayout l;
  const json& spine = field(j, "spine");
  if (!spine.is_array()) schema_error("layout spine must be an array");
  for (const json& v : spine)
    l.spine.push_back(static_cast<int>(integer_of(v, "spine entry")));
  const json& pages = field(j, "pages");
  if (!pages.is_object()) schema_error("layout pages must be an object");
  for (const auto& [name, page] : pages.items()) {
    if (!page.is_string() ||
        (page.get<std::string>() != "top" && page.get<std::string>() != "bottom"))
      schema_error("page of \"" + name + "\" must be \"top\" or \"bottom\"");
    l.pages[edge_key_of(name)] =
        page.get<std::string>() == "top" ? Page::top : Page::bottom;
  }
  return l;
}

CylindricalLayout cylindrical_of(const json& j) {
  reject_unknown_keys(j, {"delta", "inner", "outer"}, "layout");
  CylindricalLayout l;
  const auto ring = [](const json& arr, const char* where) {
    if (!arr.is_array()) schema_error(std::string(where) + " must be an array");
    std::vector<CylindricalLayout::RingVertex> r;
    for (const json& v : arr) {
      if (!v.is_object()) schema_error(std::string(where) + " entries must be objects");
      reject_unknown_keys(v, {"id", "turn"}, where);
      r.push_back({static_cast<int>(integer_of(field(v, "id"), "ring id")),
                   rational_of(field(v, "turn"), "ring turn")});
    }
    return r;
  };
  l.inner = ring(field(j, "inner"), "inner ring");
  l.outer = ring(field(j, "outer"), "outer ring");
  const json& delta = field(j, "delta");
  if (!delta.is_object()) schema_error("layout delta must be an object");
  for (const auto& [name, turn] : delta.items())
    l.delta[edge_key_of(name)] = rational_of(turn, "delta turn");
  return l;
}

} // namespace

std::string drawing_to_json(const Drawing& d) {
  json doc;
  doc["class"] = to_string(d.cls);
  doc["n"] = d.n();
  json vertices = json::array();
  for (const auto& [id, p] : d.vertices)
    vertices.push_back(json{{"id", id},
                            {"x", format_rational(p.x)},
                            {"y", format_rational(p.y)}});
  doc["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const auto& [key, poly] : d.edges) {
    json pts = json::array();
    for (const Point& p : poly) pts.push_back(point_json(p));
    edges.push_back(json{{"polyline", std::move(pts)}, {"u", key.u}, {"v", key.v}});
  }
  doc["edges"] = std::move(edges);
  if (d.layout.has_value())
    doc["layout"] = std::visit([](const auto& l) { return layout_json(l); },
                               *d.layout);
  return canonical(doc);
}

Drawing drawing_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("drawing document: not JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("top level must be an object");
  reject_unknown_keys(doc, {"class", "edges", "layout", "n", "vertices"}, "document");

  Drawing d;
  const json& cls = field(doc, "class");
  if (!cls.is_string()) schema_error("class must be a string");
  d.cls = drawing_class_from_string(cls.get<std::string>());

  const json& vertices = field(doc, "vertices");
  if (!vertices.is_array()) schema_error("vertices must be an array");
  for (const json& v : vertices) {
    if (!v.is_object()) schema_error("vertex entries must be objects");
    reject_unknown_keys(v, {"id", "x", "y"}, "vertex");
    const int id = static_cast<int>(integer_of(field(v, "id"), "vertex id"));
    const Point p{rational_of(field(v, "x"), "vertex x"),
                  rational_of(field(v, "y"), "vertex y")};
    if (!d.vertices.emplace(id, p).second)
      schema_error("vertex id " + std::to_string(id) + " listed twice");
  }
  if (integer_of(field(doc, "n"), "n") != d.n())
    schema_error("\"n\" disagrees with the vertex list");

  const json& edges = field(doc, "edges");
  if (!edges.is_array()) schema_error("edges must be an array");
  for (const json& e : edges) {
    if (!e.is_object()) schema_error("edge entries must be objects");
    reject_unknown_keys(e, {"polyline", "u", "v"}, "edge");
    const int u = static_cast<int>(integer_of(field(e, "u"), "edge endpoint"));
    const int v = static_cast<int>(integer_of(field(e, "v"), "edge endpoint"));
    if (u == v) schema_error("edge repeats vertex " + std::to_string(u));
    if (!d.vertices.count(u) || !d.vertices.count(v))
      schema_error("edge " + std::to_string(u) + "-" + std::to_string(v) +
                   " references a missing vertex");
    const json& pts = field(e, "polyline");
    if (!pts.is_array() || pts.size() < 2)
      schema_error("polyline needs at least its two endpoints");
    Polyline poly;
    for (const json& p : pts) poly.push_back(point_of(p, "polyline point"));
    if (!d.edges.emplace(EdgeKey(u, v), std::move(poly)).second)
      schema_error("edge " + std::to_string(u) + "-" + std::to_string(v) +
                   " listed twice");
  }

  if (doc.contains("layout")) {
    const json& l = doc["layout"];
    if (!l.is_object()) schema_error("layout must be an object");
    if (l.contains("spine"))
      d.layout = two_page_of(l);
    else if (l.contains("inner"))
      d.layout = cylindrical_of(l);
    else
      schema_error("layout is neither two-page nor cylindrical");
  }
  return d;
}

Drawing load_drawing(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return drawing_from_json(buf.str());
}

void save_drawing(const std::string& path, const Drawing& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << drawing_to_json(d);
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::string certificate_to_json(const ShellingCertificate& c) {
  json pairs = json::array();
  for (const PairVerdict& p : c.pairs)
    pairs.push_back(json{{"i", p.i},
                         {"j", p.j},
                         {"vi_on_boundary", p.vi_on_boundary},
                         {"vj_on_boundary", p.vj_on_boundary}});
  return canonical(json{{"S", c.S},
                        {"pairs", std::move(pairs)},
                        {"valid", c.valid},
                        {"witness", witness_json(c.witness)}});
}

std::string pipeline_to_json(const PipelineVerdict& v) {
  json chain = json::array();
  for (const BoundVerdict& b : v.bound_chain)
    chain.push_back(json{{"k", b.k}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"pass", b.pass}});
  return canonical(json{{"S", v.S},
                        {"bound_chain", std::move(chain)},
                        {"bound_chain_ok", v.bound_chain_ok},
                        {"certificate", to_string(v.kind)},
                        {"conclusive", v.conclusive},
                        {"crossings", v.crossings},
                        {"n", v.n},
                        {"s", v.s},
                        {"witness", witness_json(v.witness)},
                        {"zeta", v.zeta_n}});
}

} // namespace crosslab
