#include "lieon/json_io.hpp"

#include <fstream>
#include <sstream>

namespace lieon {

ParseError::ParseError(const std::string& what, std::size_t l, std::size_t c)
    : std::runtime_error(l ? what + " at line " + std::to_string(l) + ", column " + std::to_string(c) : what),
      line(l),
      column(c) {}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // byte is the 1-based offset of the offending character
    std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON", line, col);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

Scalar scalar_from(const Json& j) {
  try {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad rational: ") + e.what());
  }
  throw ParseError("rationals must be strings \"p/q\" or integers");
}

std::size_t index_from(const Json& j, std::size_t dim) {
  long v = 0;
  if (j.is_number_integer()) {
    v = j.get<long>();
  } else if (j.is_string()) {
    try {
      std::size_t used = 0;
      v = std::stol(j.get<std::string>(), &used);
      if (used != j.get<std::string>().size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("bad index " + j.dump());
    }
  } else {
    throw ParseError("bad index " + j.dump());
  }
  if (v < 1 || static_cast<std::size_t>(v) > dim) throw ParseError("index " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v - 1);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json to_json(const StructureConstants& sc) {
  Json brackets = Json::array();
  for (const auto& [key, vec] : sc.entries()) {
    Json out = Json::array();
    for (std::size_t k = 0; k < vec.size(); ++k)
      if (sgn(vec[k]) != 0) out.push_back(Json::array({std::to_string(k + 1), to_string(vec[k])}));
    brackets.push_back(Json{{"i", key.first + 1}, {"j", key.second + 1}, {"out", out}});
  }
  return Json{{"dim", sc.dim()}, {"labels", sc.labels()}, {"brackets", brackets}};
}

StructureConstants structure_from_json(const Json& j) {
  const Json& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long>() < 0) throw ParseError("dim must be a non-negative integer");
  std::size_t n = d.get<std::size_t>();
  StructureConstants sc(n);
  if (j.contains("labels")) {
    const Json& l = j.at("labels");
    if (!l.is_array()) throw ParseError("labels must be an array");
    std::vector<std::string> labels;
    for (const auto& s : l) {
      if (!s.is_string()) throw ParseError("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
    if (!labels.empty() && labels.size() != n) throw ParseError("labels: one per basis vector");
    sc.set_labels(labels);
  }
  const Json& br = field(j, "brackets");
  if (!br.is_array()) throw ParseError("brackets must be an array");
  for (const auto& b : br) {
    std::size_t i = index_from(field(b, "i"), n), jj = index_from(field(b, "j"), n);
    if (i == jj) throw ParseError("bracket of a basis vector with itself");
    const Json& out = field(b, "out");
    if (!out.is_array()) throw ParseError("out must be an array");
    for (const auto& term : out) {
      if (!term.is_array() || term.size() != 2) throw ParseError("out terms are [index, coefficient] pairs");
      sc.add_bracket(i, jj, index_from(term[0], n), scalar_from(term[1]));
    }
  }
  return sc;
}

Json to_json(const AScheme& s) {
  Json nodes = Json::array(), edges = Json::array();
  for (const auto& nd : s.nodes()) nodes.push_back(Json{{"id", nd.id}, {"level", nd.level}, {"algebra", to_json(nd.algebra)}});
  for (const auto& [p, c] : s.edges()) edges.push_back(Json::array({p, c}));
  return Json{{"nodes", nodes}, {"edges", edges}};
}

AScheme scheme_from_json(const Json& j) {
  const Json& nodes = field(j, "nodes");
  const Json& edges = field(j, "edges");
  if (!nodes.is_array() || !edges.is_array()) throw ParseError("nodes and edges must be arrays");
  std::vector<SchemeNode> out;
  for (const auto& nd : nodes) {
    const Json& id = field(nd, "id");
    const Json& lv = field(nd, "level");
    if (!id.is_string() || !lv.is_number_integer() || lv.get<long>() < 0) throw ParseError("bad node header");
    out.push_back(SchemeNode{id.get<std::string>(), lv.get<std::size_t>(), structure_from_json(field(nd, "algebra"))});
  }
  std::vector<std::pair<std::string, std::string>> es;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw ParseError("edges are [parent, child] id pairs");
    es.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return AScheme(std::move(out), std::move(es));
}

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from(x));
  return v;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw ParseError("matrix rows differ in length");
  return Matrix::from_rows(rows, cols);
}

Json to_json(const Subspace& s) { return Json{{"ambient", s.ambient()}, {"basis", to_json(s.basis())}}; }

Json to_json(const Classification& c) {
  Json j{{"class", to_string(c.cls)}};
  if (c.spec) {
    j["center"] = to_json(c.spec->center);
    j["line"] = to_json(c.spec->line);
    j["scale"] = to_string(c.spec->scale);
  }
  return j;
}

Json to_json(const SchemeReport& r) {
  Json ends = Json::array();
  for (const auto& e : r.end_terms) ends.push_back(Json{{"id", e.id}, {"class", to_string(e.cls.cls)}});
  return Json{{"valid", r.valid},
              {"complete", r.complete},
              {"complete_lenient", r.complete_lenient},
              {"end_terms", ends},
              {"violations", r.violations}};
}

Json to_json(const Census& c) {
  return Json{{"dyons", c.dyons}, {"triadons", c.triadons}, {"abelian", c.abelian}, {"steps", c.steps}};
}

}  // namespace lieon
