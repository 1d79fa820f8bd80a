#include "idemrep/json_io.hpp"

#include <fstream>
#include <sstream>

namespace idemrep::json_io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::size_t as_index(const Json& j, const char* what) {
  const auto v = as_int(j, what);
  if (v < 0) throw ParseError(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

Element element_key(const std::string& key, std::size_t order) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != key.size() || v >= order) throw ParseError("bad group element key \"" + key + "\"");
  return static_cast<Element>(v);
}

}  // namespace

Json to_json(const Value& v) {
  if (v.tag() == SemifieldTag::Boolean) return v.bit() ? 1 : 0;
  if (v.is_zero()) return Json{{"t", "ninf"}};
  return Json{{"t", "q"}, {"num", v.exponent().numerator()}, {"den", v.exponent().denominator()}};
}

Value value_from_json(const Json& j, SemifieldTag tag) {
  if (tag == SemifieldTag::Boolean) {
    const auto b = as_int(j, "Boolean value");
    if (b != 0 && b != 1) throw ParseError("Boolean value must be 0 or 1");
    return Value::boolean(b == 1);
  }
  if (!j.is_object()) throw ParseError("tropical value must be an object");
  const Json& t = field(j, "t");
  if (t == "ninf") return Value::neg_inf();
  if (t != "q") throw ParseError("tropical value tag must be \"ninf\" or \"q\"");
  const auto num = as_int(field(j, "num"), "num");
  const auto den = as_int(field(j, "den"), "den");
  if (den <= 0) throw ParseError("den must be positive");
  const Rational q(num, den);
  if (q.numerator() != num || q.denominator() != den) throw ParseError("tropical value not in lowest terms");
  return Value::tropical(q);
}

Json to_json(const FiniteGroup& g) {
  Json j{{"order", g.order()}, {"table", g.table()}, {"names", g.names()}};
  if (!g.label().empty()) j["label"] = g.label();
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  const std::size_t order = as_index(field(j, "order"), "order");
  const Json& rows = as_array(field(j, "table"), "table");
  if (rows.size() != order) throw ParseError("table must have `order` rows");
  std::vector<std::vector<Element>> table;
  for (const auto& row : rows) {
    as_array(row, "table row");
    std::vector<Element> r;
    for (const auto& e : row) r.push_back(static_cast<Element>(as_index(e, "table entry")));
    table.push_back(std::move(r));
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    for (const auto& n : as_array(j.at("names"), "names")) {
      if (!n.is_string()) throw ParseError("names must be strings");
      names.push_back(n.get<std::string>());
    }
  }
  std::string label = j.contains("label") && j.at("label").is_string() ? j.at("label").get<std::string>() : "";
  return FiniteGroup::from_table(table, std::move(names), std::move(label));
}

Json to_json(const MonomialMap& m) {
  Json scalars = Json::array();
  for (const auto& s : m.scalars()) scalars.push_back(to_json(s));
  return Json{{"perm", m.perm()}, {"scalars", scalars}};
}

MonomialMap monomial_from_json(const Json& j, SemifieldTag tag) {
  Permutation perm;
  for (const auto& p : as_array(field(j, "perm"), "perm")) perm.push_back(static_cast<std::uint32_t>(as_index(p, "perm entry")));
  std::vector<Value> scalars;
  for (const auto& s : as_array(field(j, "scalars"), "scalars")) scalars.push_back(value_from_json(s, tag));
  return MonomialMap::create(tag, std::move(perm), std::move(scalars));
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, SemifieldTag tag) {
  std::vector<std::vector<Value>> rows;
  for (const auto& row : as_array(j, "matrix")) {
    std::vector<Value> r;
    for (const auto& e : as_array(row, "matrix row")) r.push_back(value_from_json(e, tag));
    rows.push_back(std::move(r));
  }
  return Matrix::from_rows(tag, rows);
}

Json to_json(const Representation& v) {
  Json images = Json::object();
  for (Element g = 0; g < v.group().order(); ++g) images[std::to_string(g)] = to_json(v.image(g));
  return Json{{"group", to_json(v.group())}, {"tag", to_string(v.tag())}, {"dim", v.dim()}, {"images", images}};
}

Representation representation_from_json(const Json& j) {
  const FiniteGroup g = group_from_json(field(j, "group"));
  const Json& tag_json = field(j, "tag");
  if (!tag_json.is_string()) throw ParseError("tag must be a string");
  const SemifieldTag tag = parse_semifield_tag(tag_json.get<std::string>());
  const std::size_t dim = as_index(field(j, "dim"), "dim");
  const Json& images = field(j, "images");
  if (!images.is_object()) throw ParseError("images must be an object keyed by element");
  std::vector<std::optional<MonomialMap>> maps(g.order());
  for (const auto& [key, value] : images.items()) {
    maps[element_key(key, g.order())] = monomial_from_json(value, tag);
  }
  std::vector<MonomialMap> out;
  for (Element x = 0; x < g.order(); ++x) {
    if (!maps[x]) throw ParseError("images: missing element " + std::to_string(x));
    if (maps[x]->dim() != dim) throw ValidationError("image of element " + std::to_string(x) + " has the wrong dimension");
    out.push_back(*maps[x]);
  }
  return Representation::create(g, tag, dim, std::move(out));
}

Json to_json(const FiniteBModule& m) {
  Json leq = Json::array();
  for (const auto& row : m.order_relation()) {
    Json r = Json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    leq.push_back(std::move(r));
  }
  return Json{{"size", m.size()}, {"leq", leq}, {"labels", m.labels()}};
}

Json to_json(const BGModule& m) {
  Json j = to_json(m.module());
  j["group"] = to_json(m.group());
  Json action = Json::object();
  const std::size_t n = m.module().size();
  for (Element g = 0; g < m.group().order(); ++g) {
    std::vector<std::size_t> row(m.action().begin() + g * n, m.action().begin() + (g + 1) * n);
    action[std::to_string(g)] = row;
  }
  j["action"] = action;
  return j;
}

LatticeDocument lattice_from_json(const Json& j) {
  const std::size_t size = as_index(field(j, "size"), "size");
  const Json& rows = as_array(field(j, "leq"), "leq");
  if (rows.size() != size) throw ParseError("leq must have `size` rows");
  std::vector<std::vector<bool>> leq;
  for (const auto& row : rows) {
    if (as_array(row, "leq row").size() != size) throw ParseError("leq rows must have `size` entries");
    std::vector<bool> r;
    for (const auto& e : row) {
      const auto v = as_int(e, "leq entry");
      if (v != 0 && v != 1) throw ParseError("leq entries must be 0 or 1");
      r.push_back(v == 1);
    }
    leq.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : as_array(j.at("labels"), "labels")) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  LatticeDocument doc{FiniteBModule::from_order(leq, std::move(labels)), std::nullopt};
  if (j.contains("action")) {
    const FiniteGroup g = group_from_json(field(j, "group"));
    const Json& action = j.at("action");
    if (!action.is_object()) throw ParseError("action must be an object keyed by element");
    std::vector<std::size_t> table(g.order() * size);
    std::vector<bool> seen(g.order(), false);
    for (const auto& [key, value] : action.items()) {
      const Element x = element_key(key, g.order());
      if (as_array(value, "action row").size() != size) throw ParseError("action rows must have `size` entries");
      for (std::size_t p = 0; p < size; ++p) table[x * size + p] = as_index(value[p], "action entry");
      seen[x] = true;
    }
    for (Element x = 0; x < g.order(); ++x) {
      if (!seen[x]) throw ParseError("action: missing element " + std::to_string(x));
    }
    doc.bg_module = BGModule::create(doc.module, g, std::move(table));
  }
  return doc;
}

Json to_json(const oracle::OracleReport& r, bool include_timing) {
  Json j{{"claim", r.claim}, {"instance", r.instance}, {"verdict", r.pass ? "pass" : "fail"}};
  j["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
  j["search_size"] = r.search_size;
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace idemrep::json_io
