#include "hbtensor/io.hpp"

#include "hbtensor/error.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hbtensor::io {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, where + ": " + what);
}

ordered_json parse_document(std::string_view text) {
  try {
    return ordered_json::parse(text.begin(), text.end());
  } catch (const ordered_json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail("line " + std::to_string(line) + ", column " + std::to_string(col), "malformed JSON");
  }
}

const ordered_json& field(const ordered_json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

Rational number(const ordered_json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(BigInt(j.dump()));
    if (j.is_number_float()) return parse_rational(j.dump());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
  fail(where, "expected a number or a \"p/q\" string");
}

ordered_json emit_number(const Rational& q) {
  if (is_integer(q)) {
    const BigInt& num = boost::multiprecision::numerator(q);
    if (num >= std::numeric_limits<std::int64_t>::min() && num <= std::numeric_limits<std::int64_t>::max()) {
      return num.convert_to<std::int64_t>();
    }
  }
  return to_string(q);
}

std::vector<std::string> string_list(const ordered_json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) fail(where + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

UniversePtr universe_from(std::vector<std::string> ids, const std::string& where) {
  try {
    return make_universe(std::move(ids));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

std::map<std::size_t, Rational> mult_from(const ordered_json& j, const Universe& universe, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object of multiplicities");
  std::map<std::size_t, Rational> mult;
  for (const auto& [id, value] : j.items()) {
    const std::string at = where + "." + id;
    if (!universe.contains(id)) fail(at, "unknown element '" + id + "'");
    Rational m = number(value, at);
    if (m < 0) fail(at, "negative multiplicity");
    mult[universe.index_of(id)] = std::move(m);
  }
  return mult;
}

ordered_json mult_to(const Multiset& a) {
  ordered_json mult = ordered_json::object();
  for (const auto& [element, m] : a.entries()) mult[a.universe()->id(element)] = emit_number(m);
  return mult;
}

}  // namespace

std::string mset_to_json(const Multiset& a) {
  ordered_json doc;
  doc["universe"] = a.universe()->ids();
  doc["mult"] = mult_to(a);
  return doc.dump(2) + "\n";
}

Multiset mset_from_json(std::string_view text) {
  const auto doc = parse_document(text);
  auto universe = universe_from(string_list(field(doc, "universe", "$"), "$.universe"), "$.universe");
  return Multiset(universe, mult_from(field(doc, "mult", "$"), *universe, "$.mult"));
}

std::string hbgraph_to_json(const HbGraph& h) {
  ordered_json doc;
  doc["vertices"] = h.vertices();
  ordered_json edges = ordered_json::array();
  for (std::size_t j = 0; j < h.size(); ++j) {
    ordered_json e;
    e["mult"] = mult_to(h.edge(j));
    if (h.weighted()) e["weight"] = emit_number(h.weight(j));
    edges.push_back(std::move(e));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

HbGraph hbgraph_from_json(std::string_view text) {
  const auto doc = parse_document(text);
  auto universe = universe_from(string_list(field(doc, "vertices", "$"), "$.vertices"), "$.vertices");
  const auto& edges_json = field(doc, "edges", "$");
  if (!edges_json.is_array()) fail("$.edges", "expected an array");
  std::vector<Multiset> edges;
  std::vector<Rational> weights;
  bool weighted = false;
  for (std::size_t j = 0; j < edges_json.size(); ++j) {
    const std::string where = "$.edges[" + std::to_string(j) + "]";
    const auto& e = edges_json[j];
    edges.emplace_back(universe, mult_from(field(e, "mult", where), *universe, where + ".mult"));
    if (auto w = e.find("weight"); w != e.end() && !w->is_null()) {
      Rational value = number(*w, where + ".weight");
      if (value <= 0) fail(where + ".weight", "weights must be positive");
      weights.push_back(std::move(value));
      weighted = true;
    } else {
      weights.emplace_back(1);
    }
  }
  std::optional<std::vector<Rational>> w;
  if (weighted) w = std::move(weights);
  return HbGraph(universe, std::move(edges), std::move(w));
}

std::string trace_to_json(const UniformisationTrace& trace) {
  ordered_json doc;
  doc["approach"] = std::string(to_string(trace.approach));
  doc["r_h"] = trace.r_h;
  doc["vertices"] = trace.vertices;
  ordered_json nulls = ordered_json::object();
  for (const auto& [id, index] : trace.null_vertices) nulls[id] = index;
  doc["null_vertices"] = std::move(nulls);
  ordered_json coeffs = ordered_json::object();
  for (const auto& [r, c] : trace.layer_coeffs) coeffs[std::to_string(r)] = to_string(c);
  doc["layer_coeffs"] = std::move(coeffs);
  ordered_json provenance = ordered_json::array();
  for (std::size_t j : trace.edge_provenance) provenance.push_back(j + 1);
  doc["edge_provenance"] = std::move(provenance);
  return doc.dump(2) + "\n";
}

UniformisationTrace trace_from_json(std::string_view text) {
  const auto doc = parse_document(text);
  UniformisationTrace trace;
  const auto& approach = field(doc, "approach", "$");
  if (!approach.is_string() || !parse_approach(approach.get<std::string>())) {
    fail("$.approach", "expected straightforward|silo|layered");
  }
  trace.approach = *parse_approach(approach.get<std::string>());
  const auto& r_h = field(doc, "r_h", "$");
  if (!r_h.is_number_unsigned()) fail("$.r_h", "expected a positive integer");
  trace.r_h = r_h.get<unsigned>();
  trace.vertices = string_list(field(doc, "vertices", "$"), "$.vertices");
  const auto& nulls = field(doc, "null_vertices", "$");
  if (!nulls.is_object()) fail("$.null_vertices", "expected an object");
  for (const auto& [id, index] : nulls.items()) {
    if (!index.is_number_unsigned()) fail("$.null_vertices." + id, "expected a 1-based index");
    trace.null_vertices.emplace_back(id, index.get<std::size_t>());
  }
  std::sort(trace.null_vertices.begin(), trace.null_vertices.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  if (auto coeffs = doc.find("layer_coeffs"); coeffs != doc.end()) {
    if (!coeffs->is_object()) fail("$.layer_coeffs", "expected an object");
    for (const auto& [r, c] : coeffs->items()) {
      try {
        trace.layer_coeffs.emplace(static_cast<unsigned>(std::stoul(r)), number(c, "$.layer_coeffs." + r));
      } catch (const std::logic_error&) {
        fail("$.layer_coeffs." + r, "level must be an integer");
      }
    }
  }
  if (auto provenance = doc.find("edge_provenance"); provenance != doc.end()) {
    if (!provenance->is_array()) fail("$.edge_provenance", "expected an array");
    for (std::size_t k = 0; k < provenance->size(); ++k) {
      const auto& v = (*provenance)[k];
      if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
        fail("$.edge_provenance[" + std::to_string(k) + "]", "expected a 1-based edge index");
      }
      trace.edge_provenance.push_back(v.get<std::size_t>() - 1);
    }
  }
  return trace;
}

void write_coo(std::ostream& os, const SymTensor& t, CooMode mode, std::uint64_t dense_limit) {
  const auto records = export_coo(t, mode, dense_limit);
  os << "# order=" << t.order() << " dim=" << t.dim() << " entries=" << records.size() << "\n";
  for (const auto& [idx, value] : records) {
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? " " : "") << idx[k] + 1;
    os << "  " << to_string(value) << "\n";
  }
}

namespace {

std::optional<std::uint64_t> header_value(const std::string& header, const std::string& key) {
  auto pos = header.find(key + "=");
  if (pos == std::string::npos) return std::nullopt;
  try {
    return std::stoull(header.substr(pos + key.size() + 1));
  } catch (const std::logic_error&) {
    return std::nullopt;
  }
}

}  // namespace

SymTensor read_coo(std::istream& is) {
  std::string header;
  if (!std::getline(is, header) || !header.starts_with("#")) fail("line 1", "missing '# order=r dim=d entries=k' header");
  auto order = header_value(header, "order");
  auto dim = header_value(header, "dim");
  auto count = header_value(header, "entries");
  if (!order || !dim || !count) fail("line 1", "header must carry order, dim and entries");

  std::map<IndexTuple, Rational> seen;
  std::string line;
  std::size_t line_no = 1;
  std::uint64_t records = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line.starts_with("#")) continue;
    const std::string where = "line " + std::to_string(line_no);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.size() != *order + 1) fail(where, "expected " + std::to_string(*order) + " indices and a value");
    IndexTuple idx;
    for (std::size_t k = 0; k < *order; ++k) {
      std::uint64_t i = 0;
      try {
        std::size_t used = 0;
        i = std::stoull(tokens[k], &used);
        if (used != tokens[k].size()) throw std::invalid_argument("trailing");
      } catch (const std::logic_error&) {
        fail(where, "index '" + tokens[k] + "' is not a positive integer");
      }
      if (i == 0 || i > *dim) fail(where, "index " + tokens[k] + " outside 1.." + std::to_string(*dim));
      idx.push_back(static_cast<std::uint32_t>(i - 1));
    }
    Rational value;
    try {
      value = parse_rational(tokens.back());
    } catch (const Error& e) {
      fail(where, e.what());
    }
    std::sort(idx.begin(), idx.end());
    auto [it, inserted] = seen.emplace(idx, value);
    if (!inserted && it->second != value) fail(where, "permuted entry disagrees with an earlier record");
    ++records;
  }
  if (records != *count) fail("header", "declares " + std::to_string(*count) + " entries, found " + std::to_string(records));
  SymTensor::Builder b(static_cast<unsigned>(*order), static_cast<std::size_t>(*dim));
  for (auto& [idx, value] : seen) b.add(idx, value);
  return std::move(b).build();
}

std::string tensor_to_json(const SymTensor& t) {
  ordered_json doc;
  doc["order"] = t.order();
  doc["dim"] = t.dim();
  ordered_json entries = ordered_json::array();
  for (const auto& [idx, value] : t.entries()) {
    ordered_json e;
    ordered_json one_based = ordered_json::array();
    for (auto i : idx) one_based.push_back(i + 1);
    e["idx"] = std::move(one_based);
    e["val"] = to_string(value);
    entries.push_back(std::move(e));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

SymTensor tensor_from_json(std::string_view text) {
  const auto doc = parse_document(text);
  const auto& order = field(doc, "order", "$");
  const auto& dim = field(doc, "dim", "$");
  if (!order.is_number_unsigned()) fail("$.order", "expected a positive integer");
  if (!dim.is_number_unsigned()) fail("$.dim", "expected a positive integer");
  const auto& entries = field(doc, "entries", "$");
  if (!entries.is_array()) fail("$.entries", "expected an array");
  SymTensor::Builder b(order.get<unsigned>(), dim.get<std::size_t>());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string where = "$.entries[" + std::to_string(k) + "]";
    const auto& idx_json = field(entries[k], "idx", where);
    if (!idx_json.is_array()) fail(where + ".idx", "expected an array");
    IndexTuple idx;
    for (const auto& i : idx_json) {
      if (!i.is_number_unsigned() || i.get<std::size_t>() == 0) fail(where + ".idx", "indices are 1-based integers");
      idx.push_back(static_cast<std::uint32_t>(i.get<std::size_t>() - 1));
    }
    try {
      b.add(std::move(idx), number(field(entries[k], "val", where), where + ".val"));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Parse) throw;
      fail(where, e.what());
    }
  }
  return std::move(b).build();
}

std::string incidence_to_csv(const HbGraph& h) {
  const auto m = incidence_matrix(h);
  std::ostringstream os;
  os << "vertex";
  for (std::size_t j = 0; j < m.cols(); ++j) os << ",e" << j + 1;
  os << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << h.vertices()[i];
    for (std::size_t j = 0; j < m.cols(); ++j) os << "," << to_string(m.at(i, j));
    os << "\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Precondition, "cannot write '" + path + "'");
  out << content;
}

}  // namespace hbtensor::io
