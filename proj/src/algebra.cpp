#include "btk/algebra.hpp"

#include <json.hpp>

namespace btk {

using nlohmann::ordered_json;

void validate(const StructureTriple& a) {
  if (a.k < 1) throw std::invalid_argument("algebra: k must be >= 1");
  auto check = [&](const LogicalMatrix& m, int want_cols, const char* name) {
    if (m.rows() != a.k)
      throw std::invalid_argument(std::string("algebra: ") + name + " must have k rows");
    if (m.cols() != want_cols)
      throw std::invalid_argument(std::string("algebra: ") + name + " must have " +
                                  std::to_string(want_cols) + " columns, got " +
                                  std::to_string(m.cols()));
  };
  check(a.meet, a.k * a.k, "meet");
  check(a.join, a.k * a.k, "join");
  if (a.comp) check(*a.comp, a.k, "comp");
}

int apply_binary(const LogicalMatrix& op, int x, int y) {
  const int k = op.rows();
  if (op.cols() != k * k)
    throw std::invalid_argument("apply_binary: operator is not k x k^2");
  if (x < 1 || x > k || y < 1 || y > k)
    throw std::out_of_range("apply_binary: element index out of range");
  return op.col((x - 1) * k + y);
}

int apply_unary(const LogicalMatrix& op, int x) {
  const int k = op.rows();
  if (op.cols() != k) throw std::invalid_argument("apply_unary: operator is not k x k");
  if (x < 1 || x > k) throw std::out_of_range("apply_unary: element index out of range");
  return op.col(x);
}

namespace {

std::vector<int> parse_index_array(const ordered_json& j, const std::string& path,
                                   std::size_t want_len, int k) {
  if (!j.is_array()) throw ParseError(path + ": expected an array");
  if (j.size() != want_len)
    throw ParseError(path + ": expected " + std::to_string(want_len) +
                     " entries, got " + std::to_string(j.size()));
  std::vector<int> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& e = j[i];
    const std::string epath = path + "[" + std::to_string(i) + "]";
    if (!e.is_number_integer()) throw ParseError(epath + ": expected an integer");
    const auto v = e.get<std::int64_t>();
    if (v < 1 || v > k)
      throw ParseError(epath + ": index " + std::to_string(v) + " out of range [1," +
                       std::to_string(k) + "]");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace

StructureTriple parse_algebra(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected an object");
  for (const auto& [key, _] : doc.items())
    if (key != "k" && key != "ops") throw ParseError("top level: unknown key \"" + key + "\"");
  if (!doc.contains("k")) throw ParseError("top level: missing field \"k\"");
  if (!doc["k"].is_number_integer()) throw ParseError("k: expected an integer");
  const auto kv = doc["k"].get<std::int64_t>();
  if (kv < 1 || kv > 4096) throw ParseError("k: out of supported range [1,4096]");
  const int k = static_cast<int>(kv);

  if (!doc.contains("ops")) throw ParseError("top level: missing field \"ops\"");
  const auto& ops = doc["ops"];
  if (!ops.is_object()) throw ParseError("ops: expected an object");
  for (const auto& [key, _] : ops.items())
    if (key != "meet" && key != "join" && key != "comp")
      throw ParseError("ops: unknown key \"" + key + "\"");
  if (!ops.contains("meet")) throw ParseError("ops: missing field \"meet\"");
  if (!ops.contains("join")) throw ParseError("ops: missing field \"join\"");

  const auto kk = static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
  StructureTriple a;
  a.k = k;
  a.meet = LogicalMatrix(k, parse_index_array(ops["meet"], "ops.meet", kk, k));
  a.join = LogicalMatrix(k, parse_index_array(ops["join"], "ops.join", kk, k));
  if (ops.contains("comp"))
    a.comp = LogicalMatrix(k, parse_index_array(ops["comp"], "ops.comp",
                                                static_cast<std::size_t>(k), k));
  return a;
}

std::string emit_algebra(const StructureTriple& a) {
  validate(a);
  ordered_json doc;
  doc["k"] = a.k;
  doc["ops"]["meet"] = a.meet.col_indices();
  doc["ops"]["join"] = a.join.col_indices();
  if (a.comp) doc["ops"]["comp"] = a.comp->col_indices();
  return doc.dump();
}

std::string report_to_json(const AlgebraReport& r) {
  ordered_json doc;
  doc["k"] = r.k;
  doc["meet_commutative"] = r.meet_commutative;
  doc["meet_associative"] = r.meet_associative;
  doc["join_commutative"] = r.join_commutative;
  doc["join_associative"] = r.join_associative;
  doc["absorption"] = r.absorption;
  doc["lattice"] = r.lattice;
  doc["distributive"] = r.distributive;
  doc["bounded"] = r.bounded;
  ordered_json c;
  c["present"] = r.has_complement;
  c["free"] = r.free_complement;
  c["dic"] = r.dic;
  c["de_morgan"] = r.de_morgan;
  c["kleene"] = r.kleene;
  c["pseudo"] = r.pseudo;
  c["stone"] = r.stone;
  c["boolean"] = r.boolean_algebra;
  doc["complement"] = c;
  return doc.dump();
}

}  // namespace btk
