#include "mrkit/serialization.hpp"

#include <fstream>
#include <sstream>

#include "mrkit/error.hpp"

namespace mrkit {

namespace {

template <class T>
std::vector<std::vector<T>> square(const std::vector<T>& flat, std::size_t n) {
  std::vector<std::vector<T>> out(n, std::vector<T>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = flat[i * n + j];
  }
  return out;
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) throw Error(ErrorKind::Schema, std::string("missing field \"") + name + "\"");
  return doc.at(name);
}

std::vector<std::vector<int>> int_matrix(const Json& doc, const char* name, std::size_t n) {
  const Json& m = field(doc, name);
  if (!m.is_array() || m.size() != n) throw Error(ErrorKind::Schema, std::string("\"") + name + "\" must have n rows");
  std::vector<std::vector<int>> out;
  for (const Json& row : m) {
    if (!row.is_array() || row.size() != n) {
      throw Error(ErrorKind::Schema, std::string("\"") + name + "\" rows must have n entries");
    }
    std::vector<int> r;
    for (const Json& v : row) {
      if (!v.is_number_integer()) throw Error(ErrorKind::Schema, std::string("\"") + name + "\" entries must be integers");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Json to_json(const CubicAlgebra& A) {
  const std::size_t n = A.size();
  std::vector<int> leq(A.leq_table().begin(), A.leq_table().end());
  Json doc;
  doc["carrier"] = n;
  doc["one"] = A.one();
  doc["leq"] = square(leq, n);
  doc["join"] = square(A.join_table(), n);
  doc["delta"] = square(A.delta_table(), n);
  doc["labels"] = A.labels();
  return doc;
}

CubicTables tables_from_json(const Json& doc) {
  const Json& carrier = field(doc, "carrier");
  if (!carrier.is_number_integer() || carrier.get<long long>() <= 0) {
    throw Error(ErrorKind::Schema, "\"carrier\" must be a positive integer");
  }
  const auto n = carrier.get<std::size_t>();
  const Json& one = field(doc, "one");
  if (!one.is_number_integer()) throw Error(ErrorKind::Schema, "\"one\" must be an integer");
  CubicTables t;
  t.carrier = n;
  t.one = one.get<Elem>();
  t.leq = int_matrix(doc, "leq", n);
  t.join = int_matrix(doc, "join", n);
  t.delta = int_matrix(doc, "delta", n);
  if (doc.contains("labels")) {
    const Json& labels = doc.at("labels");
    if (!labels.is_array() || labels.size() != n) throw Error(ErrorKind::Schema, "\"labels\" must have n strings");
    for (const Json& l : labels) {
      if (!l.is_string()) throw Error(ErrorKind::Schema, "\"labels\" must have n strings");
      t.labels.push_back(l.get<std::string>());
    }
  }
  return t;
}

CubicAlgebra algebra_from_json(const Json& doc, Validation mode) {
  return CubicAlgebra::from_tables(tables_from_json(doc), mode);
}

Json to_json(const Quotient& q) {
  const ImplicationAlgebra& I = q.algebra;
  const std::size_t n = I.size();
  std::vector<int> leq(I.leq_table().begin(), I.leq_table().end());
  Json doc;
  doc["carrier"] = n;
  doc["one"] = I.one();
  doc["leq"] = square(leq, n);
  doc["join"] = square(I.join_table(), n);
  doc["implies"] = square(I.implies_table(), n);
  doc["labels"] = I.labels();
  doc["classes"] = q.classes;
  return doc;
}

Json to_json(const Filter& f) { return f.elements(); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Usage, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Schema, path + ": " + e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Usage, "cannot write " + path);
  out << dump(doc);
}

}  // namespace mrkit
