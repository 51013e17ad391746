#include "latproj/gram_io.hpp"

#include <fstream>

namespace latproj {

Json gram_to_json(const Mat& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"dim", m.rows()}, {"entries", std::move(rows)}};
}

Mat gram_from_json(const Json& j) {
  if (!j.is_object()) throw ShapeError("Gram JSON must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "dim" && it.key() != "entries")
      throw ShapeError("unknown field in Gram JSON: '" + it.key() + "'");
  if (!j.contains("dim") || !j.contains("entries"))
    throw ShapeError("Gram JSON needs 'dim' and 'entries'");
  if (!j["dim"].is_number_unsigned()) throw ShapeError("'dim' must be a nonnegative integer");
  const size_t dim = j["dim"].get<size_t>();
  const Json& entries = j["entries"];
  if (!entries.is_array() || entries.size() != dim)
    throw ShapeError("'entries' must be a " + std::to_string(dim) + "-row array");
  Mat m(dim, dim);
  for (size_t i = 0; i < dim; ++i) {
    const Json& row = entries[i];
    if (!row.is_array() || row.size() != dim) throw ShapeError("'entries' rows must have length dim");
    for (size_t jj = 0; jj < dim; ++jj) {
      const Json& e = row[jj];
      if (e.is_number_integer())
        m(i, jj) = Rat(BigInt(static_cast<long>(e.get<long long>())));
      else if (e.is_string())
        m(i, jj) = parse_rat(e.get<std::string>());
      else
        throw ShapeError("Gram entries must be integers or exact rational strings");
    }
  }
  return m;
}

Mat gram_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ShapeError("cannot open Gram file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ShapeError("Gram file is not valid JSON: " + std::string(e.what()));
  }
  return gram_from_json(j);
}

Json int_vec_to_json(const ZVec& v) {
  Json out = Json::array();
  for (const BigInt& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace latproj
