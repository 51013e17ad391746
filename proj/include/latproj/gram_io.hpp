#pragma once

#include <json.hpp>

#include "latproj/matrix.hpp"

namespace latproj {

using Json = nlohmann::ordered_json;

/// {"dim": n, "entries": [[...]]} with every entry an exact decimal or
/// "p/q" string — never a float, so output can feed another command
/// losslessly.
Json gram_to_json(const Mat& m);

/// Accepts integer numbers or exact rational strings; rejects floats,
/// non-square layouts, and unknown fields.
Mat gram_from_json(const Json& j);

Mat gram_from_file(const std::string& path);

Json int_vec_to_json(const ZVec& v);

}  // namespace latproj
