#pragma once

#include <json.hpp>

#include <string>

#include "curvrank/realize.hpp"

namespace curvrank::json_io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Every payload document carries schema_version at the top level; rationals
/// serialize as "n/d" strings ("n" when the denominator is 1); spaces carry an
/// explicit "gram" field only when it differs from the standard diagonal.
Json space_to_json(const SignatureSpace& s);
SignatureSpace space_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);

Json linear_map_to_json(const LinearMap& m);
LinearMap linear_map_from_json(const Json& j);

/// Blocks are keyed "i,j" with i < j; all-zero blocks are omitted.
Json skew_map_to_json(const BilinearSkewMap& t);
BilinearSkewMap skew_map_from_json(const Json& j);

/// Entries are sorted [i,j,k,l,"n/d"] rows, nonzero components only.
Json tensor_to_json(const CurvatureTensor4& r);
CurvatureTensor4 tensor_from_json(const Json& j);

Json decomposition_to_json(const Decomposition& d, bool verified);
Json realization_to_json(const RealizationReport& r);

/// Json::parse wrapped into ParseError; the root must be an object.
Json parse_payload(const std::string& text);

/// Canonical two-space indented dump with a trailing newline, so identical
/// values always produce identical bytes.
std::string dump_payload(const Json& j);

}  // namespace curvrank::json_io
