#include "curvrank/json_io.hpp"

#include <set>
#include <string>
#include <utility>

#include "curvrank/error.hpp"

namespace curvrank::json_io {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) fail(Errc::ParseError, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) fail(Errc::ParseError, std::string("missing field '") + name + "'");
  return *it;
}

std::size_t size_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_unsigned())
    fail(Errc::ParseError, std::string("field '") + name + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

Rational rational_from(const Json& j) {
  if (!j.is_string()) fail(Errc::ParseError, "rationals must be \"n/d\" strings");
  return parse_rational(j.get<std::string>());
}

std::size_t index_from(const Json& j, std::size_t dim) {
  if (!j.is_number_unsigned()) fail(Errc::ParseError, "indices must be non-negative integers");
  std::size_t k = j.get<std::size_t>();
  if (k >= dim) fail(Errc::ParseError, "index out of range");
  return k;
}

void check_schema_version(const Json& j) {
  const Json& v = field(j, "schema_version");
  if (!v.is_number_integer() || v.get<long>() != kSchemaVersion)
    fail(Errc::ParseError, "unsupported schema_version");
}

std::string pair_key(std::size_t i, std::size_t j) {
  return std::to_string(i) + "," + std::to_string(j);
}

std::pair<std::size_t, std::size_t> parse_pair_key(const std::string& key, std::size_t dim) {
  auto comma = key.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == key.size())
    fail(Errc::ParseError, "block key must be \"i,j\"");
  const std::string parts[2] = {key.substr(0, comma), key.substr(comma + 1)};
  std::size_t idx[2];
  for (int s = 0; s < 2; ++s) {
    if (parts[s].empty() || parts[s].size() > 6) fail(Errc::ParseError, "block key must be \"i,j\"");
    std::size_t value = 0;
    for (char c : parts[s]) {
      if (c < '0' || c > '9') fail(Errc::ParseError, "block key must be \"i,j\"");
      value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    if (value >= dim) fail(Errc::ParseError, "block index out of range");
    idx[s] = value;
  }
  if (idx[0] >= idx[1]) fail(Errc::ParseError, "block keys need i < j");
  return {idx[0], idx[1]};
}

}  // namespace

Json space_to_json(const SignatureSpace& s) {
  Json j;
  j["p"] = s.p;
  j["q"] = s.q;
  if (!(s.gram == SignatureSpace::standard(s.p, s.q).gram)) j["gram"] = mat_to_json(s.gram);
  return j;
}

SignatureSpace space_from_json(const Json& j) {
  std::size_t p = size_field(j, "p");
  std::size_t q = size_field(j, "q");
  if (p + q == 0) fail(Errc::ParseError, "space must have positive dimension");
  if (j.contains("gram")) return SignatureSpace::with_gram(p, q, mat_from_json(j["gram"]));
  return SignatureSpace::standard(p, q);
}

Json vec_to_json(const Vec& v) {
  Json j = Json::array();
  for (const Rational& x : v) j.push_back(format_rational(x));
  return j;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail(Errc::ParseError, "vectors must be non-empty arrays");
  Vec v;
  v.reserve(j.size());
  for (const Json& x : j) v.push_back(rational_from(x));
  return v;
}

Json mat_to_json(const Mat& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(format_rational(m(i, k)));
    j.push_back(std::move(row));
  }
  return j;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail(Errc::ParseError, "matrices must be non-empty row arrays");
  std::size_t rows = j.size();
  const Json& head = j[0];
  if (!head.is_array() || head.empty()) fail(Errc::ParseError, "matrix rows must be non-empty arrays");
  std::size_t cols = head.size();
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != cols)
      fail(Errc::ParseError, "matrix rows must have equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from(row[k]);
  }
  return m;
}

Json linear_map_to_json(const LinearMap& m) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["domain"] = space_to_json(m.domain);
  j["codomain"] = space_to_json(m.codomain);
  j["matrix"] = mat_to_json(m.matrix);
  return j;
}

LinearMap linear_map_from_json(const Json& j) {
  check_schema_version(j);
  LinearMap m{space_from_json(field(j, "domain")), space_from_json(field(j, "codomain")),
              mat_from_json(field(j, "matrix"))};
  if (m.matrix.rows() != m.codomain.dim() || m.matrix.cols() != m.domain.dim())
    fail(Errc::ParseError, "matrix shape must be dim(codomain) x dim(domain)");
  return m;
}

Json skew_map_to_json(const BilinearSkewMap& t) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["domain"] = space_to_json(t.domain());
  j["codomain"] = space_to_json(t.codomain());
  Json blocks = Json::object();
  std::size_t m = t.domain().dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = i + 1; k < m; ++k) {
      Mat b = t.block(i, k);
      if (!is_zero(b)) blocks[pair_key(i, k)] = mat_to_json(b);
    }
  j["blocks"] = std::move(blocks);
  return j;
}

BilinearSkewMap skew_map_from_json(const Json& j) {
  check_schema_version(j);
  BilinearSkewMap t(space_from_json(field(j, "domain")), space_from_json(field(j, "codomain")));
  const Json& blocks = field(j, "blocks");
  if (!blocks.is_object()) fail(Errc::ParseError, "blocks must be an object keyed \"i,j\"");
  std::size_t n = t.codomain().dim();
  for (const auto& [key, value] : blocks.items()) {
    auto [i, k] = parse_pair_key(key, t.domain().dim());
    Mat b = mat_from_json(value);
    if (b.rows() != n || b.cols() != n)
      fail(Errc::ParseError, "block shape must be dim(codomain) squared");
    t.set_block(i, k, std::move(b));
  }
  return t;
}

Json tensor_to_json(const CurvatureTensor4& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["space"] = space_to_json(r.space());
  Json entries = Json::array();
  std::size_t n = r.space().dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m) {
          const Rational& x = r.at(i, k, l, m);
          if (sgn(x) != 0) entries.push_back(Json::array({i, k, l, m, format_rational(x)}));
        }
  j["entries"] = std::move(entries);
  return j;
}

CurvatureTensor4 tensor_from_json(const Json& j) {
  check_schema_version(j);
  CurvatureTensor4 r(space_from_json(field(j, "space")));
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) fail(Errc::ParseError, "entries must be an array");
  std::size_t n = r.space().dim();
  std::set<std::size_t> seen;
  for (const Json& e : entries) {
    if (!e.is_array() || e.size() != 5) fail(Errc::ParseError, "entries must be [i,j,k,l,value] rows");
    std::size_t idx[4];
    for (int s = 0; s < 4; ++s) idx[s] = index_from(e[s], n);
    std::size_t packed = ((idx[0] * n + idx[1]) * n + idx[2]) * n + idx[3];
    if (!seen.insert(packed).second) fail(Errc::ParseError, "duplicate tensor entry");
    r.at(idx[0], idx[1], idx[2], idx[3]) = rational_from(e[4]);
  }
  return r;
}

Json decomposition_to_json(const Decomposition& d, bool verified) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  if (const PhiForm* f = std::get_if<PhiForm>(&d)) {
    j["variant"] = "phi";
    j["epsilon"] = f->epsilon;
    j["mu"] = format_rational(f->mu);
    j["phi"] = linear_map_to_json(f->phi);
  } else {
    const ChiXiForm& cx = std::get<ChiXiForm>(d);
    j["variant"] = "chi_xi";
    Json chi;
    chi["domain"] = space_to_json(cx.chi.domain);
    chi["codomain"] = space_to_json(cx.chi.codomain);
    Json values = Json::object();
    for (const auto& [key, v] : cx.chi.values)
      values[pair_key(key.first, key.second)] = vec_to_json(v);
    chi["values"] = std::move(values);
    j["chi"] = std::move(chi);
    j["xi"] = vec_to_json(cx.xi);
  }
  j["verified"] = verified;
  return j;
}

Json realization_to_json(const RealizationReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["epsilon"] = r.epsilon;
  j["phi"] = linear_map_to_json(r.phi);
  j["origin_check"] = r.origin_exact ? "exact-equal" : "failed";
  Json samples = Json::array();
  for (const RankSample& s : r.rank_samples) {
    Json row;
    row["point"] = vec_to_json(s.point);
    row["rank"] = s.rank;
    samples.push_back(std::move(row));
  }
  j["rank_samples"] = std::move(samples);
  return j;
}

Json parse_payload(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::ParseError, "malformed JSON payload");
  if (!j.is_object()) fail(Errc::ParseError, "payload root must be an object");
  return j;
}

std::string dump_payload(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace curvrank::json_io
