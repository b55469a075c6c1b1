#include "curvrank.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <utility>
#include <variant>

#include "curvrank/classify.hpp"
#include "curvrank/fixtures.hpp"
#include "curvrank/generators.hpp"
#include "curvrank/json_io.hpp"
#include "curvrank/rng.hpp"

struct crk_ctx {
  std::string last_error;
};

namespace {

using namespace curvrank;
using json_io::Json;

int status_of(Errc c) {
  switch (c) {
    case Errc::NotRankTwo:
    case Errc::UnsupportedRank:
    case Errc::VerificationFailed:
      return CRK_INVALID;
    case Errc::DegenerateLine:
    case Errc::SpanningFamilyFailed:
    case Errc::SpanSolveFailed:
    case Errc::DegeneratePoint:
    case Errc::Unsatisfiable:
      return CRK_SEARCH_FAILED;
    default:
      return CRK_INPUT_ERROR;
  }
}

struct Outcome {
  int status = CRK_OK;
  Json payload;
  std::string message;
};

template <typename F>
int run(crk_ctx* ctx, char** out_json, F&& f) {
  if (ctx == nullptr) return CRK_INPUT_ERROR;
  if (out_json == nullptr) {
    ctx->last_error = "null output pointer";
    return CRK_INPUT_ERROR;
  }
  *out_json = nullptr;
  try {
    Outcome o = f();
    ctx->last_error = o.message;
    if (!o.payload.is_null()) {
      std::string text = json_io::dump_payload(o.payload);
      char* copy = static_cast<char*>(std::malloc(text.size() + 1));
      if (copy == nullptr) {
        ctx->last_error = "out of memory";
        return CRK_INPUT_ERROR;
      }
      std::memcpy(copy, text.c_str(), text.size() + 1);
      *out_json = copy;
    }
    return o.status;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return CRK_INPUT_ERROR;
  }
}

std::string require_text(const char* s) {
  if (s == nullptr) fail(Errc::BadParams, "null input string");
  return s;
}

Json plane_json(const Vec& v1, const Vec& v2) {
  Json j;
  j["v1"] = json_io::vec_to_json(v1);
  j["v2"] = json_io::vec_to_json(v2);
  return j;
}

Json optional_rational_json(const std::optional<Rational>& r) {
  return r ? Json(format_rational(*r)) : Json(nullptr);
}

Json jordan_json(const JordanType& t) {
  Json j;
  j["tag"] = jordan_tag_name(t.tag);
  j["lambda_sq"] = optional_rational_json(t.lambda_sq);
  return j;
}

Json ip_sample_json(const IpSample& s) {
  Json j;
  j["plane"] = plane_json(s.plane.v1, s.plane.v2);
  j["tag"] = jordan_tag_name(s.type.tag);
  j["lambda_sq"] = optional_rational_json(s.type.lambda_sq);
  return j;
}

const LinearMap& require_endo(const LinearMap& phi) {
  if (!(phi.domain == phi.codomain))
    fail(Errc::AmbientMismatch, "classification needs an endomorphism of one space");
  return phi;
}

Json emit_map_payload(const LinearMap& phi, const std::string& mode) {
  if (mode == "payload") return json_io::linear_map_to_json(phi);
  if (mode == "skew") return json_io::skew_map_to_json(make_T_phi(phi));
  if (mode == "tensor") return json_io::tensor_to_json(make_R_phi(phi));
  fail(Errc::BadParams, "emit must be payload, skew, or tensor");
}

Json timelike_rank_profile(const CurvatureTensor4& r, std::uint64_t seed, long bound,
                           std::size_t samples) {
  const SignatureSpace& s = r.space();
  std::size_t n = s.dim();
  Rng rng(seed, 0x71AE);
  Json rows = Json::array();
  std::size_t found = 0;
  std::size_t budget = samples * 400 + 400;
  while (found < samples && budget-- > 0) {
    Vec v1(n), v2(n);
    for (Rational& x : v1) x = rat(rng.int_in(-bound, bound));
    for (Rational& x : v2) x = rat(rng.int_in(-bound, bound));
    Rational d = gram_det2(s, v1, v2);
    if (sgn(d) == 0 || is_spacelike_plane(s, v1, v2)) continue;
    PlaneOperator po = plane_operator_indefinite(r, v1, v2);
    Json row;
    row["plane"] = plane_json(v1, v2);
    row["gramdet"] = format_rational(d);
    row["rank"] = rank(po.op);
    rows.push_back(std::move(row));
    ++found;
  }
  if (found < samples)
    fail(Errc::Unsatisfiable, "found no further non-spacelike non-degenerate planes");
  Json j;
  j["schema_version"] = json_io::kSchemaVersion;
  j["samples"] = std::move(rows);
  return j;
}

}  // namespace

extern "C" {

crk_ctx* crk_ctx_new(void) { return new (std::nothrow) crk_ctx(); }

void crk_ctx_free(crk_ctx* ctx) { delete ctx; }

const char* crk_last_error(const crk_ctx* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

void crk_free_string(char* s) { std::free(s); }

int crk_validate(crk_ctx* ctx, const char* tensor_json, char** out_json) {
  return run(ctx, out_json, [&]() -> Outcome {
    CurvatureTensor4 r =
        json_io::tensor_from_json(json_io::parse_payload(require_text(tensor_json)));
    SymmetryReport rep = validate_symmetries(r);
    Json j;
    j["schema_version"] = json_io::kSchemaVersion;
    j["antisymmetry"] = rep.antisymmetry_ok;
    j["pair_symmetry"] = rep.pair_symmetry_ok;
    j["bianchi"] = rep.bianchi_ok;
    j["all"] = rep.all();
    if (!rep.all()) return {CRK_INVALID, std::move(j), "a curvature identity failed"};
    return {CRK_OK, std::move(j), ""};
  });
}

int crk_plane_op(crk_ctx* ctx, const char* tensor_json, uint64_t seed, long bound, int timelike,
                 size_t samples, char** out_json) {
  return run(ctx, out_json, [&]() -> Outcome {
    if (bound < 1) fail(Errc::BadParams, "bound must be positive");
    CurvatureTensor4 r =
        json_io::tensor_from_json(json_io::parse_payload(require_text(tensor_json)));
    if (timelike != 0) {
      if (samples == 0) fail(Errc::BadParams, "samples must be positive");
      return {CRK_OK, timelike_rank_profile(r, seed, bound, samples), ""};
    }
    auto [v1, v2] = gen::random_spacelike_plane(r.space(), seed, bound);
    PlaneOperator po = plane_operator(r, v1, v2);
    Json j;
    j["schema_version"] = json_io::kSchemaVersion;
    j["plane"] = plane_json(v1, v2);
    j["gramdet"] = format_rational(po.gramdet);
    j["op"] = json_io::mat_to_json(po.op);
    j["rank"] = rank(po.op);
    return {CRK_OK, std::move(j), ""};
  });
}

int crk_jordan(crk_ctx* ctx, const char* tensor_json, uint64_t seed, long bound, char** out_json) {
  return run(ctx, out_json, [&]() -> Outcome {
    if (bound < 1) fail(Errc::BadParams, "bound must be positive");
    CurvatureTensor4 r =
        json_io::tensor_from_json(json_io::parse_payload(require_text(tensor_json)));
    auto [v1, v2] = gen::random_spacelike_plane(r.space(), seed, bound);
    PlaneOperator po = plane_operator(r, v1, v2);
    JordanType jt = jordan_type(po);
    Json j;
    j["schema_version"] = json_io::kSchemaVersion;
    j["plane"] = plane_json(v1, v2);
    j["gramdet"] = format_rational(po.gramdet);
    j["tag"] = jordan_tag_name(jt.tag);
    j["lambda_sq"] = optional_rational_json(jt.lambda_sq);
    j["lambda_sq_meaning"] = "squared magnitude of the eigenvalue pair of the normalized operator";
    return {CRK_OK, std::move(j), ""};
  });
}

int crk_classify(crk_ctx* ctx, const char* map_json, char** out_json) {
  return run(ctx, out_json, [&]() -> Outcome {
    LinearMap phi = json_io::linear_map_from_json(json_io::parse_payload(require_text(map_json)));
    require_endo(phi);
    bool self_adjoint = is_self_adjoint(phi);
    bool admissible = is_admissible_phi(phi);
    Json j;
    j["schema_version"] = json_io::kSchemaVersion;
    j["admissible"] = admissible;
    j["self_adjoint"] = self_adjoint;
    if (self_adjoint && admissible) {
      IpVerdict v = ip_class(phi);
      Json ip;
      ip["tag"] = ip_tag_name(v.tag);
      ip["C"] = optional_rational_json(v.C);
      j["ip"] = std::move(ip);
    } else {
      j["ip"] = nullptr;
    }
    if (phi.domain.q < 5) j["note"] = "constant-type classification is only guaranteed for q >= 5";
    return {CRK_OK, std::move(j), ""};
  });
}

int crk_ip_check(crk_ctx* ctx, const char* map_json, size_t samples, uint64_t seed,
                 char** out_json) {
  return run(ctx, out_json, [&]() -> Outcome {
    if (samples == 0) fail(Errc::BadParams, "samples must be positive");
    LinearMap phi = json_io::linear_map_from_json(json_io::parse_payload(require_text(map_json)));
    require_endo(phi);
    IpVerdict exact = ip_class(phi);
    IpSamplingVerdict sampled = is_ip_by_sampling(make_R_phi(phi), samples, seed);
    Json j;
    j["schema_version"] = json_io::kSchemaVersion;
    Json ex;
    ex["tag"] = ip_tag_name(exact.tag);
    ex["C"] = optional_rational_json(exact.C);
    j["exact"] = std::move(ex);
    Json sm;
    sm["constant"] = sampled.constant;
    sm["common"] = sampled.constant ? jordan_json(sampled.common) : Json(nullptr);
    if (sampled.witness) {
      Json w;
      w["first"] = ip_sample_json(sampled.witness->first);
      w["second"] = ip_sample_json(sampled.witness->second);
      sm["witness"] = std::move(w);
    } else {
      sm["witness"] = nullptr;
    }
    j["sampled"] = std::move(sm);
    j["agree"] = (exact.tag != IpTag::NotIP) == sampled.constant;
    return {CRK_OK, std::move(j), ""};
  });
}

int crk_decompose(crk_ctx* ctx, const char* skew_json, uint64_t seed, char** out_json) {
  return run(ctx, out_json, [&]() -> Outcome {
    BilinearSkewMap t =
        json_io::skew_map_from_json(json_io::parse_payload(require_text(skew_json)));
    Decomposition d = decompose(t, seed);
    bool verified = verify_decomposition(t, d);
    Json j = json_io::decomposition_to_json(d, verified);
    if (!verified)
      return {CRK_INVALID, std::move(j), "reconstructed generator failed verification"};
    return {CRK_OK, std::move(j), ""};
  });
}

int crk_realize(crk_ctx* ctx, const char* tensor_json, size_t point_samples, uint64_t seed,
                char** out_json) {
  return run(ctx, out_json, [&]() -> Outcome {
    if (point_samples == 0) fail(Errc::BadParams, "samples must be positive");
    CurvatureTensor4 r =
        json_io::tensor_from_json(json_io::parse_payload(require_text(tensor_json)));
    RealizationReport rep = verify_realization(r, point_samples, seed);
    if (!rep.ok)
      return {CRK_INVALID, Json(), "realized curvature failed its origin or rank checks"};
    return {CRK_OK, json_io::realization_to_json(rep), ""};
  });
}

int crk_fixture(crk_ctx* ctx, const char* name, size_t p, const char* emit, char** out_json) {
  return run(ctx, out_json, [&]() -> Outcome {
    Fixture f = fixture(require_text(name), p);
    std::string mode = emit ? emit : "payload";
    Json j;
    if (const BilinearSkewMap* t = std::get_if<BilinearSkewMap>(&f.payload)) {
      if (mode == "payload" || mode == "skew")
        j = json_io::skew_map_to_json(*t);
      else if (mode == "tensor")
        j = json_io::tensor_to_json(tensor_from_skew_map(*t));
      else
        fail(Errc::BadParams, "emit must be payload, skew, or tensor");
    } else {
      j = emit_map_payload(std::get<LinearMap>(f.payload), mode);
    }
    return {CRK_OK, std::move(j), ""};
  });
}

int crk_gen_phi(crk_ctx* ctx, size_t p, size_t q, size_t kernel_dim, uint64_t seed,
                const char* emit, char** out_json) {
  return run(ctx, out_json, [&]() -> Outcome {
    LinearMap phi = gen::random_admissible_phi(p, q, kernel_dim, seed);
    return {CRK_OK, emit_map_payload(phi, emit ? emit : "payload"), ""};
  });
}

int crk_gen_plane(crk_ctx* ctx, size_t p, size_t q, uint64_t seed, long bound, char** out_json) {
  return run(ctx, out_json, [&]() -> Outcome {
    if (p + q == 0) fail(Errc::BadParams, "space must have positive dimension");
    if (bound < 1) fail(Errc::BadParams, "bound must be positive");
    SignatureSpace s = SignatureSpace::standard(p, q);
    auto [v1, v2] = gen::random_spacelike_plane(s, seed, bound);
    Json j;
    j["schema_version"] = json_io::kSchemaVersion;
    j["space"] = json_io::space_to_json(s);
    j["plane"] = plane_json(v1, v2);
    j["gramdet"] = format_rational(gram_det2(s, v1, v2));
    return {CRK_OK, std::move(j), ""};
  });
}

}  // extern "C"
