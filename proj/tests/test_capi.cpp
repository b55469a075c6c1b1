#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <functional>
#include <string>

#include "curvrank.h"

using Json = nlohmann::json;

namespace {

struct CallResult {
  int status = -1;
  std::string out;
  std::string error;

  Json json() const { return Json::parse(out); }
};

CallResult call(const std::function<int(crk_ctx*, char**)>& f) {
  crk_ctx* ctx = crk_ctx_new();
  REQUIRE(ctx != nullptr);
  char* out = nullptr;
  CallResult r;
  r.status = f(ctx, &out);
  if (out != nullptr) r.out = out;
  r.error = crk_last_error(ctx);
  crk_free_string(out);
  crk_ctx_free(ctx);
  return r;
}

std::string gen_phi_payload(size_t p, size_t q, uint64_t seed, const char* emit) {
  CallResult r = call([&](crk_ctx* ctx, char** out) {
    return crk_gen_phi(ctx, p, q, 0, seed, emit, out);
  });
  REQUIRE(r.status == CRK_OK);
  return r.out;
}

std::string fixture_payload(const char* name, size_t p, const char* emit) {
  CallResult r = call([&](crk_ctx* ctx, char** out) {
    return crk_fixture(ctx, name, p, emit, out);
  });
  REQUIRE(r.status == CRK_OK);
  return r.out;
}

}  // namespace

TEST_CASE("contexts report errors per call and recover") {
  crk_ctx* ctx = crk_ctx_new();
  REQUIRE(ctx != nullptr);
  CHECK(std::string(crk_last_error(ctx)).empty());

  char* out = nullptr;
  CHECK(crk_validate(ctx, "not json", &out) == CRK_INPUT_ERROR);
  CHECK(out == nullptr);
  CHECK(std::string(crk_last_error(ctx)).find("ParseError") != std::string::npos);

  CHECK(crk_gen_plane(ctx, 0, 4, 1, 3, &out) == CRK_OK);
  CHECK(out != nullptr);
  CHECK(std::string(crk_last_error(ctx)).empty());
  crk_free_string(out);
  crk_ctx_free(ctx);
}

TEST_CASE("generated endomorphisms classify through the boundary") {
  std::string payload = gen_phi_payload(1, 5, 7, "payload");
  Json j = Json::parse(payload);
  CHECK(j["schema_version"] == 1);
  CHECK(j["domain"]["p"] == 1);
  CHECK(j["domain"]["q"] == 5);
  CHECK(j["matrix"].size() == 6);

  CallResult c = call([&](crk_ctx* ctx, char** out) {
    return crk_classify(ctx, payload.c_str(), out);
  });
  REQUIRE(c.status == CRK_OK);
  Json cj = c.json();
  CHECK(cj["admissible"] == true);
  CHECK(cj["self_adjoint"] == true);
  CHECK(cj["ip"].is_object());
  CHECK(cj["ip"]["tag"].is_string());
  CHECK(!cj.contains("note"));
}

TEST_CASE("generated skew maps decompose through the boundary") {
  std::string skew = gen_phi_payload(1, 5, 7, "skew");
  CallResult d = call([&](crk_ctx* ctx, char** out) {
    return crk_decompose(ctx, skew.c_str(), 2026, out);
  });
  REQUIRE(d.status == CRK_OK);
  Json dj = d.json();
  CHECK(dj["variant"] == "phi");
  CHECK(dj["epsilon"] == 1);
  CHECK(dj["verified"] == true);

  CallResult again = call([&](crk_ctx* ctx, char** out) {
    return crk_decompose(ctx, skew.c_str(), 2026, out);
  });
  CHECK(again.out == d.out);
}

TEST_CASE("generated tensors validate and realize through the boundary") {
  std::string tensor = gen_phi_payload(0, 5, 3, "tensor");
  CallResult v = call([&](crk_ctx* ctx, char** out) {
    return crk_validate(ctx, tensor.c_str(), out);
  });
  REQUIRE(v.status == CRK_OK);
  CHECK(v.json()["all"] == true);

  CallResult r = call([&](crk_ctx* ctx, char** out) {
    return crk_realize(ctx, tensor.c_str(), 4, 9, out);
  });
  REQUIRE(r.status == CRK_OK);
  Json rj = r.json();
  CHECK(rj["epsilon"] == 1);
  CHECK(rj["origin_check"] == "exact-equal");
  REQUIRE(rj["rank_samples"].size() == 4);
  for (const Json& s : rj["rank_samples"]) CHECK(s["rank"] == 2);
}

TEST_CASE("catalog families emit payload, skew, and tensor forms") {
  Json skew = Json::parse(fixture_payload("8.1", 0, "payload"));
  CHECK(skew["domain"]["q"] == 4);
  CHECK(skew["blocks"].is_object());
  CHECK(!skew["blocks"].empty());

  Json tensor = Json::parse(fixture_payload("8.1", 1, "tensor"));
  CHECK(tensor["space"]["p"] == 1);
  CHECK(tensor["space"]["q"] == 4);

  std::string small = fixture_payload("8.1", 0, "payload");
  CallResult d = call([&](crk_ctx* ctx, char** out) {
    return crk_decompose(ctx, small.c_str(), 2026, out);
  });
  CHECK(d.status == CRK_INPUT_ERROR);
  CHECK(d.error.find("DomainTooSmall") != std::string::npos);

  std::string middle = fixture_payload("8.2", 4, "payload");
  CallResult c2 = call([&](crk_ctx* ctx, char** out) {
    return crk_classify(ctx, middle.c_str(), out);
  });
  REQUIRE(c2.status == CRK_OK);
  CHECK(c2.json()["ip"]["tag"] == "NotIP");

  std::string big = fixture_payload("8.3", 6, "payload");
  CallResult c3 = call([&](crk_ctx* ctx, char** out) {
    return crk_classify(ctx, big.c_str(), out);
  });
  REQUIRE(c3.status == CRK_OK);
  CHECK(c3.json()["ip"]["tag"] == "TotallyIsotropic");

  CallResult bad_name = call([&](crk_ctx* ctx, char** out) {
    return crk_fixture(ctx, "9.9", 0, "payload", out);
  });
  CHECK(bad_name.status == CRK_INPUT_ERROR);

  CallResult bad_emit = call([&](crk_ctx* ctx, char** out) {
    return crk_fixture(ctx, "8.1", 0, "blob", out);
  });
  CHECK(bad_emit.status == CRK_INPUT_ERROR);
}

TEST_CASE("plane verbs report operators and jordan classes") {
  std::string tensor = gen_phi_payload(1, 5, 11, "tensor");
  CallResult p = call([&](crk_ctx* ctx, char** out) {
    return crk_plane_op(ctx, tensor.c_str(), 5, 3, 0, 0, out);
  });
  REQUIRE(p.status == CRK_OK);
  Json pj = p.json();
  CHECK(pj["rank"] == 2);
  CHECK(pj["op"].size() == 6);
  CHECK(pj["plane"]["v1"].size() == 6);

  CallResult jd = call([&](crk_ctx* ctx, char** out) {
    return crk_jordan(ctx, tensor.c_str(), 5, 3, out);
  });
  REQUIRE(jd.status == CRK_OK);
  Json jj = jd.json();
  std::string tag = jj["tag"].get<std::string>();
  CHECK((tag == "Zero" || tag == "ImaginaryPair" || tag == "RealPair" || tag == "Nilpotent2" ||
         tag == "Nilpotent3"));
  CHECK(jj.contains("lambda_sq"));
  CHECK(jj["lambda_sq_meaning"].is_string());
}

TEST_CASE("timelike profiling samples non-spacelike planes only where they exist") {
  std::string spread = fixture_payload("8.3", 6, "tensor");
  CallResult t = call([&](crk_ctx* ctx, char** out) {
    return crk_plane_op(ctx, spread.c_str(), 3, 2, 1, 5, out);
  });
  REQUIRE(t.status == CRK_OK);
  Json tj = t.json();
  REQUIRE(tj["samples"].size() == 5);
  for (const Json& s : tj["samples"]) CHECK(s["rank"].is_number_unsigned());

  std::string definite = gen_phi_payload(0, 5, 3, "tensor");
  CallResult none = call([&](crk_ctx* ctx, char** out) {
    return crk_plane_op(ctx, definite.c_str(), 3, 2, 1, 5, out);
  });
  CHECK(none.status == CRK_SEARCH_FAILED);
  CHECK(none.error.find("Unsatisfiable") != std::string::npos);
}

TEST_CASE("ip-check reports exact class, sampling survey, and agreement") {
  std::string isotropic = fixture_payload("8.3", 6, "payload");
  CallResult r = call([&](crk_ctx* ctx, char** out) {
    return crk_ip_check(ctx, isotropic.c_str(), 40, 3, out);
  });
  REQUIRE(r.status == CRK_OK);
  Json j = r.json();
  CHECK(j["exact"]["tag"] == "TotallyIsotropic");
  CHECK(j["sampled"]["constant"] == true);
  CHECK(j["sampled"]["common"]["tag"] == "Nilpotent2");
  CHECK(j["sampled"]["witness"].is_null());
  CHECK(j["agree"] == true);

  std::string generic = gen_phi_payload(0, 5, 13, "payload");
  CallResult g = call([&](crk_ctx* ctx, char** out) {
    return crk_ip_check(ctx, generic.c_str(), 40, 3, out);
  });
  REQUIRE(g.status == CRK_OK);
  Json gj = g.json();
  bool constant = gj["sampled"]["constant"].get<bool>();
  CHECK(gj["sampled"]["common"].is_null() == !constant);
  CHECK(gj["sampled"]["witness"].is_null() == constant);
  CHECK(gj["agree"] == ((gj["exact"]["tag"] != "NotIP") == constant));

  std::string middle = fixture_payload("8.2", 4, "payload");
  CallResult m = call([&](crk_ctx* ctx, char** out) {
    return crk_ip_check(ctx, middle.c_str(), 50, 3, out);
  });
  REQUIRE(m.status == CRK_OK);
  Json mj = m.json();
  CHECK(mj["exact"]["tag"] == "NotIP");
  CHECK(mj["sampled"]["constant"] == true);
  CHECK(mj["agree"] == false);
}

TEST_CASE("gen-plane output is reproducible and structured") {
  CallResult a = call([&](crk_ctx* ctx, char** out) {
    return crk_gen_plane(ctx, 2, 6, 17, 3, out);
  });
  CallResult b = call([&](crk_ctx* ctx, char** out) {
    return crk_gen_plane(ctx, 2, 6, 17, 3, out);
  });
  REQUIRE(a.status == CRK_OK);
  CHECK(a.out == b.out);
  Json j = a.json();
  CHECK(j["space"]["p"] == 2);
  CHECK(j["plane"]["v1"].size() == 8);
  CHECK(j["gramdet"].is_string());
  CHECK(j["gramdet"].get<std::string>()[0] != '-');
}

TEST_CASE("argument errors surface as input errors") {
  char* out = nullptr;
  CHECK(crk_validate(nullptr, "{}", &out) == CRK_INPUT_ERROR);

  crk_ctx* ctx = crk_ctx_new();
  REQUIRE(ctx != nullptr);
  CHECK(crk_validate(ctx, "{}", nullptr) == CRK_INPUT_ERROR);
  CHECK(crk_validate(ctx, nullptr, &out) == CRK_INPUT_ERROR);
  CHECK(std::string(crk_last_error(ctx)).find("BadParams") != std::string::npos);
  crk_ctx_free(ctx);

  CallResult small_q = call([&](crk_ctx* c, char** o) { return crk_gen_phi(c, 0, 3, 0, 1, "payload", o); });
  CHECK(small_q.status == CRK_INPUT_ERROR);

  std::string tensor = gen_phi_payload(0, 5, 3, "tensor");
  CallResult zero_samples = call([&](crk_ctx* c, char** o) {
    return crk_realize(c, tensor.c_str(), 0, 1, o);
  });
  CHECK(zero_samples.status == CRK_INPUT_ERROR);

  CallResult zero_bound = call([&](crk_ctx* c, char** o) {
    return crk_plane_op(c, tensor.c_str(), 1, 0, 0, 0, o);
  });
  CHECK(zero_bound.status == CRK_INPUT_ERROR);
}

TEST_CASE("identity violations report as validation failures with output") {
  std::string broken = R"({
    "schema_version": 1,
    "space": {"p": 0, "q": 5},
    "entries": [[0, 1, 2, 3, "1"]]
  })";
  CallResult v = call([&](crk_ctx* ctx, char** out) {
    return crk_validate(ctx, broken.c_str(), out);
  });
  CHECK(v.status == CRK_INVALID);
  REQUIRE(!v.out.empty());
  CHECK(v.json()["all"] == false);

  CallResult r = call([&](crk_ctx* ctx, char** out) {
    return crk_realize(ctx, broken.c_str(), 2, 1, out);
  });
  CHECK(r.status == CRK_INVALID);
  CHECK(r.out.empty());
  CHECK(r.error.find("NotRankTwo") != std::string::npos);
}
