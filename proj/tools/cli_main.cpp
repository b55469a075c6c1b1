#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "curvrank.h"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream text;
  if (path.empty()) {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "error: IoError: cannot open '" << path << "'\n";
      std::exit(CRK_INPUT_ERROR);
    }
    text << in.rdbuf();
  }
  return text.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact constructor, classifier, decomposer, and realizer for curvature data whose "
      "skew-symmetric operator has constant rank 2 on spacelike planes.",
      "curvrank"};
  app.require_subcommand(1);
  app.footer(
      "Payloads are JSON (schema_version 1, rationals as \"n/d\" strings); verbs that consume a\n"
      "payload read the --json file, or stdin when --json is absent. Identical inputs and flags\n"
      "always produce identical output bytes.\n"
      "Exit codes: 0 ok, 2 validation failure, 3 input error, 4 search or degeneracy failure.");

  std::string json_path;
  std::string name;
  std::string emit = "payload";
  std::uint64_t seed = 2026;
  long bound = 3;
  std::size_t samples_profile = 8;
  std::size_t samples_ip = 200;
  std::size_t samples_realize = 8;
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t kernel_dim = 0;
  bool timelike = false;

  auto* v_validate = app.add_subcommand("validate", "Check the three curvature identities of a tensor payload.");
  v_validate->add_option("--json", json_path, "Tensor payload file (default: stdin).");

  auto* v_plane_op = app.add_subcommand(
      "plane-op", "Curvature operator of one seeded spacelike plane of a tensor payload.");
  v_plane_op->add_option("--json", json_path, "Tensor payload file (default: stdin).");
  v_plane_op->add_option("--seed", seed, "Plane sampling seed.")->capture_default_str();
  v_plane_op->add_option("--bound", bound, "Entry bound for sampled plane vectors.")->capture_default_str();
  v_plane_op->add_flag("--timelike", timelike,
                       "Profile operator ranks over sampled non-spacelike planes instead.");
  v_plane_op->add_option("--samples", samples_profile, "Plane count for --timelike profiling.")
      ->capture_default_str();

  auto* v_jordan = app.add_subcommand(
      "jordan",
      "Jordan class of one seeded spacelike plane operator; lambda_sq is the squared magnitude "
      "of the eigenvalue pair of the normalized operator.");
  v_jordan->add_option("--json", json_path, "Tensor payload file (default: stdin).");
  v_jordan->add_option("--seed", seed, "Plane sampling seed.")->capture_default_str();
  v_jordan->add_option("--bound", bound, "Entry bound for sampled plane vectors.")->capture_default_str();

  auto* v_classify = app.add_subcommand(
      "classify",
      "Admissibility, self-adjointness, and exact constant-type class of an endomorphism payload.");
  v_classify->add_option("--json", json_path, "Endomorphism payload file (default: stdin).");

  auto* v_ip_check = app.add_subcommand(
      "ip-check",
      "Exact constant-type class next to a sampled plane-type survey of the induced curvature; "
      "a sampled pass is probabilistic evidence, not a proof.");
  v_ip_check->add_option("--json", json_path, "Endomorphism payload file (default: stdin).");
  v_ip_check->add_option("--samples", samples_ip, "Spacelike planes to sample.")->capture_default_str();
  v_ip_check->add_option("--seed", seed, "Plane sampling seed.")->capture_default_str();

  auto* v_decompose = app.add_subcommand(
      "decompose",
      "Reconstruct the generator of a skew-map payload and verify it exactly before printing.");
  v_decompose->add_option("--json", json_path, "Skew-map payload file (default: stdin).");
  v_decompose->add_option("--seed", seed, "Probe sampling seed; the verified output does not depend on it.")
      ->capture_default_str();

  auto* v_realize = app.add_subcommand(
      "realize",
      "Factor a tensor payload as the curvature of a graph hypersurface and check the realized "
      "curvature at and near the origin.");
  v_realize->add_option("--json", json_path, "Tensor payload file (default: stdin).");
  v_realize->add_option("--samples", samples_realize, "Near-origin points to rank-check.")
      ->capture_default_str();
  v_realize->add_option("--seed", seed, "Point and plane sampling seed.")->capture_default_str();

  auto* v_fixture =
      app.add_subcommand("fixture", "Print a built-in catalog family at a chosen timelike dimension.");
  v_fixture->add_option("--name", name, "Catalog name: 8.1, 8.2, or 8.3.")->required();
  v_fixture->add_option("--p", p, "Timelike dimension of the base space.")->required();
  v_fixture->add_option("--emit", emit, "Payload form: payload, skew, or tensor.")
      ->capture_default_str()
      ->check(CLI::IsMember({"payload", "skew", "tensor"}));

  auto* v_gen_phi = app.add_subcommand(
      "gen-phi", "Print a seeded self-adjoint admissible endomorphism of the standard (p, q) space.");
  v_gen_phi->add_option("--p", p, "Timelike dimension.")->required();
  v_gen_phi->add_option("--q", q, "Spacelike dimension (at least 5).")->required();
  v_gen_phi->add_option("--kernel", kernel_dim, "Kernel dimension (at most p).")->capture_default_str();
  v_gen_phi->add_option("--seed", seed, "Generation seed.")->capture_default_str();
  v_gen_phi->add_option("--emit", emit, "Payload form: payload, skew, or tensor.")
      ->capture_default_str()
      ->check(CLI::IsMember({"payload", "skew", "tensor"}));

  auto* v_gen_plane = app.add_subcommand(
      "gen-plane", "Print a seeded integer-entry spacelike plane of the standard (p, q) space.");
  v_gen_plane->add_option("--p", p, "Timelike dimension.")->required();
  v_gen_plane->add_option("--q", q, "Spacelike dimension (at least 2).")->required();
  v_gen_plane->add_option("--seed", seed, "Sampling seed.")->capture_default_str();
  v_gen_plane->add_option("--bound", bound, "Entry bound for sampled plane vectors.")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : CRK_INPUT_ERROR;
  }

  crk_ctx* ctx = crk_ctx_new();
  if (ctx == nullptr) {
    std::cerr << "error: out of memory\n";
    return CRK_INPUT_ERROR;
  }

  char* out = nullptr;
  int status = CRK_INPUT_ERROR;
  if (*v_validate) {
    status = crk_validate(ctx, read_input(json_path).c_str(), &out);
  } else if (*v_plane_op) {
    status = crk_plane_op(ctx, read_input(json_path).c_str(), seed, bound, timelike ? 1 : 0,
                          samples_profile, &out);
  } else if (*v_jordan) {
    status = crk_jordan(ctx, read_input(json_path).c_str(), seed, bound, &out);
  } else if (*v_classify) {
    status = crk_classify(ctx, read_input(json_path).c_str(), &out);
  } else if (*v_ip_check) {
    status = crk_ip_check(ctx, read_input(json_path).c_str(), samples_ip, seed, &out);
  } else if (*v_decompose) {
    status = crk_decompose(ctx, read_input(json_path).c_str(), seed, &out);
  } else if (*v_realize) {
    status = crk_realize(ctx, read_input(json_path).c_str(), samples_realize, seed, &out);
  } else if (*v_fixture) {
    status = crk_fixture(ctx, name.c_str(), p, emit.c_str(), &out);
  } else if (*v_gen_phi) {
    status = crk_gen_phi(ctx, p, q, kernel_dim, seed, emit.c_str(), &out);
  } else if (*v_gen_plane) {
    status = crk_gen_plane(ctx, p, q, seed, bound, &out);
  }

  if (out != nullptr) {
    std::cout << out;
    crk_free_string(out);
  }
  if (status != CRK_OK) {
    const char* message = crk_last_error(ctx);
    if (*message != '\0') std::cerr << "error: " << message << "\n";
  }
  crk_ctx_free(ctx);
  return status;
}
