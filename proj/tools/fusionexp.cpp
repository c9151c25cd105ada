// fusionexp: parameter generation, evaluation, lambda dumps, fusion
// discrete logs and protocol demos. Machine output (JSON) goes to stdout,
// diagnostics to stderr.
//
// Exit codes: 0 ok, 1 computational failure, 2 I/O, 64 usage, 65 bad input.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "fusion_exp/dlp.hpp"
#include "fusion_exp/protocols.hpp"
#include "fusion_exp/reductions.hpp"
#include "fusion_exp/serialize.hpp"
#include "fusion_exp/symbolic.hpp"

namespace {

using fexp::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitIo = 2;
constexpr int kExitUsage = 64;
constexpr int kExitFormat = 65;

// BSGS and rho stay usable well beyond the bruteforce cap, but BSGS memory
// grows with sqrt(q).
const fexp::Int kFdlogSolverCap = fexp::Int(1) << 48;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const Json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

/// Inline JSON, or @path to read it from a file.
Json json_argument(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return fexp::parse_json(read_file(arg.substr(1)));
  return fexp::parse_json(arg);
}

fexp::SystemConfig default_config() {
  return fexp::make_system_config(fexp::make_group_params(23, 11, 2),
                                  fexp::make_field_params(11, 2, {1, 0}));
}

fexp::SystemConfig load_config(const std::string& path) {
  if (path.empty()) return default_config();
  return fexp::system_config_from_json(fexp::parse_json(read_file(path)));
}

// --- params ----------------------------------------------------------------

int cmd_params(unsigned q_bits, std::size_t n, std::uint64_t seed,
               const std::string& out) {
  auto group = fexp::gen_group_params(q_bits, seed);
  const fexp::Int& q = group->q();
  std::vector<fexp::Int> f;
  if (n == 2 && fexp::mod(q, 4) == 3) {
    f = {1, 0};
  } else {
    f = fexp::find_irreducible(q, n, seed);
  }
  auto field = fexp::make_field_params(q, n, std::move(f));
  write_output(fexp::to_json(fexp::make_system_config(group, field)), out);
  return kExitOk;
}

// --- vectors ---------------------------------------------------------------

int cmd_vectors(const std::vector<std::size_t>& n_list, const std::string& out) {
  Json vectors = Json::array();
  for (std::size_t n : n_list) {
    const auto field = fexp::reference_field(n);
    const auto lambda = fexp::symbolic_lambda(field);
    Json rows = Json::array();
    for (const auto& row : lambda) {
      Json r = Json::array();
      for (const auto& form : row) r.push_back(fexp::format_linear_form(form));
      rows.push_back(r);
    }
    const Json params = fexp::to_json(*field);
    vectors.push_back(Json{{"n", n},
                           {"q", params["q"]},
                           {"f", params["f"]},
                           {"lambda", rows}});
  }
  write_output(Json{{"vectors", vectors}}, out);
  return kExitOk;
}

// --- eval / fdlog ----------------------------------------------------------

int cmd_eval(const std::string& config_path, const std::string& base_arg,
             const std::string& exp_arg) {
  const auto config = load_config(config_path);
  const auto base = fexp::fusion_base_from_json(json_argument(base_arg), config);
  const auto exp =
      fexp::field_element_from_json(json_argument(exp_arg), config.field);
  write_output(fexp::to_json(fexp::fusion_pow(base, exp)), "");
  return kExitOk;
}

int cmd_fdlog(const std::string& config_path, const std::string& base_arg,
              const std::string& target_arg, const std::string& solver,
              std::uint64_t seed) {
  const auto config = load_config(config_path);
  const auto base = fexp::fusion_base_from_json(json_argument(base_arg), config);
  const auto target =
      fexp::fusion_base_from_json(json_argument(target_arg), config);

  if (solver == "exhaustive") {
    write_output(fexp::to_json(fexp::fdlog_bruteforce(base, target)), "");
    return kExitOk;
  }
  fexp::DlogOracle dlog;
  if (solver == "bruteforce") {
    dlog = fexp::make_bruteforce_dlog_oracle();
  } else {
    if (config.group->q() > kFdlogSolverCap) {
      throw fexp::Error(fexp::ErrorCode::kCapExceeded,
                        "q exceeds the desk-scale solver cap 2^48");
    }
    dlog = solver == "bsgs" ? fexp::make_bsgs_dlog_oracle()
                            : fexp::make_rho_dlog_oracle(seed);
  }
  write_output(fexp::to_json(fexp::fdlog_solve(base, target, dlog)), "");
  return kExitOk;
}

// --- demo ------------------------------------------------------------------

bool demo_dh(const fexp::SystemConfig& config, fexp::Rng& rng, Json& out) {
  const auto base = fexp::unit_embed(fexp::GroupElement::generator(config.group),
                                     config.field);
  const auto alice = fexp::fdh_keygen(base, rng);
  const auto bob = fexp::fdh_keygen(base, rng);
  const auto alice_shared = fexp::fdh_shared(alice, bob.public_key);
  const auto bob_shared = fexp::fdh_shared(bob, alice.public_key);
  const bool agree = alice_shared == bob_shared;
  out["base"] = fexp::to_json(base);
  out["alice"] = {{"secret", fexp::to_json(alice.secret)},
                  {"public", fexp::to_json(alice.public_key)}};
  out["bob"] = {{"secret", fexp::to_json(bob.secret)},
                {"public", fexp::to_json(bob.public_key)}};
  out["alice_shared"] = fexp::to_json(alice_shared);
  out["bob_shared"] = fexp::to_json(bob_shared);
  out["shared values equal"] = agree;
  return agree;
}

bool demo_elgamal(const fexp::SystemConfig& config, fexp::Rng& rng, Json& out) {
  const auto base = fexp::unit_embed(fexp::GroupElement::generator(config.group),
                                     config.field);
  const auto keys = fexp::felgamal_keygen(base, rng);
  const auto msg = fexp::FusionBase::random(config.group, config.field, rng);
  const auto ct = fexp::felgamal_encrypt(base, keys.public_key, msg, rng);
  const auto recovered = fexp::felgamal_decrypt(keys.secret, ct);
  const bool ok = recovered == msg;
  out["base"] = fexp::to_json(base);
  out["secret"] = fexp::to_json(keys.secret);
  out["public"] = fexp::to_json(keys.public_key);
  out["message"] = fexp::to_json(msg);
  out["ciphertext"] = fexp::to_json(ct);
  out["decrypted"] = fexp::to_json(recovered);
  out["decrypted == message"] = ok;
  return ok;
}

bool demo_vss(const fexp::SystemConfig& config, fexp::Rng& rng, Json& out) {
  const auto base = fexp::unit_embed(fexp::GroupElement::generator(config.group),
                                     config.field);
  const fexp::Int order_minus_one = config.field->order() - 1;
  const std::size_t m =
      order_minus_one < 5 ? order_minus_one.get_ui() : std::size_t{5};
  const std::size_t t = std::min<std::size_t>(3, m);
  const auto secret = fexp::FieldElement::random(config.field, rng);
  auto dealing = fexp::vss_deal(secret, t, m, base, rng);

  bool ok = true;
  Json verified = Json::array();
  for (std::size_t j = 1; j <= m; ++j) {
    const bool v = fexp::vss_verify(dealing, j);
    verified.push_back(v);
    ok = ok && v;
  }

  // Corrupt one share and make sure exactly that index is flagged.
  auto corrupted = dealing;
  corrupted.shares[0].value =
      corrupted.shares[0].value + fexp::FieldElement::one(config.field);
  bool detected = !fexp::vss_verify(corrupted, 1);
  for (std::size_t j = 2; j <= m; ++j) {
    detected = detected && fexp::vss_verify(corrupted, j);
  }
  ok = ok && detected;

  const std::span<const fexp::VssShare> first(dealing.shares.data(), t);
  const auto reconstructed = fexp::vss_reconstruct_verified(dealing, first);
  const bool match = reconstructed == secret;
  ok = ok && match;

  out["secret"] = fexp::to_json(secret);
  out["dealing"] = fexp::to_json(dealing);
  out["verified"] = verified;
  out["corruption of share 1 detected"] = detected;
  out["reconstructed"] = fexp::to_json(reconstructed);
  out["reconstructed == secret"] = match;
  return ok;
}

bool demo_reductions(const fexp::SystemConfig& config, std::uint64_t trials,
                     std::uint64_t seed, Json& out) {
  const auto report =
      fexp::run_reduction_matrix(config.group, config.field, trials, seed);
  out["report"] = fexp::to_json(report);
  out["all arrows succeeded"] = report.all_succeeded();
  return report.all_succeeded();
}

int cmd_demo(const std::string& which, const std::string& config_path,
             std::uint64_t seed, std::uint64_t trials) {
  const auto config = load_config(config_path);
  fexp::Rng rng(seed);
  Json out{{"demo", which}, {"seed", seed}, {"config", fexp::to_json(config)}};
  bool ok = false;
  if (which == "dh") {
    ok = demo_dh(config, rng, out);
  } else if (which == "elgamal") {
    ok = demo_elgamal(config, rng, out);
  } else if (which == "vss") {
    ok = demo_vss(config, rng, out);
  } else {
    ok = demo_reductions(config, trials, seed, out);
  }
  write_output(out, "");
  if (!ok) std::cerr << "demo " << which << ": a check failed\n";
  return ok ? kExitOk : kExitFailure;
}

int exit_code_for(const fexp::Error& e) {
  switch (e.code()) {
    case fexp::ErrorCode::kFormat:
      return kExitFormat;
    case fexp::ErrorCode::kUnsupportedN:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion exponentiation toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "RNG seed")->envname("FUSION_EXP_SEED");
  };

  unsigned q_bits = 0;
  std::size_t n = 0;
  std::string out_path;
  auto* params = app.add_subcommand("params", "Generate a system configuration");
  params->add_option("--q-bits", q_bits, "Bit length of q")
      ->required()
      ->check(CLI::Range(4u, 4096u));
  params->add_option("--n", n, "Extension degree")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  params->add_option("--out", out_path, "Output file (default stdout)");
  add_seed(params);

  std::vector<std::size_t> n_list{1, 2, 3, 4, 5};
  auto* vectors = app.add_subcommand("vectors", "Dump symbolic lambda matrices");
  vectors->add_option("--n", n_list, "Degrees to dump (1..5)");
  vectors->add_option("--out", out_path, "Output file (default stdout)");

  std::string config_path, base_arg, exp_arg, target_arg, solver = "bsgs";
  auto* eval = app.add_subcommand("eval", "Evaluate base^exp");
  eval->add_option("--config", config_path, "System config JSON file");
  eval->add_option("--base", base_arg, "Fusion base JSON (or @file)")->required();
  eval->add_option("--exp", exp_arg, "Field element JSON (or @file)")->required();

  auto* fdlog = app.add_subcommand("fdlog", "Solve base^x = target");
  fdlog->add_option("--config", config_path, "System config JSON file");
  fdlog->add_option("--base", base_arg, "Fusion base JSON (or @file)")->required();
  fdlog->add_option("--target", target_arg, "Target JSON (or @file)")->required();
  fdlog->add_option("--solver", solver, "Group dlog solver")
      ->check(CLI::IsMember({"bruteforce", "bsgs", "rho", "exhaustive"}));
  add_seed(fdlog);

  std::string which;
  std::uint64_t trials = 100;
  auto* demo = app.add_subcommand("demo", "Run a protocol demo");
  demo->add_option("which", which, "dh | elgamal | vss | reductions")
      ->required()
      ->check(CLI::IsMember({"dh", "elgamal", "vss", "reductions"}));
  demo->add_option("--config", config_path, "System config JSON file");
  demo->add_option("--trials", trials, "Trials per arrow (reductions)");
  add_seed(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*params) return cmd_params(q_bits, n, seed, out_path);
    if (*vectors) return cmd_vectors(n_list, out_path);
    if (*eval) return cmd_eval(config_path, base_arg, exp_arg);
    if (*fdlog) return cmd_fdlog(config_path, base_arg, target_arg, solver, seed);
    if (*demo) return cmd_demo(which, config_path, seed, trials);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const fexp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitUsage;
}
