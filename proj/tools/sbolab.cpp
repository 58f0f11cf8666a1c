#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "sbolab/cli_commands.hpp"

using namespace sbolab;

namespace {

Rational parse_rational(const std::string& s) {
  return Rational::from_string(s);
}

Parity parse_parity(const std::string& s) {
  if (s == "+" || s == "even") return Parity::even;
  if (s == "-" || s == "odd") return Parity::odd;
  throw CLI::ValidationError("parity must be one of +, -, even, odd");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sbolab: exact construction, verification and classification of "
      "conformally covariant operators on differential forms for the flat "
      "hyperplane model"};
  app.require_subcommand(1);

  Config cfg;
  std::string cache_dir = cache_dir_from_env();
  app.add_option("--cache-dir", cache_dir, "directory for the result cache");
  app.add_option("--ansatz-cap", cfg.ansatz_cap,
                 "skip solves whose ansatz exceeds this size");
  app.add_option("--kmax", cfg.k_max, "maximum derivative order in sweeps");

  std::string format = "json";
  app.add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text", "markdown"}));

  // classify
  auto* classify_cmd =
      app.add_subcommand("classify", "evaluate the existence conditions");
  classify_cmd->fallthrough();
  int cn = 4, ci = 0, cj = 0;
  std::string clam = "0", cnu = "0", cdelta = "+", ceps = "+";
  classify_cmd->add_option("--n", cn)->required();
  classify_cmd->add_option("--i", ci)->required();
  classify_cmd->add_option("--j", cj)->required();
  classify_cmd->add_option("--lambda", clam)->required();
  classify_cmd->add_option("--nu", cnu)->required();
  classify_cmd->add_option("--delta", cdelta);
  classify_cmd->add_option("--eps", ceps);

  // construct
  auto* construct_cmd =
      app.add_subcommand("construct", "build an operator family member");
  construct_cmd->fallthrough();
  ConstructRequest creq;
  std::string xlam = "0";
  std::string out_file;
  construct_cmd->add_option("--n", creq.n)->required();
  construct_cmd->add_option("--i", creq.i)->required();
  construct_cmd->add_option("--j", creq.j)->required();
  construct_cmd->add_option("--lambda", xlam)->required();
  construct_cmd->add_option("--k", creq.k)->required();
  construct_cmd->add_flag("--renormalized", creq.renormalized,
                          "emit the gcd-normalized coefficient family");
  construct_cmd->add_option("--out", out_file, "write JSON to a file");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "covariance check of a stored operator");
  verify_cmd->fallthrough();
  std::string op_file;
  int verify_degree = -1;
  verify_cmd->add_option("--file", op_file, "operator JSON file")->required();
  verify_cmd->add_option("--degree", verify_degree,
                         "test-form polynomial degree (default order + 3)");

  // solve-dim
  auto* solve_cmd = app.add_subcommand(
      "solve-dim", "exact dimension of the operator space at one point");
  solve_cmd->fallthrough();
  int sn = 4, si = 0, sj = 0;
  std::string slam = "0", snu = "0", sdelta = "+", seps = "+";
  solve_cmd->add_option("--n", sn)->required();
  solve_cmd->add_option("--i", si)->required();
  solve_cmd->add_option("--j", sj)->required();
  solve_cmd->add_option("--lambda", slam)->required();
  solve_cmd->add_option("--nu", snu)->required();
  solve_cmd->add_option("--delta", sdelta);
  solve_cmd->add_option("--eps", seps);

  // sweep
  auto* sweep_cmd =
      app.add_subcommand("sweep", "dimension table over the default grid");
  sweep_cmd->fallthrough();
  int wn = 4;
  sweep_cmd->add_option("--n", wn)->required();

  // branching
  auto* branching_cmd = app.add_subcommand(
      "branching", "allowed-pairs table for cohomological representations");
  branching_cmd->fallthrough();
  int bn = 4;
  branching_cmd->add_option("--n", bn)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    cfg.cache_dir = cache_dir;
    cfg.validate();
    ResultCache cache(cfg.cache_dir);

    if (classify_cmd->parsed()) {
      ParamTuple p{cn,
                   ci,
                   cj,
                   parse_rational(clam),
                   parse_rational(cnu),
                   parse_parity(cdelta),
                   parse_parity(ceps)};
      return cmd_classify(p, format, std::cout, std::cerr);
    }
    if (construct_cmd->parsed()) {
      creq.lambda = parse_rational(xlam);
      creq.format = format;
      if (!out_file.empty()) {
        std::ofstream out(out_file);
        if (!out.good()) {
          std::cerr << "construct: cannot open " << out_file << "\n";
          return kExitUsage;
        }
        return cmd_construct(creq, out, std::cerr);
      }
      return cmd_construct(creq, std::cout, std::cerr);
    }
    if (verify_cmd->parsed()) {
      std::ifstream in(op_file);
      if (!in.good()) {
        std::cerr << "verify: cannot open " << op_file << "\n";
        return kExitUsage;
      }
      SboOperator op = sbo_from_json(nlohmann::json::parse(in));
      int degree = verify_degree;
      if (degree < 0) degree = op.homogeneous_order().value_or(0) + 3;
      return cmd_verify(op, degree, std::cout, std::cerr);
    }
    if (solve_cmd->parsed()) {
      ParamTuple p{sn,
                   si,
                   sj,
                   parse_rational(slam),
                   parse_rational(snu),
                   parse_parity(sdelta),
                   parse_parity(seps)};
      return cmd_solve_dim(p, cfg, cache, format, std::cout, std::cerr);
    }
    if (sweep_cmd->parsed())
      return cmd_sweep(wn, cfg, cache, format, std::cout, std::cerr);
    if (branching_cmd->parsed())
      return cmd_branching(bn, format, std::cout, std::cerr);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}
