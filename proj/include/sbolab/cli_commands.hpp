#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "sbolab/cache.hpp"
#include "sbolab/config.hpp"
#include "sbolab/params.hpp"
#include "sbolab/sbo_operator.hpp"

namespace sbolab {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResourceCap = 3;

struct ConstructRequest {
  int n = 3;
  int i = 0;
  int j = 0;
  Rational lambda;
  int k = 0;
  bool renormalized = false;
  std::string format = "json";  // or "text"
};

/// Builds the operator family member for any admissible (i, j), reducing
/// the six non-canonical cases through Hodge-star transfers. Returns
/// nullopt with a message when the requested point carries no family.
std::optional<SboOperator> construct_operator(const ConstructRequest& req,
                                              std::string* error);

int cmd_classify(const ParamTuple& params, const std::string& format,
                 std::ostream& out, std::ostream& err);

int cmd_construct(const ConstructRequest& req, std::ostream& out,
                  std::ostream& err);

int cmd_verify(const SboOperator& op, int max_degree, std::ostream& out,
               std::ostream& err);

int cmd_solve_dim(const ParamTuple& params, const Config& cfg,
                  ResultCache& cache, const std::string& format,
                  std::ostream& out, std::ostream& err);

int cmd_sweep(int n, const Config& cfg, ResultCache& cache,
              const std::string& format, std::ostream& out, std::ostream& err);

int cmd_branching(int n, const std::string& format, std::ostream& out,
                  std::ostream& err);

}  // namespace sbolab
