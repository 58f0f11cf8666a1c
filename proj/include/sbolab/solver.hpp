#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <vector>

#include "sbolab/params.hpp"
#include "sbolab/sbo_operator.hpp"

namespace sbolab {

/// One unknown of the ansatz: the operator atom
/// alpha |-> (d^beta alpha_from)|_{x_n=0} dx_to.
struct SboAtom {
  MultiIndex from;  // degree i on n axes
  MultiIndex to;    // degree j on n-1 axes
  Exponents beta;   // length n, |beta| = k
};

/// All homogeneous order-k atoms for given degrees. Translations force
/// constant coefficients and the dilation forces the order
/// k = (nu - lambda) + (j - i), so this finite space exhausts the
/// candidate differential operators.
struct AnsatzSpace {
  int n = 0, i = 0, j = 0, k = 0;
  std::vector<SboAtom> atoms;  // pinned order

  static AnsatzSpace build(int n, int i, int j, int k);
  long dimension() const { return static_cast<long>(atoms.size()); }
};

/// Sparse exact linear system over the ansatz atoms; a nullspace vector
/// is a covariant operator.
struct IntertwiningSystem {
  ParamTuple params;
  int k = 0;
  AnsatzSpace ansatz;
  // Rows with integer entries, gcd-normalized, deterministic order.
  std::vector<std::vector<std::pair<int, mpz_class>>> rows;
};

struct SolveOptions {
  long ansatz_cap = 4000;
  bool verify_basis = true;  // re-check basis vectors independently
};

struct SolveResult {
  ParamTuple params;
  int k = 0;
  bool short_circuit = false;  // order not in N; dimension 0 without solving
  bool skipped = false;        // ansatz cap hit
  long ansatz_dim = 0;
  int dimension = 0;
  std::vector<SboOperator> basis;  // deterministic, integer-normalized
  bool basis_verified = false;
};

/// Assembles rows for one parameter point: intertwining equations for the
/// rotation and special conformal generators on monomial test forms of
/// degree <= k+2, sampled translation/dilation rows (identically zero by
/// construction, asserted), and the two reflection parity rows.
IntertwiningSystem build_system(const ParamTuple& params);

/// Exact nullspace over Q by fraction-free sparse elimination with
/// deterministic pivoting; basis in reduced form with pinned column
/// order and integer-normalized entries.
SolveResult nullspace(const IntertwiningSystem& system);

/// Full pipeline with short-circuits and the resource cap.
SolveResult solve_sbo_dimension(const ParamTuple& params,
                                const SolveOptions& opts = {});

/// Shares row assembly across the four parity characters at fixed
/// (n, i, j, k, lambda); used by sweeps.
class SystemBuilder {
 public:
  SystemBuilder(int n, int i, int j, int k);
  const AnsatzSpace& ansatz() const { return ansatz_; }
  IntertwiningSystem build(const ParamTuple& params) const;

 private:
  struct Assembly;
  struct Instantiated;
  std::shared_ptr<const Assembly> assemble(const Rational& lambda,
                                           const Rational& nu) const;
  AnsatzSpace ansatz_;
  mutable std::shared_ptr<const Assembly> cached_;
  mutable std::string inst_key_;
  mutable std::shared_ptr<const Instantiated> inst_;
};

struct DimensionEntry {
  ParamTuple params;
  int k = 0;
  bool skipped = false;
  int dimension = 0;
  std::string basis_hash;  // empty when dim 0 or skipped
};

struct DimensionTable {
  int n = 0;
  int k_max = 0;
  std::vector<DimensionEntry> entries;
};

/// Complete sweep over i in [0,n], j in [0,n-1], k in [0,k_max], the
/// lambda samples and all four parity pairs, with nu = lambda + k - (j-i).
DimensionTable dimension_table(int n, int k_max,
                               const std::vector<Rational>& lambdas,
                               const SolveOptions& opts = {});

/// FNV-1a over the canonical JSON serialization; stable across runs.
std::string basis_hash(const std::vector<SboOperator>& basis);

}  // namespace sbolab
