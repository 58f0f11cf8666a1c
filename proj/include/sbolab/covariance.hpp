#pragma once

#include <string>

#include "sbolab/conformal.hpp"
#include "sbolab/sbo_operator.hpp"

namespace sbolab {

/// T(action_X(g) alpha) - action_Y(g|_Y)(T alpha), a form on R^{n-1}.
/// Weights and parities are read off the operator signature.
PolyForm intertwining_residual(const SboOperator& T, const ConfGenerator& g,
                               const PolyForm& alpha);

/// True iff the residual against g vanishes identically, i.e. on every
/// polynomial form. Computed by cancelling the composed operators
/// term-by-term, which is equivalent to (and stronger than) evaluation
/// on all monomials up to the residual's order.
bool residual_identically_zero(const SboOperator& T, const ConfGenerator& g);

struct CovarianceReport {
  bool ok = true;
  long residuals_checked = 0;
  std::string offender;  // generator name on failure
  std::string detail;    // offending input, when produced by evaluation
};

/// Exhaustive evaluation check: residual of T against every subalgebra
/// generator and both reflections, on all monomial forms of polynomial
/// degree <= max_poly_degree.
CovarianceReport check_covariance(const SboOperator& T, int max_poly_degree);

/// Same condition established through the identically-zero route; fast.
CovarianceReport check_covariance_symbolic(const SboOperator& T);

}  // namespace sbolab
