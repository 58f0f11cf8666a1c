#pragma once

#include "sbolab/conventions.hpp"
#include "sbolab/gegenbauer.hpp"
#include "sbolab/sbo_operator.hpp"

namespace sbolab {

/// Scalar order-k operator sum_i a_i(mu) (-Laplacian')^i d_n^{k-2i} on
/// functions, composed with restriction; covariant for
/// lambda = mu + (n-1)/2, nu = lambda + k.
SboOperator juhl_operator(int k, const Rational& mu, int n);

/// The order-k family on i-forms: Rest o (D_{k-2}^{mu+1} d d* +
/// a D_{k-1}^mu d iota_n + b D_k^mu), with mu = lambda + i - (n-1)/2,
/// b = (lambda+k)/2, and a = 1 (k odd) or lambda + i - n/2 + k (k even).
/// Degenerate parameters yield the zero operator rather than an error.
SboOperator matrix_operator_ii(int n, int i, const Rational& lambda, int k,
                               int codiff_sign = conventions::codiff_sign);

/// Rest o d : E^i -> E^{i+1} at the pinned covariant parameters.
/// Outside 1 <= i <= n-2 throws unless force is set.
SboOperator rest_d_operator(int n, int i, bool force = false);

/// Rest o D_{-lambda}^{lambda-(n-1)/2} o d : E^0 -> E^1 for
/// lambda in {0,-1,-2,...}; throws outside that range unless force.
SboOperator d_juhl_operator(int n, const Rational& lambda, bool force = false);

enum class TransferSide { source, target };

/// Pre/post-composition with the Hodge star on R^n (source) or R^{n-1}
/// (target). Parameters transform as
///   source: (i, lambda, delta) -> (n-i,   lambda+2i-n,     ~delta)
///   target: (j, nu, eps)       -> (n-1-j, nu+2j-(n-1),     ~eps)
SboOperator hodge_transfer(const SboOperator& op, TransferSide side);

}  // namespace sbolab
