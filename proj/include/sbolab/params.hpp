#pragma once

#include <string>

#include "sbolab/conformal.hpp"
#include "sbolab/rational.hpp"

namespace sbolab {

/// A point in the classification space.
struct ParamTuple {
  int n = 3;
  int i = 0;
  int j = 0;
  Rational lambda;
  Rational nu;
  Parity delta = Parity::even;
  Parity eps = Parity::even;
};

inline bool valid_ranges(const ParamTuple& p) {
  return p.n >= 3 && 0 <= p.i && p.i <= p.n && 0 <= p.j && p.j <= p.n - 1;
}

inline std::string param_key(const ParamTuple& p) {
  return "n=" + std::to_string(p.n) + ";i=" + std::to_string(p.i) +
         ";j=" + std::to_string(p.j) + ";lam=" + p.lambda.str() +
         ";nu=" + p.nu.str() + ";delta=" + parity_char(p.delta) +
         ";eps=" + parity_char(p.eps);
}

}  // namespace sbolab
