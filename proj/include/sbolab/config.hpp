#pragma once

#include <string>
#include <vector>

#include "sbolab/conventions.hpp"
#include "sbolab/rational.hpp"

namespace sbolab {

std::vector<Rational> default_lambda_samples();

struct Config {
  int n_max = 5;
  int k_max = 4;
  std::vector<Rational> lambda_samples = default_lambda_samples();
  long ansatz_cap = 1300;
  std::string cache_dir;  // empty disables the cache
  int codiff_sign = conventions::codiff_sign;

  /// Throws std::invalid_argument when outside the supported ranges.
  void validate() const;
};

/// Reads SBOLAB_CACHE_DIR when set.
std::string cache_dir_from_env();

}  // namespace sbolab
