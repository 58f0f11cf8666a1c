#include "sbolab/config.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sbolab {

std::vector<Rational> default_lambda_samples() {
  return {Rational(1, 3), Rational(2, 5), Rational(7, 2),
          Rational(-2),   Rational(-1),   Rational(0),
          Rational(1),    Rational(2),    Rational(3)};
}

void Config::validate() const {
  if (n_max < 3) throw std::invalid_argument("config: n_max must be >= 3");
  if (k_max < 0) throw std::invalid_argument("config: k_max must be >= 0");
  if (ansatz_cap <= 0)
    throw std::invalid_argument("config: ansatz cap must be positive");
  if (codiff_sign != 1 && codiff_sign != -1)
    throw std::invalid_argument("config: codifferential sign must be +-1");
  if (lambda_samples.empty())
    throw std::invalid_argument("config: empty lambda sample list");
}

std::string cache_dir_from_env() {
  const char* v = std::getenv("SBOLAB_CACHE_DIR");
  return v ? std::string(v) : std::string();
}

}  // namespace sbolab
