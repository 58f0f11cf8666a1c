#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sbolab/conformal.hpp"
#include "sbolab/poly_form.hpp"

namespace sbolab {

/// One matrix entry of a restriction-composed constant-coefficient
/// differential operator: alpha |-> coeff * (d^deriv alpha_from)|_{x_n=0}
/// placed at dx_to.
struct SboTerm {
  MultiIndex from;  // on R^n
  MultiIndex to;    // on R^{n-1}; never contains axis n
  Exponents deriv;  // length n
  Rational coeff;
};

struct SboSignature {
  int n = 0;
  int i = 0;
  int j = 0;
  Rational lambda;
  Rational nu;
  Parity delta = Parity::even;
  Parity eps = Parity::even;
};

bool operator==(const SboSignature& a, const SboSignature& b);

/// Constant-coefficient differential symmetry breaking operator
/// E^i(R^n) -> E^j(R^{n-1}), stored post-composed with restriction to the
/// hyperplane (target multi-indices omit axis n). Terms are kept in a
/// canonical merged order, so equal operators have equal term lists.
class SboOperator {
 public:
  SboOperator() = default;
  SboOperator(SboSignature sig, std::vector<SboTerm> terms);

  const SboSignature& sig() const { return sig_; }
  const std::vector<SboTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Common derivative order |beta| of all terms, when homogeneous;
  /// nullopt for the zero operator or mixed orders.
  std::optional<int> homogeneous_order() const;

  PolyForm apply(const PolyForm& alpha) const;

  SboOperator& operator*=(const Rational& c);
  friend SboOperator operator*(const Rational& c, SboOperator t) {
    return t *= c;
  }
  /// Term-wise sum; signatures must agree on (n, i, j).
  SboOperator& operator+=(const SboOperator& o);

  friend bool operator==(const SboOperator& a, const SboOperator& b);

  std::string str() const;

 private:
  SboSignature sig_;
  std::vector<SboTerm> terms_;
};

nlohmann::ordered_json sbo_to_json(const SboOperator& op);
SboOperator sbo_from_json(const nlohmann::json& j);

}  // namespace sbolab
