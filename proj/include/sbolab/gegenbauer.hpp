#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbolab/rational.hpp"

namespace sbolab {

/// Dense univariate polynomial over Q, used for coefficient families that
/// stay symbolic in the Gegenbauer parameter.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const Rational& c);
  static UniPoly symbol();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int power) const;
  Rational eval(const Rational& x) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }

  UniPoly monic() const;
  /// Exact division; throws std::domain_error on a nonzero remainder.
  UniPoly divide_exact(const UniPoly& g) const;
  static UniPoly gcd(UniPoly a, UniPoly b);  // monic

  std::string str(const std::string& var = "mu") const;

 private:
  void trim();
  std::vector<Rational> c_;  // ascending powers
};

/// Coefficients a_i of C_k^mu(t) = sum_i a_i(mu) t^{k-2i}, kept as
/// polynomials in mu; numeric mode additionally pins a value of mu.
struct GegenbauerCoeffs {
  int k = 0;
  std::optional<Rational> mu;
  std::vector<UniPoly> coeffs;  // index i = 0..floor(k/2)

  bool symbolic() const { return !mu.has_value(); }
  bool is_zero_family() const;
  /// Numeric coefficients; requires numeric mode.
  std::vector<Rational> values() const;
  /// Numeric coefficients at an explicit mu.
  std::vector<Rational> values_at(const Rational& m) const;
};

/// Closed form a_i(mu) = (-1)^i 2^{k-2i} (mu)_{k-i} / (i! (k-2i)!), with
/// (mu)_m the rising factorial.
GegenbauerCoeffs gegenbauer(int k, const Rational& mu);
GegenbauerCoeffs gegenbauer_symbolic(int k);

/// Independent route via the three-term recurrence
/// k C_k = 2t(k+mu-1) C_{k-1} - (k+2mu-2) C_{k-2}.
std::vector<Rational> gegenbauer_recurrence(int k, const Rational& mu);

/// Divides a symbolic family by the monic gcd of its coefficients, so the
/// result is nonzero at every mu. Throws std::domain_error on the zero
/// family or std::invalid_argument in numeric mode.
GegenbauerCoeffs renormalize(const GegenbauerCoeffs& family);

}  // namespace sbolab
