#pragma once

#include <map>
#include <string>
#include <vector>

#include "sbolab/rational.hpp"

namespace sbolab {

/// Exponent multi-index of a monomial x_1^{e_1} ... x_m^{e_m}.
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

/// Sparse multivariate polynomial over Q in variables x_1..x_m.
/// Zero coefficients are never stored; two polynomials are equal iff
/// their term maps are equal.
class Poly {
 public:
  explicit Poly(int vars) : vars_(vars) {}

  static Poly constant(int vars, const Rational& c);
  static Poly variable(int vars, int axis);
  static Poly monomial(int vars, const Exponents& e, const Rational& c);

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  Rational coeff(const Exponents& e) const;
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative(int axis) const;
  /// x_axis := 0.
  Poly substitute_zero(int axis) const;
  /// x_axis := -x_axis.
  Poly negate_axis(int axis) const;
  /// Reinterprets in vars-1 variables; requires no dependence on x_vars.
  Poly drop_last_var() const;
  /// Embeds into vars+1 variables (independent of the new last one).
  Poly lift_var() const;

  std::string str() const;

 private:
  int vars_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace sbolab
