#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "sbolab/multi_index.hpp"
#include "sbolab/poly.hpp"

namespace sbolab {

/// A Lambda^j-valued polynomial differential form on R^m: a finite map
/// from degree-j multi-indices to polynomial coefficient functions.
/// Zero components are never stored.
class PolyForm {
 public:
  PolyForm(int dim, int degree);

  static PolyForm basis(int dim, MultiIndex I);
  static PolyForm from_poly(const Poly& f);  // 0-form
  static PolyForm monomial(int dim, MultiIndex I, const Poly& f);

  int dim() const { return dim_; }
  int form_degree() const { return degree_; }
  bool is_zero() const { return comps_.empty(); }
  /// Max total polynomial degree among components; -1 for the zero form.
  int poly_degree() const;

  const std::map<std::uint32_t, Poly>& components() const { return comps_; }
  Poly component(MultiIndex I) const;
  void add_component(MultiIndex I, const Poly& f);

  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  PolyForm& operator*=(const Rational& c);
  PolyForm& operator*=(const Poly& f);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(const Rational& c, PolyForm a) { return a *= c; }
  friend PolyForm operator*(const Poly& f, PolyForm a) { return a *= f; }
  PolyForm operator-() const;

  friend bool operator==(const PolyForm& a, const PolyForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.comps_ == b.comps_;
  }
  friend bool operator!=(const PolyForm& a, const PolyForm& b) {
    return !(a == b);
  }

  /// Components printed as "coeff * x^alpha  dx_{I}", I ascending.
  std::string str() const;

 private:
  int dim_;
  int degree_;
  std::map<std::uint32_t, Poly> comps_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);
PolyForm interior(int axis, const PolyForm& a);
PolyForm hodge_star(const PolyForm& a, int orientation = 1);
/// Pullback along the reflection x_axis -> -x_axis.
PolyForm reflect_pullback(const PolyForm& a, int axis);

}  // namespace sbolab
