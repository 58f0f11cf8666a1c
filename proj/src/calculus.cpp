#include "sbolab/calculus.hpp"

#include <stdexcept>

namespace sbolab {

Poly apply_field(const PolyVectorField& Z, const Poly& f) {
  if (Z.dim != f.vars()) throw std::invalid_argument("ambient mismatch");
  Poly out(f.vars());
  for (int a = 1; a <= Z.dim; ++a) {
    if (Z.comps[a - 1].is_zero()) continue;
    out += Z.comps[a - 1] * f.derivative(a);
  }
  return out;
}

PolyVectorField commutator(const PolyVectorField& Z,
                           const PolyVectorField& W) {
  if (Z.dim != W.dim) throw std::invalid_argument("ambient mismatch");
  PolyVectorField out = PolyVectorField::zero(Z.dim);
  for (int c = 1; c <= Z.dim; ++c)
    out.comps[c - 1] =
        apply_field(Z, W.comps[c - 1]) - apply_field(W, Z.comps[c - 1]);
  return out;
}

PolyForm d(const PolyForm& a) {
  if (a.form_degree() == a.dim()) return PolyForm(a.dim(), a.dim());
  PolyForm out(a.dim(), a.form_degree() + 1);
  for (const auto& [bits, f] : a.components()) {
    MultiIndex I = MultiIndex::from_bits(bits);
    for (int ax = 1; ax <= a.dim(); ++ax) {
      if (I.contains(ax)) continue;
      Poly df = f.derivative(ax);
      if (df.is_zero()) continue;
      int s = wedge_sign(MultiIndex::from_axes({ax}), I);
      out.add_component(I.with(ax), df * Rational(s));
    }
  }
  return out;
}

PolyForm codifferential(const PolyForm& a, int sign_convention) {
  if (sign_convention != 1 && sign_convention != -1)
    throw std::invalid_argument("codifferential: sign must be +1 or -1");
  if (a.form_degree() == 0) return PolyForm(a.dim(), 0);
  PolyForm out(a.dim(), a.form_degree() - 1);
  for (const auto& [bits, f] : a.components()) {
    MultiIndex I = MultiIndex::from_bits(bits);
    for (int ax = 1; ax <= a.dim(); ++ax) {
      int s = interior_sign(ax, I);
      if (s == 0) continue;
      out.add_component(I.without(ax),
                        f.derivative(ax) * Rational(s * sign_convention));
    }
  }
  return out;
}

PolyForm interior_field(const PolyVectorField& Z, const PolyForm& a) {
  if (Z.dim != a.dim()) throw std::invalid_argument("ambient mismatch");
  if (a.form_degree() == 0) return PolyForm(a.dim(), 0);
  PolyForm out(a.dim(), a.form_degree() - 1);
  for (int ax = 1; ax <= Z.dim; ++ax) {
    if (Z.comps[ax - 1].is_zero()) continue;
    PolyForm part = interior(ax, a);
    part *= Z.comps[ax - 1];
    out += part;
  }
  return out;
}

PolyForm lie_derivative(const PolyVectorField& Z, const PolyForm& a) {
  if (a.form_degree() == 0) {
    PolyForm out(a.dim(), 0);
    out.add_component(MultiIndex(), apply_field(Z, a.component(MultiIndex())));
    return out;
  }
  PolyForm out = d(interior_field(Z, a));
  if (a.form_degree() < a.dim()) out += interior_field(Z, d(a));
  return out;
}

PolyForm lie_derivative_direct(const PolyVectorField& Z, const PolyForm& a) {
  PolyForm out(a.dim(), a.form_degree());
  for (const auto& [bits, f] : a.components()) {
    MultiIndex I = MultiIndex::from_bits(bits);
    out.add_component(I, apply_field(Z, f));
    for (int ax : I.axes()) {
      // dx_I = s * dx_ax ^ dx_{I \ ax}; replace dx_ax by d(Z^ax).
      int s = interior_sign(ax, I);
      PolyForm dZ(a.dim(), 1);
      for (int b = 1; b <= a.dim(); ++b) {
        Poly c = Z.comps[ax - 1].derivative(b);
        if (!c.is_zero()) dZ.add_component(MultiIndex::from_axes({b}), c);
      }
      PolyForm repl = wedge(dZ, PolyForm::basis(a.dim(), I.without(ax)));
      repl *= f * Rational(s);
      out += repl;
    }
  }
  return out;
}

PolyForm restrict_to_hyperplane(const PolyForm& a) {
  int m = a.dim();
  if (m < 1) throw std::invalid_argument("restrict: dimension too small");
  if (a.form_degree() > m - 1) return PolyForm(m - 1, m - 1);
  PolyForm out(m - 1, a.form_degree());
  for (const auto& [bits, f] : a.components()) {
    MultiIndex I = MultiIndex::from_bits(bits);
    if (I.contains(m)) continue;
    Poly g = f.substitute_zero(m).drop_last_var();
    if (!g.is_zero()) out.add_component(I, g);
  }
  return out;
}

}  // namespace sbolab
