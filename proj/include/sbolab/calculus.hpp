#pragma once

#include <vector>

#include "sbolab/poly_form.hpp"

namespace sbolab {

/// Polynomial vector field sum_a Z^a d/dx_a on R^m; comps[a-1] = Z^a.
struct PolyVectorField {
  int dim = 0;
  std::vector<Poly> comps;

  static PolyVectorField zero(int dim) {
    return {dim, std::vector<Poly>(dim, Poly(dim))};
  }
};

/// Z(f), the directional derivative.
Poly apply_field(const PolyVectorField& Z, const Poly& f);

PolyVectorField commutator(const PolyVectorField& Z, const PolyVectorField& W);

/// Exterior derivative; returns the zero top+1 form on top-degree input.
PolyForm d(const PolyForm& a);

/// Flat-space codifferential sign * sum_a iota_a (d/dx_a applied
/// coefficient-wise). Degree-0 input yields the zero form.
PolyForm codifferential(const PolyForm& a, int sign_convention);

/// Contraction with a polynomial vector field in the first slot.
PolyForm interior_field(const PolyVectorField& Z, const PolyForm& a);

/// Lie derivative via the Cartan formula d iota_Z + iota_Z d.
PolyForm lie_derivative(const PolyVectorField& Z, const PolyForm& a);

/// Lie derivative via component transport: Z(f_I) dx_I plus the terms
/// replacing each slot dx_a by d(Z^a). Independent cross-check of the
/// Cartan route.
PolyForm lie_derivative_direct(const PolyVectorField& Z, const PolyForm& a);

/// Pullback along {x_m = 0} -> R^m: drops components containing the last
/// axis and substitutes x_m = 0; the result lives on R^{m-1}.
PolyForm restrict_to_hyperplane(const PolyForm& a);

}  // namespace sbolab
