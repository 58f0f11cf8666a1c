#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sbolab/calculus.hpp"
#include "sbolab/poly_form.hpp"

namespace sbolab {

/// Parity character value: even <-> '+', odd <-> '-'.
enum class Parity { even = 0, odd = 1 };

inline Parity parity_of(long k) {
  return (((k % 2) + 2) % 2) ? Parity::odd : Parity::even;
}
inline Parity flip(Parity p) {
  return p == Parity::even ? Parity::odd : Parity::even;
}
inline int parity_bit(Parity p) { return p == Parity::even ? 0 : 1; }
inline char parity_char(Parity p) { return p == Parity::even ? '+' : '-'; }
Parity parity_from_char(char c);

/// A conformal Killing field of flat R^n with its conformal factor
/// (L_Z g = 2 rho g), or a finite reflection preserving {x_n = 0}.
struct ConfGenerator {
  enum class Kind {
    translation,
    rotation,
    dilation,
    special_conformal,
    reflection
  };

  Kind kind;
  std::string name;
  int a = 0, b = 0;  // axis labels for translation/rotation/special kinds

  // Infinitesimal kinds.
  PolyVectorField field;
  Poly rho{0};

  // Reflections: x_axis -> -x_axis; axis == 0 encodes the identity map
  // (the restriction of the normal reflection to the hyperplane).
  int axis = 0;
  int or_x = 1;  // orientation character on the ambient space
  int or_y = 1;  // orientation character of the restricted map

  bool infinitesimal() const { return kind != Kind::reflection; }
};

/// Generators of the Lie algebra of Conf(X;Y) for (X,Y)=(R^n,R^{n-1}):
/// translations P_a (a<n), rotations M_ab (a<b<n), the dilation E, and
/// special conformal fields K_a (a<n). Count is n(n+1)/2. Requires n>=3.
std::vector<ConfGenerator> subalgebra_generators(int n);

/// The two orientation reflections sigma_1 (x_1 -> -x_1) and sigma_n
/// (x_n -> -x_n); both preserve the hyperplane. Requires n>=2.
std::pair<ConfGenerator, ConfGenerator> reflections(int n);

/// The induced symmetry of (R^{n-1}, g): for infinitesimal generators the
/// restricted field with rho|_{x_n=0}; for reflections the restricted map
/// with its own orientation character.
ConfGenerator restrict_generator(const ConfGenerator& g);

/// Twisted infinitesimal action L_Z alpha + lambda rho_Z alpha.
/// Throws for reflections (use finite_action).
PolyForm infinitesimal_action(const ConfGenerator& g, const Rational& lambda,
                              const PolyForm& alpha);

/// Twisted finite action or(sigma)^delta sigma^* alpha (reflections are
/// isometries, so the conformal factor power of lambda is trivial).
PolyForm finite_action(const ConfGenerator& g, const Rational& lambda,
                       Parity delta, const PolyForm& alpha);

/// A form together with its conformal weight and parity character.
struct WeightedForm {
  PolyForm alpha;
  Rational lambda;
  Parity delta = Parity::even;
};

}  // namespace sbolab
