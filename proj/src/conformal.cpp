#include "sbolab/conformal.hpp"

#include <stdexcept>

namespace sbolab {

Parity parity_from_char(char c) {
  if (c == '+') return Parity::even;
  if (c == '-') return Parity::odd;
  throw std::invalid_argument("parity: expected '+' or '-'");
}

namespace {

ConfGenerator make_translation(int n, int a) {
  ConfGenerator g;
  g.kind = ConfGenerator::Kind::translation;
  g.name = "P" + std::to_string(a);
  g.a = a;
  g.field = PolyVectorField::zero(n);
  g.field.comps[a - 1] = Poly::constant(n, Rational(1));
  g.rho = Poly(n);
  return g;
}

ConfGenerator make_rotation(int n, int a, int b) {
  ConfGenerator g;
  g.kind = ConfGenerator::Kind::rotation;
  g.name = "M" + std::to_string(a) + std::to_string(b);
  g.a = a;
  g.b = b;
  g.field = PolyVectorField::zero(n);
  g.field.comps[b - 1] = Poly::variable(n, a);
  g.field.comps[a - 1] = -Poly::variable(n, b);
  g.rho = Poly(n);
  return g;
}

ConfGenerator make_dilation(int n) {
  ConfGenerator g;
  g.kind = ConfGenerator::Kind::dilation;
  g.name = "E";
  g.field = PolyVectorField::zero(n);
  for (int c = 1; c <= n; ++c) g.field.comps[c - 1] = Poly::variable(n, c);
  g.rho = Poly::constant(n, Rational(1));
  return g;
}

ConfGenerator make_special_conformal(int n, int a) {
  ConfGenerator g;
  g.kind = ConfGenerator::Kind::special_conformal;
  g.name = "K" + std::to_string(a);
  g.a = a;
  g.field = PolyVectorField::zero(n);
  Poly r2(n);
  for (int c = 1; c <= n; ++c) r2 += Poly::variable(n, c) * Poly::variable(n, c);
  for (int c = 1; c <= n; ++c) {
    Poly comp(n);
    if (c == a) comp += r2;
    comp -= Rational(2) * Poly::variable(n, a) * Poly::variable(n, c);
    g.field.comps[c - 1] = comp;
  }
  g.rho = Rational(-2) * Poly::variable(n, a);
  return g;
}

}  // namespace

std::vector<ConfGenerator> subalgebra_generators(int n) {
  if (n < 3) throw std::invalid_argument("dimension too small");
  std::vector<ConfGenerator> gens;
  for (int a = 1; a < n; ++a) gens.push_back(make_translation(n, a));
  for (int a = 1; a < n; ++a)
    for (int b = a + 1; b < n; ++b) gens.push_back(make_rotation(n, a, b));
  gens.push_back(make_dilation(n));
  for (int a = 1; a < n; ++a) gens.push_back(make_special_conformal(n, a));
  return gens;
}

std::pair<ConfGenerator, ConfGenerator> reflections(int n) {
  if (n < 2) throw std::invalid_argument("dimension too small");
  ConfGenerator s1;
  s1.kind = ConfGenerator::Kind::reflection;
  s1.name = "sigma_1";
  s1.axis = 1;
  s1.or_x = -1;
  s1.or_y = -1;
  ConfGenerator sn;
  sn.kind = ConfGenerator::Kind::reflection;
  sn.name = "sigma_n";
  sn.axis = n;
  sn.or_x = -1;
  sn.or_y = 1;
  return {s1, sn};
}

ConfGenerator restrict_generator(const ConfGenerator& g) {
  ConfGenerator out = g;
  if (g.kind == ConfGenerator::Kind::reflection) {
    out.axis = (g.axis == 1) ? 1 : 0;  // sigma_n restricts to the identity
    out.or_x = g.or_y;
    out.name = g.name + "|Y";
    return out;
  }
  int n = g.field.dim;
  out.field = PolyVectorField::zero(n - 1);
  for (int c = 1; c <= n - 1; ++c)
    out.field.comps[c - 1] =
        g.field.comps[c - 1].substitute_zero(n).drop_last_var();
  out.rho = g.rho.substitute_zero(n).drop_last_var();
  out.name = g.name + "|Y";
  return out;
}

PolyForm infinitesimal_action(const ConfGenerator& g, const Rational& lambda,
                              const PolyForm& alpha) {
  if (!g.infinitesimal())
    throw std::invalid_argument("use finite_action for reflections");
  PolyForm out = lie_derivative(g.field, alpha);
  if (!g.rho.is_zero() && !lambda.is_zero()) {
    PolyForm twist = alpha;
    twist *= g.rho;
    twist *= lambda;
    out += twist;
  }
  return out;
}

PolyForm finite_action(const ConfGenerator& g, const Rational& /*lambda*/,
                       Parity delta, const PolyForm& alpha) {
  if (g.infinitesimal())
    throw std::invalid_argument("finite_action expects a reflection");
  PolyForm out = (g.axis == 0) ? alpha : reflect_pullback(alpha, g.axis);
  if (delta == Parity::odd && g.or_x == -1) out *= Rational(-1);
  return out;
}

}  // namespace sbolab
