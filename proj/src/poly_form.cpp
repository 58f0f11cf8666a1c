#include "sbolab/poly_form.hpp"

#include <stdexcept>

namespace sbolab {

PolyForm::PolyForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 0 || degree < 0 || degree > dim)
    throw std::invalid_argument("PolyForm: bad degree");
}

PolyForm PolyForm::basis(int dim, MultiIndex I) {
  return monomial(dim, I, Poly::constant(dim, Rational(1)));
}

PolyForm PolyForm::from_poly(const Poly& f) {
  PolyForm out(f.vars(), 0);
  out.add_component(MultiIndex(), f);
  return out;
}

PolyForm PolyForm::monomial(int dim, MultiIndex I, const Poly& f) {
  PolyForm out(dim, I.degree());
  out.add_component(I, f);
  return out;
}

int PolyForm::poly_degree() const {
  int d = -1;
  for (const auto& [bits, f] : comps_) d = std::max(d, f.degree());
  return d;
}

Poly PolyForm::component(MultiIndex I) const {
  auto it = comps_.find(I.bits());
  return it == comps_.end() ? Poly(dim_) : it->second;
}

void PolyForm::add_component(MultiIndex I, const Poly& f) {
  if (I.degree() != degree_)
    throw std::invalid_argument("PolyForm: index degree mismatch");
  if (f.vars() != dim_)
    throw std::invalid_argument("PolyForm: ambient mismatch");
  if (f.is_zero()) return;
  auto [it, inserted] = comps_.emplace(I.bits(), f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  if (dim_ != o.dim_ || degree_ != o.degree_)
    throw std::invalid_argument("PolyForm: ambient mismatch");
  for (const auto& [bits, f] : o.comps_)
    add_component(MultiIndex::from_bits(bits), f);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  if (dim_ != o.dim_ || degree_ != o.degree_)
    throw std::invalid_argument("PolyForm: ambient mismatch");
  for (const auto& [bits, f] : o.comps_)
    add_component(MultiIndex::from_bits(bits), -f);
  return *this;
}

PolyForm& PolyForm::operator*=(const Rational& c) {
  if (c.is_zero()) {
    comps_.clear();
    return *this;
  }
  for (auto& [bits, f] : comps_) f *= c;
  return *this;
}

PolyForm& PolyForm::operator*=(const Poly& g) {
  PolyForm out(dim_, degree_);
  for (const auto& [bits, f] : comps_)
    out.add_component(MultiIndex::from_bits(bits), f * g);
  *this = std::move(out);
  return *this;
}

PolyForm PolyForm::operator-() const {
  PolyForm out(dim_, degree_);
  for (const auto& [bits, f] : comps_) out.comps_.emplace(bits, -f);
  return out;
}

std::string PolyForm::str() const {
  if (comps_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [bits, f] : comps_) {
    if (!first) s += "\n";
    s += "(" + f.str() + ")  " + MultiIndex::from_bits(bits).str();
    first = false;
  }
  return s;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("ambient mismatch");
  int deg = a.form_degree() + b.form_degree();
  if (deg > a.dim())
    return PolyForm(a.dim(), a.dim());  // identically zero beyond top degree
  PolyForm out(a.dim(), deg);
  for (const auto& [abits, f] : a.components()) {
    for (const auto& [bbits, g] : b.components()) {
      MultiIndex A = MultiIndex::from_bits(abits);
      MultiIndex B = MultiIndex::from_bits(bbits);
      int s = wedge_sign(A, B);
      if (s == 0) continue;
      out.add_component(MultiIndex::from_bits(abits | bbits),
                        f * g * Rational(s));
    }
  }
  return out;
}

PolyForm interior(int axis, const PolyForm& a) {
  if (a.form_degree() == 0) return PolyForm(a.dim(), 0);
  PolyForm out(a.dim(), a.form_degree() - 1);
  for (const auto& [bits, f] : a.components()) {
    MultiIndex I = MultiIndex::from_bits(bits);
    int s = interior_sign(axis, I);
    if (s == 0) continue;
    out.add_component(I.without(axis), f * Rational(s));
  }
  return out;
}

PolyForm hodge_star(const PolyForm& a, int orientation) {
  PolyForm out(a.dim(), a.dim() - a.form_degree());
  for (const auto& [bits, f] : a.components()) {
    MultiIndex I = MultiIndex::from_bits(bits);
    int s = hodge_sign(I, a.dim()) * orientation;
    out.add_component(complement(I, a.dim()), f * Rational(s));
  }
  return out;
}

PolyForm reflect_pullback(const PolyForm& a, int axis) {
  PolyForm out(a.dim(), a.form_degree());
  for (const auto& [bits, f] : a.components()) {
    MultiIndex I = MultiIndex::from_bits(bits);
    Poly g = f.negate_axis(axis);
    if (I.contains(axis)) g *= Rational(-1);
    out.add_component(I, g);
  }
  return out;
}

}  // namespace sbolab
