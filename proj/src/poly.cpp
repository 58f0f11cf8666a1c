#include "sbolab/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sbolab {

Poly Poly::constant(int vars, const Rational& c) {
  Poly p(vars);
  p.add_term(Exponents(vars, 0), c);
  return p;
}

Poly Poly::variable(int vars, int axis) {
  if (axis < 1 || axis > vars) throw std::invalid_argument("Poly: axis range");
  Exponents e(vars, 0);
  e[axis - 1] = 1;
  return monomial(vars, e, Rational(1));
}

Poly Poly::monomial(int vars, const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != vars)
    throw std::invalid_argument("Poly: exponent length mismatch");
  for (int x : e)
    if (x < 0) throw std::invalid_argument("Poly: negative exponent");
  Poly p(vars);
  p.add_term(e, c);
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

Rational Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (vars_ != o.vars_) throw std::invalid_argument("Poly: ambient mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (vars_ != o.vars_) throw std::invalid_argument("Poly: ambient mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (vars_ != o.vars_) throw std::invalid_argument("Poly: ambient mismatch");
  Poly out(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(vars_);
      for (int t = 0; t < vars_; ++t) e[t] = ea[t] + eb[t];
      out.add_term(e, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Poly Poly::derivative(int axis) const {
  Poly out(vars_);
  for (const auto& [e, c] : terms_) {
    int k = e[axis - 1];
    if (k == 0) continue;
    Exponents d = e;
    d[axis - 1] = k - 1;
    out.add_term(d, c * Rational(k));
  }
  return out;
}

Poly Poly::substitute_zero(int axis) const {
  Poly out(vars_);
  for (const auto& [e, c] : terms_)
    if (e[axis - 1] == 0) out.add_term(e, c);
  return out;
}

Poly Poly::negate_axis(int axis) const {
  Poly out(vars_);
  for (const auto& [e, c] : terms_)
    out.add_term(e, (e[axis - 1] & 1) ? -c : c);
  return out;
}

Poly Poly::drop_last_var() const {
  if (vars_ < 1) throw std::logic_error("Poly: no variable to drop");
  Poly out(vars_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e.back() != 0)
      throw std::logic_error("Poly: depends on the dropped variable");
    out.add_term(Exponents(e.begin(), e.end() - 1), c);
  }
  return out;
}

Poly Poly::lift_var() const {
  Poly out(vars_ + 1);
  for (const auto& [e, c] : terms_) {
    Exponents le = e;
    le.push_back(0);
    out.add_term(le, c);
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) s += " + ";
    s += c.str();
    for (int t = 0; t < vars_; ++t) {
      if (e[t] == 0) continue;
      s += "*x" + std::to_string(t + 1);
      if (e[t] > 1) s += "^" + std::to_string(e[t]);
    }
    first = false;
  }
  return s;
}

}  // namespace sbolab
