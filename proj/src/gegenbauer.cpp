#include "sbolab/gegenbauer.hpp"

#include <map>
#include <stdexcept>

namespace sbolab {

UniPoly::UniPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UniPoly UniPoly::symbol() {
  UniPoly p;
  p.c_ = {Rational(0), Rational(1)};
  return p;
}

Rational UniPoly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(c_.size())) return Rational(0);
  return c_[power];
}

Rational UniPoly::eval(const Rational& x) const {
  Rational out(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x + *it;
  return out;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t t = 0; t < o.c_.size(); ++t) c_[t] += o.c_[t];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t t = 0; t < o.c_.size(); ++t) c_[t] -= o.c_[t];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t s = 0; s < c_.size(); ++s)
    for (std::size_t t = 0; t < o.c_.size(); ++t) out[s + t] += c_[s] * o.c_[t];
  c_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= c;
  return *this;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly out = *this;
  Rational lead = c_.back();
  for (auto& v : out.c_) v /= lead;
  return out;
}

UniPoly UniPoly::divide_exact(const UniPoly& g) const {
  if (g.is_zero()) throw std::domain_error("UniPoly: division by zero");
  UniPoly rem = *this;
  std::vector<Rational> q(
      degree() >= g.degree() ? degree() - g.degree() + 1 : 0, Rational(0));
  while (!rem.is_zero() && rem.degree() >= g.degree()) {
    int shift = rem.degree() - g.degree();
    Rational f = rem.c_.back() / g.c_.back();
    q[shift] = f;
    for (int t = 0; t <= g.degree(); ++t) rem.c_[t + shift] -= f * g.c_[t];
    rem.trim();
  }
  if (!rem.is_zero()) throw std::domain_error("UniPoly: inexact division");
  UniPoly out;
  out.c_ = std::move(q);
  out.trim();
  return out;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    // a mod b
    UniPoly rem = a;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      int shift = rem.degree() - b.degree();
      Rational f = rem.c_.back() / b.c_.back();
      for (int t = 0; t <= b.degree(); ++t) rem.c_[t + shift] -= f * b.c_[t];
      rem.trim();
    }
    a = b;
    b = rem;
  }
  return a.monic();
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int p = degree(); p >= 0; --p) {
    if (c_[p].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += c_[p].str();
    if (p >= 1) s += "*" + var;
    if (p >= 2) s += "^" + std::to_string(p);
  }
  return s;
}

bool GegenbauerCoeffs::is_zero_family() const {
  if (symbolic()) {
    for (const auto& a : coeffs)
      if (!a.is_zero()) return false;
    return true;
  }
  for (const auto& v : values())
    if (!v.is_zero()) return false;
  return true;
}

std::vector<Rational> GegenbauerCoeffs::values() const {
  if (symbolic())
    throw std::invalid_argument("GegenbauerCoeffs: symbolic mode has no values");
  return values_at(*mu);
}

std::vector<Rational> GegenbauerCoeffs::values_at(const Rational& m) const {
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (const auto& a : coeffs) out.push_back(a.eval(m));
  return out;
}

GegenbauerCoeffs gegenbauer_symbolic(int k) {
  if (k < 0) throw std::invalid_argument("gegenbauer: k must be >= 0");
  GegenbauerCoeffs fam;
  fam.k = k;
  for (int i = 0; 2 * i <= k; ++i) {
    // (-1)^i 2^(k-2i) (mu)_(k-i) / (i! (k-2i)!)
    UniPoly rising(Rational(1));
    for (int t = 0; t < k - i; ++t)
      rising *= (UniPoly::symbol() + UniPoly(Rational(t)));
    Rational num(1);
    for (int p = 0; p < k - 2 * i; ++p) num *= Rational(2);
    if (i % 2 == 1) num = -num;
    Rational den(1);
    for (int t = 2; t <= i; ++t) den *= Rational(t);
    for (int t = 2; t <= k - 2 * i; ++t) den *= Rational(t);
    rising *= num / den;
    fam.coeffs.push_back(rising);
  }
  return fam;
}

GegenbauerCoeffs gegenbauer(int k, const Rational& mu) {
  GegenbauerCoeffs fam = gegenbauer_symbolic(k);
  fam.mu = mu;
  return fam;
}

std::vector<Rational> gegenbauer_recurrence(int k, const Rational& mu) {
  if (k < 0) throw std::invalid_argument("gegenbauer: k must be >= 0");
  // C_m as dense coefficient vectors in t, ascending powers.
  std::vector<Rational> prev = {Rational(1)};            // C_0
  std::vector<Rational> cur = {Rational(0), mu * 2};     // C_1
  if (k == 0) cur = prev;
  for (int m = 2; m <= k; ++m) {
    std::vector<Rational> next(m + 1, Rational(0));
    Rational f1 = (Rational(m) + mu - 1) * Rational(2) / Rational(m);
    for (std::size_t p = 0; p < cur.size(); ++p) next[p + 1] += f1 * cur[p];
    Rational f2 = (Rational(m) + mu * 2 - 2) / Rational(m);
    for (std::size_t p = 0; p < prev.size(); ++p) next[p] -= f2 * prev[p];
    prev = std::move(cur);
    cur = std::move(next);
  }
  std::vector<Rational> out;
  for (int i = 0; 2 * i <= k; ++i) {
    int power = k - 2 * i;
    out.push_back(power < static_cast<int>(cur.size()) ? cur[power]
                                                       : Rational(0));
  }
  return out;
}

GegenbauerCoeffs renormalize(const GegenbauerCoeffs& family) {
  if (!family.symbolic())
    throw std::invalid_argument("renormalize: requires symbolic mode");
  if (family.is_zero_family())
    throw std::domain_error("renormalize: zero family");
  UniPoly g;
  for (const auto& a : family.coeffs) g = UniPoly::gcd(g, a);
  GegenbauerCoeffs out;
  out.k = family.k;
  for (const auto& a : family.coeffs) out.coeffs.push_back(a.divide_exact(g));
  return out;
}

}  // namespace sbolab
