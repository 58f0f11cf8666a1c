#include "sbolab/operators.hpp"

#include <stdexcept>

namespace sbolab {

namespace {

/// Matrix entry of a constant-coefficient operator on R^n before the
/// restriction: alpha_from |-> coeff * d^deriv alpha_from at dx_to, with
/// to still allowed to contain axis n.
struct Routed {
  MultiIndex from;
  MultiIndex to;
  Exponents deriv;
  Rational coeff;
};

std::vector<Routed> route_identity(int n, int i) {
  std::vector<Routed> out;
  for (auto I : all_multi_indices(n, i))
    out.push_back({I, I, Exponents(n, 0), Rational(1)});
  return out;
}

/// d o d* on i-forms.
std::vector<Routed> route_d_dstar(int n, int i, int codiff_sign) {
  std::vector<Routed> out;
  for (auto I : all_multi_indices(n, i)) {
    for (int a : I.axes()) {
      int s1 = interior_sign(a, I) * codiff_sign;
      MultiIndex J = I.without(a);
      for (int c = 1; c <= n; ++c) {
        if (J.contains(c)) continue;
        int s2 = wedge_sign(MultiIndex::from_axes({c}), J);
        Exponents deriv(n, 0);
        deriv[a - 1] += 1;
        deriv[c - 1] += 1;
        out.push_back({I, J.with(c), deriv, Rational(s1 * s2)});
      }
    }
  }
  return out;
}

/// d o iota_{d/dx_n} on i-forms.
std::vector<Routed> route_d_iota_n(int n, int i) {
  std::vector<Routed> out;
  for (auto I : all_multi_indices(n, i)) {
    if (!I.contains(n)) continue;
    int s1 = interior_sign(n, I);
    MultiIndex J = I.without(n);
    for (int c = 1; c <= n; ++c) {
      if (J.contains(c)) continue;
      int s2 = wedge_sign(MultiIndex::from_axes({c}), J);
      Exponents deriv(n, 0);
      deriv[c - 1] += 1;
      out.push_back({I, J.with(c), deriv, Rational(s1 * s2)});
    }
  }
  return out;
}

/// d on i-forms.
std::vector<Routed> route_d(int n, int i) {
  std::vector<Routed> out;
  for (auto I : all_multi_indices(n, i)) {
    for (int c = 1; c <= n; ++c) {
      if (I.contains(c)) continue;
      int s = wedge_sign(MultiIndex::from_axes({c}), I);
      Exponents deriv(n, 0);
      deriv[c - 1] += 1;
      out.push_back({I, I.with(c), deriv, Rational(s)});
    }
  }
  return out;
}

/// Scalar terms of D_k^mu as (deriv, coeff) pairs on R^n.
std::vector<std::pair<Exponents, Rational>> juhl_scalar_terms(
    int k, const Rational& mu, int n) {
  std::vector<std::pair<Exponents, Rational>> out;
  auto fam = gegenbauer(k, mu);
  auto a = fam.values();
  for (int i2 = 0; 2 * i2 <= k; ++i2) {
    if (a[i2].is_zero()) continue;
    // (-Laplacian')^{i2}: multinomial expansion over the tangential axes.
    std::vector<Exponents> parts;
    Exponents cur(n - 1, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
      if (pos == n - 1) {
        if (left == 0) parts.push_back(cur);
        return;
      }
      for (int e = 0; e <= left; ++e) {
        cur[pos] = e;
        self(self, pos + 1, left - e);
      }
      cur[pos] = 0;
    };
    rec(rec, 0, i2);
    Rational fact(1);
    for (int t = 2; t <= i2; ++t) fact *= Rational(t);
    for (const auto& m : parts) {
      Rational mfact(1);
      for (int t = 0; t < n - 1; ++t)
        for (int s = 2; s <= m[t]; ++s) mfact *= Rational(s);
      Rational c = a[i2] * fact / mfact;
      if (i2 % 2 == 1) c = -c;
      Exponents deriv(n, 0);
      for (int t = 0; t < n - 1; ++t) deriv[t] = 2 * m[t];
      deriv[n - 1] = k - 2 * i2;
      out.push_back({deriv, c});
    }
  }
  return out;
}

std::vector<Routed> compose_scalar(
    const std::vector<Routed>& routed,
    const std::vector<std::pair<Exponents, Rational>>& scalar,
    const Rational& factor) {
  std::vector<Routed> out;
  if (factor.is_zero()) return out;
  for (const auto& r : routed) {
    for (const auto& [deriv, c] : scalar) {
      Exponents total = r.deriv;
      for (std::size_t t = 0; t < total.size(); ++t) total[t] += deriv[t];
      out.push_back({r.from, r.to, total, r.coeff * c * factor});
    }
  }
  return out;
}

SboOperator assemble(SboSignature sig, const std::vector<Routed>& routed) {
  std::vector<SboTerm> terms;
  for (const auto& r : routed) {
    if (r.to.contains(sig.n)) continue;  // killed by the restriction
    terms.push_back(SboTerm{r.from, r.to, r.deriv, r.coeff});
  }
  return SboOperator(std::move(sig), std::move(terms));
}

}  // namespace

SboOperator juhl_operator(int k, const Rational& mu, int n) {
  if (k < 0 || n < 2) throw std::invalid_argument("juhl_operator: bad input");
  SboSignature sig;
  sig.n = n;
  sig.i = 0;
  sig.j = 0;
  sig.lambda = mu + Rational(n - 1, 2);
  sig.nu = sig.lambda + Rational(k);
  sig.delta = parity_of(k);
  sig.eps = parity_of(k);
  return assemble(sig, compose_scalar(route_identity(n, 0),
                                      juhl_scalar_terms(k, mu, n), Rational(1)));
}

SboOperator matrix_operator_ii(int n, int i, const Rational& lambda, int k,
                               int codiff_sign) {
  if (n < 2 || i < 0 || i > n || k < 0)
    throw std::invalid_argument("matrix_operator_ii: bad input");
  Rational mu = lambda + Rational(i) - Rational(n - 1, 2);
  Rational b = (lambda + Rational(k)) / Rational(2);
  // Covariant coefficients of the three compositions, pinned by the
  // nullspace oracle (see docs/conventions.md): mu for the d d* block and
  // -(mu + (k-1)/2) for the d iota block, relative to b on the scalar
  // block. Only the standard codifferential sign passes with these.
  Rational c_dds = mu;
  Rational c_diota = -(mu + Rational(k - 1, 2));
  std::vector<Routed> routed;
  if (k >= 2) {
    auto part = compose_scalar(route_d_dstar(n, i, codiff_sign),
                               juhl_scalar_terms(k - 2, mu + 1, n), c_dds);
    routed.insert(routed.end(), part.begin(), part.end());
  }
  if (k >= 1) {
    auto part = compose_scalar(route_d_iota_n(n, i),
                               juhl_scalar_terms(k - 1, mu, n), c_diota);
    routed.insert(routed.end(), part.begin(), part.end());
  }
  auto part = compose_scalar(route_identity(n, i), juhl_scalar_terms(k, mu, n),
                             b);
  routed.insert(routed.end(), part.begin(), part.end());

  SboSignature sig;
  sig.n = n;
  sig.i = i;
  sig.j = i;
  sig.lambda = lambda;
  sig.nu = lambda + Rational(k);
  sig.delta = parity_of(k);
  sig.eps = parity_of(k);
  return assemble(sig, routed);
}

SboOperator rest_d_operator(int n, int i, bool force) {
  if (!force && !(1 <= i && i <= n - 2))
    throw std::invalid_argument("not a covariant parameter");
  if (i < 0 || i >= n) throw std::invalid_argument("rest_d_operator: bad i");
  SboSignature sig;
  sig.n = n;
  sig.i = i;
  sig.j = i + 1;
  sig.lambda = Rational(conventions::rest_d_lambda);
  sig.nu = Rational(conventions::rest_d_nu);
  sig.delta = Parity::even;
  sig.eps = Parity::even;
  return assemble(sig, route_d(n, i));
}

SboOperator d_juhl_operator(int n, const Rational& lambda, bool force) {
  if (!force && !(lambda.is_integer() && lambda.sign() <= 0))
    throw std::invalid_argument("not a covariant parameter");
  if (!lambda.is_integer() || lambda.sign() > 0)
    throw std::invalid_argument("d_juhl_operator: lambda must be in -N");
  long k = -lambda.num().get_si();
  Rational mu = lambda - Rational(n - 1, 2);
  SboSignature sig;
  sig.n = n;
  sig.i = 0;
  sig.j = 1;
  sig.lambda = lambda;
  sig.nu = Rational(0);
  sig.delta = parity_of(k);
  sig.eps = parity_of(k);
  return assemble(sig, compose_scalar(route_d(n, 0),
                                      juhl_scalar_terms(static_cast<int>(k),
                                                        mu, n),
                                      Rational(1)));
}

SboOperator hodge_transfer(const SboOperator& op, TransferSide side) {
  const SboSignature& s = op.sig();
  SboSignature sig = s;
  std::vector<SboTerm> terms;
  if (side == TransferSide::source) {
    sig.i = s.n - s.i;
    sig.lambda = s.lambda + Rational(2 * s.i - s.n);
    sig.delta = flip(s.delta);
    for (const auto& t : op.terms()) {
      MultiIndex pre = complement(t.from, s.n);
      int sign = hodge_sign(pre, s.n) * conventions::hodge_orientation;
      terms.push_back(SboTerm{pre, t.to, t.deriv, t.coeff * Rational(sign)});
    }
  } else {
    sig.j = (s.n - 1) - s.j;
    sig.nu = s.nu + Rational(2 * s.j - (s.n - 1));
    sig.eps = flip(s.eps);
    for (const auto& t : op.terms()) {
      int sign = hodge_sign(t.to, s.n - 1) * conventions::hodge_orientation;
      terms.push_back(SboTerm{t.from, complement(t.to, s.n - 1), t.deriv,
                              t.coeff * Rational(sign)});
    }
  }
  return SboOperator(std::move(sig), std::move(terms));
}

}  // namespace sbolab
