#include "sbolab/covariance.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace sbolab {

namespace {

/// One first-order piece of a twisted action: alpha_from |->
/// c * x^xpow * (d_dax alpha_from) at dx_to (dax == 0 means no derivative).
struct Piece {
  MultiIndex from;
  MultiIndex to;
  Exponents xpow;
  int dax = 0;
  Rational c;
};

void append_scalar_pieces(std::vector<Piece>& out, MultiIndex I,
                          const PolyVectorField& field) {
  for (int a = 1; a <= field.dim; ++a) {
    for (const auto& [e, q] : field.comps[a - 1].terms())
      out.push_back({I, I, e, a, q});
  }
}

void append_form_pieces(std::vector<Piece>& out, MultiIndex I,
                        const PolyVectorField& field) {
  for (int ax : I.axes()) {
    int s1 = interior_sign(ax, I);
    MultiIndex rest = I.without(ax);
    for (int b = 1; b <= field.dim; ++b) {
      if (rest.contains(b)) continue;
      Poly dz = field.comps[ax - 1].derivative(b);
      if (dz.is_zero()) continue;
      int s2 = wedge_sign(MultiIndex::from_axes({b}), rest);
      for (const auto& [e, q] : dz.terms())
        out.push_back({I, rest.with(b), e, 0, q * Rational(s1 * s2)});
    }
  }
}

std::vector<Piece> action_pieces(const ConfGenerator& g,
                                 const Rational& weight, MultiIndex I) {
  std::vector<Piece> out;
  append_scalar_pieces(out, I, g.field);
  append_form_pieces(out, I, g.field);
  if (!g.rho.is_zero() && !weight.is_zero()) {
    for (const auto& [e, q] : g.rho.terms())
      out.push_back({I, I, e, 0, q * weight});
  }
  return out;
}

constexpr int kMaxPackedAxes = 6;
constexpr int kMaxPackedExponent = 15;

std::uint64_t pack_key(std::uint32_t from, std::uint32_t to,
                       const Exponents& deriv, const Exponents& xpow) {
  std::uint64_t key = from | (static_cast<std::uint64_t>(to) << 6);
  int shift = 12;
  for (int e : deriv) {
    if (e > kMaxPackedExponent) throw std::logic_error("residual: order overflow");
    key |= static_cast<std::uint64_t>(e) << shift;
    shift += 4;
  }
  // xpow has length n; entry n is zero after the restriction. Conformal
  // Killing fields have coefficients of degree <= 2, so 2 bits suffice.
  for (std::size_t t = 0; t + 1 < xpow.size(); ++t) {
    if (xpow[t] > 3) throw std::logic_error("residual: multiplier overflow");
    key |= static_cast<std::uint64_t>(xpow[t]) << shift;
    shift += 2;
  }
  return key;
}

/// Accumulates the term list of T o action_X(g) - action_Y(g|Y) o T.
/// Entries are keyed by (source index, target index, derivative,
/// polynomial multiplier on the hyperplane).
class ResidualAccumulator {
 public:
  explicit ResidualAccumulator(int n) {
    if (n > kMaxPackedAxes) throw std::logic_error("residual: dimension cap");
  }

  void add(std::uint32_t from, std::uint32_t to, const Exponents& deriv,
           const Exponents& xpow, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = map_.emplace(pack_key(from, to, deriv, xpow), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) map_.erase(it);
    }
  }

  bool empty() const { return map_.empty(); }

 private:
  std::unordered_map<std::uint64_t, Rational> map_;
};

void accumulate_infinitesimal(const SboOperator& T, const ConfGenerator& g,
                              ResidualAccumulator& acc) {
  const SboSignature& sig = T.sig();
  int n = sig.n;
  // T o action_X: commute the constant-coefficient terms past the
  // polynomial multipliers of the action pieces, then restrict.
  for (auto I : all_multi_indices(n, sig.i)) {
    for (const Piece& p : action_pieces(g, sig.lambda, I)) {
      for (const auto& t : T.terms()) {
        if (!(t.from == p.to)) continue;
        // d^beta (x^w d_dax f) = sum_theta binom(beta,theta) w!/(w-theta)!
        //                        x^{w-theta} d^{beta-theta+e_dax} f
        Exponents theta(n, 0);
        auto rec = [&](auto&& self, int pos, Rational factor) -> void {
          if (pos == n) {
            Exponents xleft(n, 0);
            bool killed = false;
            for (int u = 0; u < n; ++u) {
              xleft[u] = p.xpow[u] - theta[u];
              if (u == n - 1 && xleft[u] > 0) killed = true;  // x_n -> 0
            }
            if (killed) return;
            Exponents deriv = t.deriv;
            for (int u = 0; u < n; ++u) deriv[u] -= theta[u];
            if (p.dax > 0) deriv[p.dax - 1] += 1;
            acc.add(I.bits(), t.to.bits(), deriv, xleft,
                    t.coeff * p.c * factor);
            return;
          }
          int cap = std::min(t.deriv[pos], p.xpow[pos]);
          Rational f = factor;
          for (int e = 0; e <= cap; ++e) {
            theta[pos] = e;
            self(self, pos + 1, f);
            // next step: binom(beta,e+1)/binom(beta,e) * falling factor
            f *= Rational(t.deriv[pos] - e) * Rational(p.xpow[pos] - e) /
                 Rational(e + 1);
          }
          theta[pos] = 0;
        };
        rec(rec, 0, Rational(1));
      }
    }
  }
  // action_Y o T, subtracted.
  ConfGenerator gy = restrict_generator(g);
  for (const auto& t : T.terms()) {
    for (const Piece& p : action_pieces(gy, sig.nu, t.to)) {
      Exponents deriv = t.deriv;
      if (p.dax > 0) deriv[p.dax - 1] += 1;  // tangential axis
      Exponents xpow(n, 0);
      for (std::size_t u = 0; u < p.xpow.size(); ++u) xpow[u] = p.xpow[u];
      acc.add(t.from.bits(), p.to.bits(), deriv, xpow, -(t.coeff * p.c));
    }
  }
}

/// Per-term parity test for a reflection; exact because distinct terms
/// act by linearly independent functionals.
bool reflection_covariant(const SboOperator& T, const ConfGenerator& s,
                          std::string* offending) {
  const SboSignature& sig = T.sig();
  int db = parity_bit(sig.delta);
  int eb = parity_bit(sig.eps);
  ConfGenerator sy = restrict_generator(s);
  for (const auto& t : T.terms()) {
    int lhs = (s.or_x == -1 ? db : 0) + (t.from.contains(s.axis) ? 1 : 0) +
              t.deriv[s.axis - 1];
    int rhs = (sy.or_x == -1 ? eb : 0) +
              (sy.axis != 0 && t.to.contains(sy.axis) ? 1 : 0);
    if ((lhs - rhs) % 2 != 0) {
      if (offending)
        *offending = t.from.str() + " -> " + t.to.str();
      return false;
    }
  }
  return true;
}

template <typename F>
void for_each_monomial_form(int m, int degree_cap, int form_degree, F&& fn) {
  Exponents cur(m, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == m) {
      for (auto I : all_multi_indices(m, form_degree))
        fn(PolyForm::monomial(m, I, Poly::monomial(m, cur, Rational(1))));
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, degree_cap);
}

}  // namespace

PolyForm intertwining_residual(const SboOperator& T, const ConfGenerator& g,
                               const PolyForm& alpha) {
  const SboSignature& sig = T.sig();
  ConfGenerator gy = restrict_generator(g);
  if (g.infinitesimal()) {
    PolyForm lhs = T.apply(infinitesimal_action(g, sig.lambda, alpha));
    PolyForm rhs = infinitesimal_action(gy, sig.nu, T.apply(alpha));
    return lhs - rhs;
  }
  PolyForm lhs = T.apply(finite_action(g, sig.lambda, sig.delta, alpha));
  PolyForm rhs = finite_action(gy, sig.nu, sig.eps, T.apply(alpha));
  return lhs - rhs;
}

bool residual_identically_zero(const SboOperator& T, const ConfGenerator& g) {
  if (!g.infinitesimal()) return reflection_covariant(T, g, nullptr);
  ResidualAccumulator acc(T.sig().n);
  accumulate_infinitesimal(T, g, acc);
  return acc.empty();
}

CovarianceReport check_covariance(const SboOperator& T, int max_poly_degree) {
  CovarianceReport report;
  const SboSignature& sig = T.sig();
  if (sig.j > sig.n - 1) return report;  // target space is zero
  std::vector<ConfGenerator> gens = subalgebra_generators(sig.n);
  auto [s1, sn] = reflections(sig.n);
  gens.push_back(s1);
  gens.push_back(sn);
  for (const auto& g : gens) {
    bool failed = false;
    for_each_monomial_form(sig.n, max_poly_degree, sig.i,
                           [&](const PolyForm& alpha) {
                             if (failed) return;
                             PolyForm r = intertwining_residual(T, g, alpha);
                             ++report.residuals_checked;
                             if (!r.is_zero()) {
                               failed = true;
                               report.ok = false;
                               report.offender = g.name;
                               report.detail = "input " + alpha.str() +
                                               "\nresidual " + r.str();
                             }
                           });
    if (!report.ok) return report;
  }
  return report;
}

CovarianceReport check_covariance_symbolic(const SboOperator& T) {
  CovarianceReport report;
  const SboSignature& sig = T.sig();
  if (sig.j > sig.n - 1) return report;
  for (const auto& g : subalgebra_generators(sig.n)) {
    ++report.residuals_checked;
    if (!residual_identically_zero(T, g)) {
      report.ok = false;
      report.offender = g.name;
      return report;
    }
  }
  auto [s1, sn] = reflections(sig.n);
  for (const auto& s : {s1, sn}) {
    ++report.residuals_checked;
    std::string offending;
    if (!reflection_covariant(T, s, &offending)) {
      report.ok = false;
      report.offender = s.name;
      report.detail = "term " + offending;
      return report;
    }
  }
  return report;
}

}  // namespace sbolab
