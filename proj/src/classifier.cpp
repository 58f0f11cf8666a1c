#include "sbolab/classifier.hpp"

#include <stdexcept>

namespace sbolab {

namespace {

bool is_natural(const Rational& v) {
  return v.is_integer() && v.sign() >= 0;
}

bool is_nonpositive_integer(const Rational& v) {
  return v.is_integer() && v.sign() <= 0;
}

Parity parity_of_rational_integer(const Rational& v) {
  return parity_of(v.num().get_si());
}

ParamTuple star_source(const ParamTuple& p) {
  ParamTuple q = p;
  q.i = p.n - p.i;
  q.lambda = p.lambda + Rational(2 * p.i - p.n);
  q.delta = flip(p.delta);
  return q;
}

ParamTuple star_target(const ParamTuple& p) {
  ParamTuple q = p;
  q.j = (p.n - 1) - p.j;
  q.nu = p.nu + Rational(2 * p.j - (p.n - 1));
  q.eps = flip(p.eps);
  return q;
}

/// The directly stated clauses, applicable when j' = i' or j' = i' + 1.
Tri direct_clause(const ParamTuple& p, std::string* name) {
  if (p.j == p.i) {
    *name = "Q_{i,i}";
    Rational k = p.nu - p.lambda;
    if (!is_natural(k)) return Tri::no;
    Parity kp = parity_of_rational_integer(k);
    return (p.delta == kp && p.eps == kp) ? Tri::yes : Tri::no;
  }
  if (p.j == p.i + 1) {
    if (p.i == 0) {
      *name = "Q_{0,1}";
      bool ok = is_nonpositive_integer(p.lambda) && p.nu.is_zero() &&
                p.delta == parity_of_rational_integer(p.lambda) &&
                p.eps == p.delta;
      return ok ? Tri::yes : Tri::no;
    }
    if (1 <= p.i && p.i <= p.n - 2) {
      *name = "Q_{i,i+1}";
      bool ok = p.lambda.is_zero() && p.nu.is_zero() &&
                p.delta == Parity::even && p.eps == Parity::even;
      return ok ? Tri::yes : Tri::no;
    }
  }
  return Tri::undetermined;
}

}  // namespace

bool ij_condition(int n, int i, int j) {
  for (int v : {j, n - j - 1})
    for (int w : {i - 2, i - 1, i, i + 1})
      if (v == w) return true;
  return false;
}

bool psi_sp(const Rational& lambda, const Rational& nu, Parity delta,
            Parity eps) {
  Rational k = nu - lambda;
  if (!is_natural(k)) return false;
  Parity kp = parity_of_rational_integer(k);
  return (delta == eps) ? (kp == Parity::even) : (kp == Parity::odd);
}

PsParams normalize_parameters(int i, const Rational& lambda, Parity delta) {
  return {i, lambda + Rational(i), (i % 2 == 0) ? delta : flip(delta)};
}

PsParams normalize_parameters_inverse(int i, const Rational& lambda,
                                      Parity delta) {
  return {i, lambda - Rational(i), (i % 2 == 0) ? delta : flip(delta)};
}

QResult q_condition(const ParamTuple& p, bool use_star_rules) {
  if (!valid_ranges(p)) throw std::invalid_argument("q_condition: ranges");
  QResult out;
  struct Route {
    const char* tag;
    bool starred;
    ParamTuple params;
  };
  std::vector<Route> routes = {{"", false, p}};
  if (use_star_rules) {
    routes.push_back({" via *_X", true, star_source(p)});
    routes.push_back({" via *_Y", true, star_target(p)});
    routes.push_back({" via *_X*_Y", true, star_target(star_source(p))});
  }
  bool any_determined = false;
  bool any_yes = false;
  for (const auto& r : routes) {
    std::string name;
    Tri v = direct_clause(r.params, &name);
    if (v == Tri::undetermined) continue;
    any_determined = true;
    if (v == Tri::yes) {
      any_yes = true;
      out.clauses_fired.push_back(name + r.tag);
      if (r.starred) out.used_star_rule = true;
    }
  }
  if (!any_determined) {
    out.value = Tri::undetermined;
    return out;
  }
  out.value = any_yes ? Tri::yes : Tri::no;
  return out;
}

ClassificationVerdict classify(const ParamTuple& p, bool use_star_rules) {
  if (!valid_ranges(p)) throw std::invalid_argument("classify: ranges");
  ClassificationVerdict v;
  v.params = p;
  v.localness = (p.j != p.i - 1 && p.j != p.i);
  v.in_psi_sp = psi_sp(p.lambda, p.nu, p.delta, p.eps);
  v.source_irreducible = !(p.lambda + Rational(p.i)).is_integer();
  v.source = "paper";

  if (!ij_condition(p.n, p.i, p.j)) {
    v.differential_exists = Tri::no;
    v.differential_dim = 0;
    v.conditions_fired.push_back("degree condition fails");
    return v;
  }
  v.conditions_fired.push_back("degree condition holds");
  if (!is_natural(p.nu - p.lambda)) {
    v.differential_exists = Tri::no;
    v.differential_dim = 0;
    v.conditions_fired.push_back("nu - lambda not in N");
    return v;
  }
  QResult q = q_condition(p, use_star_rules);
  v.differential_exists = q.value;
  v.differential_dim = (q.value == Tri::yes) ? 1 : 0;
  for (const auto& c : q.clauses_fired) v.conditions_fired.push_back(c);
  if (q.used_star_rule) v.source = "oracle";
  if (q.value == Tri::undetermined) {
    v.source = "undetermined";
    v.differential_dim = 0;
  }
  return v;
}

nlohmann::ordered_json verdict_to_json(const ClassificationVerdict& v) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["params"] = {{"n", v.params.n},
                 {"i", v.params.i},
                 {"j", v.params.j},
                 {"lambda", v.params.lambda.str()},
                 {"nu", v.params.nu.str()},
                 {"delta", std::string(1, parity_char(v.params.delta))},
                 {"eps", std::string(1, parity_char(v.params.eps))}};
  if (v.differential_exists == Tri::undetermined)
    j["differential_dim"] = "undetermined";
  else
    j["differential_dim"] = v.differential_dim;
  j["localness"] = v.localness;
  j["psi_sp"] = v.in_psi_sp;
  j["h_bound"] = v.h_bound;
  j["source_irreducible"] = v.source_irreducible;
  j["clauses"] = v.conditions_fired;
  j["source"] = v.source;
  return j;
}

}  // namespace sbolab
