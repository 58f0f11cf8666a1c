#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sbolab/params.hpp"

namespace sbolab {

/// Degree condition {j, n-j-1} n {i-2, i-1, i, i+1} != {} for the
/// existence of differential operators between the form degrees.
bool ij_condition(int n, int i, int j);

/// Special-parameter set: nu - lambda in 2N for delta*eps = 1, in 2N+1
/// for delta*eps = -1.
bool psi_sp(const Rational& lambda, const Rational& nu, Parity delta,
            Parity eps);

/// Principal series labels of the conformal representation on i-forms.
struct PsParams {
  int i = 0;
  Rational lambda;
  Parity delta = Parity::even;
};

PsParams normalize_parameters(int i, const Rational& lambda, Parity delta);
PsParams normalize_parameters_inverse(int i, const Rational& lambda,
                                      Parity delta);

enum class Tri { no = 0, yes = 1, undetermined = 2 };

struct QResult {
  Tri value = Tri::undetermined;
  std::vector<std::string> clauses_fired;
  bool used_star_rule = false;  // reached through a Hodge-star reduction
};

/// Existence condition at fixed degrees: the stated clauses for j = i and
/// j = i+1, extended to the remaining cases (and degree coincidences)
/// through the star-transfer parameter rule pinned by the oracle. With
/// use_star_rules = false, cases without a directly stated clause come
/// back undetermined.
QResult q_condition(const ParamTuple& params, bool use_star_rules = true);

struct ClassificationVerdict {
  ParamTuple params;
  Tri differential_exists = Tri::undetermined;
  int differential_dim = 0;  // equals 1 iff differential_exists == yes
  std::vector<std::string> conditions_fired;
  bool localness = false;  // j not in {i-1, i}: every SBO is differential
  bool in_psi_sp = false;
  int h_bound = 4;  // recorded upper bound for the full SBO space
  bool source_irreducible = false;  // lambda + i not an integer
  std::string source;               // "paper" or "oracle"
};

ClassificationVerdict classify(const ParamTuple& params,
                               bool use_star_rules = true);

nlohmann::ordered_json verdict_to_json(const ClassificationVerdict& v);

}  // namespace sbolab
