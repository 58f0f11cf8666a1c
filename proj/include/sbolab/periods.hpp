#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace sbolab {

/// Label of an irreducible unitary representation of O(n+1,1) with
/// nonzero relative Lie algebra cohomology: index in [0, n+1] and a sign
/// character. There are 2(n+1) of them for each n.
struct CohomRep {
  int n = 0;       // the group is O(n+1,1)
  int index = 0;   // in [0, n+1]
  char sgn = '+';  // '+' or '-'

  CohomRep(int n_, int index_, char sgn_) : n(n_), index(index_), sgn(sgn_) {
    if (index < 0 || index > n + 1)
      throw std::invalid_argument("CohomRep: index range");
    if (sgn != '+' && sgn != '-')
      throw std::invalid_argument("CohomRep: sign");
  }

  friend bool operator==(const CohomRep& a, const CohomRep& b) {
    return a.n == b.n && a.index == b.index && a.sgn == b.sgn;
  }
};

/// Symmetry breaking between cohomological representations of
/// O(n+1,1) > O(n,1): allowed iff the subgroup index lies in
/// {index-1, index} and the signs agree. pi must live one rank below Pi.
bool branching_allowed(const CohomRep& Pi, const CohomRep& pi);

/// Largest k for which Pi (sign +) is guaranteed O(k,1)-distinguished:
/// n + 1 - index. Throws for sign '-'.
int max_period(const CohomRep& Pi);

/// Temperedness of the representation by the index criterion: index
/// equal to (n+1)/2 for n odd, in {n/2, n/2+1} for n even.
bool is_tempered_rep(const CohomRep& Pi);

/// Temperedness of L^2(O(n+1,1)/O(k,1)): k <= n/2 + 1.
bool l2_tempered(int n, int k);

/// The four one-dimensional representations: indices 0 and n+1, both
/// signs. (0,+) is the trivial one, (n+1,-) the determinant.
std::vector<CohomRep> one_dim_reps(int n);

nlohmann::ordered_json branching_table_json(int n);
std::string branching_table_markdown(int n);

}  // namespace sbolab
