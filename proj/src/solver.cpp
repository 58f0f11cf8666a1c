#include "sbolab/solver.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "sbolab/covariance.hpp"

namespace sbolab {

namespace {

std::vector<Exponents> exponents_of_degree(int vars, int degree) {
  std::vector<Exponents> out;
  Exponents cur(vars, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == vars - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  if (vars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

bool leq(const Exponents& a, const Exponents& b) {
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] > b[t]) return false;
  return true;
}

/// prod_t u_t (u_t - 1) ... (u_t - beta_t + 1), the derivative factor of
/// d^beta x^u.
Rational falling_factor(const Exponents& u, const Exponents& beta) {
  Rational f(1);
  for (std::size_t t = 0; t < u.size(); ++t)
    for (int s = 0; s < beta[t]; ++s) f *= Rational(u[t] - s);
  return f;
}

std::uint64_t pack_exponents(const Exponents& e) {
  std::uint64_t key = 0;
  int shift = 0;
  for (int x : e) {
    if (x > 255) throw std::logic_error("solver: exponent overflow");
    key |= static_cast<std::uint64_t>(x) << shift;
    shift += 8;
  }
  return key;
}

using RationalRow = std::map<int, Rational>;
using IntRow = std::vector<std::pair<int, mpz_class>>;

IntRow normalize_row(const RationalRow& row) {
  IntRow out;
  if (row.empty()) return out;
  mpz_class lcm_den(1);
  for (const auto& [col, v] : row) {
    if (v.is_zero()) continue;
    mpz_class den = v.den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    lcm_den = lcm_den / g * den;
  }
  mpz_class content(0);
  for (const auto& [col, v] : row) {
    if (v.is_zero()) continue;
    mpz_class num = v.num() * (lcm_den / v.den());
    out.emplace_back(col, num);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  if (out.empty()) return out;
  if (out.front().second < 0) content = -content;
  for (auto& [col, v] : out) v /= content;
  return out;
}

int parity_block(const SboAtom& a, int n) {
  int pn = ((a.from.contains(n) ? 1 : 0) + a.beta[n - 1]) & 1;
  int p1 = ((a.from.contains(1) ? 1 : 0) + (a.to.contains(1) ? 1 : 0) +
            a.beta[0]) &
           1;
  return pn * 2 + p1;
}

}  // namespace

AnsatzSpace AnsatzSpace::build(int n, int i, int j, int k) {
  AnsatzSpace sp;
  sp.n = n;
  sp.i = i;
  sp.j = j;
  sp.k = k;
  if (i < 0 || i > n || j < 0 || j > n - 1 || k < 0) return sp;
  auto betas = exponents_of_degree(n, k);
  for (auto I : all_multi_indices(n, i))
    for (auto J : all_multi_indices(n - 1, j))
      for (const auto& b : betas) sp.atoms.push_back({I, J, b});
  return sp;
}

// Rows are assembled once per (n, i, j, k) with entries affine in lambda
// (nu = lambda + k - (j-i) rides along), then instantiated per parameter
// point. Template rows are scaled so the first nonzero coefficient pair
// is canonical, which makes deduplication effective.
struct SystemBuilder::Assembly {
  using Entry = std::tuple<int, Rational, Rational>;  // atom, c0, c1
  std::vector<std::vector<Entry>> rows;
};

SystemBuilder::SystemBuilder(int n, int i, int j, int k)
    : ansatz_(AnsatzSpace::build(n, i, j, k)) {}

std::shared_ptr<const SystemBuilder::Assembly> SystemBuilder::assemble(
    const Rational& /*lambda*/, const Rational& /*nu*/) const {
  if (cached_) return cached_;

  const int n = ansatz_.n;
  const int i = ansatz_.i;
  const int k = ansatz_.k;
  const int weight_shift = k - (ansatz_.j - i);  // nu = lambda + shift
  auto betas = exponents_of_degree(n, k);
  auto Is = all_multi_indices(n, i);
  auto Js = all_multi_indices(n - 1, ansatz_.j);
  std::unordered_map<std::uint32_t, int> I_index;
  for (std::size_t t = 0; t < Is.size(); ++t)
    I_index[Is[t].bits()] = static_cast<int>(t);
  auto atom_index = [&](int iI, int iJ, int iB) {
    return (iI * static_cast<int>(Js.size()) + iJ) *
               static_cast<int>(betas.size()) +
           iB;
  };

  // Informative generators plus a sample of translation/dilation rows
  // that must be identically satisfied by the ansatz reduction.
  std::vector<ConfGenerator> gens;
  std::vector<bool> must_vanish;
  for (const auto& g : subalgebra_generators(n)) {
    bool structural = g.kind == ConfGenerator::Kind::translation ||
                      g.kind == ConfGenerator::Kind::dilation;
    if (structural) {
      bool sampled = g.name == "P1" || g.name == "P" + std::to_string(n - 1) ||
                     g.name == "E";
      if (!sampled) continue;
    }
    gens.push_back(g);
    must_vanish.push_back(structural);
  }

  auto assembly = std::make_shared<Assembly>();
  std::vector<Exponents> test_exps;
  for (int deg = std::max(0, k - 1); deg <= k + 2; ++deg)
    for (auto& e : exponents_of_degree(n, deg)) test_exps.push_back(e);

  // Slot key: target index bits (low 6) then the output monomial.
  auto slot_key = [](std::uint32_t jbits, const Exponents& w) {
    return (pack_exponents(w) << 6) | jbits;
  };

  using Pair = std::pair<Rational, Rational>;
  std::unordered_map<std::uint64_t, std::map<int, Pair>> slots;

  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const ConfGenerator& g = gens[gi];
    ConfGenerator gy = restrict_generator(g);
    // Cache of the target-side action split into Lie and weight parts.
    std::unordered_map<std::uint64_t, std::pair<PolyForm, PolyForm>> y_action;
    auto y_act = [&](int iJ, const Exponents& m)
        -> const std::pair<PolyForm, PolyForm>& {
      std::uint64_t key =
          pack_exponents(m) ^ (static_cast<std::uint64_t>(Js[iJ].bits()) << 56);
      auto it = y_action.find(key);
      if (it == y_action.end()) {
        PolyForm base = PolyForm::monomial(
            n - 1, Js[iJ], Poly::monomial(n - 1, m, Rational(1)));
        PolyForm lie = infinitesimal_action(gy, Rational(0), base);
        PolyForm rho = base;
        rho *= gy.rho;
        it = y_action.emplace(key, std::make_pair(std::move(lie),
                                                  std::move(rho)))
                 .first;
      }
      return it->second;
    };

    for (std::size_t iI = 0; iI < Is.size(); ++iI) {
      for (const auto& a : test_exps) {
        PolyForm alpha =
            PolyForm::monomial(n, Is[iI], Poly::monomial(n, a, Rational(1)));
        PolyForm G0 = infinitesimal_action(g, Rational(0), alpha);
        PolyForm G1 = alpha;
        G1 *= g.rho;
        slots.clear();

        auto scatter_source = [&](const PolyForm& G, bool weight_part) {
          for (const auto& [bits2, poly] : G.components()) {
            int iI2 = I_index.at(bits2);
            for (const auto& [u, q] : poly.terms()) {
              for (std::size_t iB = 0; iB < betas.size(); ++iB) {
                const Exponents& beta = betas[iB];
                if (beta[n - 1] != u[n - 1] || !leq(beta, u)) continue;
                Rational f = falling_factor(u, beta) * q;
                Exponents uprime(u.begin(), u.end() - 1);
                for (int t = 0; t < n - 1; ++t) uprime[t] -= beta[t];
                std::uint64_t base_key = pack_exponents(uprime) << 6;
                for (std::size_t iJ = 0; iJ < Js.size(); ++iJ) {
                  Pair& e = slots[base_key | Js[iJ].bits()][atom_index(
                      iI2, static_cast<int>(iJ), static_cast<int>(iB))];
                  (weight_part ? e.second : e.first) += f;
                }
              }
            }
          }
        };
        scatter_source(G0, false);
        scatter_source(G1, true);

        for (std::size_t iB = 0; iB < betas.size(); ++iB) {
          const Exponents& beta = betas[iB];
          if (beta[n - 1] != a[n - 1] || !leq(beta, a)) continue;
          Rational f = falling_factor(a, beta);
          Exponents m(a.begin(), a.end() - 1);
          for (int t = 0; t < n - 1; ++t) m[t] -= beta[t];
          for (std::size_t iJ = 0; iJ < Js.size(); ++iJ) {
            const auto& [lie, rho] = y_act(static_cast<int>(iJ), m);
            int atom = atom_index(static_cast<int>(iI), static_cast<int>(iJ),
                                  static_cast<int>(iB));
            for (const auto& [jb2, poly] : lie.components())
              for (const auto& [w, qq] : poly.terms())
                slots[slot_key(jb2, w)][atom].first -= qq * f;
            for (const auto& [jb2, poly] : rho.components())
              for (const auto& [w, qq] : poly.terms()) {
                Pair& e = slots[slot_key(jb2, w)][atom];
                // nu * rho = (lambda + shift) * rho
                e.first -= qq * f * Rational(weight_shift);
                e.second -= qq * f;
              }
          }
        }

        for (auto& [key, row] : slots) {
          std::vector<Assembly::Entry> trow;
          Rational lead0, lead1;
          for (auto& [atom, e] : row) {
            if (e.first.is_zero() && e.second.is_zero()) continue;
            if (trow.empty()) {
              lead0 = e.first;
              lead1 = e.second;
            }
            trow.emplace_back(atom, e.first, e.second);
          }
          if (trow.empty()) continue;
          if (must_vanish[gi])
            throw std::logic_error(
                "solver: translation/dilation row not identically satisfied");
          // Canonical scale: first entry with nonzero c0 scaled to c0 = 1,
          // else c1 = 1.
          Rational scale = !lead0.is_zero() ? lead0 : lead1;
          for (auto& [atom, c0, c1] : trow) {
            c0 /= scale;
            c1 /= scale;
          }
          assembly->rows.push_back(std::move(trow));
        }
      }
    }
  }
  std::sort(assembly->rows.begin(), assembly->rows.end(),
            [](const auto& x, const auto& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              for (std::size_t t = 0; t < x.size(); ++t) {
                if (std::get<0>(x[t]) != std::get<0>(y[t]))
                  return std::get<0>(x[t]) < std::get<0>(y[t]);
                if (std::get<1>(x[t]) != std::get<1>(y[t]))
                  return std::get<1>(x[t]) < std::get<1>(y[t]);
                if (std::get<2>(x[t]) != std::get<2>(y[t]))
                  return std::get<2>(x[t]) < std::get<2>(y[t]);
              }
              return false;
            });
  assembly->rows.erase(
      std::unique(assembly->rows.begin(), assembly->rows.end()),
      assembly->rows.end());
  cached_ = assembly;
  return assembly;
}

struct SystemBuilder::Instantiated {
  std::vector<IntRow> rows;
};

IntertwiningSystem SystemBuilder::build(const ParamTuple& params) const {
  IntertwiningSystem sys;
  sys.params = params;
  sys.k = ansatz_.k;
  sys.ansatz = ansatz_;
  std::string key = params.lambda.str();
  if (!inst_ || inst_key_ != key) {
    auto assembly = assemble(params.lambda, params.nu);
    auto inst = std::make_shared<Instantiated>();
    RationalRow rat;
    inst->rows.reserve(assembly->rows.size());
    for (const auto& trow : assembly->rows) {
      rat.clear();
      for (const auto& [atom, c0, c1] : trow) {
        Rational v = c0 + params.lambda * c1;
        if (!v.is_zero()) rat[atom] = v;
      }
      IntRow norm = normalize_row(rat);
      if (!norm.empty()) inst->rows.push_back(std::move(norm));
    }
    std::sort(inst->rows.begin(), inst->rows.end());
    inst->rows.erase(std::unique(inst->rows.begin(), inst->rows.end()),
                     inst->rows.end());
    inst_key_ = key;
    inst_ = inst;
  }
  sys.rows = inst_->rows;
  // Reflection rows: sigma_n and sigma_1 covariance reduce to per-atom
  // parity constraints, entering as singleton rows.
  int db = parity_bit(params.delta);
  int eb = parity_bit(params.eps);
  int want = (db * 2) + ((db + eb) % 2);
  for (std::size_t t = 0; t < ansatz_.atoms.size(); ++t) {
    int block = parity_block(ansatz_.atoms[t], params.n);
    if ((block >> 1) != (want >> 1))  // sigma_n mismatch
      sys.rows.push_back({{static_cast<int>(t), mpz_class(1)}});
    if ((block & 1) != (want & 1))  // sigma_1 mismatch
      sys.rows.push_back({{static_cast<int>(t), mpz_class(1)}});
  }
  return sys;
}

IntertwiningSystem build_system(const ParamTuple& params) {
  Rational order = params.nu - params.lambda + Rational(params.j - params.i);
  if (!order.is_integer() || order.sign() < 0)
    throw std::invalid_argument("build_system: order not in N");
  int k = static_cast<int>(order.num().get_si());
  SystemBuilder builder(params.n, params.i, params.j, k);
  return builder.build(params);
}

SolveResult nullspace(const IntertwiningSystem& system) {
  SolveResult res;
  res.params = system.params;
  res.k = system.k;
  res.ansatz_dim = system.ansatz.dimension();
  const int ncols = static_cast<int>(system.ansatz.atoms.size());

  std::vector<IntRow> rows = system.rows;
  enum class ColState { free_col, dead, pivot };
  std::vector<ColState> state(ncols, ColState::free_col);
  std::vector<bool> alive(rows.size(), true);
  std::vector<std::vector<int>> col_rows(ncols);
  std::vector<int> col_count(ncols, 0);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) {
      col_rows[c].push_back(static_cast<int>(r));
      ++col_count[c];
    }

  std::deque<int> singles;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].size() == 1) singles.push_back(static_cast<int>(r));

  struct Retired {
    int pivot;
    IntRow row;
  };
  std::vector<Retired> echelon;

  auto remove_row_from_counts = [&](int r) {
    for (const auto& [c, v] : rows[r]) --col_count[c];
  };

  auto kill_column = [&](int c) {
    state[c] = ColState::dead;
    for (int r : col_rows[c]) {
      if (!alive[r]) continue;
      auto it = std::lower_bound(
          rows[r].begin(), rows[r].end(), c,
          [](const std::pair<int, mpz_class>& e, int col) { return e.first < col; });
      if (it == rows[r].end() || it->first != c) continue;
      rows[r].erase(it);
      --col_count[c];
      if (rows[r].empty())
        alive[r] = false;
      else if (rows[r].size() == 1)
        singles.push_back(r);
    }
    col_rows[c].clear();
    col_count[c] = 0;
  };

  auto process_singles = [&]() {
    while (!singles.empty()) {
      int r = singles.front();
      singles.pop_front();
      if (!alive[r] || rows[r].size() != 1) continue;
      int c = rows[r].front().first;
      alive[r] = false;
      --col_count[c];
      if (state[c] == ColState::free_col) kill_column(c);
    }
  };

  process_singles();
  while (true) {
    // Deterministic pivot choice: the free column covered by the fewest
    // live rows, lowest index on ties; then the shortest row, lowest
    // index on ties.
    int best_col = -1;
    for (int c = 0; c < ncols; ++c) {
      if (state[c] != ColState::free_col || col_count[c] == 0) continue;
      if (best_col < 0 || col_count[c] < col_count[best_col]) best_col = c;
    }
    if (best_col < 0) break;
    int pivot_row = -1;
    {
      std::vector<int> live;
      for (int r : col_rows[best_col])
        if (alive[r] &&
            std::binary_search(rows[r].begin(), rows[r].end(),
                               std::make_pair(best_col, mpz_class(0)),
                               [](const auto& x, const auto& y) {
                                 return x.first < y.first;
                               }))
          live.push_back(r);
      std::sort(live.begin(), live.end());
      live.erase(std::unique(live.begin(), live.end()), live.end());
      col_rows[best_col] = live;
      col_count[best_col] = static_cast<int>(live.size());
      for (int r : live)
        if (pivot_row < 0 || rows[r].size() < rows[pivot_row].size() ||
            (rows[r].size() == rows[pivot_row].size() && r < pivot_row))
          pivot_row = r;
    }
    if (pivot_row < 0) {
      col_count[best_col] = 0;
      continue;
    }

    const IntRow prow = rows[pivot_row];
    mpz_class p;
    for (const auto& [c, v] : prow)
      if (c == best_col) p = v;

    for (int r : col_rows[best_col]) {
      if (r == pivot_row || !alive[r]) continue;
      mpz_class q(0);
      for (const auto& [c, v] : rows[r])
        if (c == best_col) q = v;
      if (q == 0) continue;
      // fraction-free update: row <- p*row - q*pivot, gcd-normalized
      IntRow merged;
      merged.reserve(rows[r].size() + prow.size());
      auto ita = rows[r].begin();
      auto itb = prow.begin();
      mpz_class content(0), val;
      while (ita != rows[r].end() || itb != prow.end()) {
        int ca = ita != rows[r].end() ? ita->first : 1 << 30;
        int cb = itb != prow.end() ? itb->first : 1 << 30;
        int c = std::min(ca, cb);
        val = 0;
        if (ca == c) {
          val += p * ita->second;
          ++ita;
        }
        if (cb == c) {
          val -= q * itb->second;
          ++itb;
        }
        if (val != 0) {
          merged.emplace_back(c, val);
          mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), val.get_mpz_t());
        }
      }
      if (!merged.empty()) {
        if (merged.front().second < 0) content = -content;
        for (auto& [c, v] : merged) v /= content;
      }
      remove_row_from_counts(r);
      rows[r] = std::move(merged);
      for (const auto& [c, v] : rows[r]) {
        ++col_count[c];
        if (c != best_col) col_rows[c].push_back(r);
      }
      if (rows[r].empty())
        alive[r] = false;
      else if (rows[r].size() == 1)
        singles.push_back(r);
    }

    alive[pivot_row] = false;
    remove_row_from_counts(pivot_row);
    state[best_col] = ColState::pivot;
    echelon.push_back({best_col, prow});
    col_rows[best_col].clear();
    col_count[best_col] = 0;
    process_singles();
  }

  std::vector<int> free_cols;
  for (int c = 0; c < ncols; ++c)
    if (state[c] == ColState::free_col) free_cols.push_back(c);
  res.dimension = static_cast<int>(free_cols.size());

  SboSignature sig{system.params.n,      system.params.i,
                   system.params.j,      system.params.lambda,
                   system.params.nu,     system.params.delta,
                   system.params.eps};
  for (int f : free_cols) {
    std::vector<Rational> x(ncols, Rational(0));
    x[f] = Rational(1);
    for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
      Rational acc(0);
      Rational pv;
      for (const auto& [c, v] : it->row) {
        Rational rv{mpq_class(v)};
        if (c == it->pivot)
          pv = rv;
        else if (!x[c].is_zero())
          acc += rv * x[c];
      }
      x[it->pivot] = -acc / pv;
    }
    // Integer-normalize with positive leading (free) coordinate.
    mpz_class lcm_den(1), g;
    for (int c = 0; c < ncols; ++c) {
      if (x[c].is_zero()) continue;
      mpz_class den = x[c].den();
      mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
      lcm_den = lcm_den / g * den;
    }
    mpz_class content(0);
    std::vector<SboTerm> terms;
    for (int c = 0; c < ncols; ++c) {
      if (x[c].is_zero()) continue;
      mpz_class num = x[c].num() * (lcm_den / x[c].den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    for (int c = 0; c < ncols; ++c) {
      if (x[c].is_zero()) continue;
      const SboAtom& at = system.ansatz.atoms[c];
      mpz_class num = x[c].num() * (lcm_den / x[c].den()) / content;
      terms.push_back(SboTerm{at.from, at.to, at.beta, Rational(mpq_class(num))});
    }
    res.basis.emplace_back(sig, std::move(terms));
  }
  return res;
}

SolveResult solve_sbo_dimension(const ParamTuple& params,
                                const SolveOptions& opts) {
  SolveResult res;
  res.params = params;
  if (!valid_ranges(params))
    throw std::invalid_argument("solve_sbo_dimension: parameter ranges");
  Rational order = params.nu - params.lambda + Rational(params.j - params.i);
  if (!order.is_integer() || order.sign() < 0) {
    res.short_circuit = true;
    res.dimension = 0;
    return res;
  }
  int k = static_cast<int>(order.num().get_si());
  res.k = k;
  SystemBuilder builder(params.n, params.i, params.j, k);
  res.ansatz_dim = builder.ansatz().dimension();
  if (res.ansatz_dim > opts.ansatz_cap) {
    res.skipped = true;
    res.dimension = -1;
    return res;
  }
  res = nullspace(builder.build(params));
  if (opts.verify_basis) {
    res.basis_verified = true;
    for (const auto& op : res.basis) {
      if (!check_covariance_symbolic(op).ok)
        throw std::logic_error("solver: basis vector failed re-verification");
    }
  }
  return res;
}

DimensionTable dimension_table(int n, int k_max,
                               const std::vector<Rational>& lambdas,
                               const SolveOptions& opts) {
  DimensionTable table;
  table.n = n;
  table.k_max = k_max;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n - 1; ++j) {
      for (int k = 0; k <= k_max; ++k) {
        SystemBuilder builder(n, i, j, k);
        long dim = builder.ansatz().dimension();
        for (const auto& lambda : lambdas) {
          for (Parity delta : {Parity::even, Parity::odd}) {
            for (Parity eps : {Parity::even, Parity::odd}) {
              ParamTuple p{n, i, j, lambda,
                           lambda + Rational(k) - Rational(j - i), delta, eps};
              DimensionEntry entry;
              entry.params = p;
              entry.k = k;
              if (dim > opts.ansatz_cap) {
                entry.skipped = true;
                entry.dimension = -1;
              } else {
                SolveResult res = nullspace(builder.build(p));
                if (opts.verify_basis) {
                  for (const auto& op : res.basis)
                    if (!check_covariance_symbolic(op).ok)
                      throw std::logic_error(
                          "solver: basis vector failed re-verification");
                }
                entry.dimension = res.dimension;
                if (res.dimension > 0) entry.basis_hash = basis_hash(res.basis);
              }
              table.entries.push_back(std::move(entry));
            }
          }
        }
      }
    }
  }
  return table;
}

std::string basis_hash(const std::vector<SboOperator>& basis) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& op : basis) {
    std::string s = sbo_to_json(op).dump();
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string("fnv1a:") + buf;
}

}  // namespace sbolab
