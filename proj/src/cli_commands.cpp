#include "sbolab/cli_commands.hpp"

#include <ostream>

#include "sbolab/classifier.hpp"
#include "sbolab/covariance.hpp"
#include "sbolab/gegenbauer.hpp"
#include "sbolab/operators.hpp"
#include "sbolab/periods.hpp"
#include "sbolab/solver.hpp"

namespace sbolab {

namespace {

std::optional<SboOperator> construct_canonical(int n, int i, int j,
                                               const Rational& lambda, int k,
                                               std::string* error) {
  if (j == i) return matrix_operator_ii(n, i, lambda, k);
  if (j == i + 1 && i == 0) {
    if (!(lambda.is_integer() && lambda.sign() <= 0 &&
          Rational(k) == Rational(1) - lambda)) {
      *error = "E^0 -> E^1 family requires lambda in -N and k = 1 - lambda";
      return std::nullopt;
    }
    return d_juhl_operator(n, lambda);
  }
  if (j == i + 1 && 1 <= i && i <= n - 2) {
    if (!lambda.is_zero() || k != 1) {
      *error = "E^i -> E^{i+1} family exists only at lambda = 0, k = 1";
      return std::nullopt;
    }
    return rest_d_operator(n, i);
  }
  *error = "no operator family for these degrees";
  return std::nullopt;
}

}  // namespace

std::optional<SboOperator> construct_operator(const ConstructRequest& req,
                                              std::string* error) {
  int n = req.n, i = req.i, j = req.j;
  if (n < 3 || i < 0 || i > n || j < 0 || j > n - 1) {
    *error = "degree ranges: need n >= 3, 0 <= i <= n, 0 <= j <= n-1";
    return std::nullopt;
  }
  Rational nu = req.lambda + Rational(req.k) - Rational(j - i);
  // Several star-reduction routes can land on the same (lambda, nu) in
  // distinct parity classes; try them all and prefer a nonzero operator.
  std::optional<SboOperator> fallback;
  std::string first_error;
  auto consider = [&](std::optional<SboOperator> op) -> bool {
    if (!op) return false;
    if (!op->is_zero()) {
      fallback = std::move(op);
      return true;
    }
    if (!fallback) fallback = std::move(op);
    return false;
  };
  auto note_error = [&](const std::string& e) {
    if (first_error.empty()) first_error = e;
  };

  std::string e;
  if (j == i || j == i + 1) {
    if (consider(construct_canonical(n, i, j, req.lambda, req.k, &e)))
      return fallback;
    note_error(e);
  }
  if (n - 1 - j == i || n - 1 - j == i + 1) {
    Rational nu2 = nu + Rational(2 * j - (n - 1));
    int k2 = static_cast<int>(
        (nu2 - req.lambda + Rational(n - 1 - j - i)).num().get_si());
    e.clear();
    auto base = construct_canonical(n, i, n - 1 - j, req.lambda, k2, &e);
    if (base && consider(hodge_transfer(*base, TransferSide::target)))
      return fallback;
    note_error(e);
  }
  if (j == n - i || j == n - i + 1) {
    Rational lam2 = req.lambda + Rational(2 * i - n);
    int k2 =
        static_cast<int>((nu - lam2 + Rational(j - (n - i))).num().get_si());
    e.clear();
    auto base = construct_canonical(n, n - i, j, lam2, k2, &e);
    if (base && consider(hodge_transfer(*base, TransferSide::source)))
      return fallback;
    note_error(e);
  }
  if (j == i - 1 || j == i - 2) {
    Rational lam2 = req.lambda + Rational(2 * i - n);
    Rational nu2 = nu + Rational(2 * j - (n - 1));
    int k2 = static_cast<int>(
        (nu2 - lam2 + Rational((n - 1 - j) - (n - i))).num().get_si());
    e.clear();
    auto base = construct_canonical(n, n - i, n - 1 - j, lam2, k2, &e);
    if (base &&
        consider(hodge_transfer(hodge_transfer(*base, TransferSide::source),
                                TransferSide::target)))
      return fallback;
    note_error(e);
  }
  if (fallback) return fallback;  // degenerate zero operator, flagged upstream
  if (!first_error.empty()) {
    *error = first_error;
    return std::nullopt;
  }
  *error = "degree condition fails: no differential family at (i, j)";
  return std::nullopt;
}

int cmd_classify(const ParamTuple& params, const std::string& format,
                 std::ostream& out, std::ostream& err) {
  if (!valid_ranges(params)) {
    err << "classify: parameter ranges require n >= 3, 0 <= i <= n, "
           "0 <= j <= n-1\n";
    return kExitUsage;
  }
  ClassificationVerdict v = classify(params);
  if (format == "text") {
    out << "dim D = "
        << (v.differential_exists == Tri::undetermined
                ? "undetermined"
                : std::to_string(v.differential_dim))
        << "\nlocalness: " << (v.localness ? "yes" : "no")
        << "\npsi_sp: " << (v.in_psi_sp ? "yes" : "no") << "\nsource: "
        << v.source << "\nclauses:";
    for (const auto& c : v.conditions_fired) out << " [" << c << "]";
    out << "\n";
  } else {
    out << verdict_to_json(v).dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_construct(const ConstructRequest& req, std::ostream& out,
                  std::ostream& err) {
  std::string error;
  auto op = construct_operator(req, &error);
  if (!op) {
    err << "construct: " << error << "\n";
    return kExitUsage;
  }
  nlohmann::ordered_json j = sbo_to_json(*op);
  if (op->is_zero()) j["degenerate"] = true;
  if (req.renormalized) {
    GegenbauerCoeffs fam = renormalize(gegenbauer_symbolic(req.k));
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : fam.coeffs) coeffs.push_back(c.str());
    j["renormalized_family"] = {{"k", req.k}, {"coeffs", std::move(coeffs)}};
  }
  if (req.format == "text") {
    out << op->str() << "\n";
    if (op->is_zero()) out << "degenerate parameters: zero operator\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const SboOperator& op, int max_degree, std::ostream& out,
               std::ostream& err) {
  CovarianceReport rep = check_covariance(op, max_degree);
  if (rep.ok) {
    out << "residual: 0 (exact) on " << rep.residuals_checked
        << " residuals up to polynomial degree " << max_degree << "\n";
    return kExitOk;
  }
  err << "residual: nonzero against " << rep.offender << "\n"
      << rep.detail << "\n";
  return kExitVerificationFailed;
}

int cmd_solve_dim(const ParamTuple& params, const Config& cfg,
                  ResultCache& cache, const std::string& format,
                  std::ostream& out, std::ostream& err) {
  if (!valid_ranges(params)) {
    err << "solve-dim: parameter ranges\n";
    return kExitUsage;
  }
  std::string key = param_key(params);
  bool from_cache = false;
  CachedDimension cached;
  if (auto hit = cache.lookup(key)) {
    cached = *hit;
    from_cache = true;
  } else {
    SolveOptions opts;
    opts.ansatz_cap = cfg.ansatz_cap;
    SolveResult res = solve_sbo_dimension(params, opts);
    cached.dimension = res.dimension;
    cached.skipped = res.skipped;
    if (!res.basis.empty()) cached.basis_hash = basis_hash(res.basis);
    cache.store(key, cached);
    cache.save();
    if (res.skipped) {
      err << "solve-dim: ansatz dimension " << res.ansatz_dim
          << " above cap " << cfg.ansatz_cap << "\n";
      return kExitResourceCap;
    }
  }
  if (from_cache && cached.skipped) {
    err << "solve-dim: cached entry was capped\n";
    return kExitResourceCap;
  }
  if (format == "text") {
    out << "dim = " << cached.dimension
        << (cached.basis_hash.empty() ? "" : "  basis " + cached.basis_hash)
        << (from_cache ? "  (cached)" : "") << "\n";
  } else {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["key"] = key;
    j["dim"] = cached.dimension;
    if (!cached.basis_hash.empty()) j["basis_hash"] = cached.basis_hash;
    j["cached"] = from_cache;
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_sweep(int n, const Config& cfg, ResultCache& cache,
              const std::string& format, std::ostream& out,
              std::ostream& err) {
  if (n < 3 || n > cfg.n_max) {
    err << "sweep: n out of range\n";
    return kExitUsage;
  }
  SolveOptions opts;
  opts.ansatz_cap = cfg.ansatz_cap;
  DimensionTable table = dimension_table(n, cfg.k_max, cfg.lambda_samples,
                                         opts);
  for (const auto& e : table.entries) {
    CachedDimension value;
    value.dimension = e.dimension;
    value.skipped = e.skipped;
    value.basis_hash = e.basis_hash;
    cache.store(param_key(e.params), value);
  }
  cache.save();
  if (format == "text") {
    out << "#  i j k lambda nu delta eps dim\n";
    for (const auto& e : table.entries) {
      out << "   " << e.params.i << " " << e.params.j << " " << e.k << " "
          << e.params.lambda.str() << " " << e.params.nu.str() << " "
          << parity_char(e.params.delta) << " " << parity_char(e.params.eps)
          << " " << (e.skipped ? "skipped" : std::to_string(e.dimension))
          << "\n";
    }
  } else {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["n"] = n;
    j["k_max"] = cfg.k_max;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& e : table.entries) {
      nlohmann::ordered_json r;
      r["i"] = e.params.i;
      r["j"] = e.params.j;
      r["k"] = e.k;
      r["lambda"] = e.params.lambda.str();
      r["nu"] = e.params.nu.str();
      r["delta"] = std::string(1, parity_char(e.params.delta));
      r["eps"] = std::string(1, parity_char(e.params.eps));
      if (e.skipped)
        r["dim"] = "skipped";
      else
        r["dim"] = e.dimension;
      if (!e.basis_hash.empty()) r["basis_hash"] = e.basis_hash;
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_branching(int n, const std::string& format, std::ostream& out,
                  std::ostream& err) {
  if (n < 2) {
    err << "branching: need n >= 2\n";
    return kExitUsage;
  }
  if (format == "text" || format == "markdown")
    out << branching_table_markdown(n);
  else
    out << branching_table_json(n).dump(2) << "\n";
  return kExitOk;
}

}  // namespace sbolab
