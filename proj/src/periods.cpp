#include "sbolab/periods.hpp"

namespace sbolab {

bool branching_allowed(const CohomRep& Pi, const CohomRep& pi) {
  if (pi.n != Pi.n - 1)
    throw std::invalid_argument("branching_allowed: group mismatch");
  return Pi.index - 1 <= pi.index && pi.index <= Pi.index && Pi.sgn == pi.sgn;
}

int max_period(const CohomRep& Pi) {
  if (Pi.sgn != '+')
    throw std::invalid_argument("theorem hypothesis violated: sgn must be +");
  return Pi.n + 1 - Pi.index;
}

bool is_tempered_rep(const CohomRep& Pi) {
  if (Pi.n % 2 == 1) return 2 * Pi.index == Pi.n + 1;
  return Pi.index == Pi.n / 2 || Pi.index == Pi.n / 2 + 1;
}

bool l2_tempered(int n, int k) { return 2 * k <= n + 2; }

std::vector<CohomRep> one_dim_reps(int n) {
  return {CohomRep(n, 0, '+'), CohomRep(n, 0, '-'), CohomRep(n, n + 1, '+'),
          CohomRep(n, n + 1, '-')};
}

namespace {

std::string rep_label(const CohomRep& r) {
  std::string s = "Pi_{" + std::to_string(r.index) + "," + r.sgn + "}";
  if (r.index == 0 && r.sgn == '+') s += " (1)";
  if (r.index == r.n + 1 && r.sgn == '-') s += " (det)";
  return s;
}

std::vector<CohomRep> all_reps(int n) {
  std::vector<CohomRep> out;
  for (int l = 0; l <= n + 1; ++l)
    for (char s : {'+', '-'}) out.emplace_back(n, l, s);
  return out;
}

}  // namespace

nlohmann::ordered_json branching_table_json(int n) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["n"] = n;
  j["group"] = "O(" + std::to_string(n + 1) + ",1)";
  j["subgroup"] = "O(" + std::to_string(n) + ",1)";
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (const auto& Pi : all_reps(n)) {
    for (const auto& pi : all_reps(n - 1)) {
      nlohmann::ordered_json row;
      row["Pi"] = {{"index", Pi.index}, {"sgn", std::string(1, Pi.sgn)}};
      row["pi"] = {{"index", pi.index}, {"sgn", std::string(1, pi.sgn)}};
      row["allowed"] = branching_allowed(Pi, pi);
      pairs.push_back(std::move(row));
    }
  }
  j["pairs"] = std::move(pairs);
  nlohmann::ordered_json extras;
  nlohmann::ordered_json onedim = nlohmann::ordered_json::array();
  for (const auto& r : one_dim_reps(n)) onedim.push_back(rep_label(r));
  extras["one_dimensional"] = std::move(onedim);
  nlohmann::ordered_json periods = nlohmann::ordered_json::array();
  for (const auto& r : all_reps(n)) {
    if (r.sgn != '+') continue;
    periods.push_back({{"rep", rep_label(r)},
                       {"max_period", max_period(r)},
                       {"tempered", is_tempered_rep(r)}});
  }
  extras["plus_sign_periods"] = std::move(periods);
  j["summary"] = std::move(extras);
  return j;
}

std::string branching_table_markdown(int n) {
  auto reps = all_reps(n);
  auto subs = all_reps(n - 1);
  std::string s = "| Pi \\ pi |";
  for (const auto& pi : subs)
    s += " " + std::to_string(pi.index) + pi.sgn + " |";
  s += "\n|---|";
  for (std::size_t t = 0; t < subs.size(); ++t) s += "---|";
  s += "\n";
  for (const auto& Pi : reps) {
    s += "| " + std::to_string(Pi.index) + Pi.sgn + " |";
    for (const auto& pi : subs)
      s += std::string(" ") + (branching_allowed(Pi, pi) ? "x" : ".") + " |";
    s += "\n";
  }
  return s;
}

}  // namespace sbolab
