#include "sbolab/sbo_operator.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace sbolab {

bool operator==(const SboSignature& a, const SboSignature& b) {
  return a.n == b.n && a.i == b.i && a.j == b.j && a.lambda == b.lambda &&
         a.nu == b.nu && a.delta == b.delta && a.eps == b.eps;
}

SboOperator::SboOperator(SboSignature sig, std::vector<SboTerm> terms)
    : sig_(std::move(sig)) {
  std::map<std::tuple<std::uint32_t, std::uint32_t, Exponents>, Rational>
      merged;
  for (auto& t : terms) {
    if (static_cast<int>(t.deriv.size()) != sig_.n)
      throw std::invalid_argument("SboOperator: deriv length mismatch");
    if (t.from.degree() != sig_.i)
      throw std::invalid_argument("SboOperator: source degree mismatch");
    if (t.to.degree() != sig_.j)
      throw std::invalid_argument("SboOperator: target degree mismatch");
    if (t.to.contains(sig_.n))
      throw std::invalid_argument("SboOperator: target contains axis n");
    for (int e : t.deriv)
      if (e < 0) throw std::invalid_argument("SboOperator: negative deriv");
    if (t.coeff.is_zero()) continue;
    auto key = std::make_tuple(t.from.bits(), t.to.bits(), t.deriv);
    auto [it, inserted] = merged.emplace(key, t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  for (const auto& [key, c] : merged) {
    if (c.is_zero()) continue;
    terms_.push_back(SboTerm{MultiIndex::from_bits(std::get<0>(key)),
                             MultiIndex::from_bits(std::get<1>(key)),
                             std::get<2>(key), c});
  }
}

std::optional<int> SboOperator::homogeneous_order() const {
  if (terms_.empty()) return std::nullopt;
  int order = total_degree(terms_.front().deriv);
  for (const auto& t : terms_)
    if (total_degree(t.deriv) != order) return std::nullopt;
  return order;
}

PolyForm SboOperator::apply(const PolyForm& alpha) const {
  if (alpha.dim() != sig_.n)
    throw std::invalid_argument("SboOperator: ambient mismatch");
  if (alpha.form_degree() != sig_.i)
    throw std::invalid_argument("SboOperator: form degree mismatch");
  int out_degree = std::min(sig_.j, sig_.n - 1);  // j = n only for the
  PolyForm out(sig_.n - 1, out_degree);           // identically-zero target
  for (const auto& t : terms_) {
    Poly f = alpha.component(t.from);
    if (f.is_zero()) continue;
    for (int ax = 1; ax <= sig_.n; ++ax)
      for (int rep = 0; rep < t.deriv[ax - 1] && !f.is_zero(); ++rep)
        f = f.derivative(ax);
    if (f.is_zero()) continue;
    Poly g = f.substitute_zero(sig_.n).drop_last_var();
    if (g.is_zero()) continue;
    g *= t.coeff;
    out.add_component(t.to, g);
  }
  return out;
}

SboOperator& SboOperator::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

SboOperator& SboOperator::operator+=(const SboOperator& o) {
  if (sig_.n != o.sig_.n || sig_.i != o.sig_.i || sig_.j != o.sig_.j)
    throw std::invalid_argument("SboOperator: shape mismatch");
  std::vector<SboTerm> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  *this = SboOperator(sig_, std::move(all));
  return *this;
}

bool operator==(const SboOperator& a, const SboOperator& b) {
  if (!(a.sig_ == b.sig_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t t = 0; t < a.terms_.size(); ++t) {
    const auto& x = a.terms_[t];
    const auto& y = b.terms_[t];
    if (!(x.from == y.from) || !(x.to == y.to) || x.deriv != y.deriv ||
        x.coeff != y.coeff)
      return false;
  }
  return true;
}

std::string SboOperator::str() const {
  std::string s = "E^" + std::to_string(sig_.i) + "(R^" +
                  std::to_string(sig_.n) + ")_{" + sig_.lambda.str() + "," +
                  parity_char(sig_.delta) + "} -> E^" + std::to_string(sig_.j) +
                  "(R^" + std::to_string(sig_.n - 1) + ")_{" + sig_.nu.str() +
                  "," + parity_char(sig_.eps) + "}";
  if (terms_.empty()) return s + "\n  0";
  for (const auto& t : terms_) {
    s += "\n  " + t.coeff.str() + " * d^[";
    for (int ax = 0; ax < sig_.n; ++ax) {
      if (ax) s += ",";
      s += std::to_string(t.deriv[ax]);
    }
    s += "] " + t.from.str() + " -> " + t.to.str();
  }
  return s;
}

nlohmann::ordered_json sbo_to_json(const SboOperator& op) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["source"] = {{"n", op.sig().n},
                 {"i", op.sig().i},
                 {"lambda", op.sig().lambda.str()},
                 {"delta", std::string(1, parity_char(op.sig().delta))}};
  j["target"] = {{"j", op.sig().j},
                 {"nu", op.sig().nu.str()},
                 {"epsilon", std::string(1, parity_char(op.sig().eps))}};
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& t : op.terms()) {
    nlohmann::ordered_json jt;
    jt["from"] = t.from.axes();
    jt["to"] = t.to.axes();
    jt["deriv"] = t.deriv;
    jt["coeff"] = t.coeff.str();
    terms.push_back(jt);
  }
  j["terms"] = std::move(terms);
  return j;
}

SboOperator sbo_from_json(const nlohmann::json& j) {
  SboSignature sig;
  sig.n = j.at("source").at("n").get<int>();
  sig.i = j.at("source").at("i").get<int>();
  sig.lambda = Rational::from_string(j.at("source").at("lambda").get<std::string>());
  sig.delta = parity_from_char(j.at("source").at("delta").get<std::string>().at(0));
  sig.j = j.at("target").at("j").get<int>();
  sig.nu = Rational::from_string(j.at("target").at("nu").get<std::string>());
  sig.eps = parity_from_char(j.at("target").at("epsilon").get<std::string>().at(0));
  std::vector<SboTerm> terms;
  for (const auto& jt : j.at("terms")) {
    SboTerm t;
    t.from = MultiIndex::from_axes(jt.at("from").get<std::vector<int>>());
    t.to = MultiIndex::from_axes(jt.at("to").get<std::vector<int>>());
    t.deriv = jt.at("deriv").get<Exponents>();
    t.coeff = Rational::from_string(jt.at("coeff").get<std::string>());
    terms.push_back(std::move(t));
  }
  return SboOperator(sig, std::move(terms));
}

}  // namespace sbolab
