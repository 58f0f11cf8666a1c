#include "sbolab/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace sbolab {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::from_string(const std::string& s) {
  auto bad = [&]() -> Rational {
    throw std::invalid_argument("Rational: malformed literal '" + s + "'");
  };
  if (s.empty()) return bad();
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') ++pos;
  if (pos == s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    return bad();
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos != s.size()) {
    if (s[pos] != '/') return bad();
    ++pos;
    if (pos == s.size()) return bad();
    std::size_t den_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos != s.size()) return bad();
    if (s.substr(den_start) == std::string(pos - den_start, '0')) {
      throw std::domain_error("Rational: zero denominator in '" + s + "'");
    }
  }
  mpq_class v(s);
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace sbolab
