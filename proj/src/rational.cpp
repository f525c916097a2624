#include "bcube/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace bcube {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("Rational: empty component in '" + s + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("Rational: bad integer '" + part + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw std::invalid_argument("Rational: bad integer '" + part + "'");
      }
    }
    return mpz_class(part[0] == '+' ? part.substr(1) : part, 10);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  const mpz_class d = parse_int(s.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  return Rational(parse_int(s.substr(0, slash)), d);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class height(const Rational& r) {
  mpz_class n = abs(r.num());
  mpz_class d = r.den();
  return n > d ? n : d;
}

}  // namespace bcube
