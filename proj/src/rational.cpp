#include "arranger/rational.hpp"

#include <stdexcept>

namespace arranger {

Rat::Rat(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rat: zero denominator");
  v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) throw std::invalid_argument("Rat: zero denominator");
  v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat: empty string");
  for (char c : s) {
    if (c != '-' && c != '+' && c != '/' && !(c >= '0' && c <= '9'))
      throw std::invalid_argument("Rat: bad character in '" + s + "'");
  }
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("Rat: cannot parse '" + s + "'");
  if (v.get_den() == 0) throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
  v.canonicalize();
  return Rat(std::move(v));
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rat::str() const { return v_.get_str(); }

}  // namespace arranger
