#include "qrk/rational.hpp"

#include <ostream>

namespace qrk {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational::parse: malformed rational '" + s + "'");
  if (sgn(q.get_den()) == 0)
    throw std::domain_error("Rational::parse: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const { return v_.get_str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  if (r.is_zero()) {
    if (e < 0) throw std::domain_error("Rational: 0 to a negative power");
    return Rational(0);
  }
  mpq_class base = e < 0 ? mpq_class(1 / r.raw()) : r.raw();
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpq_class acc(1), b(base);
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return Rational(acc);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qrk
