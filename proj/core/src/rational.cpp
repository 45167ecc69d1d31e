#include "sl4cube/rational.hpp"

#include <stdexcept>

namespace sl4cube {

Rational ratio(long a, long b) {
  if (b == 0) throw std::domain_error("ratio: zero denominator");
  Rational q(a, b);
  q.canonicalize();
  return q;
}

Rational factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Rational(0);
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(c);
}

Rational pochhammer(const Rational& a, long n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative length");
  Rational p(1);
  Rational term = a;
  for (long i = 0; i < n; ++i) {
    p *= term;
    if (sgn(p) == 0) break;
    term += 1;
  }
  return p;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace sl4cube
