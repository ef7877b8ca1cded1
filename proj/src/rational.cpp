#include "spintaut/rational.hpp"

#include <stdexcept>
#include <vector>

namespace spintaut {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  Integer num, den(1);
  try {
    if (slash == std::string::npos) {
      num = Integer(s);
    } else {
      num = Integer(s.substr(0, slash));
      den = Integer(s.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational power(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer double_factorial(int n) {
  Integer out(1);
  for (int k = n; k > 1; k -= 2) out *= k;
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational bernoulli(unsigned n) {
  // Akiyama-Tanigawa gives B_1 = +1/2; flip that single sign.
  std::vector<Rational> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
  }
  Rational b = a[0];
  if (n == 1) b = -b;
  return b;
}

}  // namespace spintaut
