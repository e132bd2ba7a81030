#include "hyperlin/polynomial.hpp"

namespace hyperlin {

IntPolynomial falling_factorial_polynomial(int k) {
  IntPolynomial out(BigInt(1));
  for (int i = 0; i < k; ++i) {
    IntPolynomial factor = IntPolynomial::monomial(1);
    factor.add_term(0, BigInt(-i));
    out *= factor;
  }
  return out;
}

PPolynomial one_minus_p_power(int m) {
  PPolynomial out;
  for (int j = 0; j <= m; ++j) {
    BigInt c = binomial(m, j);
    if (j % 2) c = -c;
    out.add_term(j, Rational(c));
  }
  return out;
}

}  // namespace hyperlin
