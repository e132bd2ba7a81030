#include <doctest.h>

#include "hyperlin/errors.hpp"
#include "hyperlin/numeric.hpp"
#include "hyperlin/partitions.hpp"
#include "hyperlin/polynomial.hpp"

#include <random>

using namespace hyperlin;

TEST_CASE("rational parsing is exact and refuses decimals") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-3/9") == Rational(-1, 3));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("0.5"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x/2"), DomainError);
}

TEST_CASE("decimal parsing gives the rational the literal denotes") {
  CHECK(parse_decimal_exact("0.001") == Rational(1, 1000));
  CHECK(parse_decimal_exact("1.5e-3") == Rational(3, 2000));
  CHECK(parse_decimal_exact("0.05") == Rational(1, 20));
  CHECK(parse_decimal_exact("0.0009") == Rational(9, 10000));
  CHECK(parse_decimal_exact("2E2") == Rational(200));
  CHECK(parse_decimal_exact("0") == Rational(0));
  CHECK(parse_decimal_exact("-0.25") == Rational(-1, 4));
  CHECK_THROWS_AS(parse_decimal_exact("1/2"), DomainError);
  CHECK_THROWS_AS(parse_decimal_exact("1.2.3"), DomainError);
  CHECK_THROWS_AS(parse_decimal_exact(""), DomainError);
}

TEST_CASE("combinatorial helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  CHECK(falling_factorial(6, 4) == 360);
  CHECK(falling_factorial(3, 4) == 0);
  CHECK(falling_factorial(50, 0) == 1);
}

TEST_CASE("set partitions come out once each, Bell many") {
  for (int s = 0; s <= 7; ++s) {
    std::uint64_t count = 0;
    std::vector<std::vector<std::uint32_t>> seen;
    for_each_set_partition(s, [&](std::span<const std::uint32_t> blocks) {
      ++count;
      std::uint32_t all = 0;
      for (auto b : blocks) {
        CHECK((all & b) == 0);
        all |= b;
      }
      CHECK(all == (s == 0 ? 0u : (1u << s) - 1u));
      seen.emplace_back(blocks.begin(), blocks.end());
    });
    CHECK(count == bell_number(s));
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  }
}

TEST_CASE("polynomial arithmetic stays exact and sparse") {
  const PPolynomial p = PPolynomial::monomial(1);
  const PPolynomial q = one_minus_p_power(3);
  CHECK(q.to_string("p") == "-p^3 + 3*p^2 - 3*p + 1");
  CHECK((q * PPolynomial(Rational(0))).is_zero());
  CHECK((p - p).is_zero());
  CHECK((q - q).terms().empty());
  CHECK(one_minus_p_power(0) == PPolynomial(Rational(1)));
  CHECK((p * p).degree() == 2);
  CHECK(q.evaluate(Rational(1, 2)) == Rational(1, 8));
  CHECK(q.truncated(1) == PPolynomial(Rational(1)) - p * Rational(3));
  CHECK(falling_factorial_polynomial(3).to_string("λ") == "λ^3 - 3*λ^2 + 2*λ");
}

TEST_CASE("sparse evaluation matches naive powers") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    PPolynomial poly;
    for (int k = 0; k < 6; ++k) poly.add_term(static_cast<int>(rng() % 12), Rational(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 5)));
    const Rational x(static_cast<long>(rng() % 9) + 1, 10);
    Rational naive = 0;
    for (const auto& [k, c] : poly.terms()) {
      Rational xp = 1;
      for (int i = 0; i < k; ++i) xp *= x;
      naive += c * xp;
    }
    CHECK(poly.evaluate(x) == naive);
  }
}
