#pragma once

#include "hyperlin/numeric.hpp"

#include <map>
#include <string>

namespace hyperlin {

/// Sparse univariate polynomial with exponent -> coefficient storage and no stored zeros.
/// Instantiated for exact rationals in the edge probability p (PPolynomial) and
/// arbitrary-precision integers in the colour count λ (IntPolynomial).
template <class Coeff>
class SparsePolynomial {
 public:
  using Terms = std::map<int, Coeff>;

  SparsePolynomial() = default;
  explicit SparsePolynomial(Coeff constant) { add_term(0, std::move(constant)); }

  static SparsePolynomial monomial(int power, Coeff coeff = Coeff(1)) {
    SparsePolynomial out;
    out.add_term(power, std::move(coeff));
    return out;
  }

  void add_term(int power, const Coeff& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(power, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Coeff coefficient(int power) const {
    const auto it = terms_.find(power);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  int lowest_power() const noexcept { return terms_.empty() ? -1 : terms_.begin()->first; }

  /// Drops all terms above `max_power`.
  SparsePolynomial truncated(int max_power) const {
    SparsePolynomial out;
    for (const auto& [k, c] : terms_) {
      if (k <= max_power) out.terms_.emplace(k, c);
    }
    return out;
  }

  template <class T>
  T evaluate(const T& x) const {
    T acc = 0;
    int at = degree();
    if (at < 0) return acc;
    // Horner over the sparse exponents.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      while (at > it->first) {
        acc *= x;
        --at;
      }
      acc += T(it->second);
    }
    while (at-- > 0) acc *= x;
    return acc;
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, Coeff(-c));
    return *this;
  }
  SparsePolynomial& operator*=(const Coeff& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(SparsePolynomial a, const Coeff& s) { return a *= s; }
  friend SparsePolynomial operator-(SparsePolynomial a) { return a *= Coeff(-1); }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial out;
    for (const auto& [i, x] : a.terms_)
      for (const auto& [j, y] : b.terms_) out.add_term(i + j, Coeff(x * y));
    return out;
  }
  SparsePolynomial& operator*=(const SparsePolynomial& o) { return *this = *this * o; }

  bool operator==(const SparsePolynomial&) const = default;

  /// Human-readable form in the given variable, highest power first, e.g. "x^3 - 3*x^2 + 2*x".
  std::string to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [k, c] = *it;
      const bool negative = c < 0;
      const Coeff mag = negative ? Coeff(-c) : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      const std::string mag_str = hyperlin::to_string(mag);
      if (k == 0) {
        out += mag_str;
        continue;
      }
      if (mag != 1) out += mag_str + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  Terms terms_;
};

using PPolynomial = SparsePolynomial<Rational>;
using IntPolynomial = SparsePolynomial<BigInt>;

/// [λ]_k = λ(λ-1)...(λ-k+1) expanded in the monomial basis.
IntPolynomial falling_factorial_polynomial(int k);

/// (1 - p)^m expanded.
PPolynomial one_minus_p_power(int m);

}  // namespace hyperlin
