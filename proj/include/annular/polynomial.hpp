#pragma once

#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace annular {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact sum of terms coef * N^a * c^b, a any integer, b >= 0. Zero
/// coefficients are never stored.
class MomentPolynomial {
 public:
  using Key = std::pair<int, int>;  // (power of N, power of c)

  MomentPolynomial() = default;
  static MomentPolynomial monomial(int n_power, int c_power, const Rational& coef);

  void add(int n_power, int c_power, const Rational& coef);

  const std::map<Key, Rational>& terms() const noexcept { return terms_; }
  Rational coefficient(int n_power, int c_power = 0) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  /// The coefficient of N^n_power, as a polynomial in c (N power 0).
  MomentPolynomial coefficient_of_N(int n_power) const;

  Rational evaluate(const Rational& N, const Rational& c = Rational(1)) const;
  double evaluate_double(double N, double c = 1.0) const;

  MomentPolynomial& operator+=(const MomentPolynomial& other);
  MomentPolynomial& operator*=(const Rational& s);
  friend MomentPolynomial operator+(MomentPolynomial a, const MomentPolynomial& b) {
    a += b;
    return a;
  }
  friend MomentPolynomial operator*(MomentPolynomial a, const Rational& s) {
    a *= s;
    return a;
  }
  friend MomentPolynomial operator*(const MomentPolynomial& a, const MomentPolynomial& b);
  friend bool operator==(const MomentPolynomial&, const MomentPolynomial&) = default;

  /// Human-readable form such as "1/2*N^3 + 1/4*N". "0" for the zero polynomial.
  std::string to_string() const;

 private:
  std::map<Key, Rational> terms_;
};

/// 2^e as a rational, e of any sign.
Rational pow2(int e);

}  // namespace annular
