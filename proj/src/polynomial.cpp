#include "annular/polynomial.hpp"

#include <cmath>
#include <vector>

#include "annular/errors.hpp"

namespace annular {

namespace {

Rational rational_pow(const Rational& x, int e) {
  if (e < 0) {
    if (x == 0) throw InvalidArgument("negative power of zero");
    return rational_pow(Rational(1) / x, -e);
  }
  Rational r(1);
  Rational b = x;
  for (unsigned k = static_cast<unsigned>(e); k; k >>= 1) {
    if (k & 1u) r *= b;
    b *= b;
  }
  return r;
}

}  // namespace

Rational pow2(int e) { return rational_pow(Rational(2), e); }

MomentPolynomial MomentPolynomial::monomial(int n_power, int c_power, const Rational& coef) {
  MomentPolynomial p;
  p.add(n_power, c_power, coef);
  return p;
}

void MomentPolynomial::add(int n_power, int c_power, const Rational& coef) {
  if (c_power < 0) throw InvalidArgument("negative power of c");
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace({n_power, c_power}, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MomentPolynomial::coefficient(int n_power, int c_power) const {
  auto it = terms_.find({n_power, c_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

MomentPolynomial MomentPolynomial::coefficient_of_N(int n_power) const {
  MomentPolynomial out;
  for (const auto& [k, v] : terms_) {
    if (k.first == n_power) out.add(0, k.second, v);
  }
  return out;
}

Rational MomentPolynomial::evaluate(const Rational& N, const Rational& c) const {
  Rational sum(0);
  for (const auto& [k, v] : terms_) sum += v * rational_pow(N, k.first) * rational_pow(c, k.second);
  return sum;
}

double MomentPolynomial::evaluate_double(double N, double c) const {
  double sum = 0;
  for (const auto& [k, v] : terms_) {
    sum += static_cast<double>(v) * std::pow(N, k.first) * std::pow(c, k.second);
  }
  return sum;
}

MomentPolynomial& MomentPolynomial::operator+=(const MomentPolynomial& other) {
  for (const auto& [k, v] : other.terms_) add(k.first, k.second, v);
  return *this;
}

MomentPolynomial& MomentPolynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= s;
  return *this;
}

MomentPolynomial operator*(const MomentPolynomial& a, const MomentPolynomial& b) {
  MomentPolynomial out;
  for (const auto& [ka, va] : a.terms_) {
    for (const auto& [kb, vb] : b.terms_) {
      out.add(ka.first + kb.first, ka.second + kb.second, va * vb);
    }
  }
  return out;
}

std::string MomentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Descending N, then descending c.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, v] = *it;
    Rational coef = v;
    if (out.empty()) {
      if (coef < 0) {
        out += "-";
        coef = -coef;
      }
    } else {
      out += coef < 0 ? " - " : " + ";
      if (coef < 0) coef = -coef;
    }
    std::vector<std::string> factors;
    const bool unit = coef == 1;
    if (!unit || (k.first == 0 && k.second == 0)) factors.push_back(coef.str());
    if (k.first == 1) factors.emplace_back("N");
    else if (k.first != 0) factors.push_back("N^" + std::to_string(k.first));
    if (k.second == 1) factors.emplace_back("c");
    else if (k.second != 0) factors.push_back("c^" + std::to_string(k.second));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "*";
      out += factors[i];
    }
  }
  return out;
}

}  // namespace annular
