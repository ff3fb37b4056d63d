#pragma once

// Dense univariate polynomials over Complex or GaussRational.
//
// Coefficients are stored ascending by power: coeffs()[k] is a_k. Trailing
// zero coefficients are trimmed on construction, so the zero polynomial is
// the empty coefficient vector and degree() == -1 for it. In float mode only
// exact zeros are trimmed.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "sipoly/errors.hpp"
#include "sipoly/scalar.hpp"

namespace sipoly {

template <Scalar S>
class Poly {
 public:
  using scalar_type = S;

  Poly() = default;
  explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(S value) { return Poly(std::vector<S>{std::move(value)}); }
  /// value * x^power
  static Poly monomial(S value, std::size_t power) {
    std::vector<S> c(power + 1, S{});
    c[power] = std::move(value);
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<S>& coeffs() const { return c_; }

  /// a_k, or zero past the degree.
  S coeff(std::size_t k) const { return k < c_.size() ? c_[k] : S{}; }
  const S& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  S operator()(const S& x) const {
    S acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<S> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * from_ratio<S>(static_cast<long>(k));
    return Poly(std::move(d));
  }

  /// Coefficientwise conjugate (the polynomial written \bar g).
  Poly conj_coeffs() const {
    std::vector<S> d(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) d[k] = conj(c_[k]);
    return Poly(std::move(d));
  }

  /// Multiply by x^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<S> d(k, S{});
    d.insert(d.end(), c_.begin(), c_.end());
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S{});
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S{});
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const S& s) {
    for (auto& a : c_) a *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return a * from_ratio<S>(-1); }
  friend Poly operator*(Poly a, const S& s) { return a *= s; }
  friend Poly operator*(const S& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> d(a.c_.size() + b.c_.size() - 1, S{});
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t k = 0; k < b.c_.size(); ++k) d[i + k] += a.c_[i] * b.c_[k];
    return Poly(std::move(d));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && sipoly::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<S> c_;
};

using FloatPoly = Poly<Complex>;
using ExactPoly = Poly<GaussRational>;

FloatPoly to_float(const ExactPoly& g);
inline FloatPoly to_float(const FloatPoly& g) { return g; }
/// Exact image of a float polynomial (each double is a dyadic rational).
ExactPoly to_exact(const FloatPoly& g);
inline ExactPoly to_exact(const ExactPoly& g) { return g; }

/// Largest coefficient modulus; 0 for the zero polynomial.
template <Scalar S>
double max_coeff(const Poly<S>& g) {
  double m = 0.0;
  for (const auto& a : g.coeffs()) m = std::max(m, magnitude(a));
  return m;
}

/// Quotient and remainder of Euclidean division; divisor must be nonzero.
template <Scalar S>
std::pair<Poly<S>, Poly<S>> divmod(const Poly<S>& num, const Poly<S>& den);

/// Monic gcd over the Gaussian rationals. Float mode throws
/// UnsupportedModeError: approximate gcd is not a well-posed operation.
template <Scalar S>
Poly<S> gcd(const Poly<S>& a, const Poly<S>& b);

/// a / lead(a)
template <Scalar S>
Poly<S> monic(const Poly<S>& a);

}  // namespace sipoly
