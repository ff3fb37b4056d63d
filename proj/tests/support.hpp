#pragma once

#include <complex>
#include <random>
#include <vector>

#include "sipoly/matrix.hpp"
#include "sipoly/poly.hpp"

namespace test {

using sipoly::Complex;
using sipoly::ExactPoly;
using sipoly::FloatPoly;
using sipoly::GaussRational;
using sipoly::Matrix;

inline GaussRational q(long num, long den = 1) { return GaussRational::from_ratio(num, den); }
inline GaussRational gi(long re, long im) { return GaussRational(mpq_class(re), mpq_class(im)); }
inline const GaussRational I = gi(0, 1);

/// sum_{i,k} T(i,k) x^i y^k
template <class S>
Complex eval_bivariate(const Matrix<S>& t, Complex x, Complex y) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t k = 0; k < t.cols(); ++k)
      acc += sipoly::to_complex(t(i, k)) * std::pow(x, static_cast<int>(i)) * std::pow(y, static_cast<int>(k));
  return acc;
}

/// p evaluated at x.
template <class S>
Complex eval(const sipoly::Poly<S>& p, Complex x) {
  Complex acc = 0.0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + sipoly::to_complex(*it);
  return acc;
}

/// conj(p)(y): coefficients conjugated, evaluated at y.
template <class S>
Complex eval_bar(const sipoly::Poly<S>& p, Complex y) {
  return std::conj(eval(p, std::conj(y)));
}

inline Complex random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  return {u(rng), u(rng)};
}

/// Random Gaussian-integer matrix with entries in [-r, r].
inline Matrix<GaussRational> random_integer_matrix(std::size_t n, long r, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> u(-r, r);
  Matrix<GaussRational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) m(i, k) = gi(u(rng), u(rng));
  return m;
}

/// (A + A^H) / 2 style Hermitian part with integer entries: A + A^H.
inline Matrix<GaussRational> hermitian_part(const Matrix<GaussRational>& a) { return a + a.conj_transpose(); }

}  // namespace test
