#pragma once

// Scalar types shared by every module.
//
// Two coefficient fields are supported: binary64 complex numbers
// (`Complex`) and Gaussian rationals (`GaussRational`, real and imaginary
// parts are arbitrary-precision rationals). Generic code branches on
// `is_exact_v<S>` and talks to scalars only through the free functions in
// this header.

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <type_traits>

#include <gmpxx.h>

namespace sipoly {

using Complex = std::complex<double>;

class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long re) : re_(re) {}  // NOLINT: implicit from integer literals
  GaussRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  /// Exact conversion; every finite double is a dyadic rational.
  static GaussRational from_complex(Complex z);
  static GaussRational from_ratio(long num, long den = 1) { return GaussRational(mpq_class(num, den)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// |z|^2, exact.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussRational conj() const { return GaussRational(re_, -im_); }
  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  GaussRational operator-() const { return GaussRational(-re_, -im_); }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "p/q+r/si" with integer parts printed without denominator.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.to_string(); }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

template <class S>
inline constexpr bool is_exact_v = std::is_same_v<S, GaussRational>;

template <class S>
concept Scalar = std::is_same_v<S, Complex> || std::is_same_v<S, GaussRational>;

inline Complex conj(const Complex& z) { return std::conj(z); }
inline GaussRational conj(const GaussRational& z) { return z.conj(); }

/// Exact zero test in both modes.
inline bool is_zero(const Complex& z) { return z.real() == 0.0 && z.imag() == 0.0; }
inline bool is_zero(const GaussRational& z) { return z.is_zero(); }

inline Complex to_complex(const Complex& z) { return z; }
inline Complex to_complex(const GaussRational& z) { return z.to_complex(); }

/// Approximate modulus, used for norms and diagnostics only.
inline double magnitude(const Complex& z) { return std::abs(z); }
inline double magnitude(const GaussRational& z) { return std::abs(z.to_complex()); }

/// Construct num/den (+ 0i) in the field S.
template <Scalar S>
S from_ratio(long num, long den = 1) {
  if constexpr (is_exact_v<S>) {
    return GaussRational::from_ratio(num, den);
  } else {
    return Complex(static_cast<double>(num) / static_cast<double>(den), 0.0);
  }
}

template <Scalar S>
S imaginary_unit() {
  if constexpr (is_exact_v<S>) {
    return GaussRational(0, 1);
  } else {
    return Complex(0.0, 1.0);
  }
}

/// Exact for GaussRational (dyadic conversion), identity for Complex.
template <Scalar S>
S from_complex(Complex z) {
  if constexpr (is_exact_v<S>) {
    return GaussRational::from_complex(z);
  } else {
    return z;
  }
}

}  // namespace sipoly
