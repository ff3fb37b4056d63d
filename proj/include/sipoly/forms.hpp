#pragma once

// Hermitian forms attached to polynomials.
//
// A bivariate expression sum_{i,k} N_{ik} x^i y^k is read as the Hermitian
// form sum_{i,k<n} N_{ik} x_i conj(x_k); row index = power of x. Every
// circle form is the quotient of a numerator table by (1 - xy), every
// real-line form the quotient by (x - y), so all builders share
// divide_bivariate.

#include <cstddef>
#include <string>
#include <variant>

#include "sipoly/matrix.hpp"
#include "sipoly/poly.hpp"

namespace sipoly {

template <Scalar S>
struct HermitianForm {
  Matrix<S> entries;
  std::string kind;
  /// Norm of the bivariate division remainder (0 certifies divisibility).
  double remainder_norm = 0.0;

  std::size_t n() const { return entries.rows(); }
};

enum class Divisor { OneMinusXY, XMinusY };

/// Relative remainder above which a form that must divide exactly is
/// rejected with InconsistencyError.
inline constexpr double kDivisibilityTol = 1e-8;

template <Scalar S>
struct BivariateQuotient {
  Matrix<S> quotient;  // n x n
  double remainder_norm = 0.0;
};

/// Table with entry (i,k) = p_i * conj(q_k), i.e. p(x) * conj(q)(y),
/// zero-padded to rows x cols.
template <Scalar S>
Matrix<S> outer_table(const Poly<S>& p, const Poly<S>& q, std::size_t rows, std::size_t cols);

/// Quotient of numerator / divisor restricted to indices 0..n-1.
///
/// For 1 - xy the quotient is the truncated series a_{ik} = sum_t N_{i-t,k-t};
/// for x - y it is synthetic division in x. The remainder norm covers both
/// the division remainder and anything truncated away, so it is zero
/// exactly when numerator = divisor * (n x n quotient).
template <Scalar S>
BivariateQuotient<S> divide_bivariate(const Matrix<S>& numerator, Divisor divisor, std::size_t n);

/// divide_bivariate for numerators that must divide exactly: a remainder
/// above kDivisibilityTol * ||N||_F throws InconsistencyError.
template <Scalar S>
HermitianForm<S> divisible_quotient(const Matrix<S>& numerator, Divisor divisor, std::size_t n, std::string kind);

// Circle forms -------------------------------------------------------------

template <Scalar S>
struct SchurCohnOf {
  Poly<S> g;
};
template <Scalar S>
struct PowerSumOf {
  Poly<S> g;
};
template <Scalar S>
struct KreinOf {
  Poly<S> g;
};
template <Scalar S>
struct PairOf {
  Poly<S> g;
  Poly<S> h;
};

template <Scalar S>
using CircleFormKind = std::variant<SchurCohnOf<S>, PowerSumOf<S>, KreinOf<S>, PairOf<S>>;


/// [ (g*(x) conj(g*)(y) - g(x) conj(g)(y)) / (1 - xy) ]_dim, with g* taken
/// relative to formal_degree. The one-argument overload uses deg g for both.
template <Scalar S>
HermitianForm<S> schur_cohn_form(const Poly<S>& g);
template <Scalar S>
HermitianForm<S> schur_cohn_form(const Poly<S>& g, int formal_degree, std::size_t dim);

/// Same form assembled from its squared terms
///   sum_l |conj(a_n) x_l + ... + conj(a_{l+1}) x_{n-1}|^2
///   - sum_l |a_0 x_l + ... + a_{n-1-l} x_{n-1}|^2.
template <Scalar S>
HermitianForm<S> schur_cohn_form_from_squares(const Poly<S>& g);

/// Toeplitz form with entry (i,k) = s_{i-k}, s_{-k} = conj(s_k). Symmetric g only.
template <Scalar S>
HermitianForm<S> power_sum_form(const Poly<S>& g);

/// [ (g(x) conj(g_delta)(y) + g_delta(x) conj(g)(y)) / (1 - xy) ]_n. Symmetric g only.
template <Scalar S>
HermitianForm<S> krein_form(const Poly<S>& g);

/// [ i (g(x) conj(h)(y) - conj(g)(y) h(x)) / (1 - xy) ]_n by series
/// truncation. Symmetric g, h of equal degree.
template <Scalar S>
HermitianForm<S> pair_form(const Poly<S>& g, const Poly<S>& h);

template <Scalar S>
HermitianForm<S> build_circle_form(const CircleFormKind<S>& kind);

/// Z with z = Z x, z_k = a_0 x_k + a_1 x_{k+1} + ... + a_{n-1-k} x_{n-1}
/// (upper triangular, a_0 on the diagonal). Requires a_0 != 0.
template <Scalar S>
Matrix<S> coefficient_transform(const Poly<S>& g);

/// Entry (i,k) = b_i conj(b_k) for the coefficients of p, indices < dim.
template <Scalar S>
Matrix<S> gram_form(const Poly<S>& p, std::size_t dim);

/// ||A - B||_F / ||B||_F (plain ||A - B||_F when B = 0).
template <Scalar S>
double relative_defect(const Matrix<S>& a, const Matrix<S>& b);

/// Congruence between the power-sum and Krein forms of a symmetric g with
/// a_0 != 0: relative defect of conj(Z^H S Z) against K, Z the coefficient
/// transform.
template <Scalar S>
double congruence_defect(const Poly<S>& g);

/// K[g] = H[g'] / n + [g'(x) conj(g')(y)]_n / n for symmetric g, with
/// H[g'] taken at formal degree n - 1 on n variables; returns the relative
/// defect.
template <Scalar S>
double closing_identity_defect(const Poly<S>& g);

/// H[g_delta - z g] = 2 Re(z) K[g] for symmetric g; returns the relative
/// defect.
template <Scalar S>
double delta_pencil_identity_defect(const Poly<S>& g, const S& z);

/// max |A - A^H|; zero for every form built here in exact mode.
template <Scalar S>
double hermitian_defect(const Matrix<S>& a);

}  // namespace sipoly
