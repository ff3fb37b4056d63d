#pragma once

// Symmetry notions relative to the unit circle and the constructions the
// Hermitian forms are assembled from.
//
// A polynomial of degree n is *symmetric* (self-inversive) when it equals
// its adjoint g*(x) = x^n conj(g)(1/x), i.e. a_k = conj(a_{n-k}) for all k,
// and *skew-symmetric* when g* = -g.

#include <optional>
#include <vector>

#include "sipoly/poly.hpp"

namespace sipoly {

inline constexpr double kDefaultSymmetryTol = 1e-10;

enum class SymmetryKind { Symmetric, SkewSymmetric, UnimodularSymmetric, None };

struct SymmetryClass {
  SymmetryKind kind = SymmetryKind::None;
  /// Present for UnimodularSymmetric only: e^{i theta} g is Symmetric.
  std::optional<double> theta;
};

const char* to_string(SymmetryKind kind);

/// g*(x) = x^n conj(g)(1/x) with n = deg g.
template <Scalar S>
Poly<S> adjoint(const Poly<S>& g);

/// Adjoint taken with respect to a formal degree m >= deg g.
template <Scalar S>
Poly<S> adjoint(const Poly<S>& g, int formal_degree);

/// Float mode compares |a_k - conj(a_{n-k})| against tol * max_k |a_k|;
/// exact mode ignores tol.
template <Scalar S>
SymmetryClass classify_symmetry(const Poly<S>& g, double tol = kDefaultSymmetryTol);

/// A nonzero constant c with c*g Symmetric, or nullopt when no such
/// constant exists. Exact mode returns a Gaussian rational (1 + w, where
/// w = conj(a_n)/a_0), float mode returns e^{i theta}.
template <Scalar S>
std::optional<S> symmetrizing_factor(const Poly<S>& g, double tol = kDefaultSymmetryTol);

/// c*g for the symmetrizing factor c; throws DomainError if there is none.
template <Scalar S>
Poly<S> make_symmetric(const Poly<S>& g, double tol = kDefaultSymmetryTol);

template <Scalar S>
bool is_symmetric(const Poly<S>& g, double tol = kDefaultSymmetryTol) {
  return classify_symmetry(g, tol).kind == SymmetryKind::Symmetric;
}

/// g_delta = (n/2) g - x g'.
template <Scalar S>
Poly<S> delta(const Poly<S>& g);

/// s_0, ..., s_{count-1}: power sums of the roots via Newton's identities on
/// the monic normalization.
template <Scalar S>
std::vector<S> power_sums(const Poly<S>& g, int count);

/// G(phi) = e^{-i n phi / 2} g(e^{i phi}); with `derivative` set, returns
/// G'(phi) = -i e^{-i n phi / 2} g_delta(e^{i phi}) instead.
template <Scalar S>
Complex circle_trace(const Poly<S>& g, double phi, bool derivative = false);

/// f(x) = (x - i)^n g((x + i)/(x - i)) for Symmetric g. The result has real
/// coefficients; in float mode imaginary residue up to tol * max|f_k| is
/// discarded, anything larger is an InconsistencyError.
template <Scalar S>
Poly<S> mobius_to_real(const Poly<S>& g, double tol = kDefaultSymmetryTol);

/// Every coefficient has zero imaginary part (within tol * max|a_k| in float).
template <Scalar S>
bool has_real_coeffs(const Poly<S>& g, double tol = kDefaultSymmetryTol);

}  // namespace sipoly
