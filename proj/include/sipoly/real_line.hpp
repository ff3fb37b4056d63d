#pragma once

// Real-line counterparts of the circle theory: forms whose inertia counts
// real roots, half-plane roots, and decides interlacing of real polynomials.

#include <optional>
#include <string_view>
#include <variant>

#include "sipoly/counts.hpp"
#include "sipoly/forms.hpp"
#include "sipoly/interlacing.hpp"

namespace sipoly {

template <Scalar S>
struct HankelOf {
  Poly<S> f;
};
template <Scalar S>
struct BezoutOf {
  Poly<S> f;
};
template <Scalar S>
struct HermiteK1Of {
  Poly<S> f;
};
/// Numerator F(x) f(y) - F(y) f(x), in this order.
template <Scalar S>
struct HurwitzOf {
  Poly<S> f;
  Poly<S> F;
};
template <Scalar S>
struct HalfPlaneOf {
  Poly<S> F;
};

template <Scalar S>
using RealFormKind = std::variant<HankelOf<S>, BezoutOf<S>, HermiteK1Of<S>, HurwitzOf<S>, HalfPlaneOf<S>>;

/// Entry (i,k) = s_{i+k}. Real f.
template <Scalar S>
HermitianForm<S> hankel_form(const Poly<S>& f);
/// [ (f(x) f'(y) - f'(x) f(y)) / (x - y) ]_n. Real f.
template <Scalar S>
HermitianForm<S> bezout_form(const Poly<S>& f);
/// [ (fc(x) f'(y) - f'(x) fc(y)) / (x - y) ]_n with fc = n f - x f'. Real f.
template <Scalar S>
HermitianForm<S> hermite_k1_form(const Poly<S>& f);
/// [ (F(x) f(y) - F(y) f(x)) / (x - y) ]_n. Real f, F of equal degree.
template <Scalar S>
HermitianForm<S> hurwitz_form(const Poly<S>& f, const Poly<S>& F);
/// [ -i (F(x) conj(F)(y) - conj(F)(x) F(y)) / (x - y) ]_n. Any nonzero F.
template <Scalar S>
HermitianForm<S> halfplane_form(const Poly<S>& F);

/// Dispatch on the kind. Throws DomainError on unmet preconditions and
/// InconsistencyError if a numerator fails to divide by x - y.
template <Scalar S>
HermitianForm<S> build_real_form(const RealFormKind<S>& kind);

enum class LineMethod { Borchardt, BezoutK, HermiteK1, Oracle };

const char* to_string(LineMethod m);
std::optional<LineMethod> parse_line_method(std::string_view text);

/// Distinct real roots and distinct non-real pairs of a real polynomial.
/// HermiteK1 evaluates the inertia of (K1 + [f'(x) f'(y)]_n) / n.
template <Scalar S>
LineCount count_real_line(const Poly<S>& f, LineMethod method, std::optional<double> tol = std::nullopt);

/// upper = pi, lower = nu, kernel = d of the half-plane form of F.
template <Scalar S>
LineCount count_halfplane(const Poly<S>& F, std::optional<double> tol = std::nullopt);

/// Definiteness of the Hurwitz form of (f, F); the sign follows the
/// numerator order F(x) f(y) - F(y) f(x).
template <Scalar S>
InterlaceVerdict real_interlace_test(const Poly<S>& f, const Poly<S>& F, std::optional<double> tol = std::nullopt);

/// real_interlace_test(f', F'); throws DomainError unless f and F interlace.
template <Scalar S>
InterlaceVerdict derivative_interlace_real(const Poly<S>& f, const Poly<S>& F,
                                           std::optional<double> tol = std::nullopt);

struct HalfPlaneCheck {
  int observed = 0;  // roots of f' - z f in Im x > 0
  int claimed = 0;   // non-real pairs of f
  bool holds() const { return observed == claimed; }
};

/// For real f and Im z > 0: upper count of f' - z f against the pair count
/// of f (Borchardt route). Throws DomainError if Im z <= 0 or f is not real.
template <Scalar S>
HalfPlaneCheck derivative_pencil_count(const Poly<S>& f, const S& z, std::optional<double> tol = std::nullopt);

/// || K[f] - K1[f]/n - [f'(x) f'(y)]_n / n ||_F / ||K[f]||_F.
template <Scalar S>
double k1_identity_defect(const Poly<S>& f);

/// || HalfPlane(f - z F) + 2 Im(z) Hurwitz(f, F) ||_F / ||Hurwitz(f, F)||_F.
template <Scalar S>
double halfplane_identity_defect(const Poly<S>& f, const Poly<S>& F, const S& z);

}  // namespace sipoly
