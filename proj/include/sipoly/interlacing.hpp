#pragma once

// Interlacing of symmetric polynomials on the unit circle, decided by the
// definiteness of the pair form K[g, h], plus the pencil g + t h and the
// identity tying K[g, h] to the Schur-Cohn form of h - z g.

#include <optional>
#include <vector>

#include "sipoly/poly.hpp"

namespace sipoly {

enum class InterlaceSign { Positive, Negative };
enum class InterlaceReason { Indefinite, Degenerate, DegreeMismatch };

const char* to_string(InterlaceSign s);
const char* to_string(InterlaceReason r);

struct InterlaceVerdict {
  bool interlacing = false;
  std::optional<InterlaceSign> sign;      // set iff interlacing
  std::optional<InterlaceReason> reason;  // set iff not interlacing
};

/// Definiteness of K[g, h] for the symmetric rotations of g and h. The sign
/// refers to those rotations; swapping g and h flips it.
template <Scalar S>
InterlaceVerdict interlace_test(const Poly<S>& g, const Poly<S>& h, std::optional<double> tol = std::nullopt);

/// interlace_test(i g_delta, i h_delta). Throws DomainError unless g and h
/// interlace.
template <Scalar S>
InterlaceVerdict derivative_interlace(const Poly<S>& g, const Poly<S>& h, std::optional<double> tol = std::nullopt);

struct PencilSample {
  double t = 0.0;
  /// Root arguments of g + t h, continued from the previous sample; entry j
  /// follows the root that started at the j-th smallest argument.
  std::vector<double> arguments;
};

struct PencilTrace {
  std::vector<PencilSample> samples;
  /// g + t h interlaces h at every sample and g at every sample with t != 0.
  bool interlaces = true;
  /// Every tracked argument is monotone in t, all in the same direction.
  bool monotone = true;
  /// +1 increasing, -1 decreasing, 0 when undetermined (single sample).
  int direction = 0;
};

inline constexpr double kPencilCircleTol = 1e-8;

/// Roots of g + t h at the given strictly increasing t, tracked by
/// continuity; the step is halved internally whenever a root would move more
/// than pi/8. Throws InconsistencyError if a root leaves |x| = 1 by more
/// than rho, DomainError if g, h do not interlace or t is not increasing.
template <Scalar S>
PencilTrace pencil_trace(const Poly<S>& g, const Poly<S>& h, const std::vector<double>& t_samples,
                         double rho = kPencilCircleTol);

/// || H[h - z g] - 2 Im(z) K[g, h] ||_F / ||K[g, h]||_F for symmetric g, h of
/// equal degree, H taken at formal degree n. Throws DomainError if Im z = 0.
template <Scalar S>
double mapping_form_identity(const Poly<S>& g, const Poly<S>& h, const S& z);

}  // namespace sipoly
