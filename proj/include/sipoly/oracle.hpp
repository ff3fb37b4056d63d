#pragma once

// Ground truth for the form-based counts: numerical roots, their
// classification, angular/linear interlacing by sorting, and structured
// random polynomial ensembles. Nothing here touches a Hermitian form.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sipoly/counts.hpp"
#include "sipoly/poly.hpp"

namespace sipoly {

enum class CircleTag { Inside, OnCircle, Outside };
enum class LineTag { Real, Upper, Lower };

const char* to_string(CircleTag t);
const char* to_string(LineTag t);

struct Root {
  Complex value;
  int multiplicity = 1;
  std::optional<CircleTag> circle_tag;
  std::optional<LineTag> line_tag;
};

struct RootSet {
  std::vector<Root> roots;
  /// Tolerance of the last classification applied (0 if none).
  double tolerance = 0.0;

  int degree() const;
};

inline constexpr double kDefaultCircleTol = 1e-8;
inline constexpr double kClusterRadius = 1e-6;

/// All roots with multiplicities. Roots are polished to ~50 significant
/// digits, then clustered within kClusterRadius * (1 + |r|); a cluster is
/// reported at its centroid. Throws NumericError if the iteration does not
/// converge or the reconstruction a_n prod (x - r)^m misses the input by
/// more than 1e-7 relative.
RootSet find_roots(const FloatPoly& g);
RootSet find_roots(const ExactPoly& g);

/// OnCircle iff ||r| - 1| <= rho.
RootSet classify_circle(RootSet rs, double rho = kDefaultCircleTol);
/// Real iff |Im r| <= tol * max(1, |r|).
RootSet classify_line(RootSet rs, double tol = kDefaultCircleTol);

/// Tally of a circle-classified root set (distinct counts included; a
/// distinct pair is counted once per distinct inside root).
CircleCount circle_tally(const RootSet& rs);
/// Tally of a line-classified root set.
LineCount line_tally(const RootSet& rs);

template <Scalar S>
CircleCount oracle_circle_count(const Poly<S>& g, double rho = kDefaultCircleTol) {
  return circle_tally(classify_circle(find_roots(g), rho));
}

/// Strict alternation of two root sets, with the reason when not.
struct InterlaceCheck {
  bool interlacing = false;
  std::string reason;
};

/// Both polynomials of equal degree, all roots simple and on |x| = 1, and
/// the sorted arguments alternate between them.
template <Scalar S>
InterlaceCheck oracle_interlace(const Poly<S>& g, const Poly<S>& h, double rho = kDefaultCircleTol);

/// Real analogue: all roots real and simple, alternating on the line.
template <Scalar S>
InterlaceCheck oracle_real_interlace(const Poly<S>& f, const Poly<S>& F, double tol = kDefaultCircleTol);

/// Sorted root arguments in [0, 2 pi).
std::vector<double> root_arguments(const RootSet& rs);

// Generators ----------------------------------------------------------------

/// Counter-mode seed splitting: the stream for task `index` does not depend
/// on how tasks are scheduled.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

struct SymmetricParams {
  int on_circle = 0;  // p distinct roots on |x| = 1
  int pairs = 0;      // q distinct pairs beta, 1/conj(beta)
  /// Multiplicity of each planted root is drawn from 1..max_multiplicity.
  int max_multiplicity = 1;
};

/// All generated polynomials have Gaussian rational roots, so the exact and
/// float versions describe the same root configuration. Angles are kept at
/// least 2 pi / (8 n) apart, off-circle moduli lie in [0.3, 0.9] and their
/// reflections in [1/0.9, 1/0.3].
ExactPoly generate_symmetric(const SymmetricParams& params, std::uint64_t seed);

/// Two symmetric polynomials of degree n with strictly alternating roots.
std::pair<ExactPoly, ExactPoly> generate_interlacing_pair(int n, std::uint64_t seed);

/// Two symmetric polynomials of degree n that do not interlace: either all
/// roots on the circle with a broken alternation, or some roots off it.
/// Unless `separated`, shared and double roots are also drawn; those are
/// degenerate and do not survive rounding to double.
std::pair<ExactPoly, ExactPoly> generate_non_interlacing_pair(int n, std::uint64_t seed, bool separated = false);

/// Random complex polynomial of degree n with roots at least `margin` away
/// from the unit circle (root 0 allowed).
ExactPoly generate_general(int n, double margin, std::uint64_t seed);

struct RealParams {
  int real_roots = 0;
  int conjugate_pairs = 0;
};

/// Real polynomial with the requested distinct real roots and pairs.
ExactPoly generate_real(const RealParams& params, std::uint64_t seed);

/// Two real polynomials of degree n with strictly alternating real roots.
std::pair<ExactPoly, ExactPoly> generate_real_interlacing_pair(int n, std::uint64_t seed);

/// Two real polynomials of degree n whose roots do not interlace. Unless
/// `separated`, a shared root is also drawn.
std::pair<ExactPoly, ExactPoly> generate_real_non_interlacing_pair(int n, std::uint64_t seed, bool separated = false);

/// Product of (x - r) over the given Gaussian rational roots.
ExactPoly from_roots(const std::vector<GaussRational>& roots);

/// Rational point on |x| = 1 close to e^{i phi} (Pythagorean parametrization).
GaussRational unimodular_rational(double phi);

}  // namespace sipoly
