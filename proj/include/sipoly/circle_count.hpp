#pragma once

// Root tallies relative to |x| = 1.
//
// Forms give distinct-root information only: a nontrivial kernel means a
// common factor (gcd(g, g*) for the Schur-Cohn form, gcd(g, g') for the
// symmetric forms). Exact mode extracts that factor and recurses on it;
// float mode reports the kernel as unresolved and marks the result
// FloatHeuristic.

#include <optional>
#include <string_view>
#include <vector>

#include "sipoly/counts.hpp"
#include "sipoly/poly.hpp"

namespace sipoly {

enum class CircleMethod { SchurCohnRecursive, PowerSum, Krein, CohnDerivative, Oracle };

const char* to_string(CircleMethod m);
/// Accepts the enumerator name or the short CLI spelling
/// (schur-cohn, power-sum, krein, cohn, oracle).
std::optional<CircleMethod> parse_circle_method(std::string_view text);

/// `tol` is the float-mode zero threshold for inertia (nullopt = default)
/// and is ignored in exact mode. PowerSum, Krein and CohnDerivative require
/// a Symmetric, SkewSymmetric or UnimodularSymmetric input (rotated first).
template <Scalar S>
CircleCount count_circle(const Poly<S>& g, CircleMethod method, std::optional<double> tol = std::nullopt);

/// [g, gcd(g, g'), gcd of that with its derivative, ..., constant].
/// Float mode throws UnsupportedModeError.
template <Scalar S>
std::vector<Poly<S>> gcd_chain(const Poly<S>& g);

struct Theorem3Result {
  /// Roots of f = g_delta - z g outside the circle (Re z > 0) or inside it
  /// (Re z < 0).
  int observed = 0;
  /// Roots of g inside the circle.
  int claimed = 0;
  bool outside_side = true;

  bool holds() const { return observed == claimed; }
};

/// Counts for f = g_delta - z g by the Schur-Cohn route, against the inside
/// count of g by the Krein route. Requires symmetric g and Re z != 0.
template <Scalar S>
Theorem3Result theorem3_count(const Poly<S>& g, const S& z, std::optional<double> tol = std::nullopt);

/// g itself when Symmetric, c g for the symmetrizing constant otherwise;
/// DomainError when g has no symmetric rotation.
template <Scalar S>
Poly<S> rotate_to_symmetric(const Poly<S>& g);

}  // namespace sipoly
