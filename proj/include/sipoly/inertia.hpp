#pragma once

#include <optional>

#include "sipoly/forms.hpp"

namespace sipoly {

/// (pi, nu, d): positive, negative and zero squares of a Hermitian form.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  int dimension() const { return positive + negative + zero; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

enum class Definiteness { PositiveDefinite, NegativeDefinite, Indefinite, Degenerate };

const char* to_string(Definiteness d);

/// n * eps * max(1, ||A||_inf), eps the binary64 unit roundoff.
double default_zero_threshold(const Matrix<Complex>& a);

/// Float mode: eigenvalues of the Hermitian matrix; |lambda| <= tol counts
/// as zero (tol defaults to default_zero_threshold). Throws DomainError if
/// the input departs from Hermitian by more than 1e-12 * ||A||.
Inertia inertia(const Matrix<Complex>& a, std::optional<double> tol = std::nullopt);

/// Exact mode: Hermitian congruence reduction with largest-diagonal pivots and
/// 2x2 hyperbolic blocks when the diagonal vanishes. Throws DomainError if
/// the input is not exactly Hermitian.
Inertia inertia(const Matrix<GaussRational>& a);

/// Mode-generic entry point; tol is ignored in exact mode.
template <Scalar S>
Inertia inertia_of(const HermitianForm<S>& form, std::optional<double> tol = std::nullopt) {
  if constexpr (is_exact_v<S>) {
    return inertia(form.entries);
  } else {
    return inertia(form.entries, tol);
  }
}

Definiteness definiteness(const Inertia& in);

template <Scalar S>
Definiteness definiteness_of(const HermitianForm<S>& form, std::optional<double> tol = std::nullopt) {
  return definiteness(inertia_of(form, tol));
}

}  // namespace sipoly
