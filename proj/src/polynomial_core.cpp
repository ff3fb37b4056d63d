#include "sipoly/polynomial_core.hpp"

#include <cmath>
#include <numbers>

namespace sipoly {

const char* to_string(SymmetryKind kind) {
  switch (kind) {
    case SymmetryKind::Symmetric: return "Symmetric";
    case SymmetryKind::SkewSymmetric: return "SkewSymmetric";
    case SymmetryKind::UnimodularSymmetric: return "UnimodularSymmetric";
    case SymmetryKind::None: return "None";
  }
  return "None";
}

namespace {

template <Scalar S>
void require_nonzero(const Poly<S>& g, const char* op) {
  if (g.is_zero()) throw DomainError(std::string(op) + ": zero polynomial");
}

// |a - b| <= bound in float mode, a == b in exact mode.
template <Scalar S>
bool close(const S& a, const S& b, double bound) {
  if constexpr (is_exact_v<S>) {
    return a == b;
  } else {
    return std::abs(a - b) <= bound;
  }
}

// w * a_k == conj(a_{n-k}) for all k.
template <Scalar S>
bool rotation_matches(const Poly<S>& g, const S& w, double bound) {
  const auto& a = g.coeffs();
  const std::size_t n = a.size() - 1;
  for (std::size_t k = 0; k <= n; ++k)
    if (!close(w * a[k], conj(a[n - k]), bound)) return false;
  return true;
}

}  // namespace

template <Scalar S>
Poly<S> adjoint(const Poly<S>& g, int formal_degree) {
  require_nonzero(g, "adjoint");
  if (formal_degree < g.degree()) throw DomainError("adjoint: formal degree below actual degree");
  std::vector<S> c(static_cast<std::size_t>(formal_degree) + 1, S{});
  for (int k = 0; k <= g.degree(); ++k) c[static_cast<std::size_t>(formal_degree - k)] = conj(g.coeffs()[k]);
  return Poly<S>(std::move(c));
}

template <Scalar S>
Poly<S> adjoint(const Poly<S>& g) {
  require_nonzero(g, "adjoint");
  return adjoint(g, g.degree());
}

template <Scalar S>
SymmetryClass classify_symmetry(const Poly<S>& g, double tol) {
  require_nonzero(g, "classify_symmetry");
  const auto& a = g.coeffs();
  const std::size_t n = a.size() - 1;
  const double bound = tol * max_coeff(g);

  bool symmetric = true;
  bool skew = true;
  for (std::size_t k = 0; k <= n; ++k) {
    symmetric = symmetric && close(a[k], conj(a[n - k]), bound);
    skew = skew && close(a[k], -conj(a[n - k]), bound);
  }
  if (symmetric) return {SymmetryKind::Symmetric, std::nullopt};
  if (skew) return {SymmetryKind::SkewSymmetric, std::nullopt};
  if (is_zero(a[0])) return {SymmetryKind::None, std::nullopt};

  const S w = conj(a[n]) / a[0];
  const double theta = std::arg(to_complex(w)) / 2.0;
  if constexpr (is_exact_v<S>) {
    if (w.norm() != 1) return {SymmetryKind::None, std::nullopt};
    if (!rotation_matches(g, w, 0.0)) return {SymmetryKind::None, std::nullopt};
  } else {
    const Complex rotation = std::polar(1.0, 2.0 * theta);
    if (!rotation_matches(g, rotation, bound)) return {SymmetryKind::None, std::nullopt};
  }
  return {SymmetryKind::UnimodularSymmetric, theta};
}

template <Scalar S>
std::optional<S> symmetrizing_factor(const Poly<S>& g, double tol) {
  const SymmetryClass cls = classify_symmetry(g, tol);
  switch (cls.kind) {
    case SymmetryKind::Symmetric: return from_ratio<S>(1);
    case SymmetryKind::SkewSymmetric: return imaginary_unit<S>();
    case SymmetryKind::None: return std::nullopt;
    case SymmetryKind::UnimodularSymmetric: break;
  }
  if constexpr (is_exact_v<S>) {
    // c / conj(c) = w for c = 1 + w whenever |w| = 1 and w != -1.
    const S w = conj(g.leading()) / g.coeffs()[0];
    const S one = from_ratio<S>(1);
    if (w == -one) return imaginary_unit<S>();
    return one + w;
  } else {
    return std::polar(1.0, *cls.theta);
  }
}

template <Scalar S>
Poly<S> make_symmetric(const Poly<S>& g, double tol) {
  const auto c = symmetrizing_factor(g, tol);
  if (!c) throw DomainError("polynomial is not symmetric up to a unimodular factor");
  Poly<S> out = g * *c;
  if constexpr (!is_exact_v<S>) {
    // Remove the O(eps) asymmetry left by the rotation.
    std::vector<S> a = out.coeffs();
    const std::size_t n = a.size() - 1;
    for (std::size_t k = 0; k <= n / 2; ++k) {
      const S avg = (a[k] + conj(a[n - k])) * 0.5;
      a[k] = avg;
      a[n - k] = conj(avg);
    }
    if (n % 2 == 0) a[n / 2] = Complex(a[n / 2].real(), 0.0);
    out = Poly<S>(std::move(a));
  }
  return out;
}

template <Scalar S>
Poly<S> delta(const Poly<S>& g) {
  require_nonzero(g, "delta");
  const long n = g.degree();
  std::vector<S> c(g.coeffs().size());
  for (long k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = g.coeffs()[static_cast<std::size_t>(k)] * from_ratio<S>(n - 2 * k, 2);
  return Poly<S>(std::move(c));
}

template <Scalar S>
std::vector<S> power_sums(const Poly<S>& g, int count) {
  require_nonzero(g, "power_sums");
  if (count < 1) throw DomainError("power_sums: count must be at least 1");
  const int n = g.degree();
  std::vector<S> monic_coeffs(g.coeffs().size());
  for (std::size_t k = 0; k < monic_coeffs.size(); ++k) monic_coeffs[k] = g.coeffs()[k] / g.leading();

  std::vector<S> s(static_cast<std::size_t>(count), S{});
  s[0] = from_ratio<S>(n);
  for (int k = 1; k < count; ++k) {
    S acc{};
    if (k <= n) acc += monic_coeffs[static_cast<std::size_t>(n - k)] * from_ratio<S>(k);
    for (int j = 1; j <= std::min(k - 1, n); ++j)
      acc += monic_coeffs[static_cast<std::size_t>(n - j)] * s[static_cast<std::size_t>(k - j)];
    s[static_cast<std::size_t>(k)] = -acc;
  }
  return s;
}

template <Scalar S>
Complex circle_trace(const Poly<S>& g, double phi, bool derivative) {
  require_nonzero(g, "circle_trace");
  const int n = g.degree();
  const Complex x = std::polar(1.0, phi);
  const Complex rotation = std::polar(1.0, -0.5 * n * phi);
  const FloatPoly gf = to_float(derivative ? delta(g) : g);
  const Complex value = rotation * gf(x);
  return derivative ? Complex(0.0, -1.0) * value : value;
}

template <Scalar S>
bool has_real_coeffs(const Poly<S>& g, double tol) {
  if constexpr (is_exact_v<S>) {
    return std::all_of(g.coeffs().begin(), g.coeffs().end(), [](const S& a) { return a.is_real(); });
  } else {
    const double bound = tol * max_coeff(g);
    return std::all_of(g.coeffs().begin(), g.coeffs().end(),
                       [bound](const S& a) { return std::abs(a.imag()) <= bound; });
  }
}

template <Scalar S>
Poly<S> mobius_to_real(const Poly<S>& g, double tol) {
  require_nonzero(g, "mobius_to_real");
  if (!is_symmetric(g, tol)) throw DomainError("mobius_to_real: polynomial is not symmetric");
  const int n = g.degree();
  const S i = imaginary_unit<S>();
  const Poly<S> plus{i, from_ratio<S>(1)};    // x + i
  const Poly<S> minus{-i, from_ratio<S>(1)};  // x - i

  std::vector<Poly<S>> plus_pow{Poly<S>::constant(from_ratio<S>(1))};
  std::vector<Poly<S>> minus_pow{Poly<S>::constant(from_ratio<S>(1))};
  for (int k = 1; k <= n; ++k) {
    plus_pow.push_back(plus_pow.back() * plus);
    minus_pow.push_back(minus_pow.back() * minus);
  }
  Poly<S> f;
  for (int k = 0; k <= n; ++k)
    f += plus_pow[static_cast<std::size_t>(k)] * minus_pow[static_cast<std::size_t>(n - k)] * g.coeffs()[static_cast<std::size_t>(k)];

  if (!has_real_coeffs(f, tol)) throw InconsistencyError("mobius_to_real: image has non-real coefficients");
  if constexpr (!is_exact_v<S>) {
    std::vector<S> c = f.coeffs();
    for (auto& a : c) a = Complex(a.real(), 0.0);
    f = Poly<S>(std::move(c));
  }
  return f;
}

#define SIPOLY_INSTANTIATE(S)                                                  \
  template Poly<S> adjoint(const Poly<S>&);                                    \
  template Poly<S> adjoint(const Poly<S>&, int);                               \
  template SymmetryClass classify_symmetry(const Poly<S>&, double);            \
  template std::optional<S> symmetrizing_factor(const Poly<S>&, double);       \
  template Poly<S> make_symmetric(const Poly<S>&, double);                     \
  template Poly<S> delta(const Poly<S>&);                                      \
  template std::vector<S> power_sums(const Poly<S>&, int);                     \
  template Complex circle_trace(const Poly<S>&, double, bool);                 \
  template bool has_real_coeffs(const Poly<S>&, double);                       \
  template Poly<S> mobius_to_real(const Poly<S>&, double);

SIPOLY_INSTANTIATE(Complex)
SIPOLY_INSTANTIATE(GaussRational)
#undef SIPOLY_INSTANTIATE

}  // namespace sipoly
