#include "sipoly/interlacing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sipoly/circle_count.hpp"
#include "sipoly/errors.hpp"
#include "sipoly/forms.hpp"
#include "sipoly/inertia.hpp"
#include "sipoly/oracle.hpp"
#include "sipoly/polynomial_core.hpp"

namespace sipoly {

const char* to_string(InterlaceSign s) { return s == InterlaceSign::Positive ? "Positive" : "Negative"; }

const char* to_string(InterlaceReason r) {
  switch (r) {
    case InterlaceReason::Indefinite: return "Indefinite";
    case InterlaceReason::Degenerate: return "Degenerate";
    case InterlaceReason::DegreeMismatch: return "DegreeMismatch";
  }
  return "Indefinite";
}

template <Scalar S>
InterlaceVerdict interlace_test(const Poly<S>& g, const Poly<S>& h, std::optional<double> tol) {
  InterlaceVerdict v;
  if (g.degree() != h.degree() || g.degree() < 1) {
    v.reason = InterlaceReason::DegreeMismatch;
    return v;
  }
  const auto form = pair_form(rotate_to_symmetric(g), rotate_to_symmetric(h));
  switch (definiteness_of(form, tol)) {
    case Definiteness::PositiveDefinite:
      v.interlacing = true;
      v.sign = InterlaceSign::Positive;
      break;
    case Definiteness::NegativeDefinite:
      v.interlacing = true;
      v.sign = InterlaceSign::Negative;
      break;
    case Definiteness::Degenerate: v.reason = InterlaceReason::Degenerate; break;
    case Definiteness::Indefinite: v.reason = InterlaceReason::Indefinite; break;
  }
  return v;
}

template <Scalar S>
InterlaceVerdict derivative_interlace(const Poly<S>& g, const Poly<S>& h, std::optional<double> tol) {
  if (!interlace_test(g, h, tol).interlacing) throw DomainError("derivative_interlace: g and h do not interlace");
  const S i = imaginary_unit<S>();
  return interlace_test(delta(rotate_to_symmetric(g)) * i, delta(rotate_to_symmetric(h)) * i, tol);
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxMove = kPi / 8.0;
constexpr int kMaxHalvings = 40;

double wrap(double a) { return std::remainder(a, 2.0 * kPi); }  // (-pi, pi]

/// Root arguments of f = g + t h, sorted in [0, 2 pi). Every root must lie
/// on the circle within rho.
std::vector<double> pencil_arguments(const FloatPoly& g, const FloatPoly& h, double t, double rho) {
  const FloatPoly f = g + h * Complex(t, 0.0);
  if (f.degree() != g.degree()) throw InconsistencyError("pencil member lost degree at t = " + std::to_string(t));
  const RootSet rs = classify_circle(find_roots(f), rho);
  for (const auto& r : rs.roots)
    if (r.circle_tag != CircleTag::OnCircle)
      throw InconsistencyError("pencil root " + std::to_string(std::abs(r.value)) + " off the circle at t = " +
                               std::to_string(t));
  return root_arguments(rs);
}

/// Match `next` (sorted) to the tracked arguments by the cyclic shift that
/// minimizes the total wrapped displacement; return the displacements.
std::vector<double> match(const std::vector<double>& tracked, const std::vector<double>& next) {
  const std::size_t n = tracked.size();
  std::vector<double> best;
  double best_cost = 0.0;
  for (std::size_t shift = 0; shift < n; ++shift) {
    std::vector<double> moves(n);
    double cost = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      moves[j] = wrap(next[(j + shift) % n] - tracked[j]);
      cost += std::abs(moves[j]);
    }
    if (best.empty() || cost < best_cost) {
      best = std::move(moves);
      best_cost = cost;
    }
  }
  return best;
}

struct Tracker {
  const FloatPoly& g;
  const FloatPoly& h;
  double rho;
  std::vector<double> arguments;
  std::vector<int> signs;  // per root: +1 / -1 once a move was seen
  bool monotone = true;

  void record(const std::vector<double>& moves) {
    constexpr double kNoise = 1e-12;
    for (std::size_t j = 0; j < moves.size(); ++j) {
      arguments[j] += moves[j];
      if (std::abs(moves[j]) <= kNoise) continue;
      const int s = moves[j] > 0 ? 1 : -1;
      if (signs[j] == 0) signs[j] = s;
      else if (signs[j] != s) monotone = false;
    }
  }

  // Advance from t0 to t1, halving the step while any root moves too far.
  void advance(double t0, double t1, int depth) {
    const auto next = pencil_arguments(g, h, t1, rho);
    const auto moves = match(arguments, next);
    const double largest = std::abs(*std::max_element(moves.begin(), moves.end(),
                                                      [](double a, double b) { return std::abs(a) < std::abs(b); }));
    if (largest > kMaxMove && depth < kMaxHalvings) {
      const double mid = 0.5 * (t0 + t1);
      advance(t0, mid, depth + 1);
      advance(mid, t1, depth + 1);
      return;
    }
    record(moves);
  }
};

bool interlaces_numerically(const FloatPoly& a, const FloatPoly& b, double rho) {
  return oracle_interlace(a, b, rho).interlacing;
}

}  // namespace

template <Scalar S>
PencilTrace pencil_trace(const Poly<S>& g_in, const Poly<S>& h_in, const std::vector<double>& t_samples, double rho) {
  if (!interlace_test(g_in, h_in).interlacing) throw DomainError("pencil_trace: g and h do not interlace");
  for (std::size_t j = 1; j < t_samples.size(); ++j)
    if (!(t_samples[j] > t_samples[j - 1])) throw DomainError("pencil_trace: t samples must be strictly increasing");

  const FloatPoly g = to_float(rotate_to_symmetric(g_in));
  const FloatPoly h = to_float(rotate_to_symmetric(h_in));
  PencilTrace trace;
  if (t_samples.empty()) return trace;

  Tracker tracker{g, h, rho, pencil_arguments(g, h, t_samples.front(), rho),
                  std::vector<int>(static_cast<std::size_t>(g.degree()), 0)};
  for (std::size_t j = 0; j < t_samples.size(); ++j) {
    const double t = t_samples[j];
    if (j > 0) tracker.advance(t_samples[j - 1], t, 0);
    trace.samples.push_back({t, tracker.arguments});

    const FloatPoly f = g + h * Complex(t, 0.0);
    if (!interlaces_numerically(f, h, rho)) trace.interlaces = false;
    if (t != 0.0 && !interlaces_numerically(f, g, rho)) trace.interlaces = false;
  }

  trace.monotone = tracker.monotone;
  int direction = 0;
  for (int s : tracker.signs) {
    if (s == 0) continue;
    if (direction == 0) direction = s;
    else if (direction != s) trace.monotone = false;
  }
  trace.direction = direction;
  return trace;
}

template <Scalar S>
double mapping_form_identity(const Poly<S>& g, const Poly<S>& h, const S& z) {
  const Complex zc = to_complex(z);
  if constexpr (is_exact_v<S>) {
    if (sgn(z.im()) == 0) throw DomainError("mapping_form_identity: Im z must be nonzero");
  } else {
    if (zc.imag() == 0.0) throw DomainError("mapping_form_identity: Im z must be nonzero");
  }
  if (g.degree() != h.degree() || g.degree() < 1)
    throw DomainError("mapping_form_identity: g and h must have equal positive degree");
  if (!is_symmetric(g) || !is_symmetric(h)) throw DomainError("mapping_form_identity: g and h must be symmetric");

  const int n = g.degree();
  const Poly<S> f = h - g * z;
  const Matrix<S> lhs = schur_cohn_form(f, n, static_cast<std::size_t>(n)).entries;
  const Matrix<S> pair = pair_form(g, h).entries;
  S eta;
  if constexpr (is_exact_v<S>) {
    eta = S(z.im());
  } else {
    eta = Complex(zc.imag(), 0.0);
  }
  const Matrix<S> rhs = pair * (eta * from_ratio<S>(2));
  const double scale = frobenius_norm(pair);
  const double defect = frobenius_norm(lhs - rhs);
  return scale > 0.0 ? defect / scale : defect;
}

#define SIPOLY_INSTANTIATE(S)                                                                                   \
  template InterlaceVerdict interlace_test(const Poly<S>&, const Poly<S>&, std::optional<double>);              \
  template InterlaceVerdict derivative_interlace(const Poly<S>&, const Poly<S>&, std::optional<double>);        \
  template PencilTrace pencil_trace(const Poly<S>&, const Poly<S>&, const std::vector<double>&, double);        \
  template double mapping_form_identity(const Poly<S>&, const Poly<S>&, const S&);

SIPOLY_INSTANTIATE(Complex)
SIPOLY_INSTANTIATE(GaussRational)

#undef SIPOLY_INSTANTIATE

}  // namespace sipoly
