#include "sipoly/circle_count.hpp"

#include <string>

#include "sipoly/errors.hpp"
#include "sipoly/forms.hpp"
#include "sipoly/inertia.hpp"
#include "sipoly/oracle.hpp"
#include "sipoly/polynomial_core.hpp"

namespace sipoly {

const char* to_string(CircleMethod m) {
  switch (m) {
    case CircleMethod::SchurCohnRecursive: return "SchurCohnRecursive";
    case CircleMethod::PowerSum: return "PowerSum";
    case CircleMethod::Krein: return "Krein";
    case CircleMethod::CohnDerivative: return "CohnDerivative";
    case CircleMethod::Oracle: return "Oracle";
  }
  return "SchurCohnRecursive";
}

std::optional<CircleMethod> parse_circle_method(std::string_view text) {
  for (auto m : {CircleMethod::SchurCohnRecursive, CircleMethod::PowerSum, CircleMethod::Krein,
                 CircleMethod::CohnDerivative, CircleMethod::Oracle})
    if (text == to_string(m)) return m;
  if (text == "schur-cohn" || text == "schurcohn") return CircleMethod::SchurCohnRecursive;
  if (text == "power-sum" || text == "powersum") return CircleMethod::PowerSum;
  if (text == "krein") return CircleMethod::Krein;
  if (text == "cohn" || text == "cohn-derivative") return CircleMethod::CohnDerivative;
  if (text == "oracle") return CircleMethod::Oracle;
  return std::nullopt;
}

template <Scalar S>
Poly<S> rotate_to_symmetric(const Poly<S>& g) {
  if (g.is_zero()) throw DomainError("zero polynomial has no symmetry class");
  if (!symmetrizing_factor(g)) throw DomainError("method requires a symmetric polynomial (up to a unimodular factor)");
  return make_symmetric(g);
}

namespace {

template <Scalar S>
constexpr Exactness exactness_for(bool degenerate) {
  if constexpr (is_exact_v<S>) {
    return Exactness::Exact;
  } else {
    return degenerate ? Exactness::FloatHeuristic : Exactness::FloatCertified;
  }
}

template <Scalar S>
CircleCount constant_count() {
  CircleCount c;
  c.distinct_on = 0;
  c.distinct_pairs = 0;
  c.exactness = exactness_for<S>(false);
  return c;
}

/// Symmetric route: the inertia of PowerSum / Krein gives distinct counts;
/// gcd(g, g') carries every root with its multiplicity reduced by one.
template <Scalar S>
CircleCount count_symmetric(const Poly<S>& g, CircleMethod method, std::optional<double> tol) {
  if (g.degree() <= 0) return constant_count<S>();
  const HermitianForm<S> form = method == CircleMethod::PowerSum ? power_sum_form(g) : krein_form(g);
  const Inertia in = inertia_of(form, tol);
  const int p = in.positive - in.negative;
  const int q = in.negative;
  if (p < 0) throw InconsistencyError("symmetric form has more negative than positive squares");

  CircleCount c;
  c.inside = q;
  c.on = p;
  c.outside = q;
  c.distinct_on = p;
  c.distinct_pairs = q;
  c.exactness = exactness_for<S>(in.zero > 0);
  if (in.zero == 0) return c;

  if constexpr (!is_exact_v<S>) {
    c.unresolved = in.zero;
    c.multiplicity_resolved = false;
    return c;
  } else {
    const Poly<S> d = gcd(g, g.derivative());
    if (d.degree() != in.zero)
      throw InconsistencyError("kernel dimension " + std::to_string(in.zero) + " differs from deg gcd(g, g') = " +
                               std::to_string(d.degree()));
    Poly<S> ds;
    try {
      ds = make_symmetric(d);
    } catch (const DomainError&) {
      throw InconsistencyError("gcd(g, g') of a symmetric polynomial is not symmetric");
    }
    const CircleCount sub = count_symmetric(ds, method, tol);
    c.inside += sub.inside;
    c.on += sub.on;
    c.outside += sub.outside;
    return c;
  }
}

template <Scalar S>
CircleCount count_schur_cohn(const Poly<S>& g, std::optional<double> tol) {
  if (g.degree() <= 0) return constant_count<S>();
  const Inertia in = inertia_of(schur_cohn_form(g), tol);
  CircleCount c;
  c.inside = in.positive;
  c.outside = in.negative;
  c.exactness = exactness_for<S>(in.zero > 0);
  if (in.zero == 0) return c;

  if constexpr (!is_exact_v<S>) {
    c.unresolved = in.zero;
    c.multiplicity_resolved = false;
    return c;
  } else {
    const Poly<S> d = gcd(g, adjoint(g));
    if (d.degree() != in.zero)
      throw InconsistencyError("kernel dimension " + std::to_string(in.zero) + " differs from deg gcd(g, g*) = " +
                               std::to_string(d.degree()));
    Poly<S> ds;
    try {
      ds = make_symmetric(d);
    } catch (const DomainError&) {
      throw InconsistencyError("gcd(g, g*) is not symmetric up to a constant");
    }
    const CircleCount sub = count_symmetric(ds, CircleMethod::Krein, tol);
    c.inside += sub.inside;
    c.on += sub.on;
    c.outside += sub.outside;
    c.distinct_on = sub.distinct_on;
    return c;
  }
}

template <Scalar S>
CircleCount count_cohn(const Poly<S>& g, std::optional<double> tol) {
  const int n = g.degree();
  if (n <= 0) return constant_count<S>();
  const CircleCount derived = count_schur_cohn(g.derivative(), tol);
  if (derived.unresolved > 0) {
    // g' has roots on the circle, i.e. g has multiple roots there; float
    // mode cannot resolve them along this route either.
    return count_symmetric(g, CircleMethod::Krein, tol);
  }
  CircleCount c;
  c.inside = derived.outside;
  c.outside = derived.outside;
  c.on = n - 2 * derived.outside;
  if (c.on < 0) throw InconsistencyError("derivative has more roots outside than the polynomial allows");
  c.exactness = derived.exactness;
  return c;
}

}  // namespace

template <Scalar S>
CircleCount count_circle(const Poly<S>& g, CircleMethod method, std::optional<double> tol) {
  if (g.is_zero()) throw DomainError("count_circle: zero polynomial");
  switch (method) {
    case CircleMethod::SchurCohnRecursive: return count_schur_cohn(g, tol);
    case CircleMethod::PowerSum:
    case CircleMethod::Krein: return count_symmetric(rotate_to_symmetric(g), method, tol);
    case CircleMethod::CohnDerivative: return count_cohn(rotate_to_symmetric(g), tol);
    case CircleMethod::Oracle: return g.degree() <= 0 ? constant_count<S>() : oracle_circle_count(g);
  }
  throw DomainError("count_circle: unknown method");
}

template <Scalar S>
std::vector<Poly<S>> gcd_chain(const Poly<S>& g) {
  if constexpr (!is_exact_v<S>) {
    throw UnsupportedModeError("gcd_chain requires exact (Gaussian rational) coefficients");
  } else {
    if (g.is_zero()) throw DomainError("gcd_chain: zero polynomial");
    std::vector<Poly<S>> chain{g};
    while (chain.back().degree() > 0) chain.push_back(gcd(chain.back(), chain.back().derivative()));
    return chain;
  }
}

template <Scalar S>
Theorem3Result theorem3_count(const Poly<S>& g, const S& z, std::optional<double> tol) {
  const double xi = to_complex(z).real();
  if constexpr (is_exact_v<S>) {
    if (sgn(z.re()) == 0) throw DomainError("theorem3_count: Re z must be nonzero");
  } else {
    if (xi == 0.0) throw DomainError("theorem3_count: Re z must be nonzero");
  }
  const Poly<S> gs = rotate_to_symmetric(g);
  const Poly<S> f = delta(gs) - gs * z;
  const CircleCount cf = count_circle(f, CircleMethod::SchurCohnRecursive, tol);
  const CircleCount cg = count_circle(gs, CircleMethod::Krein, tol);
  Theorem3Result r;
  r.outside_side = xi > 0;
  r.observed = r.outside_side ? cf.outside : cf.inside;
  r.claimed = cg.inside;
  return r;
}

#define SIPOLY_INSTANTIATE(S)                                                                          \
  template Poly<S> rotate_to_symmetric(const Poly<S>&);                                                \
  template CircleCount count_circle(const Poly<S>&, CircleMethod, std::optional<double>);              \
  template std::vector<Poly<S>> gcd_chain(const Poly<S>&);                                             \
  template Theorem3Result theorem3_count(const Poly<S>&, const S&, std::optional<double>);

SIPOLY_INSTANTIATE(Complex)
SIPOLY_INSTANTIATE(GaussRational)

#undef SIPOLY_INSTANTIATE

}  // namespace sipoly
