#include "sipoly/poly.hpp"

namespace sipoly {

FloatPoly to_float(const ExactPoly& g) {
  std::vector<Complex> c;
  c.reserve(g.coeffs().size());
  for (const auto& a : g.coeffs()) c.push_back(a.to_complex());
  return FloatPoly(std::move(c));
}

ExactPoly to_exact(const FloatPoly& g) {
  std::vector<GaussRational> c;
  c.reserve(g.coeffs().size());
  for (const auto& a : g.coeffs()) c.push_back(GaussRational::from_complex(a));
  return ExactPoly(std::move(c));
}

template <Scalar S>
std::pair<Poly<S>, Poly<S>> divmod(const Poly<S>& num, const Poly<S>& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  if (num.degree() < den.degree()) return {Poly<S>{}, num};

  std::vector<S> rem = num.coeffs();
  const auto dn = static_cast<std::size_t>(den.degree());
  std::vector<S> quot(rem.size() - dn, S{});
  const S lead = den.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const S q = rem[k + dn] / lead;
    quot[k] = q;
    for (std::size_t j = 0; j <= dn; ++j) rem[k + j] -= q * den.coeffs()[j];
    // The top coefficient cancels by construction; pin it to an exact zero
    // so float trimming behaves.
    rem[k + dn] = S{};
  }
  rem.resize(dn);
  return {Poly<S>(std::move(quot)), Poly<S>(std::move(rem))};
}

template <Scalar S>
Poly<S> monic(const Poly<S>& a) {
  if (a.is_zero()) return a;
  const S inv = from_ratio<S>(1) / a.leading();
  return a * inv;
}

template <Scalar S>
Poly<S> gcd(const Poly<S>& a, const Poly<S>& b) {
  if constexpr (!is_exact_v<S>) {
    throw UnsupportedModeError("gcd requires exact (Gaussian rational) coefficients");
  } else {
    Poly<S> x = monic(a);
    Poly<S> y = monic(b);
    while (!y.is_zero()) {
      Poly<S> r = divmod(x, y).second;
      x = std::move(y);
      y = monic(r);
    }
    return x;
  }
}

template std::pair<FloatPoly, FloatPoly> divmod(const FloatPoly&, const FloatPoly&);
template std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly&, const ExactPoly&);
template FloatPoly monic(const FloatPoly&);
template ExactPoly monic(const ExactPoly&);
template FloatPoly gcd(const FloatPoly&, const FloatPoly&);
template ExactPoly gcd(const ExactPoly&, const ExactPoly&);

}  // namespace sipoly
