#include "sipoly/real_line.hpp"

#include <string>

#include "sipoly/errors.hpp"
#include "sipoly/inertia.hpp"
#include "sipoly/oracle.hpp"
#include "sipoly/polynomial_core.hpp"

namespace sipoly {

namespace {

template <Scalar S>
void require_real(const Poly<S>& f, const char* what) {
  if (f.is_zero()) throw DomainError(std::string(what) + ": zero polynomial");
  if (!has_real_coeffs(f)) throw DomainError(std::string(what) + ": coefficients must be real");
}

template <Scalar S>
std::size_t dim_of(const Poly<S>& f) {
  return static_cast<std::size_t>(f.degree());
}

/// Table of p(x) q(y) (no conjugation on q).
template <Scalar S>
Matrix<S> plain_outer(const Poly<S>& p, const Poly<S>& q, std::size_t size) {
  return outer_table(p, q.conj_coeffs(), size, size);
}

/// [ (p(x) q(y) - q(x) p(y)) / (x - y) ]_n
template <Scalar S>
HermitianForm<S> bezoutian(const Poly<S>& p, const Poly<S>& q, std::size_t n, const char* kind) {
  const std::size_t size = n + 1;
  const Matrix<S> num = plain_outer(p, q, size) - plain_outer(q, p, size);
  return divisible_quotient(num, Divisor::XMinusY, n, kind);
}

template <Scalar S>
S imag_part(const S& z) {
  if constexpr (is_exact_v<S>) {
    return GaussRational(z.im());
  } else {
    return Complex(z.imag(), 0.0);
  }
}

template <Scalar S>
bool positive_imag(const S& z) {
  if constexpr (is_exact_v<S>) {
    return sgn(z.im()) > 0;
  } else {
    return z.imag() > 0.0;
  }
}

template <Scalar S>
double relative(const Matrix<S>& diff, const Matrix<S>& ref) {
  const double scale = frobenius_norm(ref);
  const double d = frobenius_norm(diff);
  return scale > 0.0 ? d / scale : d;
}

}  // namespace

template <Scalar S>
HermitianForm<S> hankel_form(const Poly<S>& f) {
  require_real(f, "hankel_form");
  const std::size_t n = dim_of(f);
  Matrix<S> m(n, n);
  if (n == 0) return {std::move(m), "HankelBorchardt", 0.0};
  const auto s = power_sums(f, static_cast<int>(2 * n - 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) m(i, k) = s[i + k];
  return {std::move(m), "HankelBorchardt", 0.0};
}

template <Scalar S>
HermitianForm<S> bezout_form(const Poly<S>& f) {
  require_real(f, "bezout_form");
  return bezoutian(f, f.derivative(), dim_of(f), "BezoutK");
}

template <Scalar S>
HermitianForm<S> hermite_k1_form(const Poly<S>& f) {
  require_real(f, "hermite_k1_form");
  const S n = from_ratio<S>(f.degree());
  const Poly<S> fc = f * n - f.derivative().shifted(1);
  return bezoutian(fc, f.derivative(), dim_of(f), "HermiteK1");
}

template <Scalar S>
HermitianForm<S> hurwitz_form(const Poly<S>& f, const Poly<S>& F) {
  require_real(f, "hurwitz_form");
  require_real(F, "hurwitz_form");
  if (f.degree() != F.degree()) throw DomainError("hurwitz_form: polynomials must have equal degree");
  return bezoutian(F, f, dim_of(f), "HurwitzPair");
}

template <Scalar S>
HermitianForm<S> halfplane_form(const Poly<S>& F) {
  if (F.is_zero()) throw DomainError("halfplane_form: zero polynomial");
  const std::size_t n = dim_of(F);
  const std::size_t size = n + 1;
  // outer_table(p, q) = p(x) conj(q)(y): F(x) conj(F)(y) - conj(F)(x) F(y).
  const Matrix<S> num =
      (outer_table(F, F, size, size) - outer_table(F.conj_coeffs(), F.conj_coeffs(), size, size)) *
      (-imaginary_unit<S>());
  return divisible_quotient(num, Divisor::XMinusY, n, "HalfPlane");
}

template <Scalar S>
HermitianForm<S> build_real_form(const RealFormKind<S>& kind) {
  return std::visit(
      [](const auto& k) -> HermitianForm<S> {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, HankelOf<S>>) return hankel_form(k.f);
        else if constexpr (std::is_same_v<K, BezoutOf<S>>) return bezout_form(k.f);
        else if constexpr (std::is_same_v<K, HermiteK1Of<S>>) return hermite_k1_form(k.f);
        else if constexpr (std::is_same_v<K, HurwitzOf<S>>) return hurwitz_form(k.f, k.F);
        else return halfplane_form(k.F);
      },
      kind);
}

const char* to_string(LineMethod m) {
  switch (m) {
    case LineMethod::Borchardt: return "Borchardt";
    case LineMethod::BezoutK: return "BezoutK";
    case LineMethod::HermiteK1: return "HermiteK1";
    case LineMethod::Oracle: return "Oracle";
  }
  return "Borchardt";
}

std::optional<LineMethod> parse_line_method(std::string_view text) {
  for (auto m : {LineMethod::Borchardt, LineMethod::BezoutK, LineMethod::HermiteK1, LineMethod::Oracle})
    if (text == to_string(m)) return m;
  if (text == "borchardt" || text == "hankel") return LineMethod::Borchardt;
  if (text == "bezout") return LineMethod::BezoutK;
  if (text == "hermite") return LineMethod::HermiteK1;
  if (text == "oracle") return LineMethod::Oracle;
  return std::nullopt;
}

template <Scalar S>
LineCount count_real_line(const Poly<S>& f, LineMethod method, std::optional<double> tol) {
  require_real(f, "count_real_line");
  LineCount c;
  if (f.degree() == 0) return c;
  if (method == LineMethod::Oracle) {
    c = line_tally(classify_line(find_roots(f)));
    c.kernel = f.degree() - c.distinct_real - 2 * c.distinct_conjugate_pairs;
    return c;
  }
  HermitianForm<S> form;
  switch (method) {
    case LineMethod::Borchardt: form = hankel_form(f); break;
    case LineMethod::BezoutK: form = bezout_form(f); break;
    case LineMethod::HermiteK1: {
      form = hermite_k1_form(f);
      form.entries += gram_form(f.derivative(), dim_of(f));
      form.entries *= from_ratio<S>(1, f.degree());
      break;
    }
    case LineMethod::Oracle: break;
  }
  const Inertia in = inertia_of(form, tol);
  c.distinct_real = in.positive - in.negative;
  c.distinct_conjugate_pairs = in.negative;
  c.kernel = in.zero;
  if (c.distinct_real < 0) throw InconsistencyError("real-line form has more negative than positive squares");
  return c;
}

template <Scalar S>
LineCount count_halfplane(const Poly<S>& F, std::optional<double> tol) {
  LineCount c;
  if (F.is_zero()) throw DomainError("count_halfplane: zero polynomial");
  if (F.degree() == 0) return c;
  const Inertia in = inertia_of(halfplane_form(F), tol);
  c.upper = in.positive;
  c.lower = in.negative;
  c.kernel = in.zero;
  return c;
}

template <Scalar S>
InterlaceVerdict real_interlace_test(const Poly<S>& f, const Poly<S>& F, std::optional<double> tol) {
  InterlaceVerdict v;
  if (f.degree() != F.degree() || f.degree() < 1) {
    v.reason = InterlaceReason::DegreeMismatch;
    return v;
  }
  switch (definiteness_of(hurwitz_form(f, F), tol)) {
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
InterlaceVerdict derivative_interlace_real(const Poly<S>& f, const Poly<S>& F, std::optional<double> tol) {
  if (!real_interlace_test(f, F, tol).interlacing)
    throw DomainError("derivative_interlace_real: f and F do not interlace");
  return real_interlace_test(f.derivative(), F.derivative(), tol);
}

template <Scalar S>
HalfPlaneCheck derivative_pencil_count(const Poly<S>& f, const S& z, std::optional<double> tol) {
  require_real(f, "derivative_pencil_count");
  if (!positive_imag(z)) throw DomainError("derivative_pencil_count: Im z must be positive");
  HalfPlaneCheck r;
  r.observed = count_halfplane(f.derivative() - f * z, tol).upper;
  r.claimed = count_real_line(f, LineMethod::Borchardt, tol).distinct_conjugate_pairs;
  return r;
}

template <Scalar S>
double k1_identity_defect(const Poly<S>& f) {
  const Matrix<S> k = bezout_form(f).entries;
  Matrix<S> rhs = hermite_k1_form(f).entries + gram_form(f.derivative(), dim_of(f));
  rhs *= from_ratio<S>(1, f.degree());
  return relative(k - rhs, k);
}

template <Scalar S>
double halfplane_identity_defect(const Poly<S>& f, const Poly<S>& F, const S& z) {
  if (is_zero(imag_part(z))) throw DomainError("halfplane_identity_defect: Im z must be nonzero");
  const Matrix<S> hurwitz = hurwitz_form(f, F).entries;
  const Poly<S> p = f - F * z;
  // Same dimension as the Hurwitz form even if the leading terms cancel.
  const std::size_t n = dim_of(f);
  const std::size_t size = n + 1;
  const Matrix<S> num =
      (outer_table(p, p, size, size) - outer_table(p.conj_coeffs(), p.conj_coeffs(), size, size)) *
      (-imaginary_unit<S>());
  const Matrix<S> lhs = divisible_quotient(num, Divisor::XMinusY, n, "HalfPlane").entries;
  const Matrix<S> rhs = hurwitz * (imag_part(z) * from_ratio<S>(-2));
  return relative(lhs - rhs, hurwitz);
}

#define SIPOLY_INSTANTIATE(S)                                                                                 \
  template HermitianForm<S> hankel_form(const Poly<S>&);                                                      \
  template HermitianForm<S> bezout_form(const Poly<S>&);                                                      \
  template HermitianForm<S> hermite_k1_form(const Poly<S>&);                                                  \
  template HermitianForm<S> hurwitz_form(const Poly<S>&, const Poly<S>&);                                     \
  template HermitianForm<S> halfplane_form(const Poly<S>&);                                                   \
  template HermitianForm<S> build_real_form(const RealFormKind<S>&);                                          \
  template LineCount count_real_line(const Poly<S>&, LineMethod, std::optional<double>);                      \
  template LineCount count_halfplane(const Poly<S>&, std::optional<double>);                                  \
  template InterlaceVerdict real_interlace_test(const Poly<S>&, const Poly<S>&, std::optional<double>);       \
  template InterlaceVerdict derivative_interlace_real(const Poly<S>&, const Poly<S>&, std::optional<double>); \
  template HalfPlaneCheck derivative_pencil_count(const Poly<S>&, const S&, std::optional<double>);           \
  template double k1_identity_defect(const Poly<S>&);                                                         \
  template double halfplane_identity_defect(const Poly<S>&, const Poly<S>&, const S&);

SIPOLY_INSTANTIATE(Complex)
SIPOLY_INSTANTIATE(GaussRational)

#undef SIPOLY_INSTANTIATE

}  // namespace sipoly
