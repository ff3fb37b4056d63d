#include "sipoly/forms.hpp"

#include <algorithm>
#include <cmath>

#include "sipoly/polynomial_core.hpp"

namespace sipoly {

namespace {

template <Scalar S>
double sum_sq(const S& v) {
  const double a = magnitude(v);
  return a * a;
}

template <Scalar S>
void require_symmetric(const Poly<S>& g, const char* form) {
  if (g.is_zero()) throw DomainError(std::string(form) + ": zero polynomial");
  if (!is_symmetric(g)) throw DomainError(std::string(form) + ": polynomial is not symmetric");
}

}  // namespace

template <Scalar S>
HermitianForm<S> divisible_quotient(const Matrix<S>& numerator, Divisor divisor, std::size_t n, std::string kind) {
  auto q = divide_bivariate(numerator, divisor, n);
  const double scale = frobenius_norm(numerator);
  if (q.remainder_norm > kDivisibilityTol * scale)
    throw InconsistencyError(kind + ": numerator is not divisible (relative remainder " +
                             std::to_string(q.remainder_norm / scale) + ")");
  return {std::move(q.quotient), std::move(kind), q.remainder_norm};
}

template <Scalar S>
Matrix<S> outer_table(const Poly<S>& p, const Poly<S>& q, std::size_t rows, std::size_t cols) {
  Matrix<S> t(rows, cols);
  const auto& pc = p.coeffs();
  const auto& qc = q.coeffs();
  for (std::size_t i = 0; i < std::min(rows, pc.size()); ++i)
    for (std::size_t k = 0; k < std::min(cols, qc.size()); ++k) t(i, k) = pc[i] * conj(qc[k]);
  return t;
}

template <Scalar S>
BivariateQuotient<S> divide_bivariate(const Matrix<S>& numerator, Divisor divisor, std::size_t n) {
  const std::size_t rows = numerator.rows();
  const std::size_t cols = numerator.cols();
  BivariateQuotient<S> out{Matrix<S>(n, n), 0.0};
  double rem_sq = 0.0;

  if (divisor == Divisor::OneMinusXY) {
    // Series a_{ik} = N_{ik} + a_{i-1,k-1}, evaluated on a window large
    // enough to see every entry of N and of (1 - xy) * quotient.
    const std::size_t r = std::max(rows, n + 1);
    const std::size_t c = std::max(cols, n + 1);
    auto num = [&](std::size_t i, std::size_t k) { return i < rows && k < cols ? numerator(i, k) : S{}; };
    auto quo = [&](std::size_t i, std::size_t k) { return i < n && k < n ? out.quotient(i, k) : S{}; };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        S v = num(i, k);
        if (i > 0 && k > 0) v += out.quotient(i - 1, k - 1);
        out.quotient(i, k) = v;
      }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < c; ++k) {
        S rem = num(i, k) - quo(i, k);
        if (i > 0 && k > 0) rem += quo(i - 1, k - 1);
        rem_sq += sum_sq(rem);
      }
  } else {
    // N(x, y) = sum_i c_i(y) x^i; Q_i = c_{i+1} + y Q_{i+1}; remainder N(y, y).
    if (rows >= 2) {
      const std::size_t qrows = rows - 1;
      const std::size_t qcols = cols + qrows;
      Matrix<S> q(qrows, qcols);
      for (std::size_t i = qrows; i-- > 0;) {
        for (std::size_t k = 0; k < qcols; ++k) {
          S v = k < cols ? numerator(i + 1, k) : S{};
          if (i + 1 < qrows && k > 0) v += q(i + 1, k - 1);
          q(i, k) = v;
        }
      }
      for (std::size_t k = 0; k < qcols + 1; ++k) {
        S rem = k < cols ? numerator(0, k) : S{};
        if (k > 0 && k - 1 < qcols) rem += q(0, k - 1);
        rem_sq += sum_sq(rem);
      }
      for (std::size_t i = 0; i < qrows; ++i)
        for (std::size_t k = 0; k < qcols; ++k) {
          if (i < n && k < n)
            out.quotient(i, k) = q(i, k);
          else
            rem_sq += sum_sq(q(i, k));
        }
    } else {
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) rem_sq += sum_sq(numerator(i, k));
    }
  }
  out.remainder_norm = std::sqrt(rem_sq);
  return out;
}

template <Scalar S>
HermitianForm<S> schur_cohn_form(const Poly<S>& g, int formal_degree, std::size_t dim) {
  if (g.is_zero()) throw DomainError("schur_cohn_form: zero polynomial");
  const Poly<S> gs = adjoint(g, formal_degree);
  const std::size_t size = std::max<std::size_t>(dim, static_cast<std::size_t>(formal_degree)) + 1;
  Matrix<S> num = outer_table(gs, gs, size, size) - outer_table(g, g, size, size);
  return divisible_quotient(num, Divisor::OneMinusXY, dim, "SchurCohn");
}

template <Scalar S>
HermitianForm<S> schur_cohn_form(const Poly<S>& g) {
  if (g.is_zero()) throw DomainError("schur_cohn_form: zero polynomial");
  return schur_cohn_form(g, g.degree(), static_cast<std::size_t>(g.degree()));
}

template <Scalar S>
HermitianForm<S> schur_cohn_form_from_squares(const Poly<S>& g) {
  if (g.is_zero()) throw DomainError("schur_cohn_form_from_squares: zero polynomial");
  const std::size_t n = static_cast<std::size_t>(g.degree());
  const auto& a = g.coeffs();
  Matrix<S> m(n, n);
  for (std::size_t lambda = 0; lambda < n; ++lambda) {
    // Variable x_{lambda+j} carries conj(a_{n-j}) in the positive term and
    // a_j in the negative term, j = 0 .. n-1-lambda.
    for (std::size_t i = lambda; i < n; ++i)
      for (std::size_t k = lambda; k < n; ++k) {
        const S pos_i = conj(a[n - (i - lambda)]);
        const S pos_k = conj(a[n - (k - lambda)]);
        const S& neg_i = a[i - lambda];
        const S& neg_k = a[k - lambda];
        m(i, k) += pos_i * conj(pos_k) - neg_i * conj(neg_k);
      }
  }
  return {std::move(m), "SchurCohn", 0.0};
}

template <Scalar S>
HermitianForm<S> power_sum_form(const Poly<S>& g) {
  require_symmetric(g, "power_sum_form");
  const std::size_t n = static_cast<std::size_t>(g.degree());
  Matrix<S> m(n, n);
  if (n == 0) return {std::move(m), "PowerSum", 0.0};
  const auto s = power_sums(g, static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) m(i, k) = i >= k ? s[i - k] : conj(s[k - i]);
  return {std::move(m), "PowerSum", 0.0};
}

template <Scalar S>
HermitianForm<S> krein_form(const Poly<S>& g) {
  require_symmetric(g, "krein_form");
  const std::size_t n = static_cast<std::size_t>(g.degree());
  const Poly<S> gd = delta(g);
  Matrix<S> num = outer_table(g, gd, n + 1, n + 1) + outer_table(gd, g, n + 1, n + 1);
  return divisible_quotient(num, Divisor::OneMinusXY, n, "Krein");
}

template <Scalar S>
HermitianForm<S> pair_form(const Poly<S>& g, const Poly<S>& h) {
  require_symmetric(g, "pair_form");
  require_symmetric(h, "pair_form");
  if (g.degree() != h.degree()) throw DomainError("pair_form: polynomials must have equal degree");
  const std::size_t n = static_cast<std::size_t>(g.degree());
  // i (g(x) conj(h)(y) - h(x) conj(g)(y))
  Matrix<S> num = (outer_table(g, h, n + 1, n + 1) - outer_table(h, g, n + 1, n + 1)) * imaginary_unit<S>();
  auto q = divide_bivariate(num, Divisor::OneMinusXY, n);
  return {std::move(q.quotient), "Pair", q.remainder_norm};
}

template <Scalar S>
HermitianForm<S> build_circle_form(const CircleFormKind<S>& kind) {
  return std::visit(
      [](const auto& k) -> HermitianForm<S> {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, SchurCohnOf<S>>) return schur_cohn_form(k.g);
        else if constexpr (std::is_same_v<K, PowerSumOf<S>>) return power_sum_form(k.g);
        else if constexpr (std::is_same_v<K, KreinOf<S>>) return krein_form(k.g);
        else return pair_form(k.g, k.h);
      },
      kind);
}

template <Scalar S>
Matrix<S> coefficient_transform(const Poly<S>& g) {
  if (g.is_zero() || is_zero(g.coeffs()[0])) throw DomainError("coefficient_transform: a_0 must be nonzero");
  const std::size_t n = static_cast<std::size_t>(g.degree());
  Matrix<S> z(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; k + j < n; ++j) z(k, k + j) = g.coeffs()[j];
  return z;
}

template <Scalar S>
Matrix<S> gram_form(const Poly<S>& p, std::size_t dim) {
  Matrix<S> m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) m(i, k) = p.coeff(i) * conj(p.coeff(k));
  return m;
}

template <Scalar S>
double hermitian_defect(const Matrix<S>& a) {
  if (a.rows() != a.cols()) throw DomainError("hermitian_defect: matrix is not square");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = i; k < a.cols(); ++k) worst = std::max(worst, magnitude(a(i, k) - conj(a(k, i))));
  return worst;
}

template <Scalar S>
double relative_defect(const Matrix<S>& a, const Matrix<S>& b) {
  const double scale = frobenius_norm(b);
  const double d = frobenius_norm(a - b);
  return scale > 0.0 ? d / scale : d;
}

template <Scalar S>
double congruence_defect(const Poly<S>& g) {
  const Matrix<S> z = coefficient_transform(g);
  const Matrix<S> s = power_sum_form(g).entries;
  const Matrix<S> zsz = z.conj_transpose() * s * z;
  Matrix<S> arranged(zsz.rows(), zsz.cols());
  for (std::size_t i = 0; i < zsz.rows(); ++i)
    for (std::size_t k = 0; k < zsz.cols(); ++k) arranged(i, k) = conj(zsz(i, k));
  return relative_defect(arranged, krein_form(g).entries);
}

template <Scalar S>
double closing_identity_defect(const Poly<S>& g) {
  require_symmetric(g, "closing_identity_defect");
  const int n = g.degree();
  if (n < 1) throw DomainError("closing_identity_defect: degree must be positive");
  const Poly<S> d = g.derivative();
  Matrix<S> rhs = schur_cohn_form(d, n - 1, static_cast<std::size_t>(n)).entries +
                  gram_form(d, static_cast<std::size_t>(n));
  rhs *= from_ratio<S>(1, n);
  return relative_defect(rhs, krein_form(g).entries);
}

template <Scalar S>
double delta_pencil_identity_defect(const Poly<S>& g, const S& z) {
  require_symmetric(g, "delta_pencil_identity_defect");
  const int n = g.degree();
  if (n < 1) throw DomainError("delta_pencil_identity_defect: degree must be positive");
  const Poly<S> f = delta(g) - g * z;
  const Matrix<S> lhs = schur_cohn_form(f, n, static_cast<std::size_t>(n)).entries;
  S xi;
  if constexpr (is_exact_v<S>) {
    xi = S(z.re());
  } else {
    xi = Complex(z.real(), 0.0);
  }
  return relative_defect(lhs, krein_form(g).entries * (xi * from_ratio<S>(2)));
}

#define SIPOLY_INSTANTIATE(S)                                                                         \
  template Matrix<S> outer_table(const Poly<S>&, const Poly<S>&, std::size_t, std::size_t);         \
  template BivariateQuotient<S> divide_bivariate(const Matrix<S>&, Divisor, std::size_t);            \
  template HermitianForm<S> schur_cohn_form(const Poly<S>&);                                         \
  template HermitianForm<S> schur_cohn_form(const Poly<S>&, int, std::size_t);                       \
  template HermitianForm<S> schur_cohn_form_from_squares(const Poly<S>&);                            \
  template HermitianForm<S> power_sum_form(const Poly<S>&);                                          \
  template HermitianForm<S> krein_form(const Poly<S>&);                                              \
  template HermitianForm<S> pair_form(const Poly<S>&, const Poly<S>&);                               \
  template HermitianForm<S> build_circle_form(const CircleFormKind<S>&);                             \
  template Matrix<S> coefficient_transform(const Poly<S>&);                                          \
  template Matrix<S> gram_form(const Poly<S>&, std::size_t);                                         \
  template double hermitian_defect(const Matrix<S>&);                                                \
  template HermitianForm<S> divisible_quotient(const Matrix<S>&, Divisor, std::size_t, std::string);        \
  template double relative_defect(const Matrix<S>&, const Matrix<S>&);                                 \
  template double congruence_defect(const Poly<S>&);                                                   \
  template double closing_identity_defect(const Poly<S>&);                                             \
  template double delta_pencil_identity_defect(const Poly<S>&, const S&);

SIPOLY_INSTANTIATE(Complex)
SIPOLY_INSTANTIATE(GaussRational)
#undef SIPOLY_INSTANTIATE

}  // namespace sipoly
