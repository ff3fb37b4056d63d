#include "sipoly/inertia.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

namespace sipoly {

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "PositiveDefinite";
    case Definiteness::NegativeDefinite: return "NegativeDefinite";
    case Definiteness::Indefinite: return "Indefinite";
    case Definiteness::Degenerate: return "Degenerate";
  }
  return "Indefinite";
}

double default_zero_threshold(const Matrix<Complex>& a) {
  constexpr double unit_roundoff = std::numeric_limits<double>::epsilon() / 2.0;
  return static_cast<double>(a.rows()) * unit_roundoff * std::max(1.0, inf_norm(a));
}

Inertia inertia(const Matrix<Complex>& a, std::optional<double> tol) {
  if (a.rows() != a.cols()) throw DomainError("inertia: matrix is not square");
  const auto n = static_cast<Eigen::Index>(a.rows());
  if (n == 0) return {};
  if (hermitian_defect(a) > 1e-12 * frobenius_norm(a))
    throw DomainError("inertia: matrix is not Hermitian");

  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k) m(i, k) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("inertia: eigenvalue iteration failed", 0.0);

  const double threshold = tol.value_or(default_zero_threshold(a));
  Inertia out;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (std::abs(lambda) <= threshold) ++out.zero;
    else if (lambda > 0) ++out.positive;
    else ++out.negative;
  }
  return out;
}

namespace {

struct GaussInt {
  mpz_class re, im;
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

void divexact(GaussInt& a, const mpz_class& d) {
  mpz_divexact(a.re.get_mpz_t(), a.re.get_mpz_t(), d.get_mpz_t());
  mpz_divexact(a.im.get_mpz_t(), a.im.get_mpz_t(), d.get_mpz_t());
}

bool is_zero(const GaussInt& a) { return sgn(a.re) == 0 && sgn(a.im) == 0; }

}  // namespace

Inertia inertia(const Matrix<GaussRational>& input) {
  if (input.rows() != input.cols()) throw DomainError("inertia: matrix is not square");
  const std::size_t n = input.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i; k < n; ++k)
      if (!(input(i, k) == conj(input(k, i)))) throw DomainError("inertia: matrix is not Hermitian");

  // Clear denominators (a positive scale keeps the inertia), then eliminate
  // fraction-free: after pivots K the working entry (i,k) is the bordered
  // minor det A[K+i, K+k] and the Schur complement is that matrix divided by
  // D = det A[K] (Sylvester's identity), so every division below is exact.
  mpz_class scale = 1;
  for (const auto& v : input.data()) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.re().get_den_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.im().get_den_mpz_t());
  }
  std::vector<GaussInt> b(n * n);
  for (std::size_t j = 0; j < n * n; ++j) {
    const auto& v = input.data()[j];
    b[j] = {v.re().get_num() * (scale / v.re().get_den()), v.im().get_num() * (scale / v.im().get_den())};
  }
  auto at = [&](std::size_t i, std::size_t k) -> GaussInt& { return b[i * n + k]; };

  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  mpz_class det = 1;  // det A[K] of the eliminated index set K
  Inertia out;

  while (!active.empty()) {
    // Largest-modulus diagonal pivot (diagonal entries are real).
    std::size_t best = active.size();
    mpz_class best_abs = 0;
    for (std::size_t j = 0; j < active.size(); ++j) {
      const mpz_class v = abs(at(active[j], active[j]).re);
      if (v > best_abs) {
        best_abs = v;
        best = j;
      }
    }

    if (best < active.size()) {
      const std::size_t p = active[best];
      const mpz_class pivot = at(p, p).re;
      if (sgn(pivot) * sgn(det) > 0) ++out.positive;
      else ++out.negative;
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
      for (std::size_t i : active)
        for (std::size_t k : active) {
          GaussInt& e = at(i, k);
          const GaussInt cross = mul(at(i, p), at(p, k));
          e.re = pivot * e.re - cross.re;
          e.im = pivot * e.im - cross.im;
          divexact(e, det);
        }
      det = pivot;
      continue;
    }

    // Zero diagonal: a nonzero off-diagonal entry c = b(p, q) gives the
    // block [[0, c], [conj c, 0]] with eigenvalues +-|c|.
    std::size_t pj = active.size(), qj = active.size();
    for (std::size_t j = 0; j < active.size() && pj == active.size(); ++j)
      for (std::size_t l = j + 1; l < active.size(); ++l)
        if (!is_zero(at(active[j], active[l]))) {
          pj = j;
          qj = l;
          break;
        }
    if (pj == active.size()) {
      out.zero += static_cast<int>(active.size());
      break;
    }

    const std::size_t p = active[pj];
    const std::size_t q = active[qj];
    ++out.positive;
    ++out.negative;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(qj));
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pj));
    const GaussInt c = at(p, q);
    const GaussInt cc = at(q, p);
    const mpz_class norm_c = c.re * c.re + c.im * c.im;
    const mpz_class det_sq = det * det;
    // det [[0, c, b_pk], [conj c, 0, b_qk], [b_ip, b_iq, b_ik]] / det^2
    for (std::size_t i : active)
      for (std::size_t k : active) {
        GaussInt& e = at(i, k);
        const GaussInt t1 = mul(mul(c, at(q, k)), at(i, p));
        const GaussInt t2 = mul(mul(at(p, k), cc), at(i, q));
        e.re = t1.re + t2.re - norm_c * e.re;
        e.im = t1.im + t2.im - norm_c * e.im;
        divexact(e, det_sq);
      }
    det = -norm_c / det;
  }
  return out;
}

Definiteness definiteness(const Inertia& in) {
  const int n = in.dimension();
  if (in.zero > 0) return Definiteness::Degenerate;
  if (in.positive == n) return Definiteness::PositiveDefinite;
  if (in.negative == n) return Definiteness::NegativeDefinite;
  return Definiteness::Indefinite;
}

}  // namespace sipoly
