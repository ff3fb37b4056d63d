#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "sipoly/errors.hpp"
#include "sipoly/inertia.hpp"
#include "support.hpp"

using namespace sipoly;
using test::gi;
using test::I;
using test::q;

using EM = Matrix<GaussRational>;

TEST_CASE("inertia examples, both modes") {
  const EM a{{2, 0}, {0, 2}};
  const EM b{{2, q(-5, 2)}, {q(-5, 2), 2}};
  const EM z(2, 2);
  CHECK(inertia(a) == Inertia{2, 0, 0});
  CHECK(inertia(b) == Inertia{1, 1, 0});
  CHECK(inertia(z) == Inertia{0, 0, 2});
  CHECK(inertia(to_float(a)) == Inertia{2, 0, 0});
  CHECK(inertia(to_float(b)) == Inertia{1, 1, 0});
  CHECK(inertia(to_float(z)) == Inertia{0, 0, 2});
}

TEST_CASE("definiteness examples") {
  CHECK(definiteness(inertia(EM{{-2, 0}, {0, -2}})) == Definiteness::NegativeDefinite);
  CHECK(definiteness(inertia(EM{{0, I}, {-I, 0}})) == Definiteness::Indefinite);
  CHECK(definiteness(inertia(EM{{1, 0}, {0, 0}})) == Definiteness::Degenerate);
  CHECK(definiteness(inertia(EM{{2, 0}, {0, 2}})) == Definiteness::PositiveDefinite);
}

TEST_CASE("exact reduction handles zero diagonals") {
  CHECK(inertia(EM{{0, 1}, {1, 0}}) == Inertia{1, 1, 0});
  CHECK(inertia(EM{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}) == Inertia{1, 1, 1});
  CHECK(inertia(EM{{0, gi(1, 2), 0}, {gi(1, -2), 0, 3}, {0, 3, 0}}) == Inertia{1, 1, 1});
  CHECK(inertia(EM{{0, q(1, 3)}, {q(1, 3), q(-7, 5)}}) == Inertia{1, 1, 0});
}

TEST_CASE("non-Hermitian and non-square input is rejected") {
  CHECK_THROWS_AS(inertia(EM{{1, 2}, {3, 4}}), DomainError);
  CHECK_THROWS_AS(inertia(EM{{1, I}, {I, 1}}), DomainError);
  CHECK_THROWS_AS(inertia(Matrix<Complex>{{1.0, 2.0}, {3.0, 4.0}}), DomainError);
  CHECK_THROWS_AS(inertia(Matrix<GaussRational>(2, 3)), DomainError);
}

TEST_CASE("empty matrix has empty inertia") {
  CHECK(inertia(EM{}) == Inertia{0, 0, 0});
}

TEST_CASE("explicit threshold overrides the default") {
  const Matrix<Complex> m{{1.0, 0.0}, {0.0, 1e-6}};
  CHECK(inertia(m) == Inertia{2, 0, 0});
  CHECK(inertia(m, 1e-3) == Inertia{1, 0, 1});
  CHECK(default_zero_threshold(m) == doctest::Approx(2 * std::numeric_limits<double>::epsilon() / 2));
}

namespace {

/// Hermitian integer matrix U^H D U with prescribed signs on D.
EM planted(const std::vector<long>& diag, std::mt19937_64& rng) {
  const std::size_t n = diag.size();
  EM u = test::random_integer_matrix(n, 3, rng);
  for (std::size_t i = 0; i < n; ++i) u(i, i) = 7;  // diagonally dominant, so nonsingular
  EM d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = diag[i];
  return u.conj_transpose() * d * u;
}

Inertia count_signs(const std::vector<long>& diag) {
  Inertia in;
  for (long v : diag) (v > 0 ? in.positive : v < 0 ? in.negative : in.zero)++;
  return in;
}

}  // namespace

TEST_CASE("Sylvester's law under random congruence (exact)") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> sign(-1, 1);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<long> diag(2 + static_cast<std::size_t>(trial % 6));
    for (auto& v : diag) v = sign(rng) * (1 + trial % 3);
    const EM a = planted(diag, rng);
    CHECK(inertia(a) == count_signs(diag));
    EM c = test::random_integer_matrix(diag.size(), 4, rng);
    for (std::size_t i = 0; i < diag.size(); ++i) c(i, i) = 13;
    CHECK(inertia(c.conj_transpose() * a * c) == count_signs(diag));
  }
}

TEST_CASE("Sylvester's law under random congruence (float, nonsingular)") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<long> diag(2 + static_cast<std::size_t>(trial % 6));
    for (auto& v : diag) v = coin(rng) ? 1 : -1;
    const EM a = planted(diag, rng);
    EM c = test::random_integer_matrix(diag.size(), 2, rng);
    for (std::size_t i = 0; i < diag.size(); ++i) c(i, i) = 9;
    CHECK(inertia(to_float(c.conj_transpose() * a * c)) == count_signs(diag));
  }
}

TEST_CASE("exact and float inertia agree away from zero eigenvalues") {
  std::mt19937_64 rng(10);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
    const EM a = test::hermitian_part(test::random_integer_matrix(n, 5, rng));
    const Matrix<Complex> f = to_float(a);
    Eigen::MatrixXcd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = f(i, k);
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m).eigenvalues();
    if (ev.cwiseAbs().minCoeff() <= 1e3 * default_zero_threshold(f)) continue;
    ++compared;
    CHECK(inertia(a) == inertia(f));
  }
  CHECK(compared > 150);
}

TEST_CASE("exact inertia of a singular matrix counts the kernel") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<long> diag{1, -2, 0, 3, 0};
    std::shuffle(diag.begin(), diag.end(), rng);
    CHECK(inertia(planted(diag, rng)) == Inertia{2, 1, 2});
  }
}
