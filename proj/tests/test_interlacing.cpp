#include <doctest.h>

#include <Eigen/Dense>
#include <numbers>

#include "sipoly/errors.hpp"
#include "sipoly/forms.hpp"
#include "sipoly/inertia.hpp"
#include "sipoly/interlacing.hpp"
#include "sipoly/oracle.hpp"
#include "sipoly/polynomial_core.hpp"
#include "support.hpp"

using namespace sipoly;
using test::eval;
using test::gi;
using test::I;
using test::q;

using EM = Matrix<GaussRational>;

namespace {

const ExactPoly kG{1, 0, 1};   // roots +-i
const ExactPoly kH{-I, 0, I};  // i x^2 - i, roots +-1
const ExactPoly kH2{1, 1, 1};  // roots at 120 and 240 degrees

/// u^H K u with u_k = conj(alpha)^k, i.e. the bivariate form at (alpha, conj(alpha)).
Complex form_value(const Matrix<Complex>& k, Complex alpha) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j)
      acc += k(i, j) * std::pow(alpha, static_cast<int>(i)) * std::conj(std::pow(alpha, static_cast<int>(j)));
  return acc;
}

/// Oracle roots of g, all simple.
std::vector<Complex> simple_roots(const ExactPoly& g) {
  std::vector<Complex> out;
  for (const auto& r : find_roots(g).roots) {
    REQUIRE(r.multiplicity == 1);
    out.push_back(r.value);
  }
  return out;
}

}  // namespace

TEST_CASE("interlace verdict examples") {
  const InterlaceVerdict a = interlace_test(kG, kH);
  CHECK(a.interlacing);
  CHECK(a.sign == InterlaceSign::Negative);
  CHECK_FALSE(a.reason.has_value());

  const InterlaceVerdict b = interlace_test(kG, kH2);
  CHECK_FALSE(b.interlacing);
  CHECK(b.reason == InterlaceReason::Indefinite);
  CHECK_FALSE(b.sign.has_value());

  const InterlaceVerdict c = interlace_test(kG, kG);
  CHECK_FALSE(c.interlacing);
  CHECK(c.reason == InterlaceReason::Degenerate);

  CHECK(interlace_test(kG, ExactPoly{1, 1}).reason == InterlaceReason::DegreeMismatch);

  const InterlaceVerdict f = interlace_test(to_float(kG), to_float(kH));
  CHECK(f.interlacing);
  CHECK(f.sign == InterlaceSign::Negative);
}

TEST_CASE("swapping the pair flips the sign only") {
  const InterlaceVerdict a = interlace_test(kH, kG);
  CHECK(a.interlacing);
  CHECK(a.sign == InterlaceSign::Positive);
}

TEST_CASE("derivative interlacing examples") {
  CHECK(delta(kG) == ExactPoly{1, 0, -1});
  CHECK(delta(kH) == ExactPoly{-I, 0, -I});
  const InterlaceVerdict v = derivative_interlace(kG, kH);
  CHECK(v.interlacing);

  const ExactPoly g1{1, 1}, h1{-I, I};
  CHECK(delta(g1) == ExactPoly{q(1, 2), q(-1, 2)});
  CHECK(delta(h1) == ExactPoly{-I / GaussRational(2), -I / GaussRational(2)});
  CHECK(derivative_interlace(g1, h1).interlacing);

  CHECK_THROWS_AS(derivative_interlace(kG, kH2), DomainError);
}

TEST_CASE("pencil examples") {
  const PencilTrace tr = pencil_trace(kG, kH, {0.0, 1.0, 2.0});
  REQUIRE(tr.samples.size() == 3);
  REQUIRE(tr.samples[0].arguments.size() == 2);
  CHECK(tr.samples[0].arguments[0] == doctest::Approx(std::numbers::pi / 2));
  CHECK(tr.samples[0].arguments[1] == doctest::Approx(3 * std::numbers::pi / 2));
  CHECK(tr.interlaces);
  CHECK(tr.monotone);
  CHECK(tr.direction != 0);

  const PencilTrace single = pencil_trace(kG, kH, {0.0});
  REQUIRE(single.samples.size() == 1);
  const auto g_args = root_arguments(find_roots(kG));
  REQUIRE(single.samples[0].arguments.size() == g_args.size());
  for (std::size_t j = 0; j < g_args.size(); ++j)
    CHECK(single.samples[0].arguments[j] == doctest::Approx(g_args[j]));
  CHECK(single.direction == 0);

  const PencilTrace rev = pencil_trace(kG, kH, {-2.0, -1.0, 0.0});
  CHECK(rev.monotone);
  CHECK(rev.direction == tr.direction);

  // g - t h over the same samples runs the other way.
  const PencilTrace neg = pencil_trace(kG, -kH, {0.0, 1.0, 2.0});
  CHECK(neg.monotone);
  CHECK(neg.direction == -tr.direction);

  CHECK_THROWS_AS(pencil_trace(kG, kH, {1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(pencil_trace(kG, kH2, {0.0, 1.0}), DomainError);
}

TEST_CASE("mapping form identity examples") {
  CHECK(mapping_form_identity(kG, kH, I) == 0.0);
  CHECK(mapping_form_identity(kG, kH2, I) == 0.0);
  CHECK(mapping_form_identity(to_float(kG), to_float(kH), Complex(0, 1)) <= 1e-12);
  CHECK(mapping_form_identity(to_float(kG), to_float(kH2), Complex(0, 1)) <= 1e-12);
  CHECK(mapping_form_identity(kG, kH, 2 * I) == 0.0);
  CHECK(mapping_form_identity(kG, kH, 3 * I + q(1, 2)) == 0.0);
  CHECK_THROWS_AS(mapping_form_identity(kG, kH, GaussRational(2)), DomainError);
}

TEST_CASE("form verdict agrees with the oracle on generated pairs") {
  for (std::uint64_t s = 0; s < 80; ++s) {
    const bool planted = s % 2 == 0;
    const int n = (planted ? 1 : 2) + static_cast<int>(s % 6);
    const auto [g, h] = planted ? generate_interlacing_pair(n, derive_seed(61, s))
                                : generate_non_interlacing_pair(n, derive_seed(61, s));
    CAPTURE(s);
    const bool oracle = oracle_interlace(g, h).interlacing;
    CHECK(oracle == planted);
    CHECK(interlace_test(g, h).interlacing == oracle);
    CHECK(interlace_test(to_float(g), to_float(h)).interlacing == oracle);
  }
}

TEST_CASE("derivatives of interlacing pairs interlace") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto [g, h] = generate_interlacing_pair(2 + static_cast<int>(s % 6), derive_seed(63, s));
    CHECK(derivative_interlace(g, h).interlacing);
    CHECK(oracle_interlace(delta(g) * I, delta(h) * I).interlacing);
  }
}

TEST_CASE("pencil trace on generated pairs") {
  std::vector<double> ts;
  for (int j = -10; j <= 10; ++j) ts.push_back(std::tan(j * std::numbers::pi / 22));
  for (std::uint64_t s = 0; s < 15; ++s) {
    const auto [g, h] = generate_interlacing_pair(1 + static_cast<int>(s % 5), derive_seed(65, s));
    const PencilTrace tr = pencil_trace(g, h, ts);
    CHECK(tr.interlaces);
    CHECK(tr.monotone);
    CHECK(tr.samples.size() == ts.size());
  }
}

TEST_CASE("mapping identity holds on random pairs in both modes") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto [g, h] = s % 2 ? generate_interlacing_pair(3, derive_seed(67, s))
                              : generate_non_interlacing_pair(3, derive_seed(67, s));
    const GaussRational z = gi(static_cast<long>(s % 3) - 1, 1 + static_cast<long>(s % 4)) / GaussRational(3);
    CHECK(mapping_form_identity(g, h, z) == 0.0);
    CHECK(mapping_form_identity(to_float(g), to_float(h), z.to_complex()) <= 1e-9);
  }
}

TEST_CASE("i h / g_delta has constant sign at the roots of g") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto [g, h] = generate_interlacing_pair(1 + static_cast<int>(s % 6), derive_seed(69, s));
    const ExactPoly gd = delta(g);
    int sign = 0;
    for (const Complex a : simple_roots(g)) {
      const Complex v = Complex(0, 1) * eval(h, a) / eval(gd, a);
      CHECK(std::abs(v.imag()) <= 1e-8 * std::abs(v));
      const int sv = v.real() > 0 ? 1 : -1;
      if (sign == 0) sign = sv;
      CHECK(sv == sign);
    }
  }
}

TEST_CASE("pair form on a root-power vector is a rank-one evaluation") {
  for (std::uint64_t s = 0; s < 15; ++s) {
    const auto [g, h] = generate_interlacing_pair(1 + static_cast<int>(s % 5), derive_seed(71, s));
    const Matrix<Complex> k = to_float(pair_form(g, h).entries);
    const ExactPoly gd = delta(g), hd = delta(h);
    for (double phi : {0.3, 1.7, 2.2, 4.0, 5.9}) {
      const Complex a = std::polar(1.0, phi);
      const Complex expected =
          Complex(0, 1) * (eval(g, a) * std::conj(eval(hd, a)) - eval(h, a) * std::conj(eval(gd, a)));
      CHECK(std::abs(form_value(k, a) - expected) <= 1e-9 * (1 + std::abs(expected)));
    }
  }
}

TEST_CASE("pair form is diagonal in the root-power basis of g") {
  for (std::uint64_t s = 0; s < 15; ++s) {
    const auto [g, h] = generate_interlacing_pair(1 + static_cast<int>(s % 6), derive_seed(73, s));
    const Matrix<Complex> k = to_float(pair_form(g, h).entries);
    const auto roots = simple_roots(g);
    const auto n = static_cast<Eigen::Index>(roots.size());
    Eigen::MatrixXcd v(n, n), km(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        v(i, j) = std::conj(std::pow(roots[static_cast<std::size_t>(j)], static_cast<int>(i)));
        km(i, j) = k(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) d(j, j) = form_value(k, roots[static_cast<std::size_t>(j)]);
    const Eigen::MatrixXcd vinv = v.inverse();
    const Eigen::MatrixXcd rebuilt = vinv.adjoint() * d * vinv;
    CHECK((rebuilt - km).norm() <= 1e-8 * km.norm());
  }
}
