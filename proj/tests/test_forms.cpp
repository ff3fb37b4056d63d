#include <doctest.h>

#include "sipoly/errors.hpp"
#include "sipoly/forms.hpp"
#include "sipoly/oracle.hpp"
#include "sipoly/polynomial_core.hpp"
#include "support.hpp"

using namespace sipoly;
using test::eval;
using test::eval_bar;
using test::eval_bivariate;
using test::gi;
using test::I;
using test::q;

using EM = Matrix<GaussRational>;

TEST_CASE("bivariate division examples") {
  EM n1(3, 3);
  n1(0, 0) = 2;
  n1(2, 2) = -2;
  auto r1 = divide_bivariate(n1, Divisor::OneMinusXY, 2);
  CHECK(r1.quotient == EM{{2, 0}, {0, 2}});
  CHECK(r1.remainder_norm == 0.0);

  EM n2(2, 2);
  n2(0, 0) = -3;
  n2(1, 1) = 3;
  auto r2 = divide_bivariate(n2, Divisor::OneMinusXY, 1);
  CHECK(r2.quotient == EM{{-3}});
  CHECK(r2.remainder_norm == 0.0);

  // (x - y)(2xy - x - y + 2)
  EM n3(3, 3);
  n3(2, 1) = 2;
  n3(1, 2) = -2;
  n3(2, 0) = -1;
  n3(0, 2) = 1;
  n3(1, 0) = 2;
  n3(0, 1) = -2;
  auto r3 = divide_bivariate(n3, Divisor::XMinusY, 2);
  CHECK(r3.quotient == EM{{2, -1}, {-1, 2}});
  CHECK(r3.remainder_norm == 0.0);
}

TEST_CASE("non-divisible numerators report a remainder") {
  EM n(2, 2);
  n(0, 0) = 1;  // 1 is not a multiple of 1 - xy
  CHECK(divide_bivariate(n, Divisor::OneMinusXY, 1).remainder_norm > 0.0);
  CHECK_THROWS_AS(divisible_quotient(n, Divisor::OneMinusXY, 1, "test"), InconsistencyError);
  EM m(2, 2);
  m(1, 0) = 1;  // x is not a multiple of x - y
  CHECK(divide_bivariate(m, Divisor::XMinusY, 1).remainder_norm > 0.0);
}

TEST_CASE("circle form examples") {
  CHECK(krein_form(ExactPoly{1, 0, 1}).entries == EM{{2, 0}, {0, 2}});
  CHECK(krein_form(ExactPoly{1, q(-5, 2), 1}).entries == EM{{2, q(-5, 2)}, {q(-5, 2), 2}});
  CHECK(schur_cohn_form(ExactPoly{-2, 1}).entries == EM{{-3}});
  CHECK(power_sum_form(ExactPoly{1, q(-5, 2), 1}).entries == EM{{2, q(5, 2)}, {q(5, 2), 2}});
  CHECK(pair_form(ExactPoly{1, 0, 1}, ExactPoly{-I, 0, I}).entries == EM{{-2, 0}, {0, -2}});
  CHECK(pair_form(ExactPoly{1, 0, 1}, ExactPoly{1, 1, 1}).entries == EM{{0, I}, {-I, 0}});
}

TEST_CASE("form builders reject bad input") {
  CHECK_THROWS_AS(krein_form(ExactPoly{1, 2, 3}), DomainError);
  CHECK_THROWS_AS(power_sum_form(ExactPoly{1, 2, 3}), DomainError);
  CHECK_THROWS_AS(schur_cohn_form(ExactPoly{}), DomainError);
  CHECK_THROWS_AS(pair_form(ExactPoly{1, 0, 1}, ExactPoly{1, 1}), DomainError);
}

TEST_CASE("coefficient transform examples") {
  CHECK(coefficient_transform(ExactPoly{1, 0, 1}) == EM{{1, 0}, {0, 1}});
  CHECK(coefficient_transform(ExactPoly{1, q(-5, 2), 1}) == EM{{1, q(-5, 2)}, {0, 1}});
  CHECK(coefficient_transform(ExactPoly{1, 1}) == EM{{1}});
  CHECK_THROWS_AS(coefficient_transform(ExactPoly{0, 1}), DomainError);
}

TEST_CASE("Schur-Cohn form equals its sum-of-squares expansion") {
  for (std::uint64_t s = 0; s < 25; ++s) {
    const ExactPoly g = generate_general(1 + static_cast<int>(s % 8), 1e-3, derive_seed(21, s));
    CHECK(schur_cohn_form(g).entries == schur_cohn_form_from_squares(g).entries);
  }
}

// Independent check of every circle form: Q(x, y) (1 - xy) must reproduce the
// defining numerator at random points.
TEST_CASE("circle forms satisfy their defining bivariate identity") {
  std::mt19937_64 rng(99);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const ExactPoly g = generate_symmetric({2, 1 + static_cast<int>(s % 3), 1}, derive_seed(23, s));
    const ExactPoly h = generate_interlacing_pair(g.degree(), derive_seed(24, s)).first;
    const ExactPoly gs = adjoint(g);
    const ExactPoly gd = delta(g);
    const auto sc = schur_cohn_form(g).entries;
    const auto kr = krein_form(g).entries;
    const auto pr = pair_form(g, h).entries;
    for (int t = 0; t < 5; ++t) {
      const Complex x = test::random_point(rng), y = test::random_point(rng);
      const Complex d = 1.0 - x * y;
      const Complex n_sc = eval(gs, x) * eval_bar(gs, y) - eval(g, x) * eval_bar(g, y);
      const Complex n_kr = eval(g, x) * eval_bar(gd, y) + eval(gd, x) * eval_bar(g, y);
      const Complex n_pr = Complex(0, 1) * (eval(g, x) * eval_bar(h, y) - eval(h, x) * eval_bar(g, y));
      CHECK(std::abs(n_sc - d * eval_bivariate(sc, x, y)) <= 1e-9 * (1 + std::abs(n_sc)));
      CHECK(std::abs(n_kr - d * eval_bivariate(kr, x, y)) <= 1e-9 * (1 + std::abs(n_kr)));
      CHECK(std::abs(n_pr - d * eval_bivariate(pr, x, y)) <= 1e-9 * (1 + std::abs(n_pr)));
    }
  }
}

TEST_CASE("power-sum form entries are power sums of the oracle roots") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const ExactPoly g = generate_symmetric({2, 2, 1}, derive_seed(25, s));
    const auto ps = power_sum_form(g).entries;
    const RootSet rs = find_roots(g);
    const int n = g.degree();
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        Complex acc = 0.0;
        for (const auto& r : rs.roots) acc += static_cast<double>(r.multiplicity) * std::pow(r.value, i - k);
        CHECK(std::abs(acc - ps(i, k).to_complex()) <= 1e-8 * (1 + std::abs(acc)));
      }
  }
}

TEST_CASE("exact forms are Hermitian with zero remainder") {
  for (std::uint64_t s = 0; s < 15; ++s) {
    const ExactPoly g = generate_symmetric({1, 2, 2}, derive_seed(27, s));
    for (const auto& f : {krein_form(g), power_sum_form(g), schur_cohn_form(g)}) {
      CHECK(f.entries == f.entries.conj_transpose());
      CHECK(f.remainder_norm == 0.0);
    }
  }
}

TEST_CASE("congruence between power-sum and Krein forms") {
  CHECK(congruence_defect(ExactPoly{1, q(-5, 2), 1}) == 0.0);
  for (std::uint64_t s = 0; s < 30; ++s) {
    const ExactPoly g = generate_symmetric({2, 1 + static_cast<int>(s % 4), 1 + static_cast<int>(s % 2)},
                                           derive_seed(29, s));
    CHECK(congruence_defect(g) == 0.0);
    CHECK(congruence_defect(to_float(g)) <= 1e-9);
  }
}

TEST_CASE("closing identity and the g_delta pencil identity") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const ExactPoly g = generate_symmetric({3, static_cast<int>(s % 4), 1}, derive_seed(31, s));
    CHECK(closing_identity_defect(g) == 0.0);
    CHECK(closing_identity_defect(to_float(g)) <= 1e-10);
    const GaussRational z = gi(static_cast<long>(s % 5) - 2, 1) + q(1, 3);
    CHECK(delta_pencil_identity_defect(g, z) == 0.0);
    CHECK(delta_pencil_identity_defect(to_float(g), z.to_complex()) <= 1e-9);
  }
}

TEST_CASE("gram form is the outer product of coefficients") {
  const ExactPoly p{1, I};
  CHECK(gram_form(p, 3) == EM{{1, -I, 0}, {I, 1, 0}, {0, 0, 0}});
}
