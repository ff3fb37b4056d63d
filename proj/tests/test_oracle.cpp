#include <doctest.h>

#include <algorithm>
#include <numbers>

#include "sipoly/errors.hpp"
#include "sipoly/oracle.hpp"
#include "sipoly/polynomial_core.hpp"
#include "support.hpp"

using namespace sipoly;
using test::gi;
using test::I;
using test::q;

namespace {

RootSet root_set(std::initializer_list<Complex> values) {
  RootSet rs;
  for (Complex v : values) rs.roots.push_back(Root{v, 1, std::nullopt, std::nullopt});
  return rs;
}

/// a_n prod (x - r)^m, expanded in double precision.
std::vector<Complex> reconstruct(Complex lead, const RootSet& rs) {
  std::vector<Complex> c{lead};
  for (const auto& r : rs.roots)
    for (int m = 0; m < r.multiplicity; ++m) {
      std::vector<Complex> next(c.size() + 1, 0.0);
      for (std::size_t k = 0; k < c.size(); ++k) {
        next[k + 1] += c[k];
        next[k] -= r.value * c[k];
      }
      c = std::move(next);
    }
  return c;
}

const Root* nearest(const RootSet& rs, Complex z) {
  const Root* best = nullptr;
  for (const auto& r : rs.roots)
    if (!best || std::abs(r.value - z) < std::abs(best->value - z)) best = &r;
  return best;
}

}  // namespace

TEST_CASE("find_roots examples") {
  const RootSet a = find_roots(ExactPoly{1, 0, 1});
  REQUIRE(a.roots.size() == 2);
  CHECK(std::abs(nearest(a, Complex(0, 1))->value - Complex(0, 1)) < 1e-14);
  CHECK(std::abs(nearest(a, Complex(0, -1))->value - Complex(0, -1)) < 1e-14);
  CHECK(nearest(a, Complex(0, 1))->multiplicity == 1);

  const ExactPoly s{1, q(-5, 2), 1};
  const RootSet b = find_roots(s * s);
  REQUIRE(b.roots.size() == 2);
  CHECK(std::abs(nearest(b, 2.0)->value - 2.0) < 1e-12);
  CHECK(nearest(b, 2.0)->multiplicity == 2);
  CHECK(std::abs(nearest(b, 0.5)->value - 0.5) < 1e-12);
  CHECK(nearest(b, 0.5)->multiplicity == 2);
  CHECK(find_roots(to_float(s * s)).degree() == 4);

  const RootSet c = find_roots(FloatPoly{1.0, 1.0});
  REQUIRE(c.roots.size() == 1);
  CHECK(std::abs(c.roots[0].value + 1.0) < 1e-15);

  CHECK_THROWS_AS(find_roots(ExactPoly{}), DomainError);
}

TEST_CASE("classification examples") {
  const RootSet a = classify_circle(root_set({Complex(0, 1), Complex(0, -1)}));
  CHECK(a.roots[0].circle_tag == CircleTag::OnCircle);
  CHECK(a.roots[1].circle_tag == CircleTag::OnCircle);
  CHECK(a.tolerance == kDefaultCircleTol);

  const RootSet b = classify_circle(root_set({2.0, 0.5}));
  CHECK(b.roots[0].circle_tag == CircleTag::Outside);
  CHECK(b.roots[1].circle_tag == CircleTag::Inside);

  CHECK(classify_circle(root_set({1.0 + 1e-12})).roots[0].circle_tag == CircleTag::OnCircle);
  CHECK(classify_circle(root_set({1.0 + 1e-6})).roots[0].circle_tag == CircleTag::Outside);
  CHECK(classify_circle(root_set({1.0 + 1e-6}), 1e-5).roots[0].circle_tag == CircleTag::OnCircle);

  const RootSet l = classify_line(root_set({3.0, Complex(1, 2), Complex(1, -2)}));
  CHECK(l.roots[0].line_tag == LineTag::Real);
  CHECK(l.roots[1].line_tag == LineTag::Upper);
  CHECK(l.roots[2].line_tag == LineTag::Lower);
  const LineCount t = line_tally(l);
  CHECK(t.distinct_real == 1);
  CHECK(t.distinct_conjugate_pairs == 1);
  CHECK(t.upper == 1);
  CHECK(t.lower == 1);

  CHECK_THROWS_AS(circle_tally(root_set({1.0})), DomainError);
}

TEST_CASE("oracle interlacing examples") {
  const ExactPoly g{1, 0, 1};   // 90, 270 degrees
  const ExactPoly h{-I, 0, I};  // 0, 180 degrees
  const ExactPoly h2{1, 1, 1};  // 120, 240 degrees
  CHECK(oracle_interlace(g, h).interlacing);
  const InterlaceCheck b = oracle_interlace(g, h2);
  CHECK_FALSE(b.interlacing);
  CHECK_FALSE(b.reason.empty());
  CHECK_FALSE(oracle_interlace(g, g).interlacing);
  CHECK_FALSE(oracle_interlace(g * g, h * h).interlacing);
  CHECK_FALSE(oracle_interlace(ExactPoly{1, q(-5, 2), 1}, h).interlacing);

  const auto args = root_arguments(find_roots(g));
  REQUIRE(args.size() == 2);
  CHECK(args[0] == doctest::Approx(std::numbers::pi / 2));
  CHECK(args[1] == doctest::Approx(3 * std::numbers::pi / 2));
}

TEST_CASE("generator examples") {
  const std::uint64_t s0 = 2024;
  const ExactPoly a = generate_symmetric({2, 0, 1}, s0);
  CHECK(a.degree() == 2);
  CHECK(classify_symmetry(a).kind == SymmetryKind::Symmetric);
  const CircleCount ca = oracle_circle_count(a);
  CHECK(ca.on == 2);

  const ExactPoly b = generate_symmetric({0, 1, 1}, s0);
  CHECK(b.degree() == 2);
  CHECK(classify_symmetry(b).kind == SymmetryKind::Symmetric);
  const CircleCount cb = oracle_circle_count(b);
  CHECK(cb.inside == 1);
  CHECK(cb.outside == 1);

  const auto [g, h] = generate_interlacing_pair(3, s0);
  CHECK(g.degree() == 3);
  CHECK(h.degree() == 3);
  CHECK(oracle_interlace(g, h).interlacing);

  CHECK_THROWS_AS(generate_symmetric({0, 0, 1}, s0), DomainError);
  CHECK_THROWS_AS(generate_interlacing_pair(0, s0), DomainError);
  CHECK_THROWS_AS(generate_general(3, 0.0, s0), DomainError);
}

TEST_CASE("generators are deterministic and seed sensitive") {
  CHECK(generate_symmetric({3, 2, 2}, 5) == generate_symmetric({3, 2, 2}, 5));
  CHECK(generate_general(7, 1e-3, 5) == generate_general(7, 1e-3, 5));
  CHECK(generate_real({2, 1}, 5) == generate_real({2, 1}, 5));
  CHECK(generate_interlacing_pair(4, 5) == generate_interlacing_pair(4, 5));
  CHECK(generate_symmetric({3, 2, 1}, 5) != generate_symmetric({3, 2, 1}, 6));
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) != derive_seed(2, 2));
}

TEST_CASE("symmetric generator output is symmetric with the planted roots") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const SymmetricParams p{static_cast<int>(s % 4), static_cast<int>((s / 4) % 3), 1 + static_cast<int>(s % 2)};
    if (p.on_circle + p.pairs == 0) continue;
    const ExactPoly g = generate_symmetric(p, derive_seed(101, s));
    CHECK(classify_symmetry(g).kind == SymmetryKind::Symmetric);
    const CircleCount c = oracle_circle_count(g);
    CHECK(c.inside == c.outside);
    CHECK(*c.distinct_on == p.on_circle);
    CHECK(*c.distinct_pairs == p.pairs);
  }
}

TEST_CASE("reconstruction residual over random polynomials") {
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<int> deg(1, 12);
  std::normal_distribution<double> coef(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = deg(rng);
    std::vector<Complex> c(static_cast<std::size_t>(n + 1));
    for (auto& v : c) v = {coef(rng), coef(rng)};
    const FloatPoly g(c);
    const RootSet rs = find_roots(g);
    REQUIRE(rs.degree() == n);
    const auto back = reconstruct(c.back(), rs);
    double err = 0.0, scale = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      err = std::max(err, std::abs(back[k] - c[k]));
      scale = std::max(scale, std::abs(c[k]));
    }
    worst = std::max(worst, err / scale);
  }
  CHECK(worst <= 1e-7);
}

TEST_CASE("oracle counts are invariant under nonzero scaling") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const ExactPoly g = generate_general(1 + static_cast<int>(s % 10), 1e-3, derive_seed(105, s));
    const CircleCount a = oracle_circle_count(g);
    const CircleCount b = oracle_circle_count(g * gi(-2, 5));
    const CircleCount c = oracle_circle_count(to_float(g) * Complex(1e-3, 4e3));
    CHECK(same_tally(a, b));
    CHECK(same_tally(a, c));
  }
}

TEST_CASE("real generators plant the requested configuration") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const RealParams p{static_cast<int>(s % 5), static_cast<int>((s / 5) % 3)};
    if (p.real_roots + p.conjugate_pairs == 0) continue;
    const ExactPoly f = generate_real(p, derive_seed(107, s));
    CHECK(has_real_coeffs(f));
    const LineCount t = line_tally(classify_line(find_roots(f)));
    CHECK(t.distinct_real == p.real_roots);
    CHECK(t.distinct_conjugate_pairs == p.conjugate_pairs);
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto [f, F] = generate_real_interlacing_pair(1 + static_cast<int>(s % 6), derive_seed(109, s));
    CHECK(oracle_real_interlace(f, F).interlacing);
    const auto [u, U] = generate_real_non_interlacing_pair(1 + static_cast<int>(s % 6), derive_seed(109, s));
    CHECK_FALSE(oracle_real_interlace(u, U).interlacing);
  }
}

TEST_CASE("unimodular rationals lie exactly on the circle") {
  for (double phi : {0.0, 0.4, 1.5707963, 3.0, 4.9, 6.2}) {
    const GaussRational u = unimodular_rational(phi);
    CHECK((u * conj(u)) == GaussRational(1));
    CHECK(std::abs(std::arg(u.to_complex()) - std::remainder(phi, 2 * std::numbers::pi)) < 0.05);
  }
}

TEST_CASE("separated non-interlacing pairs survive rounding") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const int n = 2 + static_cast<int>(s % 6);
    const auto [g, h] = generate_non_interlacing_pair(n, derive_seed(111, s), true);
    CHECK_FALSE(oracle_interlace(g, h).interlacing);
    CHECK_FALSE(oracle_interlace(to_float(g), to_float(h)).interlacing);
    const RootSet rg = find_roots(g);
    for (const auto& r : rg.roots) CHECK(r.multiplicity == 1);
    const auto [f, F] = generate_real_non_interlacing_pair(n, derive_seed(113, s), true);
    CHECK_FALSE(oracle_real_interlace(to_float(f), to_float(F)).interlacing);
    CHECK(gcd(f, F).degree() == 0);
  }
  CHECK_THROWS_AS(generate_non_interlacing_pair(1, 5, true), DomainError);
  CHECK_THROWS_AS(generate_real_non_interlacing_pair(1, 5, true), DomainError);
}
