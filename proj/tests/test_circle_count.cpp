#include <doctest.h>

#include "sipoly/circle_count.hpp"
#include "sipoly/errors.hpp"
#include "sipoly/oracle.hpp"
#include "sipoly/polynomial_core.hpp"
#include "support.hpp"

using namespace sipoly;
using test::gi;
using test::I;
using test::q;

namespace {

void check_tally(const CircleCount& c, int inside, int on, int outside) {
  CHECK(c.inside == inside);
  CHECK(c.on == on);
  CHECK(c.outside == outside);
}

const ExactPoly kSplit{1, q(-5, 2), 1};  // roots 2 and 1/2

}  // namespace

TEST_CASE("count examples") {
  const CircleCount k = count_circle(ExactPoly{1, 0, 1}, CircleMethod::Krein);
  check_tally(k, 0, 2, 0);
  CHECK(k.distinct_on == 2);
  CHECK(k.distinct_pairs == 0);
  CHECK(k.exactness == Exactness::Exact);

  const CircleCount p = count_circle(kSplit, CircleMethod::PowerSum);
  check_tally(p, 1, 0, 1);
  CHECK(p.distinct_pairs == 1);

  check_tally(count_circle(kSplit * kSplit, CircleMethod::SchurCohnRecursive), 2, 0, 2);
  check_tally(count_circle(ExactPoly{-2, 1}, CircleMethod::SchurCohnRecursive), 0, 0, 1);
  CHECK(count_circle(kSplit, CircleMethod::CohnDerivative).inside == 1);
}

TEST_CASE("float counts of squarefree inputs are certified") {
  const CircleCount c = count_circle(to_float(kSplit), CircleMethod::Krein);
  check_tally(c, 1, 0, 1);
  CHECK(c.exactness == Exactness::FloatCertified);
  CHECK(c.unresolved == 0);
}

TEST_CASE("float counts with a kernel leave multiplicities unresolved") {
  const FloatPoly g = to_float(ExactPoly{1, 0, 1} * ExactPoly{1, 0, 1});
  const CircleCount c = count_circle(g, CircleMethod::Krein);
  CHECK(c.exactness == Exactness::FloatHeuristic);
  CHECK_FALSE(c.multiplicity_resolved);
  CHECK(c.distinct_on == 2);
  CHECK(c.total() == 4);

  const CircleCount sc = count_circle(g, CircleMethod::SchurCohnRecursive);
  CHECK(sc.unresolved == 4);
  CHECK(sc.total() == 4);
}

TEST_CASE("exact recursion resolves multiplicities on the circle") {
  const ExactPoly g = ExactPoly{1, 0, 1} * ExactPoly{1, 0, 1} * ExactPoly{1, 1};  // +-i twice, -1 once
  for (auto m : {CircleMethod::SchurCohnRecursive, CircleMethod::PowerSum, CircleMethod::Krein,
                 CircleMethod::CohnDerivative}) {
    CAPTURE(to_string(m));
    check_tally(count_circle(g, m), 0, 5, 0);
  }
}

TEST_CASE("symmetric methods reject non-symmetric input") {
  CHECK_THROWS_AS(count_circle(ExactPoly{-2, 1}, CircleMethod::Krein), DomainError);
  CHECK_THROWS_AS(count_circle(ExactPoly{-2, 1}, CircleMethod::PowerSum), DomainError);
  CHECK_THROWS_AS(count_circle(ExactPoly{-2, 1}, CircleMethod::CohnDerivative), DomainError);
  CHECK_THROWS_AS(count_circle(ExactPoly{}, CircleMethod::SchurCohnRecursive), DomainError);
}

TEST_CASE("skew and unimodular inputs are rotated before counting") {
  check_tally(count_circle(ExactPoly{-1, 0, 1}, CircleMethod::Krein), 0, 2, 0);
  check_tally(count_circle(ExactPoly{-I, 0, -I} * kSplit, CircleMethod::PowerSum), 1, 2, 1);
  CHECK(rotate_to_symmetric(ExactPoly{-1, 0, 1}) == ExactPoly{-I, 0, I});
}

TEST_CASE("gcd chain degrees") {
  auto degrees = [](const std::vector<ExactPoly>& chain) {
    std::vector<int> d;
    for (const auto& p : chain) d.push_back(p.degree());
    return d;
  };
  CHECK(degrees(gcd_chain(kSplit * kSplit)) == std::vector<int>{4, 2, 0});
  CHECK(degrees(gcd_chain(ExactPoly{1, 0, 1})) == std::vector<int>{2, 0});
  const ExactPoly x1{1, 1};
  CHECK(degrees(gcd_chain(x1 * x1 * x1)) == std::vector<int>{3, 2, 1, 0});
  CHECK_THROWS_AS(gcd_chain(to_float(kSplit)), UnsupportedModeError);
}

TEST_CASE("pencil g_delta - z g examples") {
  const Theorem3Result r = theorem3_count(kSplit, GaussRational(1));
  CHECK(r.observed == 1);
  CHECK(r.claimed == 1);
  CHECK(r.outside_side);

  const Theorem3Result r2 = theorem3_count(ExactPoly{1, 0, 1}, GaussRational(1));
  CHECK(r2.observed == 0);
  CHECK(r2.claimed == 0);

  // z = n/2 turns g_delta - z g into -x g': the derivative route.
  CHECK(theorem3_count(kSplit, GaussRational(1)).observed == count_circle(kSplit, CircleMethod::CohnDerivative).inside);

  CHECK_THROWS_AS(theorem3_count(kSplit, I), DomainError);
  CHECK_THROWS_AS(theorem3_count(to_float(kSplit), Complex(0.0, 2.0)), DomainError);
}

TEST_CASE("pencil counts hold for both signs of Re z") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const ExactPoly g = generate_symmetric({2, 1 + static_cast<int>(s % 3), 1}, derive_seed(41, s));
    for (const GaussRational& z : {gi(1, 2), gi(-1, 2), gi(3, -1), gi(-2, -5)}) {
      const Theorem3Result r = theorem3_count(g, z);
      CHECK(r.holds());
      CHECK(r.outside_side == (sgn(z.re()) > 0));
    }
  }
}

TEST_CASE("every method matches the oracle on planted multiplicities") {
  for (std::uint64_t s = 0; s < 15; ++s) {
    const int q_pairs = static_cast<int>(s % 3);
    const ExactPoly g = generate_symmetric({2, q_pairs, 3}, derive_seed(43, s));
    const CircleCount truth = oracle_circle_count(g);
    for (auto m : {CircleMethod::SchurCohnRecursive, CircleMethod::PowerSum, CircleMethod::Krein,
                   CircleMethod::CohnDerivative}) {
      CAPTURE(to_string(m));
      CHECK(same_tally(count_circle(g, m), truth));
    }
  }
}

TEST_CASE("Schur-Cohn matches the oracle on general polynomials") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const ExactPoly g = generate_general(1 + static_cast<int>(s % 12), 1e-3, derive_seed(47, s));
    const CircleCount truth = oracle_circle_count(g);
    CHECK(same_tally(count_circle(g, CircleMethod::SchurCohnRecursive), truth));
  }
}

TEST_CASE("counts are invariant under scaling by a nonzero constant") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const ExactPoly g = generate_general(6, 1e-3, derive_seed(53, s));
    const CircleCount a = count_circle(g, CircleMethod::SchurCohnRecursive);
    const CircleCount b = count_circle(g * gi(-3, 7), CircleMethod::SchurCohnRecursive);
    CHECK(same_tally(a, b));
  }
}

TEST_CASE("method names round-trip") {
  for (auto m : {CircleMethod::SchurCohnRecursive, CircleMethod::PowerSum, CircleMethod::Krein,
                 CircleMethod::CohnDerivative, CircleMethod::Oracle})
    CHECK(parse_circle_method(to_string(m)) == m);
  CHECK(parse_circle_method("schur-cohn") == CircleMethod::SchurCohnRecursive);
  CHECK(parse_circle_method("cohn") == CircleMethod::CohnDerivative);
  CHECK_FALSE(parse_circle_method("nope").has_value());
}
