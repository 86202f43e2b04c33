#include <doctest.h>

#include <random>

#include "rexcalc/polyring.hpp"
#include "rexcalc/symgroup.hpp"

using namespace rexcalc;

namespace {

Polynomial P(const char *text, int rank = 6) { return Polynomial::parse(rank, text); }

Polynomial random_poly(std::mt19937 &rng, int rank, int max_deg = 3, int terms = 4) {
  Polynomial p(rank);
  for (int t = 0; t < terms; ++t) {
    Polynomial m(rank, Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3)));
    const int deg = static_cast<int>(rng() % (max_deg + 1));
    for (int d = 0; d < deg; ++d) m *= Polynomial::variable(rank, 1 + static_cast<int>(rng() % rank));
    p += m;
  }
  return p;
}

} // namespace

TEST_CASE("canonical text form") {
  CHECK(P("x2 + x1").to_string() == "x1 + x2");
  CHECK(P("x1*x3 + x2^2").to_string() == "x1*x3 + x2^2");
  CHECK(P("x3^2*x1 + x1^2").to_string() == "x1*x3^2 + x1^2");
  CHECK(P("-x1 + 3").to_string() == "-x1 + 3");
  CHECK(P("x1 - x1").to_string() == "0");
  CHECK(P("1/2*x3 - 2/4").to_string() == "1/2*x3 - 1/2");
  CHECK(P("(x1 + x2)^2").to_string() == "x1^2 + 2*x1*x2 + x2^2");
  CHECK(P("x_4").to_string() == "x4");
  CHECK_THROWS_AS(P("x7"), InvalidArgument);
  CHECK_THROWS_AS(P("x1 +"), InvalidArgument);
  CHECK_THROWS_AS(P("x1 / 0"), InvalidArgument);
  CHECK_THROWS_AS(P("y1"), InvalidArgument);
}

TEST_CASE("degrees and homogeneity") {
  CHECK(P("x1").degree() == 2);
  CHECK(P("x1*x2 + x3^2").degree() == 4);
  CHECK(P("x1*x2 + x3^2").is_homogeneous());
  CHECK_FALSE(P("x1 + 1").is_homogeneous());
  CHECK(P("0").degree() == -1);
  CHECK(P("0").is_homogeneous());
  CHECK(P("5").is_constant());
}

TEST_CASE("symmetric group action") {
  CHECK(P("x1^2*x2").reflect(1) == P("x2^2*x1"));
  CHECK(P("x1 + x2").is_invariant(1));
  CHECK_FALSE(P("x1 + x2").is_invariant(2));
  const Permutation p({2, 3, 1});
  CHECK(P("x1", 3).act(p) == P("x2", 3));
  CHECK(P("x3", 3).act(p) == P("x1", 3));
  CHECK_THROWS_AS(P("x1", 3).reflect(3), InvalidArgument);
}

TEST_CASE("demazure operators match rational division") {
  // Values from sympy cancel((p - s_i p) / (x_i - x_{i+1})).
  struct Case {
    const char *p;
    int i;
    const char *expected;
  };
  const Case cases[] = {
      {"x1^2", 1, "x1 + x2"},
      {"x1^3*x2", 1, "x1^2*x2 + x1*x2^2"},
      {"x1*x2*x3", 2, "0"},
      {"x2^2*x3 - 3*x1*x3^2", 2, "3*x1*x2 + 3*x1*x3 + x2*x3"},
      {"1/2*x3^4 + x1*x4", 3, "-x1 + 1/2*x3^3 + 1/2*x3^2*x4 + 1/2*x3*x4^2 + 1/2*x4^3"},
      {"x1^2*x2^2", 1, "0"},
      {"x1 + 2*x2 - x3", 1, "-1"},
  };
  for (const auto &c : cases) {
    CAPTURE(c.p);
    CHECK(demazure(c.i, P(c.p)) == P(c.expected));
  }
}

TEST_CASE("demazure identities on random polynomials") {
  std::mt19937 rng(7);
  const int rank = 5;
  for (int iter = 0; iter < 1000; ++iter) {
    const Polynomial p = random_poly(rng, rank);
    const Polynomial q = random_poly(rng, rank, 2, 2);
    const int i = 1 + static_cast<int>(rng() % (rank - 1));
    const Polynomial xi = Polynomial::variable(rank, i), xj = Polynomial::variable(rank, i + 1);
    const Polynomial d = p.demazure(i);
    CHECK((xi - xj) * d == p - p.reflect(i));
    CHECK(d.is_invariant(i));
    // Twisted Leibniz rule.
    CHECK((p * q).demazure(i) == d * q + p.reflect(i) * q.demazure(i));
    const auto [inv0, inv1] = split_over_invariants(p, i);
    CHECK(inv0.is_invariant(i));
    CHECK(inv1.is_invariant(i));
    CHECK(inv0 + inv1 * xi == p);
    CHECK(Polynomial::parse(rank, p.to_string()) == p);
    if (p.is_homogeneous() && !d.is_zero()) CHECK(d.degree() == p.degree() - 2);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 1000; ++iter) {
    const Polynomial a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4, 2, 2);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK((a * b).reflect(2) == a.reflect(2) * b.reflect(2));
  }
}

TEST_CASE("rank mismatch is rejected") {
  CHECK_THROWS_AS(P("x1", 3) + P("x1", 4), InvalidArgument);
}
