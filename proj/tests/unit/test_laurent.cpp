#include <doctest.h>

#include <random>

#include "clusterseed/errors.hpp"
#include "clusterseed/laurent.hpp"
#include "oracles.hpp"

using namespace clusterseed;

namespace {

LaurentPoly P(const char* text, std::size_t m = 2) { return parse_laurent(text, m); }

// Value at a rational point, computed term by term.
mpq_class eval(const LaurentPoly& p, const std::vector<mpq_class>& x) {
  mpq_class acc = 0;
  for (const auto& [e, c] : p.terms()) {
    mpq_class t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= x[i];
      for (int k = 0; k > e[i]; --k) t /= x[i];
    }
    acc += t;
  }
  return acc;
}

LaurentPoly random_poly(std::mt19937_64& rng, std::size_t m, int terms) {
  std::uniform_int_distribution<int> ex(-2, 3), co(-4, 4);
  LaurentPoly p(m);
  for (int t = 0; t < terms; ++t) {
    ExponentVector e(m);
    for (auto& v : e) v = ex(rng);
    p += LaurentPoly::monomial(m, e, co(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("rendering is lexicographic and parses back") {
  const LaurentPoly p = LaurentPoly::monomial(2, {-1, 1}) + LaurentPoly::constant(2, 2);
  CHECK(p.to_string() == "x1^-1*x2 + 2");
  CHECK(parse_laurent(p.to_string(), 2) == p);
  CHECK(LaurentPoly(3).to_string() == "0");
  CHECK(P("-x1 + x2^2", 2) == LaurentPoly::variable(2, 1).pow(2) - LaurentPoly::variable(2, 0));
  CHECK(P("3*x1^2*x2^-3") == LaurentPoly::monomial(2, {2, -3}, 3));
}

TEST_CASE("parser rejects malformed text") {
  CHECK_THROWS_AS(parse_laurent("x3", 2), ParseError);
  CHECK_THROWS_AS(parse_laurent("x1 +", 2), ParseError);
  CHECK_THROWS_AS(parse_laurent("y", 2), ParseError);
}

TEST_CASE("ring arithmetic agrees with evaluation at a rational point") {
  std::mt19937_64 rng(7);
  const std::vector<mpq_class> x = {mpq_class(3, 2), mpq_class(-5, 7), mpq_class(11, 3)};
  for (int round = 0; round < 200; ++round) {
    const LaurentPoly a = random_poly(rng, 3, 4), b = random_poly(rng, 3, 3);
    CHECK(eval(a + b, x) == eval(a, x) + eval(b, x));
    CHECK(eval(a - b, x) == eval(a, x) - eval(b, x));
    CHECK(eval(a * b, x) == eval(a, x) * eval(b, x));
    CHECK(eval(a.pow(2), x) == eval(a, x) * eval(a, x));
  }
}

TEST_CASE("exact division recovers a factor and rejects non-multiples") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const LaurentPoly a = random_poly(rng, 2, 3), b = random_poly(rng, 2, 3);
    if (b.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
  }
  CHECK_THROWS_AS(exact_div(P("x1 + 1"), P("x1 + 2")), InexactDivision);
  CHECK_THROWS_AS(exact_div(P("1"), P("x1 + 1")), InexactDivision);
  CHECK(exact_div(P("x1^2 + 2*x1 + 1"), P("x1 + 1")) == P("x1 + 1"));
  CHECK(exact_div(P("2*x1^-1"), P("2*x2")) == P("x1^-1*x2^-1"));
}

TEST_CASE("units and negative powers") {
  CHECK(P("-x1^-2*x2").is_unit());
  CHECK_FALSE(P("2*x1").is_unit());
  CHECK(P("x1").pow(-3) == P("x1^-3"));
  CHECK_THROWS_AS(P("x1 + 1").pow(-1), InexactDivision);
  CHECK(P("x1 + x2").pow(0) == P("1"));
}

TEST_CASE("substitution is a ring homomorphism") {
  // x1 -> (1 + x2)/x1, x2 -> x2 sends 1 + x1 to (x1 + x2 + 1)/x1.
  const std::vector<LaurentPoly> images = {P("x1^-1 + x1^-1*x2"), P("x2")};
  CHECK(substitute(P("1 + x1"), images) == P("x1^-1 + x1^-1*x2 + 1"));
  const std::vector<LaurentPoly> shift = {P("x2"), P("x1")};
  CHECK(substitute(P("x1^-1*x2^2 + 3"), shift) == P("x1^2*x2^-1 + 3"));
  const std::vector<LaurentPoly> bad = {P("x1 + 1"), P("x2")};
  CHECK_THROWS_AS(substitute(P("x1^-1"), bad), InexactDivision);
}

TEST_CASE("digest separates distinct polynomials and matches equal ones") {
  CHECK(P("x1 + x2").digest() == (P("x2") + P("x1")).digest());
  CHECK(P("x1 + x2").digest() != P("x1 - x2").digest());
  CHECK(P("x1", 2).digest() != P("x1", 3).digest());
}

TEST_CASE("mixing ambient rings is an error") {
  CHECK_THROWS_AS(P("x1", 2) + P("x1", 3), AmbientMismatch);
}
