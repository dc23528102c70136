#include <random>

#include "doctest.h"
#include "lpmtutte/engine.hpp"
#include "lpmtutte/error.hpp"
#include "lpmtutte/rings.hpp"
#include "test_support.hpp"

using namespace lpm;
using lpm::testing::poly_c;
using lpm::testing::poly_x;
using lpm::testing::poly_y;

namespace {

BivariatePoly random_poly(std::mt19937_64& rng, int max_deg = 3) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-9, 9);
  BivariatePoly p;
  const int dx = deg(rng), dy = deg(rng);
  for (int a = 0; a <= dx; ++a)
    for (int b = 0; b <= dy; ++b) p.set_coeff(a, b, coeff(rng));
  return p;
}

template <class R, class Gen>
void check_ring_laws(R& ring, Gen&& gen, int trials) {
  for (int k = 0; k < trials; ++k) {
    const auto a = gen(), b = gen(), c = gen();
    CHECK(ring.eq(ring.add(ring.add(a, b), c), ring.add(a, ring.add(b, c))));
    CHECK(ring.eq(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c))));
    CHECK(ring.eq(ring.add(a, b), ring.add(b, a)));
    CHECK(ring.eq(ring.mul(a, b), ring.mul(b, a)));
    CHECK(ring.eq(ring.mul(a, ring.add(b, c)), ring.add(ring.mul(a, b), ring.mul(a, c))));
    CHECK(ring.eq(ring.add(a, ring.zero()), a));
    CHECK(ring.eq(ring.mul(a, ring.one()), a));
  }
  CHECK(ring.eq(ring.from_weight(WeightTag::One), ring.one()));
}

}  // namespace

TEST_CASE("poly_add") {
  const auto x = poly_x(), y = poly_y();
  CHECK(poly_add(x + y, BivariatePoly{}) == x + y);
  CHECK((x * y + x * y).coeff(1, 1) == 2);
  const auto first = x * x + x * y + y * y + x + y;
  CHECK(first.coeff(0, 2) == 1);
  CHECK(first.coeff(3, 3) == 0);
  CHECK(first.max_deg_x() == 2);
  CHECK(first.max_deg_y() == 2);
}

TEST_CASE("poly_mul") {
  const auto x = poly_x(), y = poly_y();
  CHECK((x + y) * poly_c(1) == x + y);
  CHECK(x * (x + y + y * y) == x * x + x * y + x * y * y);
  CHECK(lpm::testing::pinched8_polynomial().eval(1, 1) == 15);
  CHECK((x * poly_c(0)).is_zero());
}

TEST_CASE("poly_eval") {
  const auto x = poly_x(), y = poly_y();
  CHECK(poly_eval(x + y, 1, 1) == 2);
  // 16 * 2 * 8
  CHECK(poly_eval(lpm::testing::pinched8_polynomial(), 2, 2) == 256);
  CHECK(poly_eval(x * y, 0, 5) == 0);
  CHECK(poly_eval(x * x + poly_c(-1) * y, Rational(1, 2), Rational(1, 3)) == Rational(-1, 12));
}

TEST_CASE("degree queries and trimming") {
  BivariatePoly p;
  CHECK(p.is_zero());
  CHECK(p.total_degree() == -1);
  p.set_coeff(3, 1, 5);
  CHECK(p.deg_x() == 3);
  CHECK(p.deg_y() == 1);
  CHECK(p.total_degree() == 4);
  p.set_coeff(3, 1, 0);
  CHECK(p.is_zero());
  CHECK(p.max_deg_x() == 0);
  CHECK(p == BivariatePoly{});
}

TEST_CASE("text rendering") {
  const auto x = poly_x(), y = poly_y();
  CHECK((x * x + x * y + y * y + x + y).to_text() == "x^2 + x*y + y^2 + x + y");
  CHECK((x + y).to_text() == "x + y");
  CHECK((x * y).to_text() == "x*y");
  CHECK(BivariatePoly{}.to_text() == "0");
  CHECK(poly_c(7).to_text() == "7");
  CHECK((poly_c(-2) * x * x + poly_c(3) * y + poly_c(-1)).to_text() == "-2*x^2 + 3*y - 1");
}

TEST_CASE("json serialization") {
  const auto x = poly_x(), y = poly_y();
  const auto j = (poly_c(2) * x * y + y).to_json();
  CHECK(j.dump() == R"({"terms":[{"c":"1","x":0,"y":1},{"c":"2","x":1,"y":1}]})");

  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    const auto p = random_poly(rng, 5);
    CHECK(BivariatePoly::from_json(nlohmann::json::parse(p.to_json().dump())) == p);
  }

  BigInt big("123456789012345678901234567890", 10);
  const auto huge = BivariatePoly::monomial(big, 2, 0);
  CHECK(BivariatePoly::from_json(huge.to_json()).coeff(2, 0) == big);

  CHECK_THROWS_AS(BivariatePoly::from_json(nlohmann::json::parse(R"({"terms":[{"x":1,"y":0,"c":3}]})")),
                  LpmError);
  CHECK_THROWS_AS(BivariatePoly::from_json(nlohmann::json::parse(R"({"terms":[{"x":-1,"y":0,"c":"3"}]})")),
                  LpmError);
  CHECK_THROWS_AS(BivariatePoly::from_json(nlohmann::json::parse(R"([1,2])")), LpmError);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("5/6") == Rational(5, 6));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("+3/9") == Rational(1, 3));
  CHECK(to_string(parse_rational("10/5")) == "2");
  for (const char* bad : {"", "1/0", "x", "1/2/3", "1.5", "/3", "0x10"}) {
    try {
      parse_rational(bad);
      FAIL("accepted " << bad);
    } catch (const LpmError& e) {
      CHECK(e.kind() == ErrorKind::MalformedRational);
    }
  }
}

TEST_CASE("ring laws hold in every domain") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> small(-1000000, 1000000);

  IntegerRing ints(3, 5);
  check_ring_laws(ints, [&]() -> BigInt { return BigInt(small(rng)) * BigInt(small(rng)); }, 1000);
  CHECK(ints.from_weight(WeightTag::X) == 3);
  CHECK(ints.from_weight(WeightTag::Y) == 5);

  RationalRing rats(Rational(1, 2), Rational(-2, 3));
  check_ring_laws(rats, [&] { return lpm::testing::random_rational(rng, 50, 20); }, 1000);
  CHECK(rats.from_weight(WeightTag::Y) == Rational(-2, 3));

  PolynomialRing polys;
  check_ring_laws(polys, [&] { return random_poly(rng); }, 1000);
  CHECK(polys.from_weight(WeightTag::X) == poly_x());
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 300; ++k) {
    const auto p = random_poly(rng), q = random_poly(rng);
    const Rational x0 = lpm::testing::random_rational(rng), y0 = lpm::testing::random_rational(rng);
    CHECK(poly_eval(poly_mul(p, q), x0, y0) == poly_eval(p, x0, y0) * poly_eval(q, x0, y0));
    CHECK(poly_eval(poly_add(p, q), x0, y0) == poly_eval(p, x0, y0) + poly_eval(q, x0, y0));
  }
}

TEST_CASE("operation counters are exact") {
  // Unit square: source 1x2 (2 mul), two 1x1 blocks (2 mul), sink 2x1 (2 mul, 1 add).
  RationalRing square_ring(1, 1);
  sweep(lpm::testing::unit_square(), square_ring);
  CHECK(square_ring.counter().muls == 6);
  CHECK(square_ring.counter().adds == 1);

  // Nine displayed stack factors: block shapes give 25 multiplies and 6 adds.
  IntegerRing pinched_ring(2, 3);
  sweep(lpm::testing::pinched8(), pinched_ring);
  CHECK(pinched_ring.counter().muls == 25);
  CHECK(pinched_ring.counter().adds == 6);

  PolynomialRing poly_ring;
  sweep(lpm::testing::unit_square(), poly_ring);
  CHECK(poly_ring.counter().muls == 6);
  CHECK(poly_ring.counter().adds == 1);
  // each operand has one nonzero coefficient
  CHECK(poly_ring.coefficient_counter().muls == 6);

  OpCounter manual;
  poly_mul(poly_x() + poly_y(), poly_x() + poly_c(1), &manual);
  CHECK(manual.muls == 4);
  poly_add(poly_x(), poly_x() + poly_y(), &manual);
  CHECK(manual.adds == 4 + 2);
}
