#include "doctest.h"
#include "kf/errors.hpp"
#include "kf/laurent.hpp"

using kf::GapSequence;
using kf::LaurentPoly;

TEST_CASE("term, coeff and exponent range") {
  const LaurentPoly p = LaurentPoly::term(3, -2) + LaurentPoly::term(-1, 5);
  CHECK(p.coeff(-2) == 3);
  CHECK(p.coeff(5) == -1);
  CHECK(p.coeff(0) == 0);
  CHECK(p.min_exp() == -2);
  CHECK(p.max_exp() == 5);
  CHECK(LaurentPoly().is_zero());
  CHECK((p - p).is_zero());
}

TEST_CASE("geometric sums") {
  CHECK(LaurentPoly::geometric(2, 3).str() == "1 + t^2 + t^4 + t^6");
  CHECK(LaurentPoly::geometric(1, 0) == LaurentPoly::one());
}

TEST_CASE("multiplication and exact division") {
  const LaurentPoly a = LaurentPoly::one() + LaurentPoly::term(1, 1);
  const LaurentPoly b = LaurentPoly::one() + LaurentPoly::term(1, 2);
  CHECK((a * b).divide_exact(a) == b);
  CHECK((a * b).divide_exact(b) == a);
  CHECK_THROWS_AS(b.divide_exact(a), kf::invariant_violation);
}

TEST_CASE("compose_power and normalized") {
  const LaurentPoly p = LaurentPoly::parse("1 - t + t^2");
  CHECK(p.compose_power(2).str() == "1 - t^2 + t^4");
  const LaurentPoly shifted = p * LaurentPoly::term(-1, -2);
  CHECK(shifted.normalized() == p);
}

TEST_CASE("str and parse round trip") {
  const std::string text = "1 - t + t^3 - t^5 + t^6";
  CHECK(LaurentPoly::parse(text).str() == text);
}

TEST_CASE("torus knot polynomials") {
  CHECK(kf::torus_alexander(3, 4).str() == "1 - t + t^3 - t^5 + t^6");
  CHECK(kf::torus_alexander(2, 3).str() == "1 - t + t^2");
  CHECK(kf::torus_alexander(2, 3) == kf::torus_alexander(3, 2));
  CHECK_THROWS_AS(kf::torus_alexander(2, 4), kf::invalid_input);
  CHECK_THROWS_AS(kf::torus_alexander(0, 3), kf::invalid_input);
}

TEST_CASE("cable product polynomial") {
  // (2,3)-cable of the trefoil has the T(3,4) polynomial.
  const LaurentPoly cab = kf::cable_alexander(kf::torus_alexander(2, 3), 2, 3);
  CHECK(cab == kf::torus_alexander(3, 4));
  CHECK(kf::cable_alexander(kf::torus_alexander(2, 3), 2, 7).str() ==
        "1 - t + t^4 - t^5 + t^6 - t^9 + t^10");
}

TEST_CASE("closed-form cable polynomial matches the product") {
  for (std::int64_t p = 2; p <= 4; ++p)
    for (std::int64_t m = 1; m <= 3; ++m)
      for (int sign : {+1, -1}) {
        if (sign < 0 && p == 2 && m == 1) continue;
        const std::int64_t l = p * (p - 1) * m + sign;
        CAPTURE(p);
        CAPTURE(m);
        CAPTURE(sign);
        CHECK(kf::cable_closed_form(p, m, sign) ==
              kf::cable_alexander(kf::torus_alexander(p, p + 1), m, l));
      }
  CHECK_THROWS_AS(kf::cable_closed_form(2, 1, -1), kf::invalid_input);
  CHECK_THROWS_AS(kf::cable_closed_form(1, 1, +1), kf::invalid_input);
}

TEST_CASE("gap sequences of L-space polynomials") {
  const GapSequence g34 = kf::lspace_gaps(kf::torus_alexander(3, 4));
  CHECK(g34.gaps == std::vector<std::int64_t>{1, 2});
  CHECK(g34.genus == 3);

  const GapSequence trefoil = kf::lspace_gaps(kf::torus_alexander(2, 3));
  CHECK(trefoil.gaps == std::vector<std::int64_t>{1});
  CHECK(trefoil.genus == 1);

  const GapSequence unknot = kf::lspace_gaps(LaurentPoly::one());
  CHECK(unknot.gaps.empty());
  CHECK(unknot.genus == 0);

  const GapSequence c27 =
      kf::lspace_gaps(kf::cable_alexander(kf::torus_alexander(2, 3), 2, 7));
  CHECK(c27.gaps == std::vector<std::int64_t>{1, 3, 1});
  CHECK(c27.genus == 5);

  CHECK_THROWS_AS(kf::lspace_gaps(LaurentPoly::one() + LaurentPoly::term(1, 1)),
                  kf::not_representable);
  CHECK_THROWS_AS(kf::lspace_gaps(LaurentPoly::parse("1 - t")),
                  kf::not_representable);
}
