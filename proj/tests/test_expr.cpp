#include <string>

#include "doctest.h"
#include "kf/errors.hpp"
#include "kf/expr.hpp"
#include "kf/knots.hpp"

using kf::KnotExpr;
using kf::KnotKind;

TEST_CASE("parsing leaves and composites") {
  CHECK(kf::parse_expr("T(3,4)") == kf::torus_knot(3, 4));
  CHECK(kf::parse_expr(" T( 3 , 4 ) ") == kf::torus_knot(3, 4));
  CHECK(kf::parse_expr("S[1,2]") == kf::raw_class_knot({1, 2}));
  CHECK(kf::parse_expr("S[3,-1,-2,2]") == kf::raw_class_knot({3, -1, -2, 2}));
  CHECK(kf::parse_expr("S[]") == kf::raw_class_knot({}));
  CHECK(kf::parse_expr("C(T(2,3);2,5)") ==
        kf::cable_knot(kf::torus_knot(2, 3), 2, 5));
  CHECK(kf::parse_expr("-T(2,3)") == kf::mirror_knot(kf::torus_knot(2, 3)));
  CHECK(kf::parse_expr("(T(2,3))") == kf::torus_knot(2, 3));
  CHECK(kf::parse_expr("K(0,0)") == kf::k_ij(0, 0));
}

TEST_CASE("sums, differences and repetition") {
  const KnotExpr sum = kf::parse_expr("T(3,4) - C(T(2,3);2,3)");
  REQUIRE(sum.kind == KnotKind::sum);
  REQUIRE(sum.children.size() == 2);
  CHECK(sum.children[0] == kf::torus_knot(3, 4));
  CHECK(sum.children[1] ==
        kf::mirror_knot(kf::cable_knot(kf::torus_knot(2, 3), 2, 3)));

  const KnotExpr twice = kf::parse_expr("2*T(2,3)");
  REQUIRE(twice.kind == KnotKind::sum);
  REQUIRE(twice.children.size() == 2);
  CHECK(twice.children[0] == kf::torus_knot(2, 3));
  CHECK(twice.children[1] == kf::torus_knot(2, 3));
  CHECK(kf::parse_expr("1*T(2,3)") == kf::torus_knot(2, 3));

  CHECK(kf::parse_expr("T(2,3) + T(2,5) - T(2,7)").children.size() == 3);
}

TEST_CASE("syntax errors carry the failing offset") {
  CHECK_THROWS_WITH_AS(kf::parse_expr("T(3"),
                       "syntax error at offset 3: expected ','",
                       kf::invalid_input);
  CHECK_THROWS_AS(kf::parse_expr(""), kf::invalid_input);
  CHECK_THROWS_AS(kf::parse_expr("T(3,4) junk"), kf::invalid_input);
  CHECK_THROWS_AS(kf::parse_expr("Q(1,2)"), kf::invalid_input);
  CHECK_THROWS_AS(kf::parse_expr("0*T(2,3)"), kf::invalid_input);
  CHECK_THROWS_AS(kf::parse_expr("S[1,]"), kf::invalid_input);
}

TEST_CASE("semantic errors surface from the failing leaf") {
  CHECK_THROWS_AS(kf::parse_expr("T(2,4)"), kf::invalid_input);
  CHECK_THROWS_AS(kf::parse_expr("C(T(2,3);2,1)"), kf::not_representable);
  CHECK_THROWS_AS(kf::parse_expr("K(0,-1)"), kf::invalid_input);
}

TEST_CASE("print and re-parse round trips") {
  for (const std::string text : {
           "T(3,4)",
           "T(3,4) - C(T(2,3);2,3)",
           "S[1,2] + S[2] - T(2,3)",
           "-T(2,3)",
           "C(T(2,3);2,5)",
       }) {
    const KnotExpr e = kf::parse_expr(text);
    CHECK(kf::print_expr(e) == text);
    CHECK(kf::parse_expr(kf::print_expr(e)) == e);
  }
  // K(i,j) expands at parse time and prints as what it denotes
  const KnotExpr k = kf::parse_expr("K(0,1)");
  CHECK(kf::print_expr(k) == "T(4,5) - C(T(2,3);2,5)");
  CHECK(kf::parse_expr(kf::print_expr(k)) == k);
}
