#include <vector>

#include "doctest.h"
#include "kf/errors.hpp"
#include "kf/knots.hpp"

using kf::ClassExpr;
using kf::KnotExpr;
using kf::StepSequence;

TEST_CASE("torus step sequences") {
  CHECK(kf::torus_class(2, 3) == StepSequence{1});
  CHECK(kf::torus_class(3, 4) == StepSequence{1, 2});
  CHECK(kf::torus_class(4, 5) == StepSequence{1, 3, 2});
  CHECK(kf::torus_class(6, 7) == StepSequence{1, 5, 2, 4, 3});
  CHECK(kf::torus_class(2, 7) == StepSequence{1, 1, 1});
  CHECK(kf::torus_class(1, 2) == StepSequence{});  // unknot
}

TEST_CASE("torus knot validation") {
  CHECK_THROWS_AS(kf::torus_knot(2, 4), kf::invalid_input);
  CHECK_THROWS_AS(kf::torus_knot(0, 3), kf::invalid_input);
  CHECK(kf::torus_knot(3, 2) == kf::torus_knot(3, 2));
}

TEST_CASE("explicit cable sequences") {
  // p = 3, m = 2: interleaved (i, m-i) runs, flattened
  const std::vector<std::int64_t> x = kf::cable_sequence(3, 2, true);
  CHECK(x == std::vector<std::int64_t>{1, 1, 0, 2, 0, 2, 1, 1, 1, 1, 0, 2,
                                       2, 0, 1, 1, 1, 1, 2, 0, 2, 0, 1, 1});
  CHECK(kf::cable_class(3, 2, +1) == StepSequence{1, 5, 1, 1, 1, 3});
  CHECK(kf::cable_class(3, 2, -1) == StepSequence{1, 5, 1, 1, 1, 2});
  CHECK(kf::cable_class(2, 2, +1) == StepSequence{1, 3});
  CHECK(kf::cable_class(2, 2, -1) == StepSequence{1, 2});
  CHECK(kf::cable_class(2, 1, +1) == kf::torus_class(2, 3));
  CHECK(kf::cable_class(4, 1, +1) == kf::torus_class(4, 5));
  CHECK_THROWS_AS(kf::cable_class(2, 1, -1), kf::invalid_input);
  CHECK_THROWS_AS(kf::cable_class(1, 2, +1), kf::invalid_input);
  CHECK_THROWS_AS(kf::cable_class(2, 2, 0), kf::invalid_input);
}

TEST_CASE("cable certification bound") {
  // genus of T(2,3) is 1, so l >= m(2g-1) = m
  CHECK_THROWS_AS(kf::cable_knot(kf::torus_knot(2, 3), 2, 1),
                  kf::not_representable);
  CHECK_THROWS_WITH_AS(kf::cable_knot(kf::torus_knot(2, 3), 3, 2),
                       "not a certified L-space knot; no staircase model",
                       kf::not_representable);
  // nested cables are out of the certified family
  const KnotExpr inner = kf::cable_knot(kf::torus_knot(2, 3), 2, 5);
  CHECK_THROWS_AS(kf::cable_knot(inner, 2, 11), kf::not_representable);
  CHECK_THROWS_AS(kf::cable_knot(kf::torus_knot(2, 3), 2, 4), kf::invalid_input);
  CHECK_THROWS_AS(kf::cable_knot(kf::torus_knot(2, 3), 0, 1), kf::invalid_input);
}

TEST_CASE("knot_class of torus, cable, mirror and sums") {
  CHECK(kf::knot_class(kf::torus_knot(3, 4)) == ClassExpr{{{1, {1, 2}}}});
  CHECK(kf::knot_class(kf::mirror_knot(kf::torus_knot(3, 4))) ==
        ClassExpr{{{-1, {1, 2}}}});
  CHECK(kf::knot_class(kf::cable_knot(kf::torus_knot(2, 3), 2, 7)) ==
        ClassExpr{{{1, {1, 3, 1}}}});
  const KnotExpr sum = kf::sum_knots(
      {kf::torus_knot(2, 3), kf::mirror_knot(kf::torus_knot(2, 5))});
  CHECK(kf::knot_class(sum) == ClassExpr{{{1, {1}}, {-1, {1, 1}}}});
  CHECK(kf::knot_class(kf::repeat_knot(3, kf::torus_knot(2, 3))) ==
        ClassExpr{{{3, {1}}}});
  CHECK(kf::knot_class(kf::raw_class_knot({3, -1, -2, 2})) ==
        ClassExpr{{{1, {3, -1, -2, 2}}}});
  CHECK_THROWS_AS(kf::sum_knots({}), kf::invalid_input);
  CHECK_THROWS_AS(kf::repeat_knot(0, kf::torus_knot(2, 3)), kf::invalid_input);
}

TEST_CASE("k_ij construction and domain") {
  CHECK(kf::knot_class(kf::k_ij(0, 0)) ==
        ClassExpr{{{1, {1, 2}}, {-1, {1, 2}}}});
  CHECK(kf::knot_class(kf::k_ij(0, 1)) ==
        ClassExpr{{{1, {1, 3, 2}}, {-1, {1, 3}}}});
  // i=1, j=0: plus cable of T(3,4) against T(6,7)
  CHECK(kf::knot_class(kf::k_ij(1, 0)) ==
        ClassExpr{{{1, {1, 5, 1, 1, 1, 3}}, {-1, {1, 5, 2, 4, 3}}}});
  // i=1, j=-1: both cables of T(4,5) with m=2
  CHECK(kf::knot_class(kf::k_ij(1, -1)) ==
        ClassExpr{{{1, {1, 7, 1, 1, 1, 5, 1, 1, 1, 1, 1, 3}},
                   {-1, {1, 7, 1, 1, 1, 5, 1, 1, 1, 1, 1, 2}}}});
  CHECK_THROWS_AS(kf::k_ij(-1, 0), kf::invalid_input);
  CHECK_THROWS_AS(kf::k_ij(0, -1), kf::invalid_input);
}

TEST_CASE("archimedean representatives of the k_ij classes") {
  CHECK(kf::kij_arch_representative(0, 1) == StepSequence{2, 2});
  CHECK(kf::kij_arch_representative(0, 2) == StepSequence{2, 3});
  CHECK(kf::kij_arch_representative(1, 0) == StepSequence{1, 1, 1, 3});
  CHECK(kf::kij_arch_representative(1, -1) == StepSequence{1, 1, 1, 1, 1, 3});
  CHECK(kf::kij_arch_representative(2, 0) == StepSequence{1, 2, 1, 5});
  CHECK(kf::kij_arch_representative(1, 1) == StepSequence{1, 1, 1, 5});
  CHECK_THROWS_AS(kf::kij_arch_representative(0, 0), kf::invalid_input);
}

TEST_CASE("alexander polynomials of knot expressions") {
  CHECK(kf::alexander_of(kf::torus_knot(3, 4)) == kf::torus_alexander(3, 4));
  CHECK(kf::alexander_of(kf::mirror_knot(kf::torus_knot(3, 4))) ==
        kf::torus_alexander(3, 4));
  const KnotExpr sum = kf::sum_knots({kf::torus_knot(2, 3), kf::torus_knot(2, 3)});
  CHECK(kf::alexander_of(sum) ==
        kf::torus_alexander(2, 3) * kf::torus_alexander(2, 3));
  CHECK(kf::alexander_of(kf::cable_knot(kf::torus_knot(2, 3), 2, 7)) ==
        kf::cable_alexander(kf::torus_alexander(2, 3), 2, 7));
  // positive staircase classes reconstruct an L-space-form polynomial
  CHECK(kf::alexander_of(kf::raw_class_knot({1, 2})) == kf::torus_alexander(3, 4));
}
