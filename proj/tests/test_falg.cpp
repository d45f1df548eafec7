#include <vector>

#include "doctest.h"
#include "kf/complex.hpp"
#include "kf/errors.hpp"
#include "kf/falg.hpp"
#include "kf/simplify.hpp"

using kf::ClassExpr;
using kf::ClassTerm;
using kf::StepSequence;

namespace {
ClassExpr single(const StepSequence& s, std::int64_t mult = 1) {
  return ClassExpr{{{mult, s}}};
}
}  // namespace

TEST_CASE("seq_normalize merges zeros and drops boundary zeros") {
  CHECK(kf::seq_normalize({1, 1, 0, 2, 0, 2, 1, 1, 1, 1, 0, 2}) ==
        StepSequence{1, 5, 1, 1, 1, 3});
  CHECK(kf::seq_normalize({0, 1, 2, 0}) == StepSequence{1, 2});
  CHECK(kf::seq_normalize({1, -1}) == StepSequence{1, -1});
  CHECK(kf::seq_normalize({2, 0, -1}) == StepSequence{1});
  CHECK(kf::seq_normalize({}) == StepSequence{});
  CHECK(kf::seq_normalize({0, 0}) == StepSequence{});
  // [3,0,0,4]: either zero merges first, both routes reach [3,4].
  const StepSequence once = kf::seq_normalize({3, 0, 0, 4});
  CHECK(once == StepSequence{3, 4});
  CHECK(kf::seq_normalize(once) == once);
}

TEST_CASE("expand_notation flattens repeated blocks") {
  CHECK(kf::expand_notation({{{1, 1}, 2}, {{1, 3}, 1}}) ==
        StepSequence{1, 1, 1, 1, 1, 3});
  CHECK(kf::expand_notation({{{1, 2}, 0}, {{5}, 1}}) == StepSequence{5});
  CHECK(kf::expand_notation({}) == StepSequence{});
}

TEST_CASE("box concatenation hypothesis") {
  CHECK(kf::concat_by_box({1, 3}, {2}) == StepSequence{1, 3, 2});
  CHECK(kf::concat_by_box({1, 3}, {1, 3}) == StepSequence{1, 3, 1, 3});
  CHECK_FALSE(kf::concat_by_box({1, 3}, {4}).has_value());   // 4 > min even
  CHECK_FALSE(kf::concat_by_box({2, 3}, {1}).has_value());   // 1 < max odd
  CHECK_FALSE(kf::concat_by_box({1}, {1}).has_value());      // odd length
  CHECK_FALSE(kf::concat_by_box({1, -3}, {1}).has_value());  // signed entry
}

TEST_CASE("polygon concatenation hypothesis") {
  const StepSequence c = kf::expand_notation({{{1, 1}, 1}, {{1, 2}, 1}});
  const StepSequence d = kf::expand_notation({{{1, 1}, 2}, {{1, 2}, 1}});
  REQUIRE(c == StepSequence{1, 1, 1, 2});
  REQUIRE(d == StepSequence{1, 1, 1, 1, 1, 2});
  StepSequence joined = c;
  joined.insert(joined.end(), d.begin(), d.end());
  CHECK(kf::concat_by_polygon(c, d) == joined);
  CHECK_FALSE(kf::concat_by_polygon(d, c).has_value());  // q < p
  CHECK_FALSE(kf::concat_by_polygon(c, {2, 2}).has_value());  // not a block
  // d = 0 blocks: [1, a] is the (0, 0) block over entry a
  CHECK(kf::concat_by_polygon({1, 1}, {1, 1}) == StepSequence{1, 1, 1, 1});
}

TEST_CASE("scaled_staircase collapses scalar multiples") {
  CHECK(kf::scaled_staircase({1, 2}, 2) == StepSequence{1, 2, 1, 2});
  CHECK(kf::scaled_staircase({1, 2}, 1) == StepSequence{1, 2});
  CHECK(kf::scaled_staircase({1, 1, 1, 2}, 3) ==
        StepSequence{1, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 2});
  CHECK_FALSE(kf::scaled_staircase({2, 1}, 2).has_value());
  CHECK_FALSE(kf::scaled_staircase({2}, 2).has_value());
}

TEST_CASE("order lemma certificates") {
  std::string witness;
  CHECK(kf::lemma_order_i({1, 1, 1, 3}, {2, 4, 3}, &witness));
  CHECK_FALSE(witness.empty());
  CHECK_FALSE(kf::lemma_order_i({2, 4, 3}, {1, 1, 1, 3}));
  CHECK(kf::lemma_order_i({1, 2}, {1, 1}));
  CHECK_FALSE(kf::lemma_order_i({1, 1}, {1, 1}));
  CHECK_FALSE(kf::lemma_order_i({1, 1}, {1, 2}));

  CHECK(kf::lemma_order_j({1, 1, 1, 2}, {1, 1, 1, 1, 1, 2}));  // q=2 > p=1
  CHECK(kf::lemma_order_j({1, 1, 1, 2}, {1, 1, 1, 1}, &witness));  // d=0 < c=1
  CHECK_FALSE(witness.empty());
  CHECK_FALSE(kf::lemma_order_j({1, 1, 1, 1, 1, 2}, {1, 1, 1, 2}));
  CHECK_FALSE(kf::lemma_order_j({1, 1, 1, 2}, {1, 1, 1, 2}));  // equal
  CHECK_FALSE(kf::lemma_order_j({1, 2}, {2, 2}));  // not a common-entry block
}

TEST_CASE("realize builds the reduced core of a formal sum") {
  const auto empty = kf::realize(ClassExpr{});
  REQUIRE(empty.has_value());
  CHECK(empty->size() == 1);
  CHECK(kf::epsilon(*empty) == 0);

  const auto one = kf::realize(single({1, 2}));
  REQUIRE(one.has_value());
  CHECK(kf::reduced_representative(*one) == StepSequence{1, 2});

  const auto negated = kf::realize(single({1, 2}, -1));
  REQUIRE(negated.has_value());
  CHECK(kf::epsilon(*negated) == -1);
  CHECK(kf::tau(*negated) == -3);

  const auto cancel = kf::realize(ClassExpr{{{1, {1, 2}}, {-1, {1, 2}}}});
  REQUIRE(cancel.has_value());
  CHECK(kf::reduced_representative(*cancel).empty());

  const auto doubled = kf::realize(single({1, 2}, 2));
  REQUIRE(doubled.has_value());
  CHECK(kf::reduced_representative(*doubled) == StepSequence{1, 2, 1, 2});
}

TEST_CASE("scalar collapse route agrees with the plain tensor route") {
  // eps(C - r.D) evaluated twice: class_compare collapses r.D to one
  // staircase when a concatenation lemma applies, while the direct complex
  // tensors r dual copies with no collapse at all.
  auto direct = [](const StepSequence& c, const StepSequence& d, int r) {
    kf::BifilteredComplex t = kf::staircase_from_steps(c);
    for (int k = 0; k < r; ++k)
      t = kf::tensor(t, kf::dual(kf::staircase_from_steps(d)));
    return kf::epsilon(t);
  };
  for (int r : {2, 3}) {
    const auto via_class = kf::class_compare(single({1, 2}), single({1}, r));
    REQUIRE(via_class.has_value());
    CHECK(via_class == direct({1, 2}, {1}, r));
  }
  // Polygon-shaped D: both routes may land on "undecided"; they still have
  // to land on the same answer.
  CHECK(kf::class_compare(single({1, 2}), single({1, 1, 2}, 2)) ==
        direct({1, 2}, {1, 1, 2}, 2));
}

TEST_CASE("class_add uses the fast path and cross-checks it") {
  CHECK(kf::class_add(single({1, 3}), single({2})) == StepSequence{1, 3, 2});
  CHECK(kf::class_add(single({1, 3}), single({2}), true) ==
        StepSequence{1, 3, 2});
  // no syntactic fast path: falls back to the tensor route
  CHECK(kf::class_add(single({1, 2}), single({1, 2})) ==
        StepSequence{1, 2, 1, 2});
  CHECK(kf::class_add(single({1}), single({1})) == StepSequence{1, 1});
}

TEST_CASE("class_compare orders classes through epsilon") {
  CHECK(kf::class_compare(single({1, 2}), single({1, 1})) == 1);
  CHECK(kf::class_compare(single({1, 1}), single({1, 2})) == -1);
  CHECK(kf::class_compare(single({1, 2}), single({1, 2})) == 0);
  CHECK(kf::class_compare(single({1}), single({2})) == 1);  // smaller first step
  CHECK(kf::class_compare(ClassExpr{}, ClassExpr{}) == 0);
}

TEST_CASE("archimedean comparison verdicts") {
  using kf::ArchCertificate;
  using kf::ArchRelation;

  const kf::ArchVerdict eq = kf::arch_compare(single({1, 2}), single({1, 2}), 3);
  CHECK(eq.relation == ArchRelation::equal);

  // [1,3,2] - [1,3] reduces to [2]; it and [2,2] bound each other by
  // sampled multiples without either dominating
  const ClassExpr k01{{{1, {1, 3, 2}}, {-1, {1, 3}}}};
  const kf::ArchVerdict equiv = kf::arch_compare(k01, single({2, 2}), 3);
  CHECK(equiv.relation == ArchRelation::equivalent);
  CHECK(equiv.certificate == ArchCertificate::epsilon_sample);

  const kf::ArchVerdict much =
      kf::arch_compare(single({1, 1, 1, 3}), single({2, 4, 3}), 3);
  CHECK(much.relation == ArchRelation::much_greater);
  CHECK(much.certificate == ArchCertificate::lemma_order_i);

  const kf::ArchVerdict less =
      kf::arch_compare(single({2, 4, 3}), single({1, 1, 1, 3}), 3);
  CHECK(less.relation == ArchRelation::much_less);

  const std::string once = kf::serialize(equiv);
  CHECK(kf::serialize(kf::arch_compare(k01, single({2, 2}), 3)) == once);
}
