#include <vector>

#include "doctest.h"
#include "kf/complex.hpp"
#include "kf/errors.hpp"

using kf::BifilteredComplex;
using kf::Generator;
using kf::StepSequence;

TEST_CASE("staircase of [1,2] has the classic five-generator shape") {
  const BifilteredComplex c = kf::staircase_from_steps({1, 2});
  REQUIRE(c.size() == 5);
  const std::vector<std::pair<std::int64_t, std::int64_t>> want = {
      {0, 3}, {1, 3}, {1, 1}, {3, 1}, {3, 0}};
  for (int k = 0; k < 5; ++k) {
    const Generator& g = c.gen(k);
    CHECK(g.id == "x" + std::to_string(k));
    CHECK(g.i == want[k].first);
    CHECK(g.j == want[k].second);
  }
  const auto arrows = c.arrow_ids();
  REQUIRE(arrows.size() == 4);
  CHECK(c.has_arrow("x1", "x0"));
  CHECK(c.has_arrow("x1", "x2"));
  CHECK(c.has_arrow("x3", "x2"));
  CHECK(c.has_arrow("x3", "x4"));
  const kf::ValidationReport v = kf::validate(c);
  CHECK(v.ok);
  CHECK(v.homology_rank == 1);
  CHECK(v.vertical_homology_rank == 1);
  CHECK(v.horizontal_homology_rank == 1);
}

TEST_CASE("empty step sequence gives the one-generator complex") {
  const BifilteredComplex c = kf::staircase_from_steps({});
  CHECK(c.size() == 1);
  CHECK(c.arrows().empty());
  CHECK(kf::validate(c).ok);
}

TEST_CASE("staircase rejects nonpositive entries") {
  CHECK_THROWS_AS(kf::staircase_from_steps({1, 0}), kf::invalid_input);
  CHECK_THROWS_AS(kf::staircase_from_steps({-1}), kf::invalid_input);
}

TEST_CASE("mixed sequence completes with diagonal arrows") {
  const BifilteredComplex c = kf::mixed_from_steps({3, -1, -2, 2});
  REQUIRE(c.size() == 9);
  const std::vector<std::int64_t> gr = {0, 1, 2, 1, 0, 1, 2, 1, 0};
  for (int k = 0; k < 9; ++k) {
    REQUIRE(c.gen(k).gr.has_value());
    CHECK(*c.gen(k).gr == gr[static_cast<std::size_t>(k)]);
  }
  // zigzag arrows follow the step signs
  CHECK(c.has_arrow("x1", "x0"));
  CHECK(c.has_arrow("x2", "x1"));
  CHECK(c.has_arrow("x2", "x3"));
  CHECK(c.has_arrow("x3", "x4"));
  CHECK(c.has_arrow("x5", "x4"));
  CHECK(c.has_arrow("x6", "x5"));
  CHECK(c.has_arrow("x6", "x7"));
  CHECK(c.has_arrow("x7", "x8"));
  // lexicographically first squared-zero diagonal completion
  CHECK(c.arrows().size() == 12);
  CHECK(c.has_arrow("x1", "x4"));
  CHECK(c.has_arrow("x3", "x0"));
  CHECK(c.has_arrow("x5", "x8"));
  CHECK(c.has_arrow("x7", "x4"));
  CHECK(kf::validate(c).ok);
}

TEST_CASE("mixed sequences without a valid completion are rejected") {
  CHECK_THROWS_AS(kf::mixed_from_steps({1, -2}), kf::not_representable);
  CHECK_THROWS_AS(kf::mixed_from_steps({1, -1}), kf::not_representable);
  CHECK_THROWS_AS(kf::mixed_from_steps({1, 0}), kf::invalid_input);
}

TEST_CASE("positive mixed sequence equals the staircase") {
  CHECK(kf::mixed_from_steps({1, 2}) == kf::staircase_from_steps({1, 2}));
}

TEST_CASE("dual negates filtrations and reverses arrows") {
  const BifilteredComplex c = kf::staircase_from_steps({1, 2});
  const BifilteredComplex d = kf::dual(c);
  CHECK(d.size() == 5);
  CHECK(d.has_arrow("x0", "x1"));
  CHECK(d.has_arrow("x2", "x1"));
  CHECK(d.gen(d.index_of("x0")).i == 0);
  CHECK(d.gen(d.index_of("x0")).j == -3);
  CHECK(kf::validate(d).ok);
  CHECK(kf::dual(d) == c);
}

TEST_CASE("tensor multiplies sizes and keeps validity") {
  const BifilteredComplex a = kf::staircase_from_steps({1});
  const BifilteredComplex t = kf::tensor(a, a);
  CHECK(t.size() == 9);
  const kf::ValidationReport v = kf::validate(t);
  CHECK(v.ok);
  CHECK(v.homology_rank == 1);
  CHECK(t.index_of("x0*x0") >= 0);
  CHECK(t.has_arrow("x1*x0", "x0*x0"));
  CHECK(t.has_arrow("x0*x1", "x0*x0"));
}

TEST_CASE("constructor enforces the differential axioms") {
  // arrow failing to drop the filtration
  CHECK_THROWS_AS(
      BifilteredComplex({{"a", 0, 0, {}}, {"b", 1, 0, {}}}, {{"a", "b"}}),
      kf::invalid_input);
  // differential fails to square to zero
  CHECK_THROWS_AS(BifilteredComplex({{"a", 2, 2, {}}, {"b", 1, 2, {}}, {"c", 0, 2, {}}},
                                    {{"a", "b"}, {"b", "c"}}),
                  kf::invalid_input);
  // grading must drop by exactly one
  CHECK_THROWS_AS(
      BifilteredComplex({{"a", 1, 1, 0}, {"b", 0, 1, 0}}, {{"a", "b"}}),
      kf::invalid_input);
  // duplicate ids
  CHECK_THROWS_AS(BifilteredComplex({{"a", 0, 0, {}}, {"a", 1, 1, {}}}, {}),
                  kf::invalid_input);
}

TEST_CASE("serialization round trips byte-exactly") {
  const BifilteredComplex c = kf::mixed_from_steps({3, -1, -2, 2});
  const std::string text = kf::serialize(c);
  const BifilteredComplex back = kf::deserialize(text);
  CHECK(back == c);
  CHECK(kf::serialize(back) == text);
  CHECK_THROWS_AS(kf::deserialize("not json"), kf::invalid_input);
}

TEST_CASE("relabeled keeps the shape and renames ids") {
  const BifilteredComplex c = kf::staircase_from_steps({1, 2});
  const BifilteredComplex r = kf::relabeled(c, "g");
  CHECK(r.size() == 5);
  CHECK(r.index_of("g0") >= 0);
  CHECK(r.index_of("x0") < 0);
  CHECK(kf::validate(r).ok);
}

TEST_CASE("arrow kinds by coordinates") {
  const Generator a{"a", 2, 2, {}};
  CHECK(kf::arrow_kind(a, {"h", 0, 2, {}}) == kf::ArrowKind::horizontal);
  CHECK(kf::arrow_kind(a, {"v", 2, 0, {}}) == kf::ArrowKind::vertical);
  CHECK(kf::arrow_kind(a, {"d", 1, 1, {}}) == kf::ArrowKind::diagonal);
}
