#include <string>
#include <vector>

#include "doctest.h"
#include "kf/complex.hpp"
#include "kf/errors.hpp"
#include "kf/queries.hpp"

using kf::QueryResult;

namespace {
QueryResult q(const std::string& command, const std::vector<std::string>& exprs) {
  return kf::run_query(command, exprs, {});
}
}  // namespace

TEST_CASE("alex prints the polynomial") {
  const QueryResult r = q("alex", {"T(3,4)"});
  CHECK(r.exit_code == kf::kExitPass);
  CHECK(r.text == "1 - t + t^3 - t^5 + t^6");
}

TEST_CASE("epsilon, tau and steps of simple classes") {
  CHECK(q("epsilon", {"S[1,2]"}).text == "1");
  CHECK(q("epsilon", {"S[1,2]"}).exit_code == kf::kExitPass);
  CHECK(q("epsilon", {"-T(3,4)"}).text == "-1");
  CHECK(q("tau", {"T(3,4) + T(3,4)"}).text == "6");
  CHECK(q("tau", {"-T(3,4)"}).text == "-3");
  CHECK(q("steps", {"T(3,4)"}).text == "[1,2]");
  CHECK(q("steps", {"T(3,4) - C(T(2,3);2,3)"}).text == "[]");
  CHECK(q("steps", {"K(0,1)"}).text == "[2]");
}

TEST_CASE("a12 reports defined and undefined local invariants") {
  CHECK(q("a12", {"T(2,3)"}).text == "a1 = 1, a2 = undefined");
  CHECK(q("a12", {"T(3,4)"}).text == "a1 = 1, a2 = 2");
  CHECK(q("a12", {"-T(3,4)"}).text == "a1 = undefined, a2 = undefined");
}

TEST_CASE("compare orders two expressions") {
  CHECK(q("compare", {"K(0,1)", "K(0,0)"}).text == "greater");
  CHECK(q("compare", {"K(0,0)", "K(0,1)"}).text == "less");
  CHECK(q("compare", {"T(3,4)", "S[1,2]"}).text == "equal");
}

TEST_CASE("arch reports the relation and its certificate kind") {
  const QueryResult r = kf::run_query("arch", {"K(0,1)", "S[2,2]"}, {});
  CHECK(r.exit_code == kf::kExitPass);
  CHECK(r.text == "equivalent (sampled)");
  CHECK(q("arch", {"S[1,1,1,3]", "S[2,4,3]"}).text ==
        "much-greater (lemma order-i)");
}

TEST_CASE("dump emits the canonical serialized complex") {
  const QueryResult r = q("dump", {"S[1]"});
  CHECK(r.text == kf::serialize(kf::staircase_from_steps({1})));
  CHECK(r.json == r.text);
}

TEST_CASE("json output is canonical and repeatable") {
  const QueryResult a = q("steps", {"K(0,1)"});
  const QueryResult b = q("steps", {"K(0,1)"});
  CHECK(a.json == b.json);
  CHECK_FALSE(a.json.empty());
}

TEST_CASE("errors map to the documented exit codes") {
  CHECK_THROWS_AS(q("nosuch", {"T(2,3)"}), kf::invalid_input);
  CHECK_THROWS_AS(q("epsilon", {"T(3"}), kf::invalid_input);
  CHECK_THROWS_WITH_AS(q("epsilon", {"T(3"}),
                       "syntax error at offset 3: expected ','",
                       kf::invalid_input);
  CHECK_THROWS_AS(q("compare", {"T(2,3)"}), kf::invalid_input);  // arity
}
