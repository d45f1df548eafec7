#include <string>

#include "doctest.h"
#include "kf/errors.hpp"
#include "kf/verify.hpp"

TEST_CASE("check ids are enumerable and validated") {
  CHECK(kf::verify_check_ids().size() == 9);
  CHECK_THROWS_AS(kf::run_verify("nosuch", {}), kf::invalid_input);
}

TEST_CASE("single box instance report") {
  kf::VerifyOptions opts;
  opts.a = kf::StepSequence{1, 3};
  opts.b = kf::StepSequence{2};
  opts.jobs = 1;
  const kf::VerifyReport r = kf::run_verify("box", opts);
  CHECK(r.check_id == "box");
  REQUIRE(r.instances.size() == 1);
  CHECK(r.overall() == kf::CheckOutcome::pass);
  CHECK(r.instances[0].details == "core [1,3,2], 2 box summands");
  CHECK(r.text().find("pass: core [1,3,2], 2 box summands") != std::string::npos);

  kf::VerifyOptions missing;
  missing.a = kf::StepSequence{1, 3};
  CHECK_THROWS_AS(kf::run_verify("box", missing), kf::invalid_input);
}

TEST_CASE("reports are deterministic and json excludes the wall time") {
  kf::VerifyOptions opts;
  opts.jobs = 2;
  const kf::VerifyReport a = kf::run_verify("cable-stairs", opts);
  const kf::VerifyReport b = kf::run_verify("cable-stairs", opts);
  CHECK(a.overall() == kf::CheckOutcome::pass);
  CHECK(a.json_text() == b.json_text());
  CHECK(a.json_text().find("wall") == std::string::npos);
  CHECK(a.text().find("wall time:") != std::string::npos);
  // every grid point is enumerated: p in 2..4, m in 1..3, both signs minus
  // the degenerate minus case
  CHECK(a.instances.size() == 17);
}

TEST_CASE("a failing instance is reported, not thrown") {
  kf::VerifyOptions opts;
  opts.a = kf::StepSequence{1, 3};
  opts.b = kf::StepSequence{4};  // 4 > min even entry: hypothesis fails
  opts.jobs = 1;
  const kf::VerifyReport r = kf::run_verify("box", opts);
  CHECK(r.overall() == kf::CheckOutcome::fail);
  REQUIRE(r.instances.size() == 1);
  CHECK(r.instances[0].outcome == kf::CheckOutcome::fail);
}
