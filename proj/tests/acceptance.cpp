// Acceptance suite: one line per criterion, exit code = number of failures.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "kf/complex.hpp"
#include "kf/knots.hpp"
#include "kf/verify.hpp"

namespace {

struct Outcome {
  bool ok = false;
  std::string note;
};

int g_failures = 0;

void run_criterion(int number, const std::string& description,
                   double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (out.ok && seconds > budget_seconds) {
    out.ok = false;
    std::ostringstream os;
    os << "exceeded " << budget_seconds << " s budget";
    out.note = os.str();
  }
  if (!out.ok) ++g_failures;
  std::printf("criterion %d: %s (%.2f s) %s%s%s\n", number,
              out.ok ? "PASS" : "FAIL", seconds, description.c_str(),
              out.note.empty() ? "" : " -- ", out.note.c_str());
  std::fflush(stdout);
}

Outcome from_report(const kf::VerifyReport& r) {
  if (r.overall() == kf::CheckOutcome::pass)
    return {true, std::to_string(r.instances.size()) + " instances"};
  std::string note;
  for (const kf::CheckInstance& inst : r.instances)
    if (inst.outcome != kf::CheckOutcome::pass) {
      note = inst.instance + ": " + inst.details;
      break;
    }
  return {false, note};
}

Outcome torus_staircase_golden() {
  const kf::StepSequence steps = kf::torus_class(3, 4);
  if (steps != kf::StepSequence{1, 2})
    return {false, "torus sequence is not [1,2]"};
  const kf::BifilteredComplex c = kf::staircase_from_steps(steps);
  if (c.size() != 5) return {false, "expected 5 generators"};
  const std::vector<std::pair<std::int64_t, std::int64_t>> coords{
      {0, 3}, {1, 3}, {1, 1}, {3, 1}, {3, 0}};
  for (int k = 0; k < 5; ++k) {
    const int idx = c.index_of("x" + std::to_string(k));
    if (idx < 0) return {false, "missing generator x" + std::to_string(k)};
    const kf::Generator& g = c.gen(idx);
    if (g.i != coords[static_cast<std::size_t>(k)].first ||
        g.j != coords[static_cast<std::size_t>(k)].second)
      return {false, "wrong position for x" + std::to_string(k)};
  }
  const std::vector<std::pair<std::string, std::string>> arrows{
      {"x1", "x0"}, {"x1", "x2"}, {"x3", "x2"}, {"x3", "x4"}};
  if (c.arrow_ids() != arrows)
    return {false, "differential is not dx1 = x0 + x2, dx3 = x2 + x4"};
  return {true, "5 generators, zigzag differential"};
}

Outcome box_with_golden() {
  const kf::VerifyReport r = kf::run_verify("box", {});
  Outcome out = from_report(r);
  if (!out.ok) return out;
  for (const kf::CheckInstance& inst : r.instances)
    if (inst.instance == "a=[1,3], b=[2]") {
      if (inst.details != "core [1,3,2], 2 box summands")
        return {false, "golden instance reported: " + inst.details};
      return {true, std::to_string(r.instances.size()) +
                        " instances, golden [1,3]+[2] -> [1,3,2]"};
    }
  return {false, "golden instance a=[1,3], b=[2] not in the grid"};
}

Outcome order_pair() {
  const kf::VerifyReport ri = kf::run_verify("order-i", {});
  Outcome oi = from_report(ri);
  if (!oi.ok) return {false, "order-i: " + oi.note};
  const kf::VerifyReport rj = kf::run_verify("order-j", {});
  Outcome oj = from_report(rj);
  if (!oj.ok) return {false, "order-j: " + oj.note};
  return {true, std::to_string(ri.instances.size()) + " order-i + " +
                    std::to_string(rj.instances.size()) +
                    " order-j instances"};
}

Outcome properties_with_case_total() {
  const kf::VerifyReport r = kf::run_verify("properties", {});
  Outcome out = from_report(r);
  if (!out.ok) return out;
  long total = 0;
  for (const kf::CheckInstance& inst : r.instances) {
    long n = 0;
    std::istringstream is(inst.details);
    if (is >> n) total += n;
  }
  if (total < 200)
    return {false, "only " + std::to_string(total) + " randomized cases"};
  return {true, std::to_string(total) + " randomized cases, seed 0"};
}

}  // namespace

int main() {
  run_criterion(1, "cable polynomial closed form vs product, p<=5, m<=4", 5.0,
                [] { return from_report(kf::run_verify("cable-poly", {})); });
  run_criterion(2, "T(3,4) staircase golden model", 1.0, torus_staircase_golden);
  run_criterion(3, "box concatenation grid with golden [1,3]+[2]", 30.0,
                box_with_golden);
  run_criterion(4, "polygon concatenation fast path vs general path", 120.0,
                [] { return from_report(kf::run_verify("polygon", {})); });
  run_criterion(5, "order-i sampled pairs and order-j grid", 180.0, order_pair);
  run_criterion(6, "cable staircase sequence vs polynomial gaps, p<=4, m<=3",
                10.0,
                [] { return from_report(kf::run_verify("cable-stairs", {})); });
  run_criterion(7, "family classes: K(0,0), K(0,1), decompositions", 300.0,
                [] { return from_report(kf::run_verify("kij-classes", {})); });
  run_criterion(8, "pairwise dominance over the family grid", 600.0,
                [] { return from_report(kf::run_verify("theorem-order", {})); });
  run_criterion(9, "randomized property suite, >= 200 cases", 120.0,
                properties_with_case_total);
  return g_failures;
}
