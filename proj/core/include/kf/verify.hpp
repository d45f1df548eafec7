#ifndef KF_VERIFY_HPP
#define KF_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kf/complex.hpp"

namespace kf {

enum class CheckOutcome { pass, fail, undecided };

std::string outcome_name(CheckOutcome o);

struct CheckInstance {
  std::string instance;  // grid point, e.g. "p=3, m=2, sign=+"
  CheckOutcome outcome = CheckOutcome::pass;
  std::string details;
};

// Deterministic for a fixed grid and seed: instances are enumerated in a
// fixed order and assembled independently of scheduling.
struct VerifyReport {
  std::string check_id;
  std::vector<std::pair<std::string, std::string>> grid;  // echoed parameters
  std::vector<CheckInstance> instances;
  double wall_seconds = 0.0;

  CheckOutcome overall() const;  // fail beats undecided beats pass
  std::string text() const;      // human-readable, includes wall time
  std::string json_text() const; // canonical document, excludes wall time
};

struct VerifyOptions {
  std::optional<StepSequence> a, b;               // box: explicit sequences
  std::optional<std::int64_t> p_max, m_max;       // cable grids
  std::optional<std::int64_t> i_max, j_min, j_max;// K_{i,j} grids
  std::optional<std::int64_t> max_n;              // multiple / sampling bound
  std::uint64_t seed = 0;                         // randomized grids
  int jobs = 0;  // parallelism cap; <= 0 reads KF_JOBS, then hardware
};

// Registered check ids:
//   cable-poly    closed-form cable polynomials vs the product formula
//   cable-stairs  cable sequences vs the polynomial gap route
//   box           box concatenation: summands and reduced representative
//   polygon       polygon concatenation: fast path, summand shapes
//   order-i       first-step dominance on sampled pairs via epsilon
//   order-j       block-staircase dominance over its grid via epsilon
//   kij-classes   K_{i,j} pipeline values and summand decompositions
//   theorem-order desk-scale total order on the K_{i,j} classes
//   properties    randomized structural property suite
const std::vector<std::string>& verify_check_ids();

VerifyReport run_verify(const std::string& check_id,
                        const VerifyOptions& opts = {});

}  // namespace kf

#endif
