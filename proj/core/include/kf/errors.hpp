#ifndef KF_ERRORS_HPP
#define KF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kf {

// Caller handed us something outside an operation's documented domain.
struct invalid_input : std::invalid_argument {
  explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// A value is structurally fine but does not belong to the class the
// operation works on (e.g. a polynomial that is not of L-space form,
// or a step sequence with no chain-complex representative).
struct not_representable : std::domain_error {
  explicit not_representable(const std::string& what) : std::domain_error(what) {}
};

// An internal cross-check failed; indicates a bug, not bad input.
struct invariant_violation : std::logic_error {
  explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

// Greedy basis simplification did not stabilize within its pass budget; the
// requested value is undecided rather than wrong.
struct simplification_failure : std::runtime_error {
  explicit simplification_failure(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace kf

#endif
