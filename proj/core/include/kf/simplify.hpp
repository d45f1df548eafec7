#ifndef KF_SIMPLIFY_HPP
#define KF_SIMPLIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kf/complex.hpp"

namespace kf {

// Record of the filtered substitution x_n -> x_n + x_l; legal only when
// fl(x_l) <= fl(x_n) componentwise and the gradings agree.
struct BasisChange {
  std::string n;  // replaced generator
  std::string l;  // added generator
  bool operator==(const BasisChange&) const = default;
};

// Apply one basis change and return the complex in the new basis.  Rejects
// changes violating the filtration/grading preconditions; the result is
// re-validated in full.
BifilteredComplex change_basis(const BifilteredComplex& c, const BasisChange& bc);

// Basis with every generator incident to at most one vertical arrow and a
// unique generator (the vertically distinguished element) incident to none.
// Requires vertical homology rank 1.  When `log` is given, the applied basis
// changes are appended in order; replaying them through change_basis
// reproduces the result bit-exactly.
BifilteredComplex vertically_simplify(const BifilteredComplex& c,
                                      std::vector<BasisChange>* log = nullptr);

// Mirror image of vertically_simplify (roles of i and j swapped).
BifilteredComplex horizontally_simplify(const BifilteredComplex& c,
                                        std::vector<BasisChange>* log = nullptr);

// Alternate vertical and horizontal elimination passes until both properties
// hold at once.  Returns nullopt (and clears `log`) when the alternation does
// not stabilize within 2 * #generators rounds; a simultaneously simplified
// basis is not known to exist in general.
std::optional<BifilteredComplex> simultaneous_simplify(
    const BifilteredComplex& c, std::vector<BasisChange>* log = nullptr);

// At most one incident vertical (resp. horizontal) arrow per generator.
bool is_vertically_simplified(const BifilteredComplex& c);
bool is_horizontally_simplified(const BifilteredComplex& c);

enum class SummandKind { box, polygon, other };

struct AcyclicSummand {
  BifilteredComplex complex;
  SummandKind kind;
  std::size_t sides = 0;  // generator count of the boundary cycle; 0 for other
};

// Direct-sum pieces of a simultaneously simplified complex: the connected
// component of the vertically distinguished element (the core, homology rank
// 1) plus acyclic components classified as box / polygon(4k sides) / other.
struct SummandDecomposition {
  BifilteredComplex core;
  std::vector<AcyclicSummand> acyclics;
};

SummandDecomposition decompose(const BifilteredComplex& c);

// Signed step sequence [a_1..a_m] read off the alternating horizontal/
// vertical path from the vertically distinguished element; the full trace is
// checked to be palindromic and to cover the core.  Throws
// simplification_failure when simultaneous simplification fails.
StepSequence reduced_representative(const BifilteredComplex& c);

// -1, 0 or +1 from the horizontal arrows at the vertically distinguished
// element of a simultaneously simplified basis; nullopt when simplification
// fails (undecided, deliberately distinct from 0).  Cross-checked against the
// dual complex.
std::optional<int> epsilon(const BifilteredComplex& c);

// j - i of the vertically distinguished element after vertical
// simplification.
std::int64_t tau(const BifilteredComplex& c);

struct LocalInvariants {
  std::optional<std::int64_t> a1;  // first step, defined iff epsilon = +1
  std::optional<std::int64_t> a2;  // second step, defined iff also positive
};

LocalInvariants local_invariants(const BifilteredComplex& c);

}  // namespace kf

#endif
