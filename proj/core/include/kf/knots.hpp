#ifndef KF_KNOTS_HPP
#define KF_KNOTS_HPP

#include <cstdint>
#include <vector>

#include "kf/falg.hpp"
#include "kf/laurent.hpp"

namespace kf {

// Knot expression tree.  Torus and Cable leaves are certified L-space knots;
// RawClass injects an explicit step-sequence class.
enum class KnotKind { torus, cable, mirror, sum, repeat, raw_class };

struct KnotExpr {
  KnotKind kind = KnotKind::torus;
  std::int64_t p = 0, q = 0;        // torus: T(p, q)
  std::int64_t m = 0, l = 0;        // cable: C(child; m, l)
  std::int64_t n = 0;               // repeat count
  StepSequence seq;                 // raw_class entries (may be signed)
  std::vector<KnotExpr> children;   // cable/mirror/repeat: 1, sum: >= 2
  bool operator==(const KnotExpr&) const = default;
};

// Factories with full validation.
//   torus_knot: coprime p, q >= 1.
//   cable_knot: companion must be a torus leaf (one cabling level only),
//     gcd(m, l) = 1, m >= 1, l >= 1, and the L-space certification bound
//     l >= m(2g - 1) with companion genus g = (p-1)(q-1)/2; an uncertified
//     cable is rejected ("not a certified L-space knot; no staircase model").
KnotExpr torus_knot(std::int64_t p, std::int64_t q);
KnotExpr cable_knot(const KnotExpr& companion, std::int64_t m, std::int64_t l);
KnotExpr mirror_knot(const KnotExpr& k);
KnotExpr sum_knots(const std::vector<KnotExpr>& children);
KnotExpr repeat_knot(std::int64_t n, const KnotExpr& k);
KnotExpr raw_class_knot(const StepSequence& seq);

// Step sequence of T(p, q) from the gap structure of its Alexander
// polynomial; for q = p + 1 the result is cross-checked against the explicit
// sequence (j, p-j) for j = 1..p-1, first half.
StepSequence torus_class(std::int64_t p, std::int64_t q);

// Full unnormalized cable sequence of length 2mp(p-1): for i = 1..m and
// j = 1..p-1, the pair (i, m-i) j times then (i-1, m-i+1) p-j times; the
// minus family (plus = false) uses the same pairs with entries swapped.
std::vector<std::int64_t> cable_sequence(std::int64_t p, std::int64_t m,
                                         bool plus);

// Step sequence of the (m, mp(p-1) + sign)-cable of T(p, p+1), computed by
// instantiating the explicit cable sequence and normalizing, then
// cross-checked against the gap structure of the closed-form polynomial
// (mismatch is an invariant violation).  sign is +1 or -1; the minus family
// excludes the degenerate p = 2, m = 1 case.
StepSequence cable_class(std::int64_t p, std::int64_t m, int sign);

// The two-bridge-of-cables family K_{i,j}, defined for (i, j) >= (0, 0)
// lexicographically (i = 0 requires j >= 0).  With m = i+1 and p = |j|+3:
//   i > 0, j >= 0:  C(T(p,p+1); m, (p-1)pm+1)  #  -T(pm, pm+1)
//   i > 0, j <  0:  C(T(p,p+1); m, (p-1)pm+1)  #  -C(T(p,p+1); m, (p-1)pm-1)
//   i = 0, j >= 0:  T(p, p+1)  #  -C(T(2,3); ceil(p/2), 2*floor(p/2)+1)
KnotExpr k_ij(std::int64_t i, std::int64_t j);

// Archimedean representative of [K_{i,j}] for (i, j) > (0, 0): the
// normalized form of [1, i, 1, 2i+1+j(i+1)] for j >= 0 and of
// [(1, i)^{-j}, 1, i, 1, 2i+1] for j <= 0; at j = 0 both formulas are
// computed and checked to agree.
StepSequence kij_arch_representative(std::int64_t i, std::int64_t j);

// Alexander polynomial of a knot expression: multiplicative over connected
// sums and cables, invariant under mirroring (the symmetric normalized form),
// and reconstructed from the gap structure for positive raw classes.
LaurentPoly alexander_of(const KnotExpr& e);

// Class of a knot expression: torus/cable leaves become single step-sequence
// terms, mirror negates, sum concatenates term lists (no merging -- syntactic
// cancellation is left to the realization pipeline), repeat scales.  A cable
// of a torus knot outside the two named families is resolved through the
// polynomial route alone; inside them the sequence route is cross-checked.
ClassExpr knot_class(const KnotExpr& e);

}  // namespace kf

#endif
