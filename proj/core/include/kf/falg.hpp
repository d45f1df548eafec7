#ifndef KF_FALG_HPP
#define KF_FALG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kf/complex.hpp"

namespace kf {

// Merge zeros by the convention [..., u, 0, v, ...] = [..., u+v, ...] and
// drop leading/trailing zeros; idempotent.
StepSequence seq_normalize(const std::vector<std::int64_t>& s);

// Block-repetition notation: a pattern is a list of items, each a literal
// block repeated `repeat` >= 0 times; expand_notation flattens it.
struct PatternItem {
  std::vector<std::int64_t> block;
  std::int64_t repeat = 1;
};
using Pattern = std::vector<PatternItem>;

StepSequence expand_notation(const Pattern& pattern);

// Formal sum of staircase-type classes: sum of multiplicity * [seq].
struct ClassTerm {
  std::int64_t multiplicity = 1;  // nonzero; negative means the dual class
  StepSequence seq;
  bool operator==(const ClassTerm&) const = default;
};

struct ClassExpr {
  std::vector<ClassTerm> terms;  // empty list is the identity 0
  bool operator==(const ClassExpr&) const = default;
};

// Tensor the realizations of all terms (duals for negative multiplicities),
// collapsing to the core summand after each factor so intermediate complexes
// stay small.  Scalar multiples of concatenation-friendly staircases are
// collapsed to a single staircase first.  Returns nullopt when a
// simplification pass fails to stabilize.
std::optional<BifilteredComplex> realize(const ClassExpr& e);

// Concatenation fast paths.  Each returns [a, b] when its hypothesis holds
// syntactically line by line, nullopt otherwise (never an approximation):
//   box: positive entries, |a| even, every entry of b between
//        max{a_i : i odd} and min{a_i : i even};
//   polygon: both sequences are blocks (1,e)^p, 1, e+c over a common entry e,
//        b a single block (q, d) with q >= every p and d <= every c.
std::optional<StepSequence> concat_by_box(const StepSequence& a,
                                          const StepSequence& b);
std::optional<StepSequence> concat_by_polygon(const StepSequence& a,
                                              const StepSequence& b);

// n-fold concatenation of a sequence with itself, valid when the box or
// polygon hypothesis applies to s + s (and then inductively to every prefix).
std::optional<StepSequence> scaled_staircase(const StepSequence& s,
                                             std::int64_t n);

// Exact dominance certificates [a] >> [b].  order-i: b1 > a1, or b1 = a1 and
// b2 < a2.  order-j: both sequences single blocks (1,e)^p, 1, e+c over a
// common entry with q > p, or q = p and d < c.  On success an explanatory
// witness is stored through `witness` when non-null.
bool lemma_order_i(const StepSequence& a, const StepSequence& b,
                   std::string* witness = nullptr);
bool lemma_order_j(const StepSequence& a, const StepSequence& b,
                   std::string* witness = nullptr);

// Reduced representative of a + b.  Uses the concatenation fast paths when
// the box or polygon hypotheses match syntactically, the general
// tensor-and-reduce route otherwise; `verify` forces the general route to run
// as a cross-check of a fast-path result.  nullopt when undecided.
std::optional<StepSequence> class_add(const ClassExpr& a, const ClassExpr& b,
                                      bool verify = false);

// Sign of a - b through epsilon of the realized difference: -1, 0 or +1;
// nullopt when simplification fails (undecided).
std::optional<int> class_compare(const ClassExpr& a, const ClassExpr& b);

enum class ArchRelation { much_less, much_greater, equivalent, equal, undecided };
enum class ArchCertificate {
  lemma_order_i,      // first-step dominance, exact
  lemma_order_j,      // staircase-of-blocks dominance, exact
  epsilon_sample,     // sampled multiples up to n_max
  exact_cancellation  // a difference reduced to the identity
};

struct ArchVerdict {
  ArchRelation relation = ArchRelation::undecided;
  ArchCertificate certificate = ArchCertificate::epsilon_sample;
  std::int64_t n_max = 0;
  std::vector<std::string> witnesses;
};

// Archimedean comparison of a and b.  Exact lemma certificates when the
// hypotheses match syntactically; otherwise sampled epsilon values of
// |a| - n|b| and |b| - n|a| for n <= n_max.  A sampled dominance verdict is
// bounded evidence, never a proof; a sampled "equivalent" verdict is exact,
// since its two failure witnesses already bound each side by a multiple of
// the other.
ArchVerdict arch_compare(const ClassExpr& a, const ClassExpr& b,
                         std::int64_t n_max);

std::string arch_relation_name(ArchRelation r);
std::string arch_certificate_name(ArchCertificate c);
std::string serialize(const ArchVerdict& v);

}  // namespace kf

#endif
