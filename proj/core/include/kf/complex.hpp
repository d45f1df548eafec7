#ifndef KF_COMPLEX_HPP
#define KF_COMPLEX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kf {

// Step sequence [a_1, ..., a_m]: the first half of a palindromic arrow-length
// sequence (a_i = a_{2m+1-i} implicitly).  Normalized form has no zeros.
using StepSequence = std::vector<std::int64_t>;

struct Generator {
  std::string id;
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::optional<std::int64_t> gr;  // relative Maslov grading when known
  bool operator==(const Generator&) const = default;
};

enum class ArrowKind { horizontal, vertical, diagonal };

// Which kind of arrow src -> tgt would be, by filtration coordinates alone.
ArrowKind arrow_kind(const Generator& src, const Generator& tgt);

// Finite bifiltered chain complex over F_2.  Generators are kept sorted by
// id; arrows are stored as sorted (source index, target index) pairs.  Every
// arrow strictly drops the filtration (componentwise <=, not equal) and drops
// the grading by exactly 1 where gradings are present, and the differential
// squares to zero; the constructor enforces all of this.
class BifilteredComplex {
 public:
  BifilteredComplex() = default;
  BifilteredComplex(std::vector<Generator> gens,
                    std::vector<std::pair<std::string, std::string>> arrows);

  std::size_t size() const { return gens_.size(); }
  const std::vector<Generator>& generators() const { return gens_; }
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
  const Generator& gen(int idx) const { return gens_[idx]; }

  int index_of(const std::string& id) const;  // -1 when absent
  bool has_arrow(const std::string& src, const std::string& tgt) const;
  std::vector<std::pair<std::string, std::string>> arrow_ids() const;

  bool operator==(const BifilteredComplex&) const = default;

 private:
  std::vector<Generator> gens_;            // sorted by id
  std::vector<std::pair<int, int>> arrows_;  // sorted index pairs
};

// Staircase complex of a positive step sequence: generators x0..x{2m} with
// the zigzag differential; [] gives the one-generator complex.  Entries must
// be strictly positive (use mixed_from_steps otherwise).
BifilteredComplex staircase_from_steps(const StepSequence& steps);

// Reduced representative of a general (signed, zero-free) step sequence:
// zigzag horizontal/vertical arrows from the sign rules plus the
// lexicographically first diagonal-arrow completion making the differential
// square to zero.  Throws not_representable when no completion exists
// (e.g. [1, -2]).
BifilteredComplex mixed_from_steps(const StepSequence& steps);

// Reverse all arrows, negate filtrations and gradings.
BifilteredComplex dual(const BifilteredComplex& c);

// Tensor product over F_2 with the Leibniz differential; ids are joined as
// "left*right", filtrations and gradings add (gradings kept only when both
// factors carry them).
BifilteredComplex tensor(const BifilteredComplex& a, const BifilteredComplex& b);

struct ValidationReport {
  bool ok = false;
  std::vector<std::string> problems;
  std::size_t homology_rank = 0;
  std::size_t vertical_homology_rank = 0;
  std::size_t horizontal_homology_rank = 0;
};

ValidationReport validate(const BifilteredComplex& c);

// Canonical JSON document: {"arrows": [[src,tgt]...], "generators": [...]},
// keys and lists in fixed order; byte-exact round trips.
std::string serialize(const BifilteredComplex& c);
BifilteredComplex deserialize(const std::string& text);

// Same complex with generators renamed prefix0, prefix1, ... in current id
// order (used to keep ids short in iterated pipelines).
BifilteredComplex relabeled(const BifilteredComplex& c, const std::string& prefix);

}  // namespace kf

#endif
