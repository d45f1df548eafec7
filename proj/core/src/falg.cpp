#include "kf/falg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "json.hpp"
#include "kf/errors.hpp"
#include "kf/simplify.hpp"

namespace kf {

StepSequence seq_normalize(const std::vector<std::int64_t>& s) {
  std::vector<std::int64_t> cur = s;
  bool again = true;
  while (again) {
    again = false;
    std::vector<std::int64_t> next;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      if (cur[k] != 0) {
        next.push_back(cur[k]);
        continue;
      }
      again = true;
      if (next.empty() || k + 1 == cur.size()) continue;  // edge zero: drop
      const std::int64_t u = next.back();
      next.pop_back();
      next.push_back(u + cur[k + 1]);
      ++k;
    }
    cur = std::move(next);
  }
  return cur;
}

StepSequence expand_notation(const Pattern& pattern) {
  StepSequence out;
  for (const PatternItem& item : pattern) {
    if (item.repeat < 0)
      throw invalid_input("repetition count must be nonnegative");
    for (std::int64_t r = 0; r < item.repeat; ++r)
      out.insert(out.end(), item.block.begin(), item.block.end());
  }
  return out;
}

namespace {

bool all_positive(const StepSequence& s) {
  return std::all_of(s.begin(), s.end(), [](std::int64_t v) { return v > 0; });
}

// Normal form: zero-merged sequences, like terms combined, zero terms and
// identity sequences dropped, terms ordered by sequence.
ClassExpr canonical(const ClassExpr& e) {
  std::map<StepSequence, std::int64_t> acc;
  for (const ClassTerm& t : e.terms) {
    if (t.multiplicity == 0)
      throw invalid_input("class term multiplicity must be nonzero");
    const StepSequence ns = seq_normalize(t.seq);
    if (ns.empty()) continue;
    acc[ns] += t.multiplicity;
  }
  ClassExpr out;
  for (const auto& [seq, mult] : acc)
    if (mult != 0) out.terms.push_back({mult, seq});
  return out;
}

ClassExpr negated(const ClassExpr& e) {
  ClassExpr out = e;
  for (ClassTerm& t : out.terms) t.multiplicity = -t.multiplicity;
  return out;
}

ClassExpr scaled_expr(const ClassExpr& e, std::int64_t k) {
  ClassExpr out = e;
  for (ClassTerm& t : out.terms) t.multiplicity *= k;
  return out;
}

ClassExpr difference(const ClassExpr& a, const ClassExpr& b) {
  ClassExpr out = a;
  for (const ClassTerm& t : b.terms)
    out.terms.push_back({-t.multiplicity, t.seq});
  return out;
}

}  // namespace

std::optional<StepSequence> concat_by_box(const StepSequence& a,
                                          const StepSequence& b) {
  if (!all_positive(a) || !all_positive(b)) return std::nullopt;
  if (a.size() % 2 != 0) return std::nullopt;
  if (!a.empty()) {
    std::int64_t max_odd = a[0], min_even = a[1];
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (k % 2 == 0)
        max_odd = std::max(max_odd, a[k]);
      else
        min_even = std::min(min_even, a[k]);
    }
    for (std::int64_t v : b)
      if (v < max_odd || v > min_even) return std::nullopt;
  }
  StepSequence out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

namespace {

// Entry list of a "(1, v_1), (1, v_2), ..." sequence, or nullopt.
std::optional<std::vector<std::int64_t>> pair_values(const StepSequence& s) {
  if (s.size() % 2 != 0) return std::nullopt;
  std::vector<std::int64_t> v;
  for (std::size_t k = 0; k < s.size(); k += 2) {
    if (s[k] != 1) return std::nullopt;
    v.push_back(s[k + 1]);
  }
  return v;
}

// Split into blocks (1,a)^p, 1, a+c with c >= 0; a trailing run of a's is one
// block with c = 0.  Conservative: interior c = 0 blocks are never split out.
std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>> parse_blocks(
    const StepSequence& s, std::int64_t a) {
  const auto values = pair_values(s);
  if (!values || values->empty()) return std::nullopt;
  std::vector<std::pair<std::int64_t, std::int64_t>> blocks;
  std::int64_t run = 0;
  for (std::int64_t v : *values) {
    if (v == a) {
      ++run;
      continue;
    }
    if (v < a) return std::nullopt;
    blocks.push_back({run, v - a});
    run = 0;
  }
  if (run > 0) blocks.push_back({run - 1, 0});
  return blocks;
}

std::optional<std::int64_t> common_block_entry(const StepSequence& a,
                                               const StepSequence& b) {
  const auto va = pair_values(a);
  const auto vb = pair_values(b);
  if (!va || !vb || (va->empty() && vb->empty())) return std::nullopt;
  std::int64_t m = INT64_MAX;
  for (std::int64_t v : *va) m = std::min(m, v);
  for (std::int64_t v : *vb) m = std::min(m, v);
  if (m < 1) return std::nullopt;
  return m;
}

}  // namespace

std::optional<StepSequence> concat_by_polygon(const StepSequence& a,
                                              const StepSequence& b) {
  if (!all_positive(a) || !all_positive(b)) return std::nullopt;
  const auto entry = common_block_entry(a, b);
  if (!entry) return std::nullopt;
  const auto left = parse_blocks(a, *entry);
  const auto right = parse_blocks(b, *entry);
  if (!left || !right || right->size() != 1) return std::nullopt;
  const auto [q, d] = (*right)[0];
  for (const auto& [p, c] : *left)
    if (q < p || d > c) return std::nullopt;
  StepSequence out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::optional<StepSequence> scaled_staircase(const StepSequence& s,
                                             std::int64_t n) {
  if (n < 1) return std::nullopt;
  if (n == 1) return s;
  if (!concat_by_box(s, s) && !concat_by_polygon(s, s)) return std::nullopt;
  StepSequence out;
  for (std::int64_t k = 0; k < n; ++k) out.insert(out.end(), s.begin(), s.end());
  return out;
}

namespace {

BifilteredComplex realize_seq(const StepSequence& s) {
  return all_positive(s) ? staircase_from_steps(s) : mixed_from_steps(s);
}

}  // namespace

std::optional<BifilteredComplex> realize(const ClassExpr& e) {
  const ClassExpr ce = canonical(e);
  BifilteredComplex result = relabeled(staircase_from_steps({}), "g");
  for (const ClassTerm& t : ce.terms) {
    const std::int64_t copies = std::abs(t.multiplicity);
    std::vector<StepSequence> factors;
    if (copies > 1) {
      if (const auto collapsed = scaled_staircase(t.seq, copies))
        factors.push_back(*collapsed);
    }
    if (factors.empty())
      factors.assign(static_cast<std::size_t>(copies), t.seq);
    for (const StepSequence& f : factors) {
      BifilteredComplex factor = realize_seq(f);
      if (t.multiplicity < 0) factor = dual(factor);
      result = tensor(result, factor);
      const auto simplified = simultaneous_simplify(result);
      if (!simplified) return std::nullopt;
      result = relabeled(decompose(*simplified).core, "g");
    }
  }
  return result;
}

std::optional<StepSequence> class_add(const ClassExpr& a, const ClassExpr& b,
                                      bool verify) {
  const ClassExpr ca = canonical(a);
  const ClassExpr cb = canonical(b);
  std::optional<StepSequence> fast;
  if (ca.terms.size() == 1 && cb.terms.size() == 1 &&
      ca.terms[0].multiplicity == 1 && cb.terms[0].multiplicity == 1) {
    fast = concat_by_box(ca.terms[0].seq, cb.terms[0].seq);
    if (!fast) fast = concat_by_polygon(ca.terms[0].seq, cb.terms[0].seq);
  }
  if (fast && !verify) return fast;
  const auto realized = realize(difference(ca, negated(cb)));
  if (!realized) return fast;  // fast path, when hit, is exact on its own
  const StepSequence general = reduced_representative(*realized);
  if (fast && *fast != general)
    throw invariant_violation(
        "concatenation fast path disagrees with the tensor route");
  return general;
}

std::optional<int> class_compare(const ClassExpr& a, const ClassExpr& b) {
  const auto realized = realize(difference(a, b));
  if (!realized) return std::nullopt;
  return epsilon(*realized);
}

bool lemma_order_i(const StepSequence& a, const StepSequence& b,
                   std::string* witness) {
  if (a.empty() || b.empty() || !all_positive(a) || !all_positive(b))
    return false;
  std::ostringstream os;
  if (b[0] > a[0]) {
    os << "b1 = " << b[0] << " > a1 = " << a[0];
    if (witness) *witness = os.str();
    return true;
  }
  if (b[0] == a[0] && a.size() >= 2 && b.size() >= 2 && b[1] < a[1]) {
    os << "b1 = a1 = " << a[0] << " and b2 = " << b[1] << " < a2 = " << a[1];
    if (witness) *witness = os.str();
    return true;
  }
  return false;
}

bool lemma_order_j(const StepSequence& a, const StepSequence& b,
                   std::string* witness) {
  if (!all_positive(a) || !all_positive(b)) return false;
  const auto entry = common_block_entry(a, b);
  if (!entry) return false;
  const auto left = parse_blocks(a, *entry);
  const auto right = parse_blocks(b, *entry);
  if (!left || !right || left->size() != 1 || right->size() != 1) return false;
  const auto [p, c] = (*left)[0];
  const auto [q, d] = (*right)[0];
  if (c <= 0) return false;
  if (q > p || (q == p && d < c)) {
    std::ostringstream os;
    os << "a = " << *entry << ", p = " << p << ", c = " << c << ", q = " << q
       << ", d = " << d;
    if (witness) *witness = os.str();
    return true;
  }
  return false;
}

namespace {

std::string eps_str(const std::optional<int>& e) {
  if (!e) return "undecided";
  return std::to_string(*e);
}

ArchVerdict verdict(ArchRelation rel, ArchCertificate cert, std::int64_t n_max,
                    std::vector<std::string> witnesses) {
  ArchVerdict v;
  v.relation = rel;
  v.certificate = cert;
  v.n_max = n_max;
  v.witnesses = std::move(witnesses);
  return v;
}

}  // namespace

ArchVerdict arch_compare(const ClassExpr& a, const ClassExpr& b,
                         std::int64_t n_max) {
  if (n_max < 1) throw invalid_input("n_max must be at least 1");
  const ClassExpr ca = canonical(a);
  const ClassExpr cb = canonical(b);

  if (ca == cb)
    return verdict(ArchRelation::equal, ArchCertificate::exact_cancellation,
                   n_max, {"identical class expressions"});

  if (ca.terms.size() == 1 && cb.terms.size() == 1 &&
      ca.terms[0].multiplicity == 1 && cb.terms[0].multiplicity == 1) {
    const StepSequence& sa = ca.terms[0].seq;
    const StepSequence& sb = cb.terms[0].seq;
    std::string w;
    if (lemma_order_i(sa, sb, &w))
      return verdict(ArchRelation::much_greater,
                     ArchCertificate::lemma_order_i, n_max, {w});
    if (lemma_order_i(sb, sa, &w))
      return verdict(ArchRelation::much_less, ArchCertificate::lemma_order_i,
                     n_max, {w});
    if (lemma_order_j(sa, sb, &w))
      return verdict(ArchRelation::much_greater,
                     ArchCertificate::lemma_order_j, n_max, {w});
    if (lemma_order_j(sb, sa, &w))
      return verdict(ArchRelation::much_less, ArchCertificate::lemma_order_j,
                     n_max, {w});
  }

  const std::optional<int> diff = class_compare(ca, cb);
  if (diff && *diff == 0)
    return verdict(ArchRelation::equal, ArchCertificate::exact_cancellation,
                   n_max, {"eps(A - B) = 0"});

  const std::optional<int> sign_a = class_compare(ca, ClassExpr{});
  const std::optional<int> sign_b = class_compare(cb, ClassExpr{});
  if (sign_a && *sign_a == 0) {
    if (sign_b && *sign_b == 0)
      return verdict(ArchRelation::equal, ArchCertificate::exact_cancellation,
                     n_max, {"A and B both reduce to the identity"});
    if (sign_b)
      return verdict(ArchRelation::much_less,
                     ArchCertificate::exact_cancellation, n_max,
                     {"A reduces to the identity", "eps(B) = " + eps_str(sign_b)});
  }
  if (sign_b && *sign_b == 0 && sign_a)
    return verdict(ArchRelation::much_greater,
                   ArchCertificate::exact_cancellation, n_max,
                   {"B reduces to the identity", "eps(A) = " + eps_str(sign_a)});
  if (!sign_a || !sign_b)
    return verdict(ArchRelation::undecided, ArchCertificate::epsilon_sample,
                   n_max, {"eps(A) = " + eps_str(sign_a),
                           "eps(B) = " + eps_str(sign_b)});

  ClassExpr abs_a = (*sign_a < 0) ? negated(ca) : ca;
  ClassExpr abs_b = (*sign_b < 0) ? negated(cb) : cb;
  std::vector<std::string> witnesses;
  if (*sign_a < 0) witnesses.push_back("using |A| = -A since eps(A) = -1");
  if (*sign_b < 0) witnesses.push_back("using |B| = -B since eps(B) = -1");

  std::optional<std::int64_t> a_fail, b_fail;  // first n where dominance fails
  bool a_clean = true, b_clean = true;         // all samples decided and = 1
  for (std::int64_t n = 1; n <= n_max && !(a_fail && b_fail); ++n) {
    if (!a_fail) {
      const auto e = class_compare(abs_a, scaled_expr(abs_b, n));
      witnesses.push_back("eps(|A| - " + std::to_string(n) +
                          "|B|) = " + eps_str(e));
      if (!e)
        a_clean = false;
      else if (*e != 1) {
        a_fail = n;
        a_clean = false;
      }
    }
    if (!b_fail) {
      const auto e = class_compare(abs_b, scaled_expr(abs_a, n));
      witnesses.push_back("eps(|B| - " + std::to_string(n) +
                          "|A|) = " + eps_str(e));
      if (!e)
        b_clean = false;
      else if (*e != 1) {
        b_fail = n;
        b_clean = false;
      }
    }
  }
  if (a_fail && b_fail)
    return verdict(ArchRelation::equivalent, ArchCertificate::epsilon_sample,
                   n_max, std::move(witnesses));
  if (a_clean && b_fail)
    return verdict(ArchRelation::much_greater, ArchCertificate::epsilon_sample,
                   n_max, std::move(witnesses));
  if (b_clean && a_fail)
    return verdict(ArchRelation::much_less, ArchCertificate::epsilon_sample,
                   n_max, std::move(witnesses));
  return verdict(ArchRelation::undecided, ArchCertificate::epsilon_sample,
                 n_max, std::move(witnesses));
}

std::string arch_relation_name(ArchRelation r) {
  switch (r) {
    case ArchRelation::much_less: return "much-less";
    case ArchRelation::much_greater: return "much-greater";
    case ArchRelation::equivalent: return "equivalent";
    case ArchRelation::equal: return "equal";
    case ArchRelation::undecided: return "undecided";
  }
  throw invariant_violation("unknown relation");
}

std::string arch_certificate_name(ArchCertificate c) {
  switch (c) {
    case ArchCertificate::lemma_order_i: return "lemma-order-i";
    case ArchCertificate::lemma_order_j: return "lemma-order-j";
    case ArchCertificate::epsilon_sample: return "epsilon-sample";
    case ArchCertificate::exact_cancellation: return "exact-cancellation";
  }
  throw invariant_violation("unknown certificate");
}

std::string serialize(const ArchVerdict& v) {
  nlohmann::json doc;
  doc["relation"] = arch_relation_name(v.relation);
  doc["certificate"] = arch_certificate_name(v.certificate);
  doc["n_max"] = v.n_max;
  doc["witnesses"] = v.witnesses;
  return doc.dump();
}

}  // namespace kf
