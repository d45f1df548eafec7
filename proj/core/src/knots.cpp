#include "kf/knots.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "kf/errors.hpp"
#include "kf/laurent.hpp"

namespace kf {

namespace {

constexpr std::int64_t kDegreeBound = 1LL << 31;

void check_degree(std::int64_t product) {
  if (product >= kDegreeBound)
    throw invalid_input("knot parameters too large: polynomial degree bound exceeded");
}

// Companion genus of T(p, q).
std::int64_t torus_genus(std::int64_t p, std::int64_t q) {
  return (p - 1) * (q - 1) / 2;
}

}  // namespace

std::vector<std::int64_t> cable_sequence(std::int64_t p, std::int64_t m,
                                         bool plus) {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(2 * m * p * (p - 1)));
  for (std::int64_t i = 1; i <= m; ++i)
    for (std::int64_t j = 1; j <= p - 1; ++j) {
      for (std::int64_t r = 0; r < j; ++r) {
        out.push_back(plus ? i : m - i);
        out.push_back(plus ? m - i : i);
      }
      for (std::int64_t r = 0; r < p - j; ++r) {
        out.push_back(plus ? i - 1 : m - i + 1);
        out.push_back(plus ? m - i + 1 : i - 1);
      }
    }
  return out;
}

KnotExpr torus_knot(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw invalid_input("torus knot requires p, q >= 1");
  if (std::gcd(p, q) != 1)
    throw invalid_input("torus knot requires coprime (p, q): got (" +
                        std::to_string(p) + ", " + std::to_string(q) + ")");
  check_degree(p * q);
  KnotExpr e;
  e.kind = KnotKind::torus;
  e.p = p;
  e.q = q;
  return e;
}

KnotExpr cable_knot(const KnotExpr& companion, std::int64_t m, std::int64_t l) {
  if (companion.kind != KnotKind::torus)
    throw not_representable(
        "cable companion must be a torus knot (one cabling level); "
        "no staircase model is certified otherwise");
  if (m < 1 || l < 1) throw invalid_input("cable requires m, l >= 1");
  if (std::gcd(m, l) != 1)
    throw invalid_input("cable requires coprime (m, l): got (" +
                        std::to_string(m) + ", " + std::to_string(l) + ")");
  const std::int64_t g = torus_genus(companion.p, companion.q);
  if (l < m * (2 * g - 1))
    throw not_representable("not a certified L-space knot; no staircase model");
  check_degree(companion.p * companion.q * m);
  check_degree(m * l);
  KnotExpr e;
  e.kind = KnotKind::cable;
  e.m = m;
  e.l = l;
  e.children.push_back(companion);
  return e;
}

KnotExpr mirror_knot(const KnotExpr& k) {
  KnotExpr e;
  e.kind = KnotKind::mirror;
  e.children.push_back(k);
  return e;
}

KnotExpr sum_knots(const std::vector<KnotExpr>& children) {
  if (children.empty()) throw invalid_input("connected sum of nothing");
  if (children.size() == 1) return children[0];
  KnotExpr e;
  e.kind = KnotKind::sum;
  e.children = children;
  return e;
}

KnotExpr repeat_knot(std::int64_t n, const KnotExpr& k) {
  if (n < 1) throw invalid_input("repeat count must be positive");
  KnotExpr e;
  e.kind = KnotKind::repeat;
  e.n = n;
  e.children.push_back(k);
  return e;
}

KnotExpr raw_class_knot(const StepSequence& seq) {
  KnotExpr e;
  e.kind = KnotKind::raw_class;
  e.seq = seq;
  return e;
}

StepSequence torus_class(std::int64_t p, std::int64_t q) {
  torus_knot(p, q);  // validation
  const StepSequence gaps = lspace_gaps(torus_alexander(p, q)).gaps;
  if (q == p + 1) {
    std::vector<std::int64_t> half;
    for (std::int64_t j = 1; j <= p - 1 && std::ssize(half) < p - 1; ++j) {
      half.push_back(j);
      if (std::ssize(half) < p - 1) half.push_back(p - j);
    }
    if (seq_normalize(half) != gaps)
      throw invariant_violation(
          "torus gap sequence disagrees with the explicit (j, p-j) sequence");
  }
  return gaps;
}

StepSequence cable_class(std::int64_t p, std::int64_t m, int sign) {
  if (p < 2 || m < 1) throw invalid_input("cable family requires p >= 2, m >= 1");
  if (sign != 1 && sign != -1) throw invalid_input("cable sign must be +1 or -1");
  if (sign < 0 && p == 2 && m == 1)
    throw invalid_input("degenerate cable: the minus family requires p > 2 or m > 1");
  check_degree(p * p * m);
  const std::vector<std::int64_t> full = cable_sequence(p, m, sign > 0);
  const std::size_t half = full.size() / 2;
  std::vector<std::int64_t> taken;
  if (sign > 0)
    taken.assign(full.begin(), full.begin() + half);
  else
    taken.assign(full.begin() + 1, full.begin() + half);
  const StepSequence result = seq_normalize(taken);
  const GapSequence oracle = lspace_gaps(cable_closed_form(p, m, sign));
  if (oracle.gaps != result)
    throw invariant_violation(
        "cable sequence route disagrees with the closed-form polynomial route");
  return result;
}

KnotExpr k_ij(std::int64_t i, std::int64_t j) {
  if (i < 0 || (i == 0 && j < 0))
    throw invalid_input("K_{i,j} requires (i, j) >= (0, 0) lexicographically");
  const std::int64_t m = i + 1;
  const std::int64_t p = std::abs(j) + 3;
  if (i == 0) {
    const KnotExpr cable =
        cable_knot(torus_knot(2, 3), (p + 1) / 2, 2 * (p / 2) + 1);
    return sum_knots({torus_knot(p, p + 1), mirror_knot(cable)});
  }
  const KnotExpr plus_cable =
      cable_knot(torus_knot(p, p + 1), m, (p - 1) * p * m + 1);
  if (j >= 0)
    return sum_knots({plus_cable, mirror_knot(torus_knot(p * m, p * m + 1))});
  const KnotExpr minus_cable =
      cable_knot(torus_knot(p, p + 1), m, (p - 1) * p * m - 1);
  return sum_knots({plus_cable, mirror_knot(minus_cable)});
}

StepSequence kij_arch_representative(std::int64_t i, std::int64_t j) {
  if (i < 0 || (i == 0 && j <= 0))
    throw invalid_input("Archimedean representative requires (i, j) > (0, 0)");
  std::optional<StepSequence> from_plus, from_minus;
  if (j >= 0)
    from_plus = seq_normalize({1, i, 1, 2 * i + 1 + j * (i + 1)});
  if (j <= 0) {
    std::vector<std::int64_t> s;
    for (std::int64_t r = 0; r < -j; ++r) {
      s.push_back(1);
      s.push_back(i);
    }
    s.insert(s.end(), {1, i, 1, 2 * i + 1});
    from_minus = seq_normalize(s);
  }
  if (from_plus && from_minus && *from_plus != *from_minus)
    throw invariant_violation(
        "the j >= 0 and j <= 0 representative formulas disagree at j = 0");
  return from_plus ? *from_plus : *from_minus;
}

LaurentPoly alexander_of(const KnotExpr& e) {
  switch (e.kind) {
    case KnotKind::torus:
      return torus_alexander(e.p, e.q);
    case KnotKind::cable:
      return cable_alexander(alexander_of(e.children[0]), e.m, e.l);
    case KnotKind::mirror:
      return alexander_of(e.children[0]);
    case KnotKind::sum: {
      LaurentPoly out = LaurentPoly::one();
      for (const KnotExpr& child : e.children) out = out * alexander_of(child);
      return out;
    }
    case KnotKind::repeat: {
      LaurentPoly out = LaurentPoly::one();
      for (std::int64_t k = 0; k < e.n; ++k)
        out = out * alexander_of(e.children[0]);
      return out;
    }
    case KnotKind::raw_class: {
      const StepSequence s = seq_normalize(e.seq);
      for (std::int64_t v : s)
        if (v <= 0)
          throw invalid_input(
              "Alexander polynomial is defined only for positive step sequences");
      LaurentPoly out;
      std::int64_t exp = 0;
      int sign = 1;
      out = out + LaurentPoly::term(1, 0);
      for (std::size_t k = 0; k < 2 * s.size(); ++k) {
        exp += k < s.size() ? s[k] : s[2 * s.size() - 1 - k];
        sign = -sign;
        out = out + LaurentPoly::term(sign, exp);
      }
      return out;
    }
  }
  throw invariant_violation("unknown knot expression node");
}

ClassExpr knot_class(const KnotExpr& e) {
  switch (e.kind) {
    case KnotKind::torus:
      return ClassExpr{{{1, torus_class(e.p, e.q)}}};
    case KnotKind::cable: {
      const KnotExpr& t = e.children[0];
      const StepSequence gaps =
          lspace_gaps(cable_alexander(torus_alexander(t.p, t.q), e.m, e.l)).gaps;
      // Inside the two named cable families the sequence route must agree.
      if (t.q == t.p + 1) {
        const std::int64_t base = (t.p - 1) * t.p * e.m;
        const bool degenerate_minus = t.p == 2 && e.m == 1;
        if (e.l == base + 1 && cable_class(t.p, e.m, 1) != gaps)
          throw invariant_violation(
              "cable polynomial route disagrees with the sequence route");
        if (e.l == base - 1 && !degenerate_minus &&
            cable_class(t.p, e.m, -1) != gaps)
          throw invariant_violation(
              "cable polynomial route disagrees with the sequence route");
      }
      return ClassExpr{{{1, gaps}}};
    }
    case KnotKind::mirror: {
      ClassExpr c = knot_class(e.children[0]);
      for (ClassTerm& t : c.terms) t.multiplicity = -t.multiplicity;
      return c;
    }
    case KnotKind::sum: {
      ClassExpr c;
      for (const KnotExpr& child : e.children) {
        const ClassExpr cc = knot_class(child);
        c.terms.insert(c.terms.end(), cc.terms.begin(), cc.terms.end());
      }
      return c;
    }
    case KnotKind::repeat: {
      ClassExpr c = knot_class(e.children[0]);
      for (ClassTerm& t : c.terms) t.multiplicity *= e.n;
      return c;
    }
    case KnotKind::raw_class:
      return ClassExpr{{{1, e.seq}}};
  }
  throw invariant_violation("unknown knot expression node");
}

}  // namespace kf
