#include "kf/complex.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <iterator>
#include <map>
#include <set>

#include "json.hpp"
#include "gf2.hpp"
#include "kf/errors.hpp"

namespace kf {

namespace {

std::vector<int> symdiff(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

}  // namespace

ArrowKind arrow_kind(const Generator& src, const Generator& tgt) {
  if (src.i == tgt.i && src.j == tgt.j)
    throw invalid_input("arrow endpoints share both filtration levels");
  if (src.i == tgt.i) return ArrowKind::vertical;
  if (src.j == tgt.j) return ArrowKind::horizontal;
  return ArrowKind::diagonal;
}

BifilteredComplex::BifilteredComplex(
    std::vector<Generator> gens,
    std::vector<std::pair<std::string, std::string>> arrows) {
  std::sort(gens.begin(), gens.end(),
            [](const Generator& a, const Generator& b) { return a.id < b.id; });
  for (const Generator& g : gens)
    if (g.id.empty()) throw invalid_input("generator with empty id");
  for (std::size_t k = 1; k < gens.size(); ++k)
    if (gens[k - 1].id == gens[k].id)
      throw invalid_input("duplicate generator id: " + gens[k].id);
  gens_ = std::move(gens);

  std::set<std::pair<int, int>> seen;
  for (const auto& [src, tgt] : arrows) {
    const int s = index_of(src);
    const int t = index_of(tgt);
    if (s < 0) throw invalid_input("arrow references unknown generator: " + src);
    if (t < 0) throw invalid_input("arrow references unknown generator: " + tgt);
    if (s == t) throw invalid_input("self-arrow on generator: " + src);
    if (!seen.insert({s, t}).second)
      throw invalid_input("duplicate arrow: " + src + " -> " + tgt);
    const Generator& gs = gens_[static_cast<std::size_t>(s)];
    const Generator& gt = gens_[static_cast<std::size_t>(t)];
    if (gs.i < gt.i || gs.j < gt.j || (gs.i == gt.i && gs.j == gt.j))
      throw invalid_input("arrow does not strictly drop the filtration: " +
                          src + " -> " + tgt);
    if (gs.gr && gt.gr && *gs.gr != *gt.gr + 1)
      throw invalid_input("arrow must drop the grading by exactly 1: " + src +
                          " -> " + tgt);
  }
  arrows_.assign(seen.begin(), seen.end());

  std::vector<std::vector<int>> out(gens_.size());
  for (const auto& [s, t] : arrows_) out[static_cast<std::size_t>(s)].push_back(t);
  for (auto& v : out) std::sort(v.begin(), v.end());
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    std::vector<int> acc;
    for (int t : out[g]) acc = symdiff(acc, out[static_cast<std::size_t>(t)]);
    if (!acc.empty())
      throw invalid_input("differential does not square to zero at " +
                          gens_[g].id);
  }
}

int BifilteredComplex::index_of(const std::string& id) const {
  auto it = std::lower_bound(
      gens_.begin(), gens_.end(), id,
      [](const Generator& g, const std::string& s) { return g.id < s; });
  if (it == gens_.end() || it->id != id) return -1;
  return static_cast<int>(it - gens_.begin());
}

bool BifilteredComplex::has_arrow(const std::string& src,
                                  const std::string& tgt) const {
  const int s = index_of(src);
  const int t = index_of(tgt);
  if (s < 0 || t < 0) return false;
  return std::binary_search(arrows_.begin(), arrows_.end(),
                            std::pair<int, int>{s, t});
}

std::vector<std::pair<std::string, std::string>> BifilteredComplex::arrow_ids()
    const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(arrows_.size());
  for (const auto& [s, t] : arrows_)
    out.emplace_back(gens_[static_cast<std::size_t>(s)].id,
                     gens_[static_cast<std::size_t>(t)].id);
  return out;
}

namespace {

struct Zigzag {
  std::vector<Generator> gens;  // x0..x{2m}, construction order
  std::vector<std::pair<std::string, std::string>> arrows;
};

// Zigzag skeleton of a (possibly signed) step sequence: filtration levels
// from the step recurrence, horizontal/vertical arrows from the sign rules,
// gradings pinned by gr(x0) = 0.
Zigzag build_zigzag(const StepSequence& steps) {
  for (std::int64_t v : steps)
    if (v == 0) throw invalid_input("step sequence entries must be nonzero");
  const std::size_t m = steps.size();
  const std::size_t n = 2 * m + 1;
  std::vector<std::int64_t> a(n);  // a[k], k = 1..2m; a_k = a_{2m+1-k}
  for (std::size_t k = 1; k <= m; ++k) a[k] = steps[k - 1];
  for (std::size_t k = m + 1; k <= 2 * m; ++k) a[k] = steps[2 * m - k];

  std::vector<std::int64_t> fi(n), fj(n), gr(n);
  fi[0] = 0;
  fj[0] = 0;
  for (std::int64_t v : steps) fj[0] += v;
  for (std::size_t k = 1; k < n; ++k) {
    fi[k] = fi[k - 1];
    fj[k] = fj[k - 1];
    if (k % 2 == 1)
      fi[k] += a[k];
    else
      fj[k] -= a[k];
  }

  Zigzag z;
  auto id = [](std::size_t k) { return "x" + std::to_string(k); };
  auto arrow_down = [&](std::size_t k) {  // x_k -> x_{k-1}?
    return (k % 2 == 1 && a[k] > 0) || (k % 2 == 0 && a[k] < 0);
  };
  gr[0] = 0;
  for (std::size_t k = 1; k < n; ++k) gr[k] = gr[k - 1] + (arrow_down(k) ? 1 : -1);
  for (std::size_t k = 0; k < n; ++k)
    z.gens.push_back({id(k), fi[k], fj[k], gr[k]});
  for (std::size_t k = 1; k < n; ++k) {
    if (arrow_down(k))
      z.arrows.emplace_back(id(k), id(k - 1));
    else
      z.arrows.emplace_back(id(k - 1), id(k));
  }
  return z;
}

}  // namespace

BifilteredComplex staircase_from_steps(const StepSequence& steps) {
  for (std::int64_t v : steps)
    if (v <= 0) throw invalid_input("staircase steps must be positive");
  Zigzag z = build_zigzag(steps);
  return BifilteredComplex(std::move(z.gens), std::move(z.arrows));
}

BifilteredComplex mixed_from_steps(const StepSequence& steps) {
  Zigzag z = build_zigzag(steps);
  const std::size_t n = z.gens.size();

  // Base adjacency by construction index.
  std::map<std::string, int> pos;
  for (std::size_t k = 0; k < n; ++k) pos[z.gens[k].id] = static_cast<int>(k);
  std::vector<std::vector<int>> base(n);
  for (const auto& [s, t] : z.arrows) base[static_cast<std::size_t>(pos[s])].push_back(pos[t]);
  for (auto& v : base) std::sort(v.begin(), v.end());
  auto has_base = [&](int s, int t) {
    const auto& v = base[static_cast<std::size_t>(s)];
    return std::binary_search(v.begin(), v.end(), t);
  };

  // Candidate diagonal arrows, ordered by (source id, target id).
  std::vector<std::pair<int, int>> cand;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      const Generator& gu = z.gens[u];
      const Generator& gv = z.gens[v];
      if (gu.i > gv.i && gu.j > gv.j && *gu.gr == *gv.gr + 1)
        cand.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  std::sort(cand.begin(), cand.end(), [&](const auto& p, const auto& q) {
    const auto key = [&](const std::pair<int, int>& c) {
      return std::pair<const std::string&, const std::string&>(
          z.gens[static_cast<std::size_t>(c.first)].id,
          z.gens[static_cast<std::size_t>(c.second)].id);
    };
    return key(p) < key(q);
  });
  const std::size_t nv = cand.size();
  std::map<std::pair<int, int>, int> var_of;
  for (std::size_t k = 0; k < nv; ++k) var_of[cand[k]] = static_cast<int>(k);

  // One F_2 equation per generator pair (s, c): the coefficient of c in the
  // squared differential of s must vanish.  Terms walk s -> b -> c where each
  // leg is a base arrow or a candidate variable.
  struct Equation {
    int constant = 0;
    std::vector<int> linear;
    std::vector<std::pair<int, int>> quadratic;
  };
  std::vector<std::vector<Equation>> bucket(nv);  // by highest variable index
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t c = 0; c < n; ++c) {
      if (s == c) continue;
      Equation eq;
      for (std::size_t b = 0; b < n; ++b) {
        if (b == s || b == c) continue;
        const bool base1 = has_base(static_cast<int>(s), static_cast<int>(b));
        const bool base2 = has_base(static_cast<int>(b), static_cast<int>(c));
        const auto v1 = var_of.find({static_cast<int>(s), static_cast<int>(b)});
        const auto v2 = var_of.find({static_cast<int>(b), static_cast<int>(c)});
        if (base1 && base2) eq.constant ^= 1;
        if (base1 && v2 != var_of.end()) eq.linear.push_back(v2->second);
        if (v1 != var_of.end() && base2) eq.linear.push_back(v1->second);
        if (v1 != var_of.end() && v2 != var_of.end())
          eq.quadratic.emplace_back(v1->second, v2->second);
      }
      if (eq.linear.empty() && eq.quadratic.empty()) {
        if (eq.constant) throw not_representable("no representative");
        continue;
      }
      int last = -1;
      for (int v : eq.linear) last = std::max(last, v);
      for (const auto& [p, q] : eq.quadratic) last = std::max({last, p, q});
      bucket[static_cast<std::size_t>(last)].push_back(std::move(eq));
    }

  // Lexicographically first satisfying assignment, trying 0 before 1; each
  // equation is checked as soon as its last variable is set.
  std::vector<char> val(nv, 0);
  std::uint64_t nodes = 0;
  std::function<bool(std::size_t)> assign = [&](std::size_t d) -> bool {
    if (d == nv) return true;
    if (++nodes > (1u << 22))
      throw invariant_violation("diagonal completion search budget exceeded");
    for (int bit = 0; bit <= 1; ++bit) {
      val[d] = static_cast<char>(bit);
      bool ok = true;
      for (const Equation& eq : bucket[d]) {
        int acc = eq.constant;
        for (int v : eq.linear) acc ^= val[static_cast<std::size_t>(v)];
        for (const auto& [p, q] : eq.quadratic)
          acc ^= val[static_cast<std::size_t>(p)] & val[static_cast<std::size_t>(q)];
        if (acc) {
          ok = false;
          break;
        }
      }
      if (ok && assign(d + 1)) return true;
    }
    val[d] = 0;
    return false;
  };
  if (!assign(0)) throw not_representable("no representative");

  std::vector<std::pair<std::string, std::string>> arrows = z.arrows;
  for (std::size_t k = 0; k < nv; ++k)
    if (val[k])
      arrows.emplace_back(z.gens[static_cast<std::size_t>(cand[k].first)].id,
                          z.gens[static_cast<std::size_t>(cand[k].second)].id);
  return BifilteredComplex(std::move(z.gens), std::move(arrows));
}

BifilteredComplex dual(const BifilteredComplex& c) {
  std::vector<Generator> gens;
  gens.reserve(c.size());
  for (const Generator& g : c.generators()) {
    Generator d{g.id, -g.i, -g.j, std::nullopt};
    if (g.gr) d.gr = -*g.gr;
    gens.push_back(std::move(d));
  }
  std::vector<std::pair<std::string, std::string>> arrows;
  arrows.reserve(c.arrows().size());
  for (const auto& [s, t] : c.arrows())
    arrows.emplace_back(c.gen(t).id, c.gen(s).id);
  return BifilteredComplex(std::move(gens), std::move(arrows));
}

BifilteredComplex tensor(const BifilteredComplex& a, const BifilteredComplex& b) {
  std::vector<Generator> gens;
  gens.reserve(a.size() * b.size());
  for (const Generator& ga : a.generators())
    for (const Generator& gb : b.generators()) {
      Generator g{ga.id + "*" + gb.id, ga.i + gb.i, ga.j + gb.j, std::nullopt};
      if (ga.gr && gb.gr) g.gr = *ga.gr + *gb.gr;
      gens.push_back(std::move(g));
    }
  std::vector<std::pair<std::string, std::string>> arrows;
  for (const auto& [s, t] : a.arrows())
    for (const Generator& gb : b.generators())
      arrows.emplace_back(a.gen(s).id + "*" + gb.id, a.gen(t).id + "*" + gb.id);
  for (const Generator& ga : a.generators())
    for (const auto& [s, t] : b.arrows())
      arrows.emplace_back(ga.id + "*" + b.gen(s).id, ga.id + "*" + b.gen(t).id);
  return BifilteredComplex(std::move(gens), std::move(arrows));
}

ValidationReport validate(const BifilteredComplex& c) {
  ValidationReport rep;
  const std::size_t n = c.size();
  std::vector<std::vector<int>> all(n), vert(n), horz(n);
  for (const auto& [s, t] : c.arrows()) {
    const Generator& gs = c.gen(s);
    const Generator& gt = c.gen(t);
    if (gs.i < gt.i || gs.j < gt.j || (gs.i == gt.i && gs.j == gt.j))
      rep.problems.push_back("arrow does not strictly drop the filtration: " +
                             gs.id + " -> " + gt.id);
    if (gs.gr && gt.gr && *gs.gr != *gt.gr + 1)
      rep.problems.push_back("arrow grading drop is not 1: " + gs.id + " -> " +
                             gt.id);
    all[static_cast<std::size_t>(s)].push_back(t);
    if (gs.i == gt.i) vert[static_cast<std::size_t>(s)].push_back(t);
    if (gs.j == gt.j) horz[static_cast<std::size_t>(s)].push_back(t);
  }
  for (auto* m : {&all, &vert, &horz})
    for (auto& v : *m) std::sort(v.begin(), v.end());
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<int> acc;
    for (int t : all[g]) acc = symdiff(acc, all[static_cast<std::size_t>(t)]);
    if (!acc.empty())
      rep.problems.push_back("differential does not square to zero at " +
                             c.gen(static_cast<int>(g)).id);
  }
  rep.homology_rank = n - 2 * gf2_rank(all);
  rep.vertical_homology_rank = n - 2 * gf2_rank(vert);
  rep.horizontal_homology_rank = n - 2 * gf2_rank(horz);
  rep.ok = rep.problems.empty();
  return rep;
}

std::string serialize(const BifilteredComplex& c) {
  nlohmann::json doc;
  doc["generators"] = nlohmann::json::array();
  for (const Generator& g : c.generators()) {
    nlohmann::json jg;
    jg["id"] = g.id;
    jg["i"] = g.i;
    jg["j"] = g.j;
    if (g.gr) jg["gr"] = *g.gr;
    doc["generators"].push_back(std::move(jg));
  }
  doc["arrows"] = nlohmann::json::array();
  for (const auto& [s, t] : c.arrow_ids())
    doc["arrows"].push_back(nlohmann::json::array({s, t}));
  return doc.dump();
}

BifilteredComplex deserialize(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input(std::string("invalid complex JSON: ") + e.what());
  }
  try {
    std::vector<Generator> gens;
    for (const auto& jg : doc.at("generators")) {
      Generator g;
      g.id = jg.at("id").get<std::string>();
      g.i = jg.at("i").get<std::int64_t>();
      g.j = jg.at("j").get<std::int64_t>();
      if (jg.contains("gr")) g.gr = jg.at("gr").get<std::int64_t>();
      gens.push_back(std::move(g));
    }
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const auto& ja : doc.at("arrows")) {
      if (!ja.is_array() || ja.size() != 2)
        throw invalid_input("arrow entries must be [source, target] pairs");
      arrows.emplace_back(ja.at(0).get<std::string>(),
                          ja.at(1).get<std::string>());
    }
    return BifilteredComplex(std::move(gens), std::move(arrows));
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input(std::string("invalid complex JSON: ") + e.what());
  }
}

BifilteredComplex relabeled(const BifilteredComplex& c, const std::string& prefix) {
  if (prefix.empty()) throw invalid_input("relabel prefix must be nonempty");
  std::map<std::string, std::string> rename;
  std::vector<Generator> gens;
  gens.reserve(c.size());
  std::size_t k = 0;
  for (const Generator& g : c.generators()) {
    Generator ng = g;
    ng.id = prefix + std::to_string(k++);
    rename[g.id] = ng.id;
    gens.push_back(std::move(ng));
  }
  std::vector<std::pair<std::string, std::string>> arrows;
  arrows.reserve(c.arrows().size());
  for (const auto& [s, t] : c.arrow_ids()) arrows.emplace_back(rename[s], rename[t]);
  return BifilteredComplex(std::move(gens), std::move(arrows));
}

}  // namespace kf
