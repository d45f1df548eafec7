#include "kf/queries.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "kf/errors.hpp"
#include "kf/expr.hpp"
#include "kf/knots.hpp"
#include "kf/simplify.hpp"

namespace kf {

namespace {

using nlohmann::json;

std::string seq_text(const StepSequence& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k];
  os << ']';
  return os.str();
}

QueryResult undecided(const std::string& reason) {
  QueryResult r;
  r.exit_code = kExitUndecided;
  r.text = "undecided: " + reason;
  r.json = json{{"reason", reason}, {"status", "undecided"}}.dump();
  return r;
}

QueryResult done(const std::string& text, const json& doc) {
  QueryResult r;
  r.text = text;
  r.json = doc.dump();
  return r;
}

constexpr const char* kGaveUp = "simplification did not stabilize";

// Realized complex of the expression's class, or nullopt when a
// simplification pass gave up.
std::optional<BifilteredComplex> realize_text(const std::string& text) {
  return realize(knot_class(parse_expr(text)));
}

std::string certificate_qualifier(ArchCertificate c) {
  switch (c) {
    case ArchCertificate::lemma_order_i: return "lemma order-i";
    case ArchCertificate::lemma_order_j: return "lemma order-j";
    case ArchCertificate::epsilon_sample: return "sampled";
    case ArchCertificate::exact_cancellation: return "exact";
  }
  throw invariant_violation("unknown certificate");
}

}  // namespace

QueryResult run_query(const std::string& command,
                      const std::vector<std::string>& exprs,
                      const QueryOptions& opts) {
  const bool two = command == "compare" || command == "arch";
  if (exprs.size() != (two ? 2u : 1u))
    throw invalid_input(command + " takes " + (two ? "two expressions" : "one expression"));

  if (command == "alex") {
    const std::string poly = alexander_of(parse_expr(exprs[0])).str();
    return done(poly, json{{"alexander", poly}});
  }

  if (command == "steps") {
    const auto realized = realize_text(exprs[0]);
    if (!realized) return undecided(kGaveUp);
    try {
      const StepSequence steps = reduced_representative(*realized);
      return done(seq_text(steps), json{{"steps", steps}});
    } catch (const simplification_failure& e) {
      return undecided(e.what());
    }
  }

  if (command == "tau") {
    const auto realized = realize_text(exprs[0]);
    if (!realized) return undecided(kGaveUp);
    const std::int64_t t = tau(*realized);
    return done(std::to_string(t), json{{"tau", t}});
  }

  if (command == "epsilon") {
    const auto realized = realize_text(exprs[0]);
    if (!realized) return undecided(kGaveUp);
    const std::optional<int> e = epsilon(*realized);
    if (!e) return undecided(kGaveUp);
    return done(std::to_string(*e), json{{"epsilon", *e}});
  }

  if (command == "a12") {
    const auto realized = realize_text(exprs[0]);
    if (!realized) return undecided(kGaveUp);
    try {
      const LocalInvariants li = local_invariants(*realized);
      json doc;
      doc["a1"] = li.a1 ? json(*li.a1) : json(nullptr);
      doc["a2"] = li.a2 ? json(*li.a2) : json(nullptr);
      std::string text = "a1 = " + (li.a1 ? std::to_string(*li.a1) : "undefined") +
                         ", a2 = " + (li.a2 ? std::to_string(*li.a2) : "undefined");
      return done(text, doc);
    } catch (const simplification_failure& e) {
      return undecided(e.what());
    }
  }

  if (command == "dump") {
    const auto realized = realize_text(exprs[0]);
    if (!realized) return undecided(kGaveUp);
    try {
      // Canonical form: rebuild from the reduced steps so that ids and
      // coordinates do not depend on the route the expression took.
      const StepSequence steps = reduced_representative(*realized);
      const bool positive =
          std::all_of(steps.begin(), steps.end(), [](std::int64_t v) { return v > 0; });
      const BifilteredComplex canon =
          positive ? staircase_from_steps(steps) : mixed_from_steps(steps);
      QueryResult r;
      r.text = serialize(canon);
      r.json = r.text;
      return r;
    } catch (const simplification_failure& e) {
      return undecided(e.what());
    }
  }

  if (command == "compare") {
    const ClassExpr a = knot_class(parse_expr(exprs[0]));
    const ClassExpr b = knot_class(parse_expr(exprs[1]));
    const std::optional<int> sign = class_compare(a, b);
    if (!sign) return undecided(kGaveUp);
    const std::string word = *sign < 0 ? "less" : *sign > 0 ? "greater" : "equal";
    return done(word, json{{"comparison", word}, {"sign", *sign}});
  }

  if (command == "arch") {
    const ClassExpr a = knot_class(parse_expr(exprs[0]));
    const ClassExpr b = knot_class(parse_expr(exprs[1]));
    const ArchVerdict v = arch_compare(a, b, opts.max_n);
    QueryResult r;
    r.text = arch_relation_name(v.relation) + " (" +
             certificate_qualifier(v.certificate) + ")";
    r.json = serialize(v);
    if (v.relation == ArchRelation::undecided) r.exit_code = kExitUndecided;
    return r;
  }

  throw invalid_input("unknown command: " + command);
}

}  // namespace kf
