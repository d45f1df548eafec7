#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kf/errors.hpp"
#include "kf/queries.hpp"
#include "kf/verify.hpp"

namespace {

kf::StepSequence parse_csv(const std::string& text) {
  kf::StepSequence out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string piece = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw kf::invalid_input("expected a comma-separated integer list, got '" +
                              text + "'");
    }
    pos = comma + 1;
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos)
    throw kf::invalid_input("expected a range LO..HI, got '" + text + "'");
  try {
    std::size_t used = 0;
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    const std::int64_t lo = std::stoll(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument(lo_text);
    const std::int64_t hi = std::stoll(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument(hi_text);
    return {lo, hi};
  } catch (const kf::invalid_input&) {
    throw;
  } catch (const std::exception&) {
    throw kf::invalid_input("expected a range LO..HI, got '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "kf: exact calculator for staircase complexes of L-space knots and "
      "their equivalence classes"};
  app.require_subcommand(1);

  bool json = false;
  std::vector<std::string> exprs;
  std::int64_t max_n = 3;

  struct QueryCommand {
    const char* name;
    const char* help;
    int arity;
    bool has_max_n;
  };
  const std::vector<QueryCommand> query_commands = {
      {"alex", "Alexander polynomial of a knot expression", 1, false},
      {"steps", "reduced step-sequence representative of the class", 1, false},
      {"tau", "tau invariant of the class", 1, false},
      {"epsilon", "epsilon invariant of the class", 1, false},
      {"a12", "local invariants a1 and a2 of the class", 1, false},
      {"dump", "serialized simplified complex of the class", 1, false},
      {"compare", "order comparison of two classes", 2, false},
      {"arch", "Archimedean comparison of two classes", 2, true},
  };
  std::string selected;
  for (const QueryCommand& qc : query_commands) {
    CLI::App* sub = app.add_subcommand(qc.name, qc.help);
    sub->add_option("expr", exprs,
                    qc.arity == 1 ? "knot expression" : "knot expressions")
        ->required()
        ->expected(qc.arity);
    sub->add_flag("--json", json, "canonical structured output");
    if (qc.has_max_n)
      sub->add_option("--max-n", max_n,
                      "multiple bound for sampled comparisons (default 3)");
    sub->callback([&selected, name = std::string(qc.name)] { selected = name; });
  }

  CLI::App* ver = app.add_subcommand(
      "verify", "run a verification check over a parameter grid");
  std::string check_id;
  std::string ids_help = "check id (";
  for (std::size_t k = 0; k < kf::verify_check_ids().size(); ++k)
    ids_help += (k ? ", " : "") + kf::verify_check_ids()[k];
  ids_help += ")";
  ver->add_option("check", check_id, ids_help)->required();
  std::string a_csv, b_csv, j_range;
  std::int64_t p_max = 0, m_max = 0, i_max = 0, ver_max_n = 0;
  std::uint64_t seed = 0;
  int jobs = 0;
  ver->add_option("--a", a_csv, "first step sequence, comma-separated");
  ver->add_option("--b", b_csv, "second step sequence, comma-separated");
  ver->add_option("--p-max", p_max, "largest cabling parameter p");
  ver->add_option("--m-max", m_max, "largest cabling parameter m");
  ver->add_option("--i-max", i_max, "largest index i");
  ver->add_option("--j-range", j_range, "index j range, e.g. -1..1");
  ver->add_option("--max-n", ver_max_n, "multiple bound for comparisons");
  ver->add_option("--seed", seed, "seed for sampled grids (default 0)");
  ver->add_option("--jobs", jobs,
                  "parallel instance cap (default: KF_JOBS or hardware)");
  ver->add_flag("--json", json, "canonical structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kf::kExitUsage;
  }

  try {
    if (ver->parsed()) {
      kf::VerifyOptions opts;
      if (ver->count("--a")) opts.a = parse_csv(a_csv);
      if (ver->count("--b")) opts.b = parse_csv(b_csv);
      if (ver->count("--p-max")) opts.p_max = p_max;
      if (ver->count("--m-max")) opts.m_max = m_max;
      if (ver->count("--i-max")) opts.i_max = i_max;
      if (ver->count("--j-range")) {
        const auto [lo, hi] = parse_range(j_range);
        opts.j_min = lo;
        opts.j_max = hi;
      }
      if (ver->count("--max-n")) opts.max_n = ver_max_n;
      opts.seed = seed;
      opts.jobs = jobs;
      const kf::VerifyReport report = kf::run_verify(check_id, opts);
      if (json)
        std::cout << report.json_text() << '\n';
      else
        std::cout << report.text();
      switch (report.overall()) {
        case kf::CheckOutcome::pass: return kf::kExitPass;
        case kf::CheckOutcome::fail: return kf::kExitFail;
        case kf::CheckOutcome::undecided: return kf::kExitUndecided;
      }
      return kf::kExitFail;
    }
    kf::QueryOptions opts;
    opts.max_n = max_n;
    const kf::QueryResult result = kf::run_query(selected, exprs, opts);
    std::cout << (json ? result.json : result.text) << '\n';
    return result.exit_code;
  } catch (const kf::invalid_input& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kf::kExitUsage;
  } catch (const kf::simplification_failure& e) {
    std::cerr << "undecided: " << e.what() << '\n';
    return kf::kExitUndecided;
  } catch (const kf::not_representable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kf::kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kf::kExitFail;
  }
}
