#ifndef KF_QUERIES_HPP
#define KF_QUERIES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace kf {

struct QueryOptions {
  std::int64_t max_n = 3;  // sampling bound for arch
};

// Exit codes shared with the command line front end.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUndecided = 2;
inline constexpr int kExitUsage = 3;

struct QueryResult {
  int exit_code = kExitPass;
  std::string text;  // human-readable result line(s)
  std::string json;  // canonical structured document for the same result
};

// Run one query command over parsed knot expressions:
//   alex | steps | tau | epsilon | a12 | dump   (one expression)
//   compare | arch                              (two expressions)
// Undecided outcomes (a simplification pass gave up) return kExitUndecided;
// malformed input throws invalid_input.
QueryResult run_query(const std::string& command,
                      const std::vector<std::string>& exprs,
                      const QueryOptions& opts = {});

}  // namespace kf

#endif
