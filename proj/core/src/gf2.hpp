#ifndef KF_SRC_GF2_HPP
#define KF_SRC_GF2_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

namespace kf {

// Rank over F_2 of a sparse matrix given column-wise; each column lists its
// nonzero row indices in ascending order.
inline std::size_t gf2_rank(std::vector<std::vector<int>> cols) {
  auto xor_into = [](std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    a = std::move(out);
  };
  std::vector<std::vector<int>> reduced;  // columns with distinct lowest rows
  std::vector<int> pivot_of;              // parallel: lowest row of reduced[k]
  std::size_t rank = 0;
  for (auto& col : cols) {
    while (!col.empty()) {
      const int p = col.front();
      auto it = std::find(pivot_of.begin(), pivot_of.end(), p);
      if (it == pivot_of.end()) break;
      xor_into(col, reduced[static_cast<std::size_t>(it - pivot_of.begin())]);
    }
    if (col.empty()) continue;
    pivot_of.push_back(col.front());
    reduced.push_back(std::move(col));
    ++rank;
  }
  return rank;
}

}  // namespace kf

#endif
