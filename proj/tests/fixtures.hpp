#pragma once

#include <vector>

#include "qspace/echelon.hpp"
#include "qspace/field.hpp"

namespace qspace::testing {

// Hand-checked canonical 5x10 basis over GF(7): the identity block sits in
// the last five columns, arbitrary entries fill the first five except in
// pivot columns.
inline Mat fixture_5x10_gf7() {
  Mat m(5, 10);
  m << 5, 6, 3, 2, 5, 1, 0, 0, 0, 0,
       6, 1, 0, 0, 6, 0, 1, 0, 0, 0,
       5, 3, 4, 2, 0, 0, 0, 1, 0, 0,
       0, 5, 1, 6, 6, 0, 0, 0, 1, 0,
       5, 6, 2, 1, 5, 0, 0, 0, 0, 1;
  return m;
}

inline Mat make_mat(std::initializer_list<std::initializer_list<Entry>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  Mat m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (Entry v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// All k-subsets of {1..n} in some order; independent of the codec.
inline std::vector<std::vector<std::int64_t>> all_subsets(std::int64_t n,
                                                          std::int64_t k) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::int64_t next) -> void {
    if (static_cast<std::int64_t>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    if (next > n) return;
    cur.push_back(next);
    self(self, next + 1);
    cur.pop_back();
    self(self, next + 1);
  };
  if (k >= 0 && k <= n) rec(rec, 1);
  return out;
}

}  // namespace qspace::testing
