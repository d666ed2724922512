#include "kv/linalg.hpp"

#include <cstddef>

namespace kv {

void row_reduce(std::vector<std::vector<Fp>>& rows) {
  if (rows.empty()) return;
  const std::size_t cols = rows[0].size();
  std::size_t next = 0;  // next pivot row slot
  for (std::size_t col = 0; col < cols && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);
    Fp inv = rows[next][col].inverse();
    for (std::size_t c = col; c < cols; ++c) rows[next][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col].is_zero()) continue;
      Fp f = rows[r][col];
      for (std::size_t c = col; c < cols; ++c)
        rows[r][c] -= f * rows[next][c];
    }
    ++next;
  }
  rows.resize(next);
}

long long rank_of(std::vector<std::vector<Fp>> rows) {
  row_reduce(rows);
  return static_cast<long long>(rows.size());
}

}  // namespace kv
