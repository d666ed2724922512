#pragma once

#include <vector>

#include "kv/fp.hpp"

namespace kv {

// Dense exact Gaussian elimination over GF(p).  Reduces rows in place to
// reduced row echelon form (pivots 1, pivot columns cleared) and drops
// zero rows; the result is the canonical basis of the row space.
void row_reduce(std::vector<std::vector<Fp>>& rows);

long long rank_of(std::vector<std::vector<Fp>> rows);  // by value: scratch

}  // namespace kv
