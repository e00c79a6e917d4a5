#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mpcs/bitplane.hpp"
#include "mpcs/chaos.hpp"

namespace mpcs {

// F[k] = original position of the k-th smallest element (0-based)
using IndexPermutation = std::vector<std::uint32_t>;

// order F_X1..F_X4, F_Y1..F_Y4, F_Z1..F_Z4
struct PermutationSet {
  std::array<IndexPermutation, 12> perms;
};

// ascending, stable: ties keep the smaller original index first;
// throws std::invalid_argument on non-finite values
IndexPermutation sort_index(const std::vector<double>& seq);

PermutationSet make_permutation_set(const SequenceBundle& bundle);

// column pair (2p, 2p+1) gathers rows through perms[p]
BitMatrix column_shuffle(const BitMatrix& bm, const PermutationSet& ps);
BitMatrix inverse_column_shuffle(const BitMatrix& bm, const PermutationSet& ps);

// per-row pair shuffle keyed by the per-row 12-vector
// (x1,y1,z1,x2,...,z4) of preprocessed values
BitMatrix row_pair_shuffle(const BitMatrix& bm, const SequenceBundle& bundle);
BitMatrix inverse_row_pair_shuffle(const BitMatrix& bm,
                                   const SequenceBundle& bundle);

}  // namespace mpcs
