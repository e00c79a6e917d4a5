#include "mpcs/shuffle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mpcs {

namespace {

void check_rows(const BitMatrix& bm, std::size_t n) {
  if (bm.rows != n) {
    throw std::invalid_argument("matrix rows do not match permutation length");
  }
}

// per-row sort order of the 12-vector (x1,y1,z1,x2,y2,z2,...,z4)
void row_order(const SequenceBundle& bundle, std::size_t mu, int order[12]) {
  double v[12];
  for (int si = 0; si < 4; ++si) {
    v[si * 3 + 0] = bundle.pre[si][0][mu];
    v[si * 3 + 1] = bundle.pre[si][1][mu];
    v[si * 3 + 2] = bundle.pre[si][2][mu];
  }
  for (int i = 0; i < 12; ++i) {
    order[i] = i;
  }
  // stable insertion sort
  for (int i = 1; i < 12; ++i) {
    int key = order[i];
    int j = i - 1;
    while (j >= 0 && v[key] < v[order[j]]) {
      order[j + 1] = order[j];
      --j;
    }
    order[j + 1] = key;
  }
}

}  // namespace

IndexPermutation sort_index(const std::vector<double>& seq) {
  for (double v : seq) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("non-finite value in sort_index input");
    }
  }
  IndexPermutation perm(seq.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::stable_sort(perm.begin(), perm.end(),
                   [&seq](std::uint32_t a, std::uint32_t b) {
                     return seq[a] < seq[b];
                   });
  return perm;
}

PermutationSet make_permutation_set(const SequenceBundle& bundle) {
  PermutationSet ps;
  int idx = 0;
  for (int c = 0; c < 3; ++c) {
    for (int si = 0; si < 4; ++si) {
      ps.perms[idx++] = sort_index(bundle.pre[si][c]);
    }
  }
  return ps;
}

BitMatrix column_shuffle(const BitMatrix& bm, const PermutationSet& ps) {
  check_rows(bm, ps.perms[0].size());
  BitMatrix out;
  out.rows = bm.rows;
  out.bits.resize(bm.bits.size());
  for (int i = 0; i < 24; ++i) {
    const IndexPermutation& F = ps.perms[i / 2];
    for (std::size_t k = 0; k < bm.rows; ++k) {
      out.bits[k * 24 + i] = bm.bits[static_cast<std::size_t>(F[k]) * 24 + i];
    }
  }
  return out;
}

BitMatrix inverse_column_shuffle(const BitMatrix& bm,
                                 const PermutationSet& ps) {
  check_rows(bm, ps.perms[0].size());
  BitMatrix out;
  out.rows = bm.rows;
  out.bits.resize(bm.bits.size());
  for (int i = 0; i < 24; ++i) {
    const IndexPermutation& F = ps.perms[i / 2];
    for (std::size_t k = 0; k < bm.rows; ++k) {
      out.bits[static_cast<std::size_t>(F[k]) * 24 + i] = bm.bits[k * 24 + i];
    }
  }
  return out;
}

BitMatrix row_pair_shuffle(const BitMatrix& bm, const SequenceBundle& bundle) {
  check_rows(bm, bundle.length);
  BitMatrix out;
  out.rows = bm.rows;
  out.bits.resize(bm.bits.size());
  int order[12];
  for (std::size_t mu = 0; mu < bm.rows; ++mu) {
    row_order(bundle, mu, order);
    const std::uint8_t* src = &bm.bits[mu * 24];
    std::uint8_t* dst = &out.bits[mu * 24];
    for (int s = 0; s < 12; ++s) {
      int from = order[s];
      dst[2 * s] = src[2 * from];
      dst[2 * s + 1] = src[2 * from + 1];
    }
  }
  return out;
}

BitMatrix inverse_row_pair_shuffle(const BitMatrix& bm,
                                   const SequenceBundle& bundle) {
  check_rows(bm, bundle.length);
  BitMatrix out;
  out.rows = bm.rows;
  out.bits.resize(bm.bits.size());
  int order[12];
  for (std::size_t mu = 0; mu < bm.rows; ++mu) {
    row_order(bundle, mu, order);
    const std::uint8_t* src = &bm.bits[mu * 24];
    std::uint8_t* dst = &out.bits[mu * 24];
    for (int s = 0; s < 12; ++s) {
      int from = order[s];
      dst[2 * from] = src[2 * s];
      dst[2 * from + 1] = src[2 * s + 1];
    }
  }
  return out;
}

}  // namespace mpcs
