#pragma once

// Definition-level sumset oracle: enumerate every multiset of h elements,
// sum it, sort, dedupe. Shares nothing with the bit-window engine except
// the IntSet container, so agreement between the two is meaningful.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hfold/errors.hpp"
#include "hfold/int_set.hpp"
#include "hfold/sumset.hpp"

namespace hfold {

/// Most multisets the oracle will enumerate: C(k + h - 1, h) is capped here.
inline constexpr int64_t kMaxOracleMultisets = 10'000'000;

/// C(k + h - 1, h), saturated at kMaxOracleMultisets + 1.
inline int64_t multiset_count(int64_t k, int64_t h) {
  // C(n, r) with r = min(h, k - 1) factors to keep intermediates small.
  const int64_t n = k + h - 1;
  int64_t r = h < k - 1 ? h : k - 1;
  __int128 acc = 1;
  for (int64_t t = 1; t <= r; ++t) {
    acc = acc * (n - r + t) / t;  // exact: prefix products are binomials
    if (acc > kMaxOracleMultisets) return kMaxOracleMultisets + 1;
  }
  return static_cast<int64_t>(acc);
}

inline SumsetResult h_fold_bruteforce(const IntSet& a, int64_t h) {
  if (h < 1) throw InvalidH("fold count must be positive, got " + std::to_string(h));
  if (multiset_count(a.size(), h) > kMaxOracleMultisets)
    throw TooLarge("C(k+h-1, h) exceeds kMaxOracleMultisets");

  const int64_t k = a.size();
  std::vector<int64_t> idx(static_cast<size_t>(h), 0);  // non-decreasing index tuple
  std::vector<int64_t> sums;
  while (true) {
    int64_t sum = 0;
    for (int64_t i : idx) sum = detail::checked_add(sum, a[i]);
    sums.push_back(sum);
    // Advance the rightmost index that can still grow; reset the tail to it.
    int64_t pos = h - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == k - 1) --pos;
    if (pos < 0) break;
    const int64_t next = idx[static_cast<size_t>(pos)] + 1;
    for (int64_t t = pos; t < h; ++t) idx[static_cast<size_t>(t)] = next;
  }

  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  IntSet elements = IntSet::from_sorted(std::move(sums));
  const int64_t card = elements.size();
  return SumsetResult{h, a, std::move(elements), card};
}

}  // namespace hfold
