#pragma once

// Exact h-fold sumsets over a dense bit window.
//
// A sumset X + Y is computed as a union of shifted copies of the larger
// operand's characteristic bit vector, one shift per element of the smaller
// operand. Each shift-OR pass is branch-free over 64-bit words, so the cost
// is min(|X|,|Y|) * (window bits / 64) word operations. hA is built by h-1
// passes of +A, which keeps every pass's cost proportional to |A| rather
// than to an intermediate sumset's size.
//
// No structure theorem is consulted anywhere in this file; results are used
// as ground truth by the verification layers above it.

#include <bit>
#include <cstdint>
#include <vector>

#include "hfold/errors.hpp"
#include "hfold/int_set.hpp"

namespace hfold {

/// Widest bit window add_sets / h_fold will allocate (1 GiB of bits).
inline constexpr int64_t kMaxSumsetWindowBits = int64_t{1} << 33;

struct SumsetResult {
  int64_t h;
  IntSet source;
  IntSet elements;
  int64_t cardinality;
};

namespace detail {

/// Characteristic vector of a set of values in [base, base + bit_count).
struct BitWindow {
  int64_t base = 0;
  int64_t bit_count = 0;
  std::vector<uint64_t> words;  // one pad word past the last used bit

  static BitWindow empty(int64_t base, int64_t bit_count) {
    if (bit_count > kMaxSumsetWindowBits)
      throw TooLarge("sumset window of " + std::to_string(bit_count) +
                     " bits exceeds kMaxSumsetWindowBits");
    BitWindow w;
    w.base = base;
    w.bit_count = bit_count;
    w.words.assign(static_cast<size_t>((bit_count + 63) / 64 + 1), 0);
    return w;
  }

  static BitWindow of_set(const IntSet& s) {
    BitWindow w = empty(s.min(), s.diameter() + 1);
    for (int64_t v : s) {
      const uint64_t bit = static_cast<uint64_t>(v - w.base);
      w.words[bit >> 6] |= uint64_t{1} << (bit & 63);
    }
    return w;
  }

  int64_t popcount() const {
    int64_t n = 0;
    for (uint64_t w : words) n += std::popcount(w);
    return n;
  }

  IntSet to_set() const {
    std::vector<int64_t> out;
    out.reserve(static_cast<size_t>(popcount()));
    for (size_t wi = 0; wi < words.size(); ++wi) {
      uint64_t w = words[wi];
      while (w) {
        out.push_back(base + static_cast<int64_t>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return IntSet::from_sorted(std::move(out));
  }
};

/// dst |= src << shift, in window-local bit coordinates. All source bits
/// must land inside dst's bit_count; the pad word absorbs the final
/// unconditional store.
inline void or_shifted(BitWindow& dst, const BitWindow& src, int64_t shift) {
  const size_t n = static_cast<size_t>((src.bit_count + 63) / 64);
  const size_t word_shift = static_cast<size_t>(shift >> 6);
  const int bit_shift = static_cast<int>(shift & 63);
  const uint64_t* s = src.words.data();
  uint64_t* d = dst.words.data() + word_shift;
  if (bit_shift == 0) {
    for (size_t i = 0; i < n; ++i) d[i] |= s[i];
  } else {
    const int inv = 64 - bit_shift;
    d[0] |= s[0] << bit_shift;
    for (size_t i = 1; i < n; ++i) d[i] |= (s[i] << bit_shift) | (s[i - 1] >> inv);
    d[n] |= s[n - 1] >> inv;
  }
}

/// One +A pass: returns the window of prev + A for a sorted base set.
inline BitWindow add_base_set(const BitWindow& prev, const IntSet& a) {
  BitWindow next = BitWindow::empty(checked_add(prev.base, a.min()),
                                    checked_add(prev.bit_count, a.diameter()));
  for (int64_t v : a) or_shifted(next, prev, v - a.min());
  return next;
}

inline BitWindow h_fold_window(const IntSet& a, int64_t h) {
  if (h < 1) throw InvalidH("fold count must be positive, got " + std::to_string(h));
  // Surface endpoint overflow before any allocation.
  checked_mul(h, a.min());
  checked_mul(h, a.max());
  BitWindow w = BitWindow::of_set(a);
  for (int64_t t = 2; t <= h; ++t) w = add_base_set(w, a);
  return w;
}

}  // namespace detail

/// X + Y = {x + y : x in X, y in Y}.
inline IntSet add_sets(const IntSet& x, const IntSet& y) {
  const IntSet& big = x.size() >= y.size() ? x : y;
  const IntSet& small = x.size() >= y.size() ? y : x;
  detail::BitWindow acc = detail::BitWindow::empty(
      detail::checked_add(x.min(), y.min()),
      detail::checked_add(detail::checked_add(x.diameter(), y.diameter()), 1));
  detail::BitWindow base = detail::BitWindow::of_set(big);
  for (int64_t v : small) detail::or_shifted(acc, base, v - small.min());
  return acc.to_set();
}

/// hA = A + A + ... + A (h copies), materialized.
inline SumsetResult h_fold(const IntSet& a, int64_t h) {
  detail::BitWindow w = detail::h_fold_window(a, h);
  IntSet elements = w.to_set();
  const int64_t card = elements.size();
  return SumsetResult{h, a, std::move(elements), card};
}

/// |hA| without materializing the element list.
inline int64_t h_fold_cardinality(const IntSet& a, int64_t h) {
  return detail::h_fold_window(a, h).popcount();
}

/// {|1A|, |2A|, ..., |h_max A|} in one sweep; index t-1 holds |tA|.
inline std::vector<int64_t> h_fold_cardinalities(const IntSet& a, int64_t h_max) {
  if (h_max < 1) throw InvalidH("fold count must be positive, got " + std::to_string(h_max));
  detail::checked_mul(h_max, a.min());
  detail::checked_mul(h_max, a.max());
  std::vector<int64_t> out;
  out.reserve(static_cast<size_t>(h_max));
  detail::BitWindow w = detail::BitWindow::of_set(a);
  out.push_back(w.popcount());
  for (int64_t t = 2; t <= h_max; ++t) {
    w = detail::add_base_set(w, a);
    out.push_back(w.popcount());
  }
  return out;
}

}  // namespace hfold
