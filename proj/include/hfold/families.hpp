#pragma once

// Parametric set families with closed-form h-fold sumset cardinalities.
//
//   P1{k,i}   [0, k]   minus {i}          k >= 4, 1 <= i <= k
//   P2{k,i}   [0, k+1] minus {i, i+1}     k >= 5, 1 <= i <= k
//   P3{k,i}   [0, k+1] minus {i, i+2}     k >= 5, 1 <= i <= k-1
//   P4{k,i,j} [0, k+1] minus {i, j}       k >= 5, 1 <= i <= k-2, i+3 <= j <= k+1
//   L2{i,j}   [0, i-1] + [i+1, j]         i >= 2, j >= i+2  (one gap)
//   L3{i,j}   [0, i-1] + [i+2, j]         i >= 2, j >= i+3  (two-wide gap)
//
// P1..P4 carry a cardinality formula per parameter region; L2 and L3 give
// the full sumset as an interval (L3 only from h = 3 up; at h = 2 its
// sumset need not be an interval and no formula is claimed).

#include <cstdint>
#include <string>
#include <vector>

#include "hfold/errors.hpp"
#include "hfold/int_set.hpp"

namespace hfold {

struct FamilyId {
  enum class Kind { P1, P2, P3, P4, L2, L3 };

  Kind kind;
  int64_t k = 0;
  int64_t i = 0;
  int64_t j = 0;

  static FamilyId p1(int64_t k, int64_t i) { return {Kind::P1, k, i, 0}; }
  static FamilyId p2(int64_t k, int64_t i) { return {Kind::P2, k, i, 0}; }
  static FamilyId p3(int64_t k, int64_t i) { return {Kind::P3, k, i, 0}; }
  static FamilyId p4(int64_t k, int64_t i, int64_t j) { return {Kind::P4, k, i, j}; }
  static FamilyId l2(int64_t i, int64_t j) { return {Kind::L2, 0, i, j}; }
  static FamilyId l3(int64_t i, int64_t j) { return {Kind::L3, 0, i, j}; }

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

inline std::string to_string(const FamilyId& f) {
  const std::string ki = "{k=" + std::to_string(f.k) + ", i=" + std::to_string(f.i);
  switch (f.kind) {
    case FamilyId::Kind::P1: return "P1" + ki + "}";
    case FamilyId::Kind::P2: return "P2" + ki + "}";
    case FamilyId::Kind::P3: return "P3" + ki + "}";
    case FamilyId::Kind::P4: return "P4" + ki + ", j=" + std::to_string(f.j) + "}";
    case FamilyId::Kind::L2:
      return "L2{i=" + std::to_string(f.i) + ", j=" + std::to_string(f.j) + "}";
    case FamilyId::Kind::L3:
      return "L3{i=" + std::to_string(f.i) + ", j=" + std::to_string(f.j) + "}";
  }
  return "?";
}

inline void validate(const FamilyId& f) {
  auto fail = [&](const char* constraint) {
    throw BadParameters(to_string(f) + " violates " + constraint);
  };
  switch (f.kind) {
    case FamilyId::Kind::P1:
      if (f.k < 4) fail("k >= 4");
      if (f.i < 1 || f.i > f.k) fail("1 <= i <= k");
      break;
    case FamilyId::Kind::P2:
      if (f.k < 5) fail("k >= 5");
      if (f.i < 1 || f.i > f.k) fail("1 <= i <= k");
      break;
    case FamilyId::Kind::P3:
      if (f.k < 5) fail("k >= 5");
      if (f.i < 1 || f.i > f.k - 1) fail("1 <= i <= k-1");
      break;
    case FamilyId::Kind::P4:
      if (f.k < 5) fail("k >= 5");
      if (f.i < 1 || f.i > f.k - 2) fail("1 <= i <= k-2");
      if (f.j < f.i + 3 || f.j > f.k + 1) fail("i+3 <= j <= k+1");
      break;
    case FamilyId::Kind::L2:
      if (f.i < 2) fail("i >= 2");
      if (f.j < f.i + 2) fail("j >= i+2");
      break;
    case FamilyId::Kind::L3:
      if (f.i < 2) fail("i >= 2");
      if (f.j < f.i + 3) fail("j >= i+3");
      break;
  }
}

inline IntSet build(const FamilyId& f) {
  validate(f);
  std::vector<int64_t> out;
  auto interval_minus = [&](int64_t top, int64_t skip1, int64_t skip2) {
    for (int64_t v = 0; v <= top; ++v)
      if (v != skip1 && v != skip2) out.push_back(v);
  };
  switch (f.kind) {
    case FamilyId::Kind::P1: interval_minus(f.k, f.i, -1); break;
    case FamilyId::Kind::P2: interval_minus(f.k + 1, f.i, f.i + 1); break;
    case FamilyId::Kind::P3: interval_minus(f.k + 1, f.i, f.i + 2); break;
    case FamilyId::Kind::P4: interval_minus(f.k + 1, f.i, f.j); break;
    case FamilyId::Kind::L2: interval_minus(f.j, f.i, -1); break;
    case FamilyId::Kind::L3: interval_minus(f.j, f.i, f.i + 1); break;
  }
  return IntSet::from_sorted(std::move(out));
}

namespace detail {

inline void require_family_h(const FamilyId& f, int64_t h) {
  const int64_t h_min = f.kind == FamilyId::Kind::L3 ? 3 : 2;
  if (h < h_min)
    throw UnsupportedH(to_string(f) + " has no formula for h = " + std::to_string(h) +
                       " (needs h >= " + std::to_string(h_min) + ")");
}

}  // namespace detail

/// |h A_f| by the family's case table.
inline int64_t predict_cardinality(const FamilyId& f, int64_t h) {
  validate(f);
  detail::require_family_h(f, h);
  const int64_t k = f.k, i = f.i, j = f.j;
  const int64_t hk = detail::checked_mul(h, k);
  switch (f.kind) {
    case FamilyId::Kind::P1:
      if (i == k) return hk - h + 1;                    // set is the AP [0, k-1]
      if (i == 1 || i == k - 1) return hk;
      return hk + 1;                                    // 2 <= i <= k-2
    case FamilyId::Kind::P2:
      if (i == k) return hk - h + 1;                    // set is the AP [0, k-1]
      if (i == 1 || i == k - 1) return hk + h - 1;
      if (h == 2) return i == 2 || i == k - 2 ? 2 * k + 2 : 2 * k + 3;
      return hk + h + 1;                                // 2 <= i <= k-2, h >= 3
    case FamilyId::Kind::P3:
      if (i == k - 1) return hk;
      if (i == 1 || i == k - 2) return hk + h - 1;
      return hk + h + 1;                                // 2 <= i <= k-3
    case FamilyId::Kind::P4:
      if (i == 1) {
        if (j == k + 1) return hk;
        if (j == k) return hk + h - 1;
        return hk + h;                                  // 4 <= j <= k-1
      }
      if (j == k + 1) return hk + 1;
      if (j == k) return hk + h;
      return hk + h + 1;                                // 2 <= i, j <= k-1
    case FamilyId::Kind::L2:
    case FamilyId::Kind::L3:
      return detail::checked_add(detail::checked_mul(h, j), 1);  // hA = [0, hj]
  }
  throw UnsupportedFamily("unknown family kind");
}

struct Interval {
  int64_t lo;
  int64_t hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// The full sumset as an interval, for the families where hA is one.
inline Interval predict_sumset_interval(const FamilyId& f, int64_t h) {
  validate(f);
  if (f.kind != FamilyId::Kind::L2 && f.kind != FamilyId::Kind::L3)
    throw UnsupportedFamily(to_string(f) + " has no interval form; only a cardinality");
  detail::require_family_h(f, h);
  return Interval{0, detail::checked_mul(h, f.j)};
}

}  // namespace hfold
