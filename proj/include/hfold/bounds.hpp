#pragma once

// Closed-form lower bounds on |hA| and the diameter consequences of a small
// |hA|. Formula inputs are normal-form sets; callers verify cardinalities
// against the engine, these functions never compute a sumset themselves
// (except theorem_d_check, which needs |2A|).

#include <cstdint>
#include <optional>
#include <string>

#include "hfold/errors.hpp"
#include "hfold/int_set.hpp"
#include "hfold/sumset.hpp"

namespace hfold {

namespace detail {

inline void require_normal_form(const IntSet& s, const char* what) {
  if (!is_normal_form(s))
    throw NotNormalForm(std::string(what) + " needs a normal-form set, got " + to_string(s));
}

}  // namespace detail

/// Universal lower bound hk - h + 1, attained exactly by arithmetic
/// progressions.
inline int64_t theorem_a_bound(int64_t h, int64_t k) {
  if (h < 2) throw InvalidParams("universal bound needs h >= 2, got " + std::to_string(h));
  if (k < 1) throw InvalidParams("set size must be positive, got " + std::to_string(k));
  return detail::checked_add(detail::checked_mul(h, k - 1), 1);
}

/// Doubling bound min{a_{k-1}, 2k - 3} + k for a normal-form set of size
/// k >= 3 with largest element a_{k-1}.
inline int64_t freiman_2a_bound(const IntSet& s) {
  detail::require_normal_form(s, "doubling bound");
  const int64_t k = s.size();
  if (k < 3) throw TooSmall("doubling bound needs at least 3 elements");
  const int64_t last = s.max();
  return (last < 2 * k - 3 ? last : 2 * k - 3) + k;
}

/// Step bound |hA| >= |(h-1)A| + min{a_{k-1}, h(k-2) + 1}. The caller
/// supplies |(h-1)A|; nothing is recomputed.
inline int64_t lev_step_bound(const IntSet& s, int64_t h, int64_t prev_cardinality) {
  detail::require_normal_form(s, "step bound");
  if (s.size() < 2) throw InvalidParams("step bound needs at least 2 elements");
  if (h < 2) throw InvalidParams("step bound needs h >= 2, got " + std::to_string(h));
  if (prev_cardinality < 1)
    throw InvalidParams("previous cardinality must be positive");
  const int64_t last = s.max();
  const int64_t cap = detail::checked_add(detail::checked_mul(h, s.size() - 2), 1);
  return detail::checked_add(prev_cardinality, last < cap ? last : cap);
}

/// Step bound telescoped from |1A| = k:
/// |hA| >= k + sum_{t=2..h} min{a_{k-1}, t(k-2) + 1}.
inline int64_t lev_chain_bound(const IntSet& s, int64_t h) {
  detail::require_normal_form(s, "chain bound");
  if (s.size() < 2) throw InvalidParams("chain bound needs at least 2 elements");
  if (h < 2) throw InvalidParams("chain bound needs h >= 2, got " + std::to_string(h));
  int64_t bound = s.size();
  for (int64_t t = 2; t <= h; ++t) bound = lev_step_bound(s, t, bound);
  return bound;
}

/// Largest element forced by a small h-fold cardinality, for h >= 2 and
/// k >= 5: |hA| <= hk + 2h - 3 forces a_{k-1} <= k + 1, and the tighter
/// |hA| <= hk + h - 2 forces a_{k-1} <= k. std::nullopt when the
/// cardinality is too big to force anything.
inline std::optional<int64_t> lemma1_diameter_bound(int64_t h, int64_t k, int64_t cardinality) {
  if (h < 2) throw InvalidParams("diameter bound needs h >= 2, got " + std::to_string(h));
  if (k < 5) throw InvalidParams("diameter bound needs k >= 5, got " + std::to_string(k));
  if (cardinality < theorem_a_bound(h, k))
    throw InvalidParams("cardinality " + std::to_string(cardinality) +
                        " is below the universal minimum");
  const int64_t hk = detail::checked_mul(h, k);
  if (cardinality <= hk + h - 2) return k;
  if (cardinality <= hk + 2 * h - 3) return k + 1;
  return std::nullopt;
}

struct BoundContext {
  int64_t h = 0;
  int64_t k = 0;
  int64_t last_element = 0;
  bool vacuous = false;
};

struct BoundReport {
  std::string name;
  int64_t bound_value;
  int64_t actual;
  bool holds;
  BoundContext context;
};

/// Small-doubling containment: if |2A| = 2k - 1 + b with b <= k - 3, then A
/// sits inside an arithmetic progression of length k + b. Reported with
/// vacuous = true when b > k - 3, where no containment is claimed.
inline BoundReport theorem_d_check(const IntSet& s) {
  const int64_t k = s.size();
  if (k < 3) throw TooSmall("containment check needs at least 3 elements");
  const int64_t two_a = h_fold_cardinality(s, 2);
  const int64_t b = two_a - (2 * k - 1);
  const int64_t cover = minimal_ap_cover_length(s);
  BoundReport report;
  report.name = "ap-containment";
  report.bound_value = detail::checked_add(k, b < 0 ? 0 : b);
  report.actual = cover;
  report.context = BoundContext{2, k, s.max(), b > k - 3};
  report.holds = report.context.vacuous || cover <= report.bound_value;
  return report;
}

}  // namespace hfold
