#pragma once

// Inverse direction: from an observed cardinality |hA| back to the possible
// normal forms of A. The classified window is hk - h + 1 <= |hA| <= hk +
// 2h - 3; above it no structure claim is made, inside it every admissible
// normal form is listed explicitly.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hfold/bounds.hpp"
#include "hfold/errors.hpp"
#include "hfold/families.hpp"
#include "hfold/int_set.hpp"
#include "hfold/record.hpp"
#include "hfold/sumset.hpp"

namespace hfold {

enum class InverseStatus {
  BelowMinimum,           // no set attains this cardinality (below hk - h + 1)
  ExactMinimum,           // arithmetic progression, normal form [0, k-1]
  Classified,             // explicit list of normal forms
  Impossible,             // inside the classified window, attained by nothing
  OutOfClassifiedRange,   // above hk + 2h - 3
};

inline const char* to_string(InverseStatus s) {
  switch (s) {
    case InverseStatus::BelowMinimum: return "below-minimum";
    case InverseStatus::ExactMinimum: return "exact-minimum";
    case InverseStatus::Classified: return "classified";
    case InverseStatus::Impossible: return "impossible";
    case InverseStatus::OutOfClassifiedRange: return "out-of-classified-range";
  }
  return "?";
}

/// One admissible shape of normal forms: a full interval, an interval with
/// one hole from a list, or an interval with a hole pair from a list.
struct StructurePattern {
  StructureClass::Kind kind;
  int64_t k;
  std::vector<int64_t> holes;                           // IntervalMinusOne
  std::vector<std::pair<int64_t, int64_t>> hole_pairs;  // IntervalMinusTwo

  /// A hole pair {i, k+1} deletes the top of the universe [0, k+1], so the
  /// set it denotes is really [0, k] minus {i}; match both spellings.
  bool matches(const StructureClass& s) const {
    if (s.k != k) return false;
    switch (kind) {
      case StructureClass::Kind::FullInterval:
        return s.kind == StructureClass::Kind::FullInterval;
      case StructureClass::Kind::IntervalMinusOne:
        return s.kind == StructureClass::Kind::IntervalMinusOne &&
               std::find(holes.begin(), holes.end(), s.i) != holes.end();
      case StructureClass::Kind::IntervalMinusTwo: {
        std::pair<int64_t, int64_t> key;
        if (s.kind == StructureClass::Kind::IntervalMinusTwo) key = {s.i, s.j};
        else if (s.kind == StructureClass::Kind::IntervalMinusOne) key = {s.i, k + 1};
        else return false;
        return std::find(hole_pairs.begin(), hole_pairs.end(), key) != hole_pairs.end();
      }
      default:
        return false;
    }
  }
};

struct InversePrediction {
  int64_t h;
  int64_t k;
  int64_t cardinality;
  InverseStatus status;
  std::vector<StructurePattern> structures;
  std::vector<std::string> caveats;

  bool admits(const StructureClass& s) const {
    for (const StructurePattern& p : structures)
      if (p.matches(s)) return true;
    return false;
  }
};

namespace detail {

/// |h([0, k+1] minus {i, j})| for 1 <= i < j <= k+1, via the matching
/// family formula.
inline int64_t missing_pair_cardinality(int64_t k, int64_t i, int64_t j, int64_t h) {
  if (j == i + 1) return predict_cardinality(FamilyId::p2(k, i), h);
  if (j == i + 2) return predict_cardinality(FamilyId::p3(k, i), h);
  return predict_cardinality(FamilyId::p4(k, i, j), h);
}

}  // namespace detail

inline InversePrediction classify_by_cardinality(int64_t h, int64_t k, int64_t cardinality) {
  if (h < 2) throw InvalidParams("classification needs h >= 2, got h = " + std::to_string(h));
  if (k < 5) throw InvalidParams("classification needs k >= 5, got k = " + std::to_string(k));

  InversePrediction out{h, k, cardinality, InverseStatus::Impossible, {}, {}};
  const int64_t minimum = theorem_a_bound(h, k);
  const int64_t hk = detail::checked_mul(h, k);

  if (cardinality < minimum) {
    out.status = InverseStatus::BelowMinimum;
    return out;
  }
  if (cardinality == minimum) {
    out.status = InverseStatus::ExactMinimum;
    out.structures.push_back({StructureClass::Kind::FullInterval, k, {}, {}});
    return out;
  }
  if (cardinality > hk + 2 * h - 3) {
    out.status = InverseStatus::OutOfClassifiedRange;
    return out;
  }

  if (cardinality <= hk + h - 2) {
    // One-hole window: |hA| determines which holes are possible.
    std::vector<int64_t> holes;
    for (int64_t i = 1; i <= k - 1; ++i)
      if (predict_cardinality(FamilyId::p1(k, i), h) == cardinality) holes.push_back(i);
    if (!holes.empty()) {
      out.status = InverseStatus::Classified;
      out.structures.push_back({StructureClass::Kind::IntervalMinusOne, k, std::move(holes), {}});
    }
    return out;
  }

  // Two-hole window: list every pair of the universe [0, k+1] whose formula
  // hits the cardinality.
  std::vector<std::pair<int64_t, int64_t>> pairs;
  bool degenerate = false;
  for (int64_t i = 1; i <= k; ++i)
    for (int64_t j = i + 1; j <= k + 1; ++j)
      if (detail::missing_pair_cardinality(k, i, j, h) == cardinality) {
        pairs.emplace_back(i, j);
        degenerate |= j == k + 1;
      }
  if (!pairs.empty()) {
    out.status = InverseStatus::Classified;
    if (degenerate)
      out.caveats.push_back(
          "h2-degenerate-pairs: hole pairs {i, k+1} delete the top of the "
          "universe [0, k+1], so they denote one-hole sets [0, k] minus {i}");
    out.structures.push_back({StructureClass::Kind::IntervalMinusTwo, k, {}, std::move(pairs)});
  }
  return out;
}

inline std::string to_string(const InversePrediction& p) {
  std::string out = "h=" + std::to_string(p.h) + " k=" + std::to_string(p.k) +
                    " |hA|=" + std::to_string(p.cardinality) + ": " + to_string(p.status);
  for (const StructurePattern& pat : p.structures) {
    switch (pat.kind) {
      case StructureClass::Kind::FullInterval:
        out += "\n  [0, " + std::to_string(pat.k - 1) + "]";
        break;
      case StructureClass::Kind::IntervalMinusOne: {
        out += "\n  [0, " + std::to_string(pat.k) + "] minus {i}, i in {";
        for (size_t t = 0; t < pat.holes.size(); ++t)
          out += (t ? ", " : "") + std::to_string(pat.holes[t]);
        out += "}";
        break;
      }
      case StructureClass::Kind::IntervalMinusTwo: {
        out += "\n  [0, " + std::to_string(pat.k + 1) + "] minus {i, j}, {i, j} in {";
        for (size_t t = 0; t < pat.hole_pairs.size(); ++t)
          out += (t ? ", {" : "{") + std::to_string(pat.hole_pairs[t].first) + ", " +
                 std::to_string(pat.hole_pairs[t].second) + "}";
        out += "}";
        break;
      }
      default:
        break;
    }
  }
  for (const std::string& c : p.caveats) out += "\n  caveat: " + c;
  return out;
}

/// Formula value for a set's actual structure, when one of the catalogued
/// families covers it.
inline std::optional<int64_t> structure_formula(const StructureClass& s, int64_t h) {
  switch (s.kind) {
    case StructureClass::Kind::FullInterval:
      return theorem_a_bound(h, s.k);
    case StructureClass::Kind::IntervalMinusOne:
      if (s.k < 4) return std::nullopt;
      return predict_cardinality(FamilyId::p1(s.k, s.i), h);
    case StructureClass::Kind::IntervalMinusTwo:
      if (s.k < 5) return std::nullopt;
      return detail::missing_pair_cardinality(s.k, s.i, s.j, h);
    case StructureClass::Kind::Other:
      return std::nullopt;
  }
  return std::nullopt;
}

/// End-to-end check on one concrete set: normalize, compute |hA| with the
/// engine, classify the cardinality, and test whether the set's actual
/// normal form is among the predicted structures.
inline VerificationRecord consistency_check(const IntSet& a, int64_t h) {
  if (h < 2) throw InvalidParams("consistency check needs h >= 2, got h = " + std::to_string(h));
  if (a.size() < 5)
    throw InvalidParams("consistency check needs at least 5 elements, got " +
                        std::to_string(a.size()));

  const IntSet normal = normalize(a).normal;
  const int64_t k = normal.size();
  const int64_t cardinality = h_fold_cardinality(normal, h);
  const StructureClass structure = classify_structure(normal);
  const InversePrediction prediction = classify_by_cardinality(h, k, cardinality);

  const int64_t hk = detail::checked_mul(h, k);
  const bool in_one_hole_window =
      cardinality > hk - h + 1 && cardinality <= hk + h - 2;
  const bool in_two_hole_window =
      cardinality > hk + h - 2 && cardinality <= hk + 2 * h - 3;

  VerificationRecord record{normal,
                            h,
                            cardinality,
                            structure,
                            structure_formula(structure, h),
                            {},
                            prediction.caveats};
  const CheckOutcome match = prediction.admits(structure) ? CheckOutcome::Pass : CheckOutcome::Fail;
  record.checks["theorem1"] = in_one_hole_window ? match : CheckOutcome::Vacuous;
  record.checks["theorem2"] = in_two_hole_window ? match : CheckOutcome::Vacuous;
  return record;
}

}  // namespace hfold
