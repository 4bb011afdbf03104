#pragma once

// Exhaustive verification sweeps.
//
// Sets mode enumerates every normal-form set of a given size up to a
// diameter cap and evaluates a list of named checks on each, comparing
// closed-form claims against engine-computed cardinalities. Families mode
// walks the parametric family catalog instead.
//
// Sweeps shard by (diameter, first interior element) and a fixed-size
// thread pool claims shards through an atomic counter; outputs are merged
// in shard order, so reports are byte-identical for any job count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hfold/bounds.hpp"
#include "hfold/errors.hpp"
#include "hfold/families.hpp"
#include "hfold/int_set.hpp"
#include "hfold/inverse.hpp"
#include "hfold/record.hpp"
#include "hfold/sumset.hpp"

namespace hfold {

/// Most sets one sweep may enumerate (pre-gcd-filter candidate count).
inline constexpr int64_t kMaxEnumeratedSets = 100'000'000;

enum class CheckId {
  TheoremA,        // |hA| >= hk - h + 1
  TheoremB,        // equality above holds exactly for APs
  TheoremC,        // |2A| >= min{a_{k-1}, 2k-3} + k
  TheoremD,        // small |2A| forces containment in a short AP
  TheoremEStep,    // |hA| >= |(h-1)A| + min{a_{k-1}, h(k-2)+1}
  TheoremEChain,   // the step bound telescoped down to |1A| = k
  Lemma1Converse,  // large diameter forces |hA| above the window bounds
  Lemma2,          // one-gap sets fill [0, hj] for h >= 2
  Lemma3,          // two-wide-gap sets fill [0, hj] for h >= 3
  Prop1,           // one-hole cardinality formula
  Prop2,           // adjacent-hole-pair cardinality formula
  Prop3,           // distance-2-hole-pair cardinality formula
  Prop4,           // spread-hole-pair cardinality formula
  Theorem1,        // inverse classification, one-hole window
  Theorem2,        // inverse classification, two-hole window
  Remark1,         // no set attains |3A| = 3k - 1
};

inline const char* to_string(CheckId id) {
  switch (id) {
    case CheckId::TheoremA: return "theorem_a";
    case CheckId::TheoremB: return "theorem_b";
    case CheckId::TheoremC: return "theorem_c";
    case CheckId::TheoremD: return "theorem_d";
    case CheckId::TheoremEStep: return "theorem_e_step";
    case CheckId::TheoremEChain: return "theorem_e_chain";
    case CheckId::Lemma1Converse: return "lemma1_converse";
    case CheckId::Lemma2: return "lemma2";
    case CheckId::Lemma3: return "lemma3";
    case CheckId::Prop1: return "prop1";
    case CheckId::Prop2: return "prop2";
    case CheckId::Prop3: return "prop3";
    case CheckId::Prop4: return "prop4";
    case CheckId::Theorem1: return "theorem1";
    case CheckId::Theorem2: return "theorem2";
    case CheckId::Remark1: return "remark1";
  }
  return "?";
}

inline const std::vector<CheckId>& all_check_ids() {
  static const std::vector<CheckId> ids = {
      CheckId::TheoremA,      CheckId::TheoremB,       CheckId::TheoremC,
      CheckId::TheoremD,      CheckId::TheoremEStep,   CheckId::TheoremEChain,
      CheckId::Lemma1Converse, CheckId::Lemma2,        CheckId::Lemma3,
      CheckId::Prop1,         CheckId::Prop2,          CheckId::Prop3,
      CheckId::Prop4,         CheckId::Theorem1,       CheckId::Theorem2,
      CheckId::Remark1,
  };
  return ids;
}

inline CheckId check_id_from_string(const std::string& name) {
  for (CheckId id : all_check_ids())
    if (name == to_string(id)) return id;
  throw InvalidParams("unknown check id '" + name + "'");
}

struct EnumSpec {
  enum class Mode { Sets, Families };

  Mode mode = Mode::Sets;
  int64_t k = 0;             // Sets: set size. Families: largest universe parameter.
  int64_t max_diameter = 0;  // Sets only.
  std::vector<int64_t> h_values;
  std::vector<std::string> checks;
  bool dedup_reflection = false;
  bool collect_records = true;
};

struct SweepReport {
  EnumSpec spec;
  int64_t total_sets = 0;
  std::vector<VerificationRecord> records;   // empty unless spec.collect_records
  std::vector<VerificationRecord> failures;  // records with at least one failed check
  std::map<int64_t, std::map<int64_t, int64_t>> histogram;  // h -> |hA| -> count
  std::map<int64_t, std::vector<int64_t>> achievable_gaps;  // h -> unattained values
};

namespace detail {

/// C(n, r) saturated at kMaxEnumeratedSets + 1.
inline int64_t binomial_capped(int64_t n, int64_t r) {
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  __int128 acc = 1;
  for (int64_t t = 1; t <= r; ++t) {
    acc = acc * (n - r + t) / t;
    if (acc > kMaxEnumeratedSets) return kMaxEnumeratedSets + 1;
  }
  return static_cast<int64_t>(acc);
}

/// Candidate count before the gcd filter: sum over N of C(N-1, k-2).
inline int64_t enumeration_candidates(int64_t k, int64_t max_diameter) {
  int64_t total = 0;
  for (int64_t n = k - 1; n <= max_diameter; ++n) {
    total += binomial_capped(n - 1, k - 2);
    if (total > kMaxEnumeratedSets) return kMaxEnumeratedSets + 1;
  }
  return total;
}

template <typename Fn>
void interior_combinations(int64_t lo, int64_t hi, int64_t r, std::vector<int64_t>& acc,
                           Fn&& fn) {
  if (r == 0) {
    fn();
    return;
  }
  for (int64_t v = lo; v + r - 1 <= hi; ++v) {
    acc.push_back(v);
    interior_combinations(v + 1, hi, r - 1, acc, fn);
    acc.pop_back();
  }
}

/// True when the set should be kept under reflection dedup: a set is kept
/// iff it is lexicographically <= its reflection.
inline bool reflection_canonical(const std::vector<int64_t>& values) {
  const int64_t n = values.back();
  const size_t sz = values.size();
  for (size_t t = 0; t < sz; ++t) {
    const int64_t mirrored = n - values[sz - 1 - t];
    if (values[t] != mirrored) return values[t] < mirrored;
  }
  return true;
}

}  // namespace detail

/// Calls fn for every normal-form set of size k with diameter <= max_diameter,
/// ordered by diameter, then lexicographically.
template <typename Fn>
void enumerate_normal_sets(int64_t k, int64_t max_diameter, Fn&& fn) {
  if (k < 2) throw InvalidParams("enumeration needs k >= 2, got " + std::to_string(k));
  if (max_diameter < k - 1)
    throw InvalidParams("max_diameter below k - 1 admits no set of size k");
  if (detail::enumeration_candidates(k, max_diameter) > kMaxEnumeratedSets)
    throw TooLarge("enumeration exceeds kMaxEnumeratedSets");

  std::vector<int64_t> values;
  for (int64_t n = k - 1; n <= max_diameter; ++n) {
    std::vector<int64_t> acc;
    detail::interior_combinations(1, n - 1, k - 2, acc, [&] {
      int64_t g = n;
      for (int64_t v : acc) g = std::gcd(g, v);
      if (g != 1) return;
      values.clear();
      values.push_back(0);
      values.insert(values.end(), acc.begin(), acc.end());
      values.push_back(n);
      fn(IntSet::from_sorted(values));
    });
  }
}

/// Materializing convenience form.
inline std::vector<IntSet> enumerate_normal_sets(int64_t k, int64_t max_diameter) {
  std::vector<IntSet> out;
  enumerate_normal_sets(k, max_diameter, [&](const IntSet& s) { out.push_back(s); });
  return out;
}

namespace detail {

struct CheckEvaluation {
  CheckOutcome outcome = CheckOutcome::Vacuous;
  std::vector<std::string> caveats;
};

/// Evaluates one named check on one normal-form set at one fold count.
/// chain[t-1] holds |tA| for t = 1..max h in the sweep.
inline CheckEvaluation evaluate_check(CheckId id, const IntSet& s, const StructureClass& sc,
                                      int64_t h, int64_t card,
                                      const std::vector<int64_t>& chain) {
  const int64_t k = s.size();
  auto verdict = [](bool ok) {
    return CheckEvaluation{ok ? CheckOutcome::Pass : CheckOutcome::Fail, {}};
  };
  const CheckEvaluation vacuous{};

  switch (id) {
    case CheckId::TheoremA:
      return verdict(card >= theorem_a_bound(h, k));
    case CheckId::TheoremB:
      return verdict((card == theorem_a_bound(h, k)) == is_ap(s).has_value());
    case CheckId::TheoremC:
      if (k < 3) return vacuous;
      return verdict(chain[1] >= freiman_2a_bound(s));
    case CheckId::TheoremD: {
      if (k < 3) return vacuous;
      const int64_t b = chain[1] - (2 * k - 1);
      if (b > k - 3) return vacuous;
      return verdict(minimal_ap_cover_length(s) <= k + b);
    }
    case CheckId::TheoremEStep:
      return verdict(card >= lev_step_bound(s, h, chain[static_cast<size_t>(h - 2)]));
    case CheckId::TheoremEChain:
      return verdict(card >= lev_chain_bound(s, h));
    case CheckId::Lemma1Converse: {
      if (k < 5) return vacuous;
      const int64_t hk = checked_mul(h, k);
      if (s.max() >= k + 2) return verdict(card > hk + 2 * h - 3);
      if (s.max() == k + 1) return verdict(card > hk + h - 2);
      return vacuous;
    }
    case CheckId::Lemma2: {
      if (sc.kind != StructureClass::Kind::IntervalMinusOne) return vacuous;
      if (sc.i < 2 || sc.i > k - 2) return vacuous;
      return verdict(card == checked_mul(h, k) + 1);  // hA = [0, hk]
    }
    case CheckId::Lemma3: {
      if (h < 3) return vacuous;
      if (sc.kind != StructureClass::Kind::IntervalMinusTwo) return vacuous;
      if (sc.j != sc.i + 1 || sc.i < 2 || sc.i > k - 2) return vacuous;
      return verdict(card == checked_mul(h, k + 1) + 1);  // hA = [0, h(k+1)]
    }
    case CheckId::Prop1:
      if (sc.kind == StructureClass::Kind::FullInterval)
        return verdict(card == theorem_a_bound(h, k));
      if (sc.kind == StructureClass::Kind::IntervalMinusOne && k >= 4)
        return verdict(card == predict_cardinality(FamilyId::p1(k, sc.i), h));
      return vacuous;
    case CheckId::Prop2:
      if (sc.kind == StructureClass::Kind::IntervalMinusTwo && sc.j == sc.i + 1 && k >= 5)
        return verdict(card == predict_cardinality(FamilyId::p2(k, sc.i), h));
      return vacuous;
    case CheckId::Prop3:
      if (sc.kind == StructureClass::Kind::IntervalMinusTwo && sc.j == sc.i + 2 && k >= 5)
        return verdict(card == predict_cardinality(FamilyId::p3(k, sc.i), h));
      return vacuous;
    case CheckId::Prop4:
      if (sc.kind == StructureClass::Kind::IntervalMinusTwo && sc.j >= sc.i + 3 && k >= 5)
        return verdict(card == predict_cardinality(FamilyId::p4(k, sc.i, sc.j), h));
      return vacuous;
    case CheckId::Theorem1:
    case CheckId::Theorem2: {
      if (k < 5) return vacuous;
      const int64_t hk = checked_mul(h, k);
      const bool in_window = id == CheckId::Theorem1
                                 ? card > hk - h + 1 && card <= hk + h - 2
                                 : card > hk + h - 2 && card <= hk + 2 * h - 3;
      if (!in_window) return vacuous;
      const InversePrediction p = classify_by_cardinality(h, k, card);
      CheckEvaluation eval = verdict(p.admits(sc));
      eval.caveats = p.caveats;
      return eval;
    }
    case CheckId::Remark1:
      if (h != 3) return vacuous;
      return verdict(card != 3 * k - 1);
  }
  return vacuous;
}

struct ShardOutput {
  std::vector<VerificationRecord> records;
  std::vector<VerificationRecord> failures;
  std::map<int64_t, std::map<int64_t, int64_t>> histogram;
  int64_t set_count = 0;
};

inline void process_set(const IntSet& s, const std::vector<int64_t>& h_values,
                        const std::vector<CheckId>& checks, bool collect_records,
                        int64_t h_max, ShardOutput& out) {
  ++out.set_count;
  const std::vector<int64_t> chain = h_fold_cardinalities(s, h_max);
  const StructureClass sc = classify_structure(s);
  for (int64_t h : h_values) {
    const int64_t card = chain[static_cast<size_t>(h - 1)];
    ++out.histogram[h][card];
    VerificationRecord rec{s, h, card, sc, structure_formula(sc, h), {}, {}};
    for (CheckId id : checks) {
      CheckEvaluation eval = evaluate_check(id, s, sc, h, card, chain);
      rec.checks[to_string(id)] = eval.outcome;
      for (std::string& c : eval.caveats) rec.caveats.push_back(std::move(c));
    }
    if (rec.failed()) out.failures.push_back(rec);
    if (collect_records) out.records.push_back(std::move(rec));
  }
}

inline void merge_shard(SweepReport& report, ShardOutput&& shard) {
  report.total_sets += shard.set_count;
  for (auto& rec : shard.records) report.records.push_back(std::move(rec));
  for (auto& rec : shard.failures) report.failures.push_back(std::move(rec));
  for (auto& [h, counts] : shard.histogram)
    for (auto& [card, n] : counts) report.histogram[h][card] += n;
}

inline void fill_achievable_gaps(SweepReport& report, int64_t k) {
  for (auto& [h, counts] : report.histogram) {
    std::vector<int64_t> gaps;
    if (!counts.empty()) {
      const int64_t lo = theorem_a_bound(h, k);
      const int64_t hi = counts.rbegin()->first;
      for (int64_t v = lo; v <= hi; ++v)
        if (!counts.count(v)) gaps.push_back(v);
    }
    report.achievable_gaps[h] = std::move(gaps);
  }
}

inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

inline void validate_sweep_spec(const EnumSpec& spec) {
  if (spec.h_values.empty()) throw InvalidParams("sweep needs at least one h value");
  for (int64_t h : spec.h_values)
    if (h < 2) throw InvalidParams("sweep h values must be >= 2");
  for (const std::string& name : spec.checks) check_id_from_string(name);
}

/// Check evaluated on a family instance. Gap families keep their own
/// checks; hole families dispatch on the built set's actual structure, so
/// instances that degenerate to a smaller hole count (a hole at the top of
/// the universe) land on the check that owns that shape.
inline CheckId family_check_for(const FamilyId& f, const StructureClass& sc) {
  if (f.kind == FamilyId::Kind::L2) return CheckId::Lemma2;
  if (f.kind == FamilyId::Kind::L3) return CheckId::Lemma3;
  if (sc.kind != StructureClass::Kind::IntervalMinusTwo) return CheckId::Prop1;
  if (sc.j == sc.i + 1) return CheckId::Prop2;
  if (sc.j == sc.i + 2) return CheckId::Prop3;
  return CheckId::Prop4;
}

}  // namespace detail

/// Enumerates all normal-form sets of size spec.k with diameter up to
/// spec.max_diameter and evaluates spec.checks on each, for every h in
/// spec.h_values. Deterministic for any job count.
inline SweepReport run_sweep(const EnumSpec& spec, int jobs = 0) {
  if (spec.mode != EnumSpec::Mode::Sets)
    throw InvalidParams("run_sweep expects a Sets-mode spec");
  detail::validate_sweep_spec(spec);
  const int64_t k = spec.k;
  if (k < 2) throw InvalidParams("enumeration needs k >= 2, got " + std::to_string(k));
  if (spec.max_diameter < k - 1)
    throw InvalidParams("max_diameter below k - 1 admits no set of size k");
  if (detail::enumeration_candidates(k, spec.max_diameter) > kMaxEnumeratedSets)
    throw TooLarge("enumeration exceeds kMaxEnumeratedSets");

  std::vector<CheckId> checks;
  for (const std::string& name : spec.checks) checks.push_back(check_id_from_string(name));
  const int64_t h_max = *std::max_element(spec.h_values.begin(), spec.h_values.end());

  // Shards: (diameter) for k = 2, else (diameter, first interior element);
  // shard order equals enumeration order.
  struct Shard {
    int64_t n;
    int64_t first;  // -1 when the interior is empty
  };
  std::vector<Shard> shards;
  for (int64_t n = k - 1; n <= spec.max_diameter; ++n) {
    if (k == 2) {
      shards.push_back({n, -1});
    } else {
      for (int64_t first = 1; first + (k - 3) <= n - 1; ++first) shards.push_back({n, first});
    }
  }

  std::vector<detail::ShardOutput> outputs(shards.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> aborted{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      while (!aborted.load(std::memory_order_relaxed)) {
        const size_t idx = next.fetch_add(1);
        if (idx >= shards.size()) return;
        const Shard shard = shards[idx];
        detail::ShardOutput& out = outputs[idx];
        std::vector<int64_t> acc;
        std::vector<int64_t> values;
        auto emit = [&] {
          int64_t g = shard.n;
          for (int64_t v : acc) g = std::gcd(g, v);
          if (g != 1) return;
          values.clear();
          values.push_back(0);
          values.insert(values.end(), acc.begin(), acc.end());
          values.push_back(shard.n);
          if (spec.dedup_reflection && !detail::reflection_canonical(values)) return;
          detail::process_set(IntSet::from_sorted(values), spec.h_values, checks,
                              spec.collect_records, h_max, out);
        };
        if (shard.first < 0) {
          emit();
        } else {
          acc.push_back(shard.first);
          detail::interior_combinations(shard.first + 1, shard.n - 1, k - 3, acc, emit);
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      aborted.store(true, std::memory_order_relaxed);
    }
  };

  const int n_threads = std::min<int64_t>(detail::resolve_jobs(jobs),
                                          static_cast<int64_t>(shards.size()));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  SweepReport report;
  report.spec = spec;
  for (detail::ShardOutput& out : outputs) detail::merge_shard(report, std::move(out));
  detail::fill_achievable_gaps(report, k);
  return report;
}

/// Walks the family catalog: P1 for k in [4, k_max], P2..P4 for k in
/// [5, k_max], L2/L3 over a fixed parameter box, each at h in [2, h_max],
/// and checks every instance's engine cardinality against its formula
/// (interval form for L2/L3). An empty filter selects all six families.
inline SweepReport family_sweep(int64_t h_max, int64_t k_max,
                                const std::vector<std::string>& filter = {}) {
  if (h_max < 2 || h_max > 6)
    throw InvalidParams("family sweep needs 2 <= h_max <= 6, got " + std::to_string(h_max));
  if (k_max < 5 || k_max > 16)
    throw InvalidParams("family sweep needs 5 <= k_max <= 16, got " + std::to_string(k_max));

  std::vector<CheckId> selected;
  const std::vector<CheckId> family_checks = {CheckId::Prop1,  CheckId::Prop2,
                                              CheckId::Prop3,  CheckId::Prop4,
                                              CheckId::Lemma2, CheckId::Lemma3};
  if (filter.empty()) {
    selected = family_checks;
  } else {
    for (const std::string& name : filter) {
      const CheckId id = check_id_from_string(name);
      if (std::find(family_checks.begin(), family_checks.end(), id) == family_checks.end())
        throw InvalidParams("check '" + name + "' is not a family check");
      selected.push_back(id);
    }
  }
  auto wants = [&](CheckId id) {
    return std::find(selected.begin(), selected.end(), id) != selected.end();
  };

  std::vector<FamilyId> instances;
  for (int64_t k = 4; k <= k_max; ++k)
    if (wants(CheckId::Prop1))
      for (int64_t i = 1; i <= k; ++i) instances.push_back(FamilyId::p1(k, i));
  for (int64_t k = 5; k <= k_max; ++k) {
    if (wants(CheckId::Prop2))
      for (int64_t i = 1; i <= k; ++i) instances.push_back(FamilyId::p2(k, i));
    if (wants(CheckId::Prop3))
      for (int64_t i = 1; i <= k - 1; ++i) instances.push_back(FamilyId::p3(k, i));
    if (wants(CheckId::Prop4))
      for (int64_t i = 1; i <= k - 2; ++i)
        for (int64_t j = i + 3; j <= k + 1; ++j) instances.push_back(FamilyId::p4(k, i, j));
  }
  if (wants(CheckId::Lemma2))
    for (int64_t i = 2; i <= 8; ++i)
      for (int64_t j = i + 2; j <= i + 8; ++j) instances.push_back(FamilyId::l2(i, j));
  if (wants(CheckId::Lemma3))
    for (int64_t i = 2; i <= 8; ++i)
      for (int64_t j = i + 3; j <= i + 8; ++j) instances.push_back(FamilyId::l3(i, j));

  SweepReport report;
  report.spec.mode = EnumSpec::Mode::Families;
  report.spec.k = k_max;
  for (int64_t h = 2; h <= h_max; ++h) report.spec.h_values.push_back(h);
  for (CheckId id : selected) report.spec.checks.push_back(to_string(id));

  for (const FamilyId& f : instances) {
    const IntSet s = build(f);
    const StructureClass sc = classify_structure(s);
    const std::vector<int64_t> chain = h_fold_cardinalities(s, h_max);
    const CheckId id = detail::family_check_for(f, sc);
    ++report.total_sets;
    for (int64_t h = 2; h <= h_max; ++h) {
      const int64_t card = chain[static_cast<size_t>(h - 1)];
      ++report.histogram[h][card];
      VerificationRecord rec{s, h, card, sc, structure_formula(sc, h), {}, {}};
      rec.checks[to_string(id)] = detail::evaluate_check(id, s, sc, h, card, chain).outcome;
      if (rec.failed()) report.failures.push_back(rec);
      report.records.push_back(std::move(rec));
    }
  }
  return report;
}

}  // namespace hfold
