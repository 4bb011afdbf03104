#pragma once

// JSON encoding of verification records and sweep summaries. Reports are
// JSON Lines: one record object per line, sorted by (set size, diameter,
// set, h) so equal sweeps serialize byte-identically.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hfold/errors.hpp"
#include "hfold/int_set.hpp"
#include "hfold/inverse.hpp"
#include "hfold/record.hpp"
#include "hfold/verify.hpp"

namespace hfold {

using json = nlohmann::ordered_json;

inline json json_of(const IntSet& s) { return json(s.values()); }

inline const char* kind_name(StructureClass::Kind kind) {
  switch (kind) {
    case StructureClass::Kind::FullInterval: return "full-interval";
    case StructureClass::Kind::IntervalMinusOne: return "interval-minus-one";
    case StructureClass::Kind::IntervalMinusTwo: return "interval-minus-two";
    case StructureClass::Kind::Other: return "other";
  }
  return "?";
}

inline StructureClass::Kind kind_from_name(const std::string& name) {
  if (name == "full-interval") return StructureClass::Kind::FullInterval;
  if (name == "interval-minus-one") return StructureClass::Kind::IntervalMinusOne;
  if (name == "interval-minus-two") return StructureClass::Kind::IntervalMinusTwo;
  if (name == "other") return StructureClass::Kind::Other;
  throw ParseError("unknown structure kind '" + name + "'");
}

inline json json_of(const StructureClass& c) {
  json out;
  out["kind"] = kind_name(c.kind);
  out["k"] = c.k;
  if (c.kind == StructureClass::Kind::IntervalMinusOne ||
      c.kind == StructureClass::Kind::IntervalMinusTwo)
    out["i"] = c.i;
  if (c.kind == StructureClass::Kind::IntervalMinusTwo) out["j"] = c.j;
  out["diameter"] = c.diameter;
  return out;
}

inline StructureClass structure_from_json(const json& j) {
  StructureClass c{kind_from_name(j.at("kind").get<std::string>()),
                   j.at("k").get<int64_t>(),
                   j.value("i", int64_t{0}),
                   j.value("j", int64_t{0}),
                   j.at("diameter").get<int64_t>()};
  return c;
}

inline CheckOutcome outcome_from_string(const std::string& s) {
  if (s == "pass") return CheckOutcome::Pass;
  if (s == "fail") return CheckOutcome::Fail;
  if (s == "vacuous") return CheckOutcome::Vacuous;
  throw ParseError("unknown check outcome '" + s + "'");
}

inline json json_of(const VerificationRecord& rec) {
  json out;
  out["set"] = json_of(rec.set);
  out["h"] = rec.h;
  out["cardinality"] = rec.cardinality;
  out["structure"] = json_of(rec.structure);
  out["predicted"] = rec.predicted ? json(*rec.predicted) : json(nullptr);
  json checks = json::object();
  for (const auto& [name, outcome] : rec.checks) checks[name] = to_string(outcome);
  out["checks"] = std::move(checks);
  out["caveats"] = rec.caveats;
  return out;
}

inline VerificationRecord record_from_json(const json& j) {
  VerificationRecord rec{IntSet(j.at("set").get<std::vector<int64_t>>()),
                         j.at("h").get<int64_t>(),
                         j.at("cardinality").get<int64_t>(),
                         structure_from_json(j.at("structure")),
                         std::nullopt,
                         {},
                         {}};
  if (!j.at("predicted").is_null()) rec.predicted = j.at("predicted").get<int64_t>();
  for (const auto& [name, outcome] : j.at("checks").items())
    rec.checks[name] = outcome_from_string(outcome.get<std::string>());
  rec.caveats = j.at("caveats").get<std::vector<std::string>>();
  return rec;
}

inline bool record_order(const VerificationRecord& a, const VerificationRecord& b) {
  if (a.set.size() != b.set.size()) return a.set.size() < b.set.size();
  if (a.set.diameter() != b.set.diameter()) return a.set.diameter() < b.set.diameter();
  if (a.set != b.set) return a.set < b.set;
  return a.h < b.h;
}

/// One compact JSON object per record per line.
inline void write_report(std::ostream& out, std::vector<VerificationRecord> records) {
  std::sort(records.begin(), records.end(), record_order);
  for (const VerificationRecord& rec : records) out << json_of(rec) << '\n';
}

inline json json_of(const EnumSpec& spec) {
  json out;
  out["mode"] = spec.mode == EnumSpec::Mode::Sets ? "sets" : "families";
  out["k"] = spec.k;
  if (spec.mode == EnumSpec::Mode::Sets) out["max_diameter"] = spec.max_diameter;
  out["h_values"] = spec.h_values;
  out["checks"] = spec.checks;
  if (spec.mode == EnumSpec::Mode::Sets) out["dedup_reflection"] = spec.dedup_reflection;
  return out;
}

inline json summary_json(const SweepReport& report) {
  json out;
  out["spec"] = json_of(report.spec);
  out["total_sets"] = report.total_sets;
  out["failure_count"] = static_cast<int64_t>(report.failures.size());
  json hist = json::object();
  for (const auto& [h, counts] : report.histogram) {
    json per_h = json::object();
    for (const auto& [card, n] : counts) per_h[std::to_string(card)] = n;
    hist[std::to_string(h)] = std::move(per_h);
  }
  out["histogram"] = std::move(hist);
  json gaps = json::object();
  for (const auto& [h, values] : report.achievable_gaps) gaps[std::to_string(h)] = values;
  out["achievable_gaps"] = std::move(gaps);
  return out;
}

inline void write_summary(std::ostream& out, const SweepReport& report) {
  out << summary_json(report).dump(2) << '\n';
}

inline json json_of(const StructurePattern& p) {
  json out;
  out["kind"] = kind_name(p.kind);
  out["k"] = p.k;
  if (p.kind == StructureClass::Kind::IntervalMinusOne) out["holes"] = p.holes;
  if (p.kind == StructureClass::Kind::IntervalMinusTwo) {
    json pairs = json::array();
    for (const auto& [i, j] : p.hole_pairs) pairs.push_back(json::array({i, j}));
    out["hole_pairs"] = std::move(pairs);
  }
  return out;
}

inline json json_of(const InversePrediction& p) {
  json out;
  out["h"] = p.h;
  out["k"] = p.k;
  out["cardinality"] = p.cardinality;
  out["status"] = to_string(p.status);
  json structures = json::array();
  for (const StructurePattern& pat : p.structures) structures.push_back(json_of(pat));
  out["structures"] = std::move(structures);
  out["caveats"] = p.caveats;
  return out;
}

/// Recomputes a record's engine-derived fields; true when they all match.
/// A doctored cardinality, structure, prediction, or check verdict is
/// caught here.
inline bool replay_record(const VerificationRecord& rec) {
  if (!is_normal_form(rec.set)) return false;
  std::vector<int64_t> h_values = {rec.h};
  const int64_t h_max = std::max<int64_t>(rec.h, 2);
  detail::ShardOutput out;
  std::vector<CheckId> checks;
  for (const auto& entry : rec.checks) checks.push_back(check_id_from_string(entry.first));
  detail::process_set(rec.set, h_values, checks, true, h_max, out);
  if (out.records.size() != 1) return false;
  const VerificationRecord& fresh = out.records.front();
  return fresh.cardinality == rec.cardinality && fresh.structure == rec.structure &&
         fresh.predicted == rec.predicted && fresh.checks == rec.checks;
}

}  // namespace hfold
