#pragma once

// Per-set verification record shared by the consistency checker, the sweep
// runner, and the report writer.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hfold/int_set.hpp"

namespace hfold {

enum class CheckOutcome { Pass, Fail, Vacuous };

inline const char* to_string(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::Pass: return "pass";
    case CheckOutcome::Fail: return "fail";
    case CheckOutcome::Vacuous: return "vacuous";
  }
  return "?";
}

struct VerificationRecord {
  IntSet set;  // normal form
  int64_t h;
  int64_t cardinality;  // |h * set|, engine-computed
  StructureClass structure;
  std::optional<int64_t> predicted;  // formula value for this structure, if one applies
  std::map<std::string, CheckOutcome> checks;
  std::vector<std::string> caveats;

  bool failed() const {
    for (const auto& entry : checks)
      if (entry.second == CheckOutcome::Fail) return true;
    return false;
  }
};

}  // namespace hfold
