#pragma once

#include <string>
#include <vector>

#include "gwm/model.hpp"

namespace gwm {

// One emitted data row: an invariant or series coefficient. Values are
// exact rational strings, never floats.
struct Record {
  std::string kind;        // "gw" | "bps" | "descendant" | "disk" | ...
  int degree = 0;
  std::string insertions;  // command-specific encoding, may be empty
  std::string value;
};

// One verification outcome.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on success, diagnostic on failure
};

// Renders the document {"model": ..., "records": [...], "checks": [...]}.
// Key order is fixed, so equal inputs give byte-identical output.
std::string render_json(const ModelSpec& m, const std::vector<Record>& records,
                        const std::vector<CheckResult>& checks);

// Same records as a flat CSV table; checks become rows of kind "check"
// with the name in the insertions column and "pass"/"fail: ..." as value.
std::string render_csv(const ModelSpec& m, const std::vector<Record>& records,
                       const std::vector<CheckResult>& checks);

}  // namespace gwm
