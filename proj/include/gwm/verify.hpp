#pragma once

#include <string>
#include <vector>

#include "gwm/model.hpp"
#include "gwm/report.hpp"
#include "gwm/weights.hpp"

namespace gwm {

// Parameters shared by the verification suites. Weight mode is one of
// "default" (fixed built-in system), "random" (seeded draw), or
// "explicit" (weight_values taken verbatim).
struct VerifyOptions {
  ModelSpec model{5, {5}};
  std::string weight_mode = "default";
  std::vector<Rat> weight_values;
  unsigned seed = 1;
  int dmax = 4;
  int qorder = 2;
};

// Resolves the weight system the options describe; conjugate asks for the
// opposite-pair layout the open sector needs.
WeightSystem resolve_weights(const VerifyOptions& opts, bool conjugate);

std::vector<CheckResult> verify_coeffs(const VerifyOptions& opts);
std::vector<CheckResult> verify_hypergeom(const VerifyOptions& opts);
std::vector<CheckResult> verify_equivariant(const VerifyOptions& opts);
std::vector<CheckResult> verify_open(const VerifyOptions& opts);

// Runs the named suites ("all" or empty expands to every suite) in a
// fixed order; unknown names produce a failing result rather than a throw.
std::vector<CheckResult> run_suites(const std::vector<std::string>& names,
                                    const VerifyOptions& opts);

}  // namespace gwm
