#pragma once

#include <string>
#include <vector>

#include "gwm/arith.hpp"

namespace gwm {

// Complete intersection of multidegree `degrees` in the projective space
// with `n` homogeneous coordinates (dimension n-1).
struct ModelSpec {
  int n = 0;
  std::vector<int> degrees;

  ModelSpec() = default;
  ModelSpec(int n_, std::vector<int> degrees_);

  int l() const { return static_cast<int>(degrees.size()); }
  int degree_sum() const;            // |a|
  int nu() const;                    // n - |a|; 0 Calabi-Yau, > 0 Fano
  int dim() const { return n - 1 - l(); }
  bool calabi_yau() const { return nu() == 0; }
  bool fano() const { return nu() > 0; }
  // The open sector is defined for Calabi-Yau threefolds only.
  bool open_sector_ok() const { return calabi_yau() && n == l() + 4; }
  bool all_degrees_odd() const;

  Int degree_product() const;        // <a> = prod a_k
  Int degree_factorial() const;      // prod a_k!
  Int degree_self_power() const;     // a^a = prod a_k^{a_k}

  // Same model with one more linear equation; invariants must not change.
  ModelSpec with_appended_linear() const;

  std::string label() const;  // e.g. "X(3,3) in P5"
};

// Parses "3,3" or "7" into a degree tuple.
std::vector<int> parse_degrees(const std::string& s);

}  // namespace gwm
