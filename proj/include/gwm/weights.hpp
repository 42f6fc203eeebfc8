#pragma once

#include <vector>

#include "gwm/arith.hpp"

namespace gwm {

// Numeric torus weight vector (alpha_1, ..., alpha_n).
//
// Fixed-point evaluations divide by weight differences and therefore need
// pairwise distinct entries; the all-zero system is still allowed for the
// symbolic-x expansions, which never form such quotients.
class WeightSystem {
 public:
  explicit WeightSystem(std::vector<Rat> alpha);

  int n() const { return static_cast<int>(a_.size()); }
  const Rat& alpha(int i) const;  // 0-based
  const std::vector<Rat>& values() const { return a_; }
  bool distinct() const { return distinct_; }

  // Elementary symmetric polynomial of the weights, r = 0..n.
  const Rat& sigma(int r) const;
  // prod_{k != i} (alpha_i - alpha_k); requires distinct weights.
  const Rat& point_factor(int i) const;

  // t * (1, -2, 3, -5, 8, -13, ...): alternating signs, Fibonacci sizes.
  static WeightSystem reference(int n, const Rat& t = Rat(1));
  // The non-equivariant limit: every weight zero.
  static WeightSystem zero(int n);
  // (u_1, -u_1, ..., u_m, -u_m), plus a trailing 0 when n is odd: the shape
  // forced by compatibility with conjugation of coordinate pairs.
  // Defaults to u_i = 1/i. Requires distinct nonzero |u_i|.
  static WeightSystem conjugate_pairs(int n, std::vector<Rat> u = {});
  // Distinct random weights, numerators and denominators bounded by 97.
  static WeightSystem random(int n, unsigned seed);
  // Conjugate-pair system with random u_i under the same bound.
  static WeightSystem random_conjugate_pairs(int n, unsigned seed);

 private:
  std::vector<Rat> a_;
  std::vector<Rat> sig_;
  std::vector<Rat> phi_;  // empty unless distinct
  bool distinct_ = false;
};

}  // namespace gwm
