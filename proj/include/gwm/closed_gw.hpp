#pragma once

#include <vector>

#include "gwm/coeffs.hpp"
#include "gwm/hypergeom.hpp"
#include "gwm/model.hpp"
#include "gwm/series.hpp"

namespace gwm {

// ---------------------------------------------------------------------------
// Primary two-point invariants, fast route (Calabi-Yau models only).
//
// For insertion exponents b1 + b2 = dim - 1 the generating function of the
// degree-weighted invariants collapses to a ratio of normalization series
// pulled back through the inverse mirror map:
//
//   k + sum_{d>=1} d <H^{b1}, H^{b2}>_d Q^d  =  k I_{b1+1}(q(Q)) / I_1(q(Q)),
//
// where k is the product of the defining degrees.
// ---------------------------------------------------------------------------

QSeries pair_weighted_series(const ModelSpec& m, int b1, int b2, int qorder);

// <H^{b1}, H^{b2}>_d for d = 0..dmax; entry [0] is 0 by convention.
std::vector<Rat> pair_invariants(const ModelSpec& m, int b1, int b2, int dmax);

// Multiple-cover inversion: given gw[d] = sum_{k | d} n[d/k] / k, recover n.
// Entry [0] is ignored and returned as 0.
std::vector<Rat> bps_from_invariants(const std::vector<Rat>& gw);

// Same pipeline end to end, asserting that every BPS number is an integer.
std::vector<Int> bps_pair(const ModelSpec& m, int b1, int b2, int dmax);

// One-point analogue: <H^{dim-2}>_d for d = 1..dmax, from
//   k + sum_{d>=1} d^2 <H^{dim-2}>_d Q^d = k I_2(q(Q)) / I_1(q(Q)).
std::vector<Rat> one_point_invariants(const ModelSpec& m, int dmax);

// ---------------------------------------------------------------------------
// Descendant engine.
//
// Assembles the two-point generating class of the model as a sum over
// splittings p1 + p2 = dim of tensor products of one-leg classes Z_p, divides
// by (hbar1 + hbar2), and reads off coefficients.  The one-leg class is
//
//   Z_p = H^{l+p} * e^{-J(q) H/hbar} F_p(H/hbar, q) / I_p(q)   (index 0)
//   Z_p = H^{l+p} * e^{-E q H/hbar} F_p(H/hbar, q)             (index 1)
//   Z_p = H^{l+p} * F_p(H/hbar, q)                             (index >= 2)
//
// with Q = q e^{J(q)} resp. Q = H^{index} q, truncated in the cohomology of
// the ambient projective space.  E is a!, the product of factorials of the
// defining degrees; the self-power alternative a^a can be selected to probe
// the difference (it breaks the pole-cancellation identity, see the tests).
// ---------------------------------------------------------------------------

enum class IndexOneConstant { degree_factorial, degree_self_power };

class ClosedEngine {
 public:
  ClosedEngine(const ModelSpec& m, int dmax,
               IndexOneConstant ic = IndexOneConstant::degree_factorial);

  const ModelSpec& model() const { return m_; }
  int degree_cap() const { return dmax_; }

  // <tau_{p1} H^{b1}, tau_{p2} H^{b2}>_d, the two-point descendant invariant
  // of degree d with psi-powers p1, p2 and hyperplane powers b1, b2.
  Rat descendant(int d, int p1, int b1, int p2, int b2) const;

  // Primary invariant <H^{b1}, H^{b2}>_d.
  Rat primary(int d, int b1, int b2) const {
    return descendant(d, 0, b1, 0, b2);
  }

  // The assembled sum over leg splittings, evaluated at hbar2 = -hbar1, must
  // vanish identically: this is exactly the condition that the prefactor
  // 1/(hbar1 + hbar2) does not introduce a pole.
  bool antidiagonal_vanishes() const;

  // Laurent coefficient hbar^e of the H^i, Q^D part of the leg Z_p.
  const Laurent& leg(int p, int D, int i) const;

 private:
  void build_leg_cy(int p);
  void build_leg_fano(const CoeffTables& ct, int p);
  Laurent& slot(int p, int D, int i) { return legs_[p][D][i]; }

  ModelSpec m_;
  int dmax_;
  IndexOneConstant ic_;
  // legs_[p][D][i]: Laurent polynomial in hbar^{-1} (exponents <= 0).
  std::vector<std::vector<std::vector<Laurent>>> legs_;
};

}  // namespace gwm
