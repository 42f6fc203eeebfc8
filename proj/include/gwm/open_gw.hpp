#pragma once

#include <vector>

#include "gwm/equivariant.hpp"
#include "gwm/hyperalg.hpp"
#include "gwm/model.hpp"
#include "gwm/series.hpp"
#include "gwm/weights.hpp"

namespace gwm {

// Real-threefold setting: a Calabi-Yau complete intersection of dimension
// three (n = l + 4) with an anti-holomorphic involution, evaluated at
// torus weights that come in opposite pairs (plus one zero weight when n
// is odd). Only the 2m nonzero weights index fixed points.
class OpenModel {
 public:
  OpenModel(ModelSpec base, WeightSystem weights);

  const ModelSpec& base() const { return base_; }
  const WeightSystem& weights() const { return w_; }
  int pairs() const { return w_.n() / 2; }      // m
  int bar(int i) const;                         // index of the opposite weight
  bool all_odd() const { return base_.all_degrees_odd(); }

 private:
  ModelSpec base_;
  WeightSystem w_;
};

// Which side of a mirror identity to evaluate: the localization graph sum
// or the closed-form right-hand side.
enum class Route { graphsum, mirror };

// Half-edge disk weight at fixed point i and odd half-degree gamma; zero
// whenever some model degree is even. The two forms below are different
// printed expressions of the same quantity.
Rat disk_factor(const OpenModel& om, int i, int gamma);
Rat disk_factor_product_form(const OpenModel& om, int i, int gamma);

// Disk potential as a series in U = Q^{1/2} (grading denominator 2),
// through U^uorder. The graph-sum route sums disk-weighted fixed-point
// families; the mirror route evaluates the double-factorial closed form.
// Both are re-expanded in the mirror variable U.
QSeries disk_potential(const OpenModel& om, int uorder, Route route);

// Annulus invariants A_{2d} for d = 1..dmax (slot 0 unused): graph-sum
// route pairs two disk half-edges against the joint family; mirror route
// differentiates the disk potential.
std::vector<Rat> annulus_invariants(const OpenModel& om, int dmax,
                                    Route route);

// Klein bottle invariants K_{2d} for d = 1..dmax: graph-sum route sums
// the collapsed one-point residues; mirror route takes the logarithmic
// derivative of the closed-form discriminant expression.
std::vector<Rat> klein_invariants(const OpenModel& om, int dmax, Route route);

// The first two layers (B = 0, 1) of the raw Klein graph sum, exact
// through degree 2; higher layers start at degree 3.
std::vector<Rat> klein_raw_low_layers(const OpenModel& om, int dmax);

// Disk-weighted hbar-moments of the fixed-point cascade: the sum
//   sum_{i, gamma odd} hbar^{-b} (D_{i,gamma}/alpha_i^l) u^gamma
//     (member series)(alpha_i, hbar, u^2) at hbar = 2 alpha_i / gamma,
// where the member is the p-th cascade derivative (default) or the p-th
// family member (via_family). Expected to vanish for p < b and to
// collapse to the closed moment below for p = b.
QSeries disk_moment_sum(const OpenModel& om, int b, int p, int uorder,
                        bool via_family = false);
// (2^{1-p} / I_p) sum_{d odd} d^p u^d prod_k (a_k d)!! / (d!!)^n.
QSeries disk_moment_closed(const ModelSpec& m, int p, int uorder);

// Edge coefficient of the pole-transfer relation between fixed points:
// rational in the weights, with the separately printed limit form when n
// is odd, d is even and the points are an opposite pair. Zero in that
// limit unless l = 1.
Rat edge_transfer_coeff(const ModelSpec& m, const WeightSystem& w, int i,
                        int j, int d);

// Checks the pole-transfer relation for the one-point mirror series of t:
// the residue of hbar^{-p} Z(alpha_i, hbar, Q) at hbar = (alpha_j -
// alpha_i)/d equals the edge coefficient times Q^d Z(alpha_j, ., Q).
bool edge_residue_transfers(const TorusFamily& t, int i, int j, int d, int p);

// Checks the two closed forms of the regularized residues
// R{e^{-eta/hbar} Z_p / hbar} and R{e^{-eta/hbar} Z_p / hbar^2} against
// direct extraction, at fixed point i, for one family index p.
bool klein_residue_forms_agree(const OpenModel& om, int i, int p, int qorder);

}  // namespace gwm
