#pragma once

#include "gwm/arith.hpp"
#include "gwm/model.hpp"
#include "gwm/series.hpp"
#include "gwm/weights.hpp"

namespace gwm {

using HSeries = Series<RatFunc>;

// Algebraic change-of-variable data for Calabi-Yau models: the q-deformed
// root of the weight characteristic polynomial and the normalizing series
// built from it, expanded at a concrete rational base point x. All entry
// points require P'(x) != 0, where P is the characteristic polynomial.

// P(z) = prod_k (z - alpha_k).
Poly weight_char_poly(const WeightSystem& w);

// The unique series root of P(L) - q a^a L^n = P(x) with L(x, 0) = x,
// where a^a is the product of the model degrees each raised to itself.
QSeries L_series(const ModelSpec& m, const WeightSystem& w, const Rat& x,
                 int qorder);

// Antiderivative: (q d/dq) xi = L - x, xi(x, 0) = 0.
QSeries xi_series(const ModelSpec& m, const WeightSystem& w, const Rat& x,
                  int qorder);

// xi - J(q) x; odd in x when the weights come in opposite pairs.
QSeries eta_series(const ModelSpec& m, const WeightSystem& w, const Rat& x,
                   int qorder);

// Psi = L P'(L) - n (P(L) - P(x)), and its scaled L-derivative
// L dPsi/dL = L^2 P''(L) - (n - 1) L P'(L).
QSeries psi_series(const ModelSpec& m, const WeightSystem& w, const Rat& x,
                   int qorder);
QSeries psi_dot_series(const ModelSpec& m, const WeightSystem& w, const Rat& x,
                       int qorder);

// (x P'(x) / Psi)^{1/2} (L / x)^{(l+1)/2}; requires x != 0.
QSeries phi0_series(const ModelSpec& m, const WeightSystem& w, const Rat& x,
                    int qorder);

// Coefficient of hbar^1 in exp(-xi/hbar) times the centered vertex series.
QSeries phi1_series(const ModelSpec& m, const WeightSystem& w, const Rat& x,
                    int qorder);

// The full bundle, sharing one root computation.
struct MirrorProfile {
  QSeries L, xi, eta, phi0, phi1, psi, psi_dot;
};
MirrorProfile mirror_profile(const ModelSpec& m, const WeightSystem& w,
                             const Rat& x, int qorder);

// Vertex series with denominators centered at the base point: the
// coefficient of q^d is
//   prod_k prod_r (a_k x + r hbar) / prod_{r=1}^d (P(x + r hbar) - P(x)),
// the numerator range being r = 1..a_k d (default) or r = 0..a_k d - 1
// (low_range). At x = alpha_i this coincides with the plain fixed-point
// vertex series; away from the fixed points it is the extension with a
// tame hbar -> 0 limit.
HSeries centered_vertex(const ModelSpec& m, const WeightSystem& w,
                        const Rat& x, int qorder, bool low_range = false);

// hbar-structure of the centered vertex: per q-degree the log has a pole
// at hbar = 0 of order at most max_log_pole (expected <= 1); xi collects
// the simple-pole coefficients and phi0/phi1 the first two regular
// coefficients of exp(-xi/hbar) * vertex.
struct VertexExpansion {
  HSeries vertex;
  QSeries xi, phi0, phi1;
  int max_log_pole = 0;
};
VertexExpansion centered_vertex_expansion(const ModelSpec& m,
                                          const WeightSystem& w, const Rat& x,
                                          int qorder, bool low_range = false);

}  // namespace gwm
