#pragma once

#include <vector>

#include "gwm/model.hpp"
#include "gwm/series.hpp"

namespace gwm {

// q-series whose coefficients are Laurent jets in w, exact through w^wcut.
// All operators below track the precision loss explicitly.
struct WJets {
  Series<Laurent> s;
  int wcut = 0;

  WJets(Series<Laurent> s_, int wcut_) : s(std::move(s_)), wcut(wcut_) {}
  int qorder() const { return s.order(); }
  Laurent coeff(int d) const { return s.coeff(d); }
};

Rat factorials_ratio(const ModelSpec& m, int d);         // prod (a_k d)! / (d!)^n
Rat double_factorials_ratio(const ModelSpec& m, int d);  // prod (a_k d)!! / (d!!)^n

// Taylor window [0, wcut] of
//   prod_k prod_{r=1..a_k d} (a_k w + r) / prod_{r=1..d} (w + r)^n,
// optionally with the numerator range shifted to r = 0..a_k d - 1.
Poly hyper_coeff_jet(const ModelSpec& m, int d, int wcut, bool low_range = false);

// The twisted hypergeometric series: q^d coefficient w^{nu d} * (jet above).
WJets hyper_series(const ModelSpec& m, int qorder, int wcut, bool low_range = false);

WJets op_D(const WJets& h);   // {1 + (q/w) d/dq}; costs one order of w-precision
WJets op_Dw(const WJets& h);  // {w + q d/dq}
WJets op_M(const WJets& h);   // D(h / h(w=0)); input coefficients regular at w=0

// Coefficient-wise value at w = 0; all coefficients must be regular there.
QSeries value_at_w0(const WJets& h);

// The normalization series I_0..I_pmax of the mirror construction,
// identically 1 for Fano models.
std::vector<QSeries> ifunctions(const ModelSpec& m, int pmax, int qorder);
QSeries ifunction(const ModelSpec& m, int p, int qorder);

QSeries J_series(const ModelSpec& m, int qorder);
QSeries C1_series(const ModelSpec& m, int qorder);
QSeries mirror_map(const ModelSpec& m, int qorder);      // Q(q) = q e^{J(q)}
QSeries mirror_inverse(const ModelSpec& m, int qorder);  // q(Q)

}  // namespace gwm
