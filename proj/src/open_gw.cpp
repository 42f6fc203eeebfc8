#include "gwm/open_gw.hpp"

#include <algorithm>
#include <utility>

#include "gwm/hypergeom.hpp"

namespace gwm {

namespace {

// Zero-extend a series to a larger order; truncated() only shrinks.
QSeries padded(const QSeries& f, int order) {
  if (order <= f.order()) return f.truncated(order);
  QSeries out(order, f.grading_den());
  for (int k = 0; k <= f.order(); ++k) out.set_coeff(k, f.coeff(k));
  return out;
}

// Reinterpret a plain q-series as a series in u with q = u^2.
QSeries on_square(const QSeries& f, int uorder) {
  QSeries out(uorder, 2);
  for (int d = 0; 2 * d <= uorder && d <= f.order(); ++d)
    out.set_coeff(2 * d, f.coeff(d));
  return out;
}

// u as a series in U, inverting U = u e^{J(u^2)/2}, the square-root lift
// of the mirror map.
QSeries u_of_U(const ModelSpec& m, int uorder) {
  QSeries J = J_series(m, uorder / 2);
  QSeries E = (on_square(J, uorder) * Rat(1, 2)).exponential();
  return reverted(E.shifted(1));
}

// e^{sign * c(q) / hbar} for a series c with zero constant term, as a
// q-series of Laurent polynomials in hbar with exponents in [-d, 0].
Series<Laurent> exp_over_hbar(const QSeries& c, int sign) {
  if (c.coeff(0) != 0)
    throw DomainError("exp_over_hbar: nonzero constant term");
  Series<Laurent> arg(c.order());
  for (int d = 1; d <= c.order(); ++d)
    arg.set_coeff(d, Laurent::monomial(Rat(sign) * c.coeff(d), -1));
  return arg.exponential();
}

// Coefficient of hbar^w in the product E(hbar, q) Z(hbar, q), degree by
// degree in q. The Laurent window of Z at q-degree d is bounded below at
// hbar^{-d}; a deeper pole is an error in the caller's setup and
// surfaces as a window exception.
QSeries hbar_coeff_series(const Series<Laurent>& E, const HSeries& Z, int w) {
  const int ord = std::min(E.order(), Z.order());
  QSeries out(ord);
  for (int d = 0; d <= ord; ++d) {
    Rat acc(0);
    for (int d1 = 0; d1 <= d; ++d1) {
      const Laurent& e = E.coeff(d1);
      if (e.is_zero()) continue;
      const int d2 = d - d1;
      const RatFunc& z = Z.coeff(d2);
      if (z.is_zero()) continue;
      const int kmax = std::min(e.max_exp(), w + d2);
      if (e.min_exp() > kmax) continue;
      std::vector<Rat> win = z.laurent_at_zero(-d2, w - e.min_exp());
      for (int k = e.min_exp(); k <= kmax; ++k)
        acc += e.coeff(k) * win[static_cast<size_t>(w - k + d2)];
    }
    out.set_coeff(d, acc);
  }
  return out;
}

// Window of the joint family around hbar = 0, with the pole bound per
// degree checked explicitly.
std::vector<PairSeries::Block> joint_blocks(const PairSeries& J, int qord,
                                            int hi_extra) {
  std::vector<PairSeries::Block> blk;
  const int top = std::min(qord, J.qorder());
  for (int dc = 0; dc <= top; ++dc) {
    PairSeries::Block b =
        J.laurent_block(dc, qord - dc + hi_extra, qord - dc + hi_extra);
    for (size_t r1 = 0; r1 < b.c.size(); ++r1)
      for (size_t r2 = 0; r2 < b.c[r1].size(); ++r2)
        if ((b.lo1 + static_cast<int>(r1) < -dc ||
             b.lo2 + static_cast<int>(r2) < -dc) &&
            b.c[r1][r2] != 0)
          throw CalcError("joint family pole exceeds its degree bound");
    blk.push_back(std::move(b));
  }
  return blk;
}

Rat block_entry(const PairSeries::Block& b, int e1, int e2) {
  const int r1 = e1 - b.lo1;
  const int r2 = e2 - b.lo2;
  if (r1 < 0 || r2 < 0 || r1 >= static_cast<int>(b.c.size()) ||
      (!b.c.empty() && r2 >= static_cast<int>(b.c[0].size())))
    return Rat(0);
  return b.c[static_cast<size_t>(r1)][static_cast<size_t>(r2)];
}

// Coefficient of hbar1^0 hbar2^0 in E1(hbar1) E2(hbar2) J(hbar1, hbar2),
// degree by degree in q.
QSeries joint_residue_series(const Series<Laurent>& E1,
                             const Series<Laurent>& E2, const PairSeries& J,
                             int qord) {
  std::vector<PairSeries::Block> blk = joint_blocks(J, qord, 0);
  QSeries out(qord);
  for (int d = 0; d <= qord; ++d) {
    Rat acc(0);
    for (int da = 0; da <= d; ++da) {
      const Laurent& e1 = E1.coeff(da);
      if (e1.is_zero()) continue;
      for (int db = 0; da + db <= d; ++db) {
        const Laurent& e2 = E2.coeff(db);
        if (e2.is_zero()) continue;
        const int dc = d - da - db;
        if (dc >= static_cast<int>(blk.size())) continue;
        const PairSeries::Block& b = blk[static_cast<size_t>(dc)];
        for (int k1 = e1.min_exp(); k1 <= std::min(0, e1.max_exp()); ++k1)
          for (int k2 = e2.min_exp(); k2 <= std::min(0, e2.max_exp()); ++k2)
            acc += e1.coeff(k1) * e2.coeff(k2) * block_entry(b, -k1, -k2);
      }
    }
    out.set_coeff(d, acc);
  }
  return out;
}

Rat sign_pow(int e) { return (e % 2 == 0) ? Rat(1) : Rat(-1); }

}  // namespace

OpenModel::OpenModel(ModelSpec base, WeightSystem weights)
    : base_(std::move(base)), w_(std::move(weights)) {
  if (!base_.open_sector_ok())
    throw DomainError("OpenModel: not a Calabi-Yau threefold");
  if (w_.n() != base_.n)
    throw DomainError("OpenModel: weight count does not match the model");
  if (!w_.distinct()) throw DomainError("OpenModel: weights must be distinct");
  const int m2 = 2 * (w_.n() / 2);
  for (int k = 0; k + 1 < m2; k += 2) {
    if (w_.alpha(k) == 0 || w_.alpha(k + 1) != -w_.alpha(k))
      throw DomainError("OpenModel: weights must come in opposite pairs");
  }
  if (w_.n() % 2 == 1 && w_.alpha(w_.n() - 1) != 0)
    throw DomainError("OpenModel: odd weight count needs a trailing zero");
}

int OpenModel::bar(int i) const {
  if (i < 0 || i >= 2 * pairs())
    throw DomainError("OpenModel::bar: index out of range");
  return i ^ 1;
}

Rat disk_factor(const OpenModel& om, int i, int gamma) {
  const ModelSpec& m = om.base();
  const WeightSystem& w = om.weights();
  if (gamma < 1 || gamma % 2 == 0)
    throw DomainError("disk_factor: the half-degree must be odd");
  if (i < 0 || i >= 2 * om.pairs())
    throw DomainError("disk_factor: fixed point out of range");
  if (!om.all_odd()) return Rat(0);
  const Rat ai = w.alpha(i);
  Rat num(2);
  for (int k = 0; k < m.l(); ++k)
    num *= double_factorial(static_cast<long>(m.degrees[static_cast<size_t>(k)]) * gamma);
  Rat den(gamma);
  for (int k = 0; k < m.n; ++k)
    for (int s = 1; s <= gamma; s += 2) {
      if (k == i && s == gamma) continue;
      den *= Rat(s, gamma) * ai - w.alpha(k);
    }
  const int e = (m.n * gamma + m.l() + 2) / 2;
  return num / den * rat_pow(ai / gamma, e);
}

Rat disk_factor_product_form(const OpenModel& om, int i, int gamma) {
  const ModelSpec& m = om.base();
  const WeightSystem& w = om.weights();
  if (gamma < 1 || gamma % 2 == 0)
    throw DomainError("disk_factor: the half-degree must be odd");
  if (i < 0 || i >= 2 * om.pairs())
    throw DomainError("disk_factor: fixed point out of range");
  if (!om.all_odd()) return Rat(0);
  const Rat ai = w.alpha(i);
  Rat num = sign_pow((gamma - 1) / 2);
  for (int k = 0; k < m.l(); ++k)
    num *= double_factorial(static_cast<long>(m.degrees[static_cast<size_t>(k)]) * gamma);
  num *= rat_pow(ai, ((m.n - 2) * gamma + m.l() + 2) / 2);
  Rat den = rat_pow(Rat(2), gamma - 1) *
            rat_pow(Rat(gamma), ((m.n - 2) * gamma + m.l() + 4) / 2);
  den *= factorial(static_cast<unsigned long>(gamma));
  for (int k = 0; k < m.n; ++k) {
    if (k == i || (k < 2 * om.pairs() && k == om.bar(i))) continue;
    for (int s = 0; 2 * s <= gamma - 1; ++s)
      den *= Rat(gamma - 2 * s, gamma) * ai - w.alpha(k);
  }
  return num / den;
}

QSeries disk_potential(const OpenModel& om, int uorder, Route route) {
  const ModelSpec& m = om.base();
  const WeightSystem& w = om.weights();
  QSeries out(uorder, 2);
  if (!om.all_odd()) return out;
  const int qord = uorder / 2;
  if (route == Route::graphsum) {
    TorusFamily t(m, w, qord);
    for (int i = 0; i < 2 * om.pairs(); ++i) {
      HSeries Z0 = t.family_mirror(i, 0);
      for (int gamma = 1; gamma <= uorder; gamma += 2) {
        const Rat pref = disk_factor(om, i, gamma) / rat_pow(w.alpha(i), m.l());
        const Rat h = Rat(2) * w.alpha(i) / gamma;
        for (int d = 0; gamma + 2 * d <= uorder && d <= Z0.order(); ++d) {
          const int k = gamma + 2 * d;
          out.set_coeff(k, out.coeff(k) + pref * Z0.coeff(d).eval(h));
        }
      }
    }
    return out;
  }
  // Closed form in u, then re-expanded in the mirror variable U.
  QSeries S(uorder, 2);
  for (int d = 1; d <= uorder; d += 2)
    S.set_coeff(d, Rat(2) * double_factorials_ratio(m, d));
  QSeries zu = S * on_square(ifunction(m, 0, qord), uorder).inverted();
  return zu.composed(u_of_U(m, uorder));
}

std::vector<Rat> annulus_invariants(const OpenModel& om, int dmax,
                                    Route route) {
  const ModelSpec& m = om.base();
  const WeightSystem& w = om.weights();
  std::vector<Rat> A(static_cast<size_t>(dmax) + 1, Rat(0));
  if (!om.all_odd()) return A;
  const Rat pa = Rat(m.degree_product());
  if (route == Route::graphsum) {
    // The family needs at least one q-order for its mirror variable change.
    TorusFamily t(m, w, dmax > 1 ? dmax - 1 : 1);
    QSeries total(dmax);
    for (int i = 0; i < 2 * om.pairs(); ++i)
      for (int j = 0; j < 2 * om.pairs(); ++j) {
        PairSeries J = build_Z_joint(t, i, j);
        for (int gamma = 1; gamma <= 2 * dmax - 1; gamma += 2)
          for (int delta = 1; gamma + delta <= 2 * dmax; delta += 2) {
            const int g = (gamma + delta) / 2;
            const Rat Di = disk_factor(om, i, gamma);
            const Rat Dj = disk_factor(om, j, delta);
            if (Di == 0 || Dj == 0) continue;
            const Rat h1 = Rat(2) * w.alpha(i) / gamma;
            const Rat h2 = Rat(2) * w.alpha(j) / delta;
            const Rat wt = Rat(-1, 2) / (pa * pa) * Di * Dj /
                           (rat_pow(w.alpha(i), m.l()) *
                            rat_pow(w.alpha(j), m.l()) * h1 * h2);
            for (int e = 0; e <= J.qorder() && g + e <= dmax; ++e)
              total.set_coeff(g + e,
                              total.coeff(g + e) + wt * J.eval(e, h1, h2));
          }
      }
    for (int d = 1; d <= dmax; ++d) A[static_cast<size_t>(d)] = total.coeff(d);
    return A;
  }
  // Mirror side: differentiate the disk potential twice and scale by the
  // normalizer ratio re-expanded in the mirror variable.
  const int uorder = 2 * dmax;
  QSeries zd = disk_potential(om, uorder, Route::mirror);
  QSeries ldd = zd.logderiv().logderiv();
  QSeries ratio =
      ifunction(m, 1, dmax) * ifunction(m, 2, dmax).inverted();
  QSeries rhs = (ldd * ldd) * on_square(ratio.composed(mirror_inverse(m, dmax)), uorder);
  for (int d = 1; d <= dmax; ++d)
    A[static_cast<size_t>(d)] = rhs.coeff(2 * d) * Rat(-1, 2) / (pa * Rat(d));
  return A;
}

std::vector<Rat> klein_invariants(const OpenModel& om, int dmax, Route route) {
  const ModelSpec& m = om.base();
  const WeightSystem& w = om.weights();
  std::vector<Rat> K(static_cast<size_t>(dmax) + 1, Rat(0));
  const int qord = dmax;
  if (route == Route::mirror) {
    QSeries disc(qord);
    disc.set_coeff(0, Rat(1));
    if (qord >= 1) disc.set_coeff(1, -Rat(m.degree_self_power()));
    QSeries F = disc.logarithm() * Rat(1, 4) +
                ifunction(m, 1, qord).logarithm();
    QSeries G = F.composed(mirror_inverse(m, qord));
    QSeries Kser = -G.logderiv();
    for (int d = 1; d <= dmax; ++d) K[static_cast<size_t>(d)] = Kser.coeff(d);
    return K;
  }
  TorusFamily t(m, w, qord);
  QSeries I0 = ifunction(m, 0, qord);
  QSeries total(qord);
  for (int i = 0; i < 2 * om.pairs(); ++i) {
    MirrorProfile prof = mirror_profile(m, w, w.alpha(i), qord);
    Series<Laurent> E1 = exp_over_hbar(prof.eta, -1);
    Series<Laurent> E2 = exp_over_hbar(prof.eta, +1);  // eta is odd in x
    QSeries R1 = hbar_coeff_series(E1, t.family_mirror_q(i, 1), 0);
    PairSeries J = build_Z_joint(t, i, om.bar(i), false);
    QSeries R2 = joint_residue_series(E1, E2, J, qord);
    const Rat pref =
        Rat(1) / (rat_pow(w.alpha(i), 2 * m.l()) * w.point_factor(i));
    total = total + (I0 * prof.phi0.inverted() * R1 * R2) * pref;
  }
  total = total * (sign_pow(m.l() + 1) / Rat(m.degree_product()));
  QSeries Kser = total.composed(mirror_inverse(m, qord));
  for (int d = 1; d <= dmax; ++d) K[static_cast<size_t>(d)] = Kser.coeff(d);
  return K;
}

std::vector<Rat> klein_raw_low_layers(const OpenModel& om, int dmax) {
  const ModelSpec& m = om.base();
  const WeightSystem& w = om.weights();
  TorusFamily t(m, w, dmax);
  std::vector<Rat> K(static_cast<size_t>(dmax) + 1, Rat(0));
  for (int i = 0; i < 2 * om.pairs(); ++i) {
    PairSeries J = build_Z_joint(t, i, om.bar(i));
    std::vector<PairSeries::Block> blk = joint_blocks(J, dmax, 1);
    HSeries Z1 = t.family_mirror(i, 1);
    HSeries Zs = t.mirror_series(i);  // tail factors use Zs - 1
    const Rat pref =
        Rat(1) / (rat_pow(w.alpha(i), 2 * m.l()) * w.point_factor(i));
    for (int d = 1; d <= dmax; ++d) {
      Rat acc(0);
      // One double-residue factor and one one-point factor.
      for (int dc = 0; dc <= d && dc < static_cast<int>(blk.size()); ++dc) {
        const PairSeries::Block& b = blk[static_cast<size_t>(dc)];
        const int d3 = d - dc;
        acc += block_entry(b, 0, 0) * Z1.coeff(d3).laurent_coeff_at_zero(0);
        // One extra descendant power distributed across the factors,
        // with one tail factor of positive degree.
        for (int d4 = 1; dc + d4 <= d; ++d4) {
          const int d3b = d - dc - d4;
          const Rat tail_low = Zs.coeff(d4).laurent_coeff_at_zero(-1);
          const Rat tail_reg = Zs.coeff(d4).laurent_coeff_at_zero(0);
          const Rat z1_0 = Z1.coeff(d3b).laurent_coeff_at_zero(0);
          const Rat z1_1 = Z1.coeff(d3b).laurent_coeff_at_zero(1);
          acc += -block_entry(b, 1, 0) * z1_0 * tail_low;
          acc += block_entry(b, 0, 1) * z1_0 * tail_low;
          acc += -block_entry(b, 0, 0) * z1_1 * tail_low;
          acc += -block_entry(b, 0, 0) * z1_0 * tail_reg;
        }
      }
      K[static_cast<size_t>(d)] += pref * acc;
    }
  }
  const Rat scale = sign_pow(m.l() + 1) / Rat(m.degree_product());
  for (int d = 1; d <= dmax; ++d) K[static_cast<size_t>(d)] *= scale;
  return K;
}

QSeries disk_moment_sum(const OpenModel& om, int b, int p, int uorder,
                        bool via_family) {
  const ModelSpec& m = om.base();
  const WeightSystem& w = om.weights();
  QSeries out(uorder, 2);
  const int qord = uorder / 2;
  TorusFamily t(m, w, qord);
  for (int i = 0; i < 2 * om.pairs(); ++i) {
    HSeries F = (p >= 0 && !via_family) ? t.cascade_eval(i, p)
                                        : t.family(i, p);
    for (int gamma = 1; gamma <= uorder; gamma += 2) {
      const Rat D = disk_factor(om, i, gamma);
      if (D == 0) continue;
      const Rat h = Rat(2) * w.alpha(i) / gamma;
      const Rat pref = rat_pow(h, -b) * D / rat_pow(w.alpha(i), m.l());
      for (int d = 0; gamma + 2 * d <= uorder && d <= F.order(); ++d) {
        const int k = gamma + 2 * d;
        out.set_coeff(k, out.coeff(k) + pref * F.coeff(d).eval(h));
      }
    }
  }
  return out;
}

QSeries disk_moment_closed(const ModelSpec& m, int p, int uorder) {
  QSeries S(uorder, 2);
  for (int d = 1; d <= uorder; d += 2)
    S.set_coeff(d, rat_pow(Rat(d), p) * double_factorials_ratio(m, d));
  QSeries out = S * rat_pow(Rat(2), 1 - p);
  if (p >= 0)
    out = out * on_square(ifunction(m, p, uorder / 2), uorder).inverted();
  return out;
}

Rat edge_transfer_coeff(const ModelSpec& m, const WeightSystem& w, int i,
                        int j, int d) {
  if (i == j || i < 0 || j < 0 || i >= m.n || j >= m.n || d < 1)
    throw DomainError("edge_transfer_coeff: bad arguments");
  const Rat ai = w.alpha(i);
  const Rat aj = w.alpha(j);
  const bool opposite_pair_limit =
      (m.n % 2 == 1) && (d % 2 == 0) && ai != 0 && aj == -ai;
  if (!opposite_pair_limit) {
    const Rat step = (aj - ai) / d;
    Rat num(1);
    for (int k = 0; k < m.l(); ++k) {
      const int ak = m.degrees[static_cast<size_t>(k)];
      for (int r = 1; r <= ak * d; ++r) num *= ak * ai + r * step;
    }
    Rat den(d);
    for (int r = 1; r <= d; ++r)
      for (int k = 0; k < m.n; ++k) {
        if (r == d && k == j) continue;
        den *= ai - w.alpha(k) + r * step;
      }
    if (den == 0)
      throw DomainError("edge_transfer_coeff: coincident weights on the edge");
    return num / den;
  }
  // Opposite-pair points with even covering degree (odd weight count):
  // the finite limit of the generic expression, nonzero only for a
  // single transverse hypersurface.
  if (m.l() != 1) return Rat(0);
  const int h = d / 2;
  Rat num(m.n);
  for (int r = 1; r <= m.n * h - 1; ++r) num *= Rat(r) * ai / h;
  for (int r = 1; r <= m.n * h; ++r) num *= Rat(r) * aj / h;
  Rat den(d);
  for (int r = 1; r <= h - 1; ++r)
    for (int k = 0; k < m.n; ++k) den *= Rat(2 * r, d) * ai - w.alpha(k);
  for (int k = 0; k < m.n; ++k)
    if (w.alpha(k) != 0) den *= -w.alpha(k);
  for (int r = 1; r <= h; ++r)
    for (int k = 0; k < m.n; ++k) {
      if (r == h && k == j) continue;
      den *= Rat(2 * r, d) * aj - w.alpha(k);
    }
  if (den == 0)
    throw DomainError("edge_transfer_coeff: coincident weights on the edge");
  return num / den;
}

bool edge_residue_transfers(const TorusFamily& t, int i, int j, int d,
                            int p) {
  const ModelSpec& m = t.model();
  const WeightSystem& w = t.weights();
  const Rat c = (w.alpha(j) - w.alpha(i)) / d;
  const Rat ct = edge_transfer_coeff(m, w, i, j, d);
  const HSeries Zi = t.mirror_series(i);
  const HSeries Zj = t.mirror_series(j);
  const RatFunc hpow = (p >= 0)
                           ? RatFunc(Poly(Rat(1)), Poly::X().pow(static_cast<unsigned>(p)))
                           : RatFunc(Poly::X().pow(static_cast<unsigned>(-p)));
  for (int e = 0; e <= t.qorder(); ++e) {
    const Rat lhs = (Zi.coeff(e) * hpow).residue_at(c);
    const Rat rhs = (e >= d)
                        ? Rat(rat_pow(c, -p) * ct * Zj.coeff(e - d).eval(c))
                        : Rat(0);
    if (lhs != rhs) return false;
  }
  return true;
}

bool klein_residue_forms_agree(const OpenModel& om, int i, int p, int qorder) {
  const ModelSpec& m = om.base();
  const WeightSystem& w = om.weights();
  const Rat x = w.alpha(i);
  TorusFamily t(m, w, qorder);
  MirrorProfile prof = mirror_profile(m, w, x, qorder);
  Series<Laurent> E = exp_over_hbar(prof.eta, -1);
  HSeries Zp = t.family_mirror_q(i, p);
  QSeries G1 = hbar_coeff_series(E, Zp, 0);
  QSeries G2 = hbar_coeff_series(E, Zp, 1);

  std::vector<QSeries> I = ifunctions(m, std::max(p, 0), qorder);
  QSeries Linv = prof.L.inverted();
  auto Lpow = [&](int e) {
    QSeries r = QSeries::constant(Rat(1), qorder);
    const QSeries& base = e >= 0 ? prof.L : Linv;
    for (int k = 0; k < std::abs(e); ++k) r = r * base;
    return r;
  };
  // Triangular transfer constants with their boundary conventions.
  auto ct = [&](int pp, int s, int r) -> QSeries {
    if (pp < 0 || s < 0)
      return QSeries::constant(pp == s && r == 0 ? Rat(1) : Rat(0), qorder);
    if (r == 0) return QSeries::constant(s == pp ? Rat(1) : Rat(0), qorder);
    return padded(t.transfer_constants(pp, s, r), qorder);
  };
  auto inorm_prod = [&](int top) {  // prod_{s=0}^{top} I_s
    QSeries r = QSeries::constant(Rat(1), qorder);
    for (int s = 0; s <= top; ++s) r = r * I[static_cast<size_t>(s)];
    return r;
  };
  const QSeries dphi_ratio = prof.phi0.logderiv() * prof.phi0.inverted();
  const QSeries dL_ratio = prof.L.logderiv() * Linv;
  auto Acoef = [&](int pp) {
    QSeries r = dphi_ratio * Rat(pp) + dL_ratio * Rat(pp * (pp - 1), 2);
    for (int s = 0; s <= pp; ++s)
      r = r - I[static_cast<size_t>(s)].logderiv() *
                  I[static_cast<size_t>(s)].inverted() * Rat(pp - s);
    return r * Linv;
  };

  const QSeries lead = prof.phi0 * Lpow(p) * rat_pow(x, m.l());
  QSeries rhs1(qorder);
  QSeries rhs2(qorder);
  for (int r = 0; r <= std::abs(p); ++r) {
    QSeries base = ct(p, p - r, r) * Lpow(-r) * inorm_prod(p - r).inverted();
    rhs1 = rhs1 + base;
    rhs2 = rhs2 + base * (prof.phi1 * prof.phi0.inverted() + Acoef(p - r));
  }
  for (int r = 2; r <= p - 1; ++r)
    rhs2 = rhs2 + ct(p, p - r - 1, r) * Lpow(-r - 1) *
                      inorm_prod(p - r - 1).inverted();
  rhs1 = lead * rhs1;
  rhs2 = lead * rhs2;
  return G1 == rhs1 && G2 == rhs2;
}

}  // namespace gwm
