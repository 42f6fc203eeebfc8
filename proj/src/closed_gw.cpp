#include "gwm/closed_gw.hpp"

#include <cassert>
#include <utility>

namespace gwm {

QSeries pair_weighted_series(const ModelSpec& m, int b1, int b2, int qorder) {
  if (!m.calabi_yau())
    throw DomainError("pair_weighted_series: model must have index 0");
  if (b1 < 0 || b2 < 0 || b1 + b2 != m.dim() - 1)
    throw DomainError(
        "pair_weighted_series: insertion exponents must sum to dim - 1");
  QSeries num = ifunction(m, b1 + 1, qorder);
  QSeries den = ifunction(m, 1, qorder);
  QSeries r = (num / den) * Rat(m.degree_product());
  return r.composed(mirror_inverse(m, qorder));
}

std::vector<Rat> pair_invariants(const ModelSpec& m, int b1, int b2,
                                 int dmax) {
  QSeries s = pair_weighted_series(m, b1, b2, dmax);
  assert(s.coeff(0) == Rat(m.degree_product()));
  std::vector<Rat> gw(dmax + 1, Rat(0));
  for (int d = 1; d <= dmax; ++d) gw[d] = s.coeff(d) / Rat(d);
  return gw;
}

std::vector<Rat> bps_from_invariants(const std::vector<Rat>& gw) {
  std::vector<Rat> n(gw.size(), Rat(0));
  for (int d = 1; d < static_cast<int>(gw.size()); ++d) {
    Rat v = gw[d];
    for (int k = 2; k <= d; ++k)
      if (d % k == 0) v -= n[d / k] / Rat(k);
    n[d] = v;
  }
  return n;
}

std::vector<Rat> one_point_invariants(const ModelSpec& m, int dmax) {
  if (!m.calabi_yau() || m.dim() < 2)
    throw DomainError("one_point_invariants: needs index 0 and dim >= 2");
  QSeries r = (ifunction(m, 2, dmax) / ifunction(m, 1, dmax)) *
              Rat(m.degree_product());
  QSeries s = r.composed(mirror_inverse(m, dmax));
  std::vector<Rat> gw(dmax + 1, Rat(0));
  for (int d = 1; d <= dmax; ++d) gw[d] = s.coeff(d) / Rat(d) / Rat(d);
  return gw;
}

std::vector<Int> bps_pair(const ModelSpec& m, int b1, int b2, int dmax) {
  std::vector<Rat> n = bps_from_invariants(pair_invariants(m, b1, b2, dmax));
  std::vector<Int> out(n.size(), Int(0));
  for (std::size_t d = 1; d < n.size(); ++d) {
    Rat v = n[d];
    v.canonicalize();
    if (v.get_den() != 1)
      throw CalcError("bps_pair: non-integral multiple-cover reduction at " +
                      m.label() + ", degree " + std::to_string(d));
    out[d] = v.get_num();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Descendant engine
// ---------------------------------------------------------------------------

ClosedEngine::ClosedEngine(const ModelSpec& m, int dmax, IndexOneConstant ic)
    : m_(m), dmax_(dmax), ic_(ic) {
  if (dmax < 0) throw DomainError("ClosedEngine: negative degree cap");
  const int dim = m_.dim();
  legs_.assign(dim + 1, std::vector<std::vector<Laurent>>(
                            dmax_ + 1, std::vector<Laurent>(m_.n)));
  if (m_.calabi_yau()) {
    for (int p = 0; p <= dim; ++p) build_leg_cy(p);
  } else {
    CoeffTables ct(m_, dmax_, dim);
    for (int p = 0; p <= dim; ++p) build_leg_fano(ct, p);
  }
}

const Laurent& ClosedEngine::leg(int p, int D, int i) const {
  if (p < 0 || p > m_.dim() || D < 0 || D > dmax_ || i < 0 || i >= m_.n)
    throw DomainError("ClosedEngine::leg: index out of range");
  return legs_[p][D][i];
}

// Index-0 leg: expand e^{-J H/hbar} M^p F / I_p in powers of H/hbar, keep
// ambient H-powers below n, then convert the q-grading to the Q-grading by
// composing every (H-power, hbar-power) slot with the inverse mirror map.
void ClosedEngine::build_leg_cy(int p) {
  const int n = m_.n, l = m_.l(), dim = m_.dim();
  const int emax = dim - p;  // cap on j + k forced by H^{l+p+j+k}, j+k <= n-1

  WJets fp = hyper_series(m_, dmax_, dim);
  for (int t = 0; t < p; ++t) fp = op_M(fp);
  assert(fp.wcut >= emax);
  Series<Laurent> g = fp.s.div_scalar_series(value_at_w0(fp));

  QSeries negj = J_series(m_, dmax_) * Rat(-1);
  std::vector<QSeries> epow;
  epow.push_back(QSeries::constant(Rat(1), dmax_));
  for (int k = 1; k <= emax; ++k)
    epow.push_back(epow.back() * negj / Rat(k));

  // tmp[i][e]: q-series multiplying H^i hbar^{-e}
  std::vector<std::vector<QSeries>> tmp(
      n, std::vector<QSeries>(emax + 1, QSeries::constant(Rat(0), dmax_)));
  for (int d2 = 0; d2 <= dmax_; ++d2) {
    Laurent gj = g.coeff(d2);
    if (gj.is_zero()) continue;
    if (!gj.regular())
      throw CalcError("ClosedEngine: structure series has a pole at w = 0");
    for (int j = gj.min_exp(); j <= gj.max_exp() && j <= emax; ++j) {
      Rat c = gj.coeff(j);
      if (c == 0) continue;
      for (int k = 0; k + j <= emax; ++k) {
        const int i = l + p + j + k;
        QSeries& t = tmp[i][j + k];
        for (int d1 = 0; d1 + d2 <= dmax_; ++d1) {
          Rat add = epow[k].coeff(d1) * c;
          if (add != 0) t.set_coeff(d1 + d2, t.coeff(d1 + d2) + add);
        }
      }
    }
  }

  QSeries inv = mirror_inverse(m_, dmax_);
  for (int i = 0; i < n; ++i)
    for (int e = 0; e <= emax; ++e) {
      QSeries s = tmp[i][e].composed(inv);
      for (int D = 0; D <= dmax_; ++D) {
        Rat c = s.coeff(D);
        if (c != 0) slot(p, D, i) = slot(p, D, i) + Laurent::monomial(c, -e);
      }
    }
}

// Positive-index leg: F_p(H/hbar, q) with q = Q/H^index.  For index 1 the
// exponential prefactor contributes extra powers of q H / hbar whose H and Q
// shifts cancel, so the ambient H-power of a term q^d w^j is l+p+j-d
// regardless of the prefactor order.
void ClosedEngine::build_leg_fano(const CoeffTables& ct, int p) {
  const int n = m_.n, l = m_.l(), dim = m_.dim(), nu = m_.nu();
  const int wcut = dim - p + nu * dmax_;
  WJets fp = fano_structure_series(ct, p, dmax_, wcut);

  if (nu >= 2) {
    for (int d = 0; d <= dmax_; ++d) {
      Laurent fd = fp.coeff(d);
      if (fd.is_zero()) continue;
      for (int j = fd.min_exp(); j <= fd.max_exp() && j <= wcut; ++j) {
        Rat c = fd.coeff(j);
        if (c == 0) continue;
        const int i = l + p + j - nu * d;
        assert(i >= l);
        if (i < n) slot(p, d, i) = slot(p, d, i) + Laurent::monomial(c, -j);
      }
    }
    return;
  }

  const Rat e_const(ic_ == IndexOneConstant::degree_factorial
                        ? m_.degree_factorial()
                        : m_.degree_self_power());
  std::vector<Rat> epow(dmax_ + 1, Rat(1));  // (-E)^k / k!
  for (int k = 1; k <= dmax_; ++k) epow[k] = epow[k - 1] * -e_const / Rat(k);

  for (int d = 0; d <= dmax_; ++d) {
    Laurent fd = fp.coeff(d);
    if (fd.is_zero()) continue;
    for (int j = fd.min_exp(); j <= fd.max_exp() && j <= wcut; ++j) {
      Rat c = fd.coeff(j);
      if (c == 0) continue;
      const int i = l + p + j - d;
      assert(i >= l);
      if (i >= n) continue;
      for (int k = 0; d + k <= dmax_; ++k) {
        const int D = d + k;
        slot(p, D, i) = slot(p, D, i) + Laurent::monomial(c * epow[k], -j - k);
      }
    }
  }
}

// Coefficient extraction.  Write the assembled numerator as
//   W = sum_{p1+p2=dim} Z_{p1}(hbar1) Z_{p2}(hbar2)   (minus the constant
// H^{l+p1} x H^{l+p2} term, which never contributes at the exponents used
// here), so the generating class is k W / (hbar1 + hbar2).  Expanding the
// prefactor in hbar1/hbar2 gives, for target exponents a, b <= -1,
//   [hbar1^a hbar2^b] = sum_{j=0..(-a-1)} (-1)^j W_{a+1+j, b-j}.
Rat ClosedEngine::descendant(int d, int p1, int b1, int p2, int b2) const {
  const int n = m_.n, dim = m_.dim();
  if (d < 0 || d > dmax_) throw DomainError("descendant: degree out of range");
  if (p1 < 0 || p2 < 0) throw DomainError("descendant: negative psi power");
  if (b1 < 0 || b1 >= n || b2 < 0 || b2 >= n)
    throw DomainError("descendant: insertion exponent out of range");
  const int i1 = n - 1 - b1, i2 = n - 1 - b2;
  Rat acc(0);
  for (int j = 0; j <= p1; ++j) {
    const int x = -p1 + j, y = -1 - p2 - j;
    Rat w(0);
    for (int q1 = 0; q1 <= dim; ++q1)
      for (int d1 = 0; d1 <= d; ++d1) {
        const Laurent& u = legs_[q1][d1][i1];
        if (u.is_zero()) continue;
        Rat cu = u.coeff(x);
        if (cu == 0) continue;
        w += cu * legs_[dim - q1][d - d1][i2].coeff(y);
      }
    acc += (j % 2 != 0) ? -w : w;
  }
  return acc * Rat(m_.degree_product());
}

bool ClosedEngine::antidiagonal_vanishes() const {
  const int n = m_.n, l = m_.l(), dim = m_.dim();
  for (int D = 0; D <= dmax_; ++D)
    for (int i1 = 0; i1 < n; ++i1)
      for (int i2 = 0; i2 < n; ++i2) {
        Laurent sum;
        for (int q1 = 0; q1 <= dim; ++q1)
          for (int d1 = 0; d1 <= D; ++d1) {
            const Laurent& u = legs_[q1][d1][i1];
            const Laurent& v = legs_[dim - q1][D - d1][i2];
            if (u.is_zero() || v.is_zero()) continue;
            sum = sum + u * v.neg_arg();
          }
        if (D == 0)
          for (int q1 = 0; q1 <= dim; ++q1)
            if (i1 == l + q1 && i2 == l + dim - q1)
              sum = sum - Laurent(Rat(1));
        if (!sum.is_zero()) return false;
      }
  return true;
}

}  // namespace gwm
