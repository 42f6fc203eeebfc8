#include "gwm/hyperalg.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "gwm/hypergeom.hpp"

namespace gwm {

namespace {

void require_profile_inputs(const ModelSpec& m, const WeightSystem& w) {
  if (!m.calabi_yau())
    throw DomainError("hyperalg: Calabi-Yau model required");
  if (w.n() != m.n) throw DomainError("hyperalg: weight count mismatch");
}

QSeries poly_at(const Poly& p, const QSeries& s) {
  QSeries acc(s.order(), s.grading_den());
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * s;
    acc.set_coeff(0, acc.coeff(0) + p.coeff(k));
  }
  return acc;
}

QSeries pow_series(const QSeries& s, int e) {
  QSeries acc = QSeries::constant(Rat(1), s.order(), s.grading_den());
  for (int k = 0; k < e; ++k) acc = acc * s;
  return acc;
}

struct RootData {
  Poly P, Pd;
  Rat Px;
  QSeries L;
};

RootData solve_root(const ModelSpec& m, const WeightSystem& w, const Rat& x,
                    int qorder) {
  require_profile_inputs(m, w);
  Poly P = weight_char_poly(w);
  Poly Pd = P.derivative();
  if (Pd.eval(x) == 0)
    throw DegenerateWeights("hyperalg: P'(x) vanishes at the base point");
  const Rat Px = P.eval(x);
  const Rat A(m.degree_self_power());
  const int n = m.n;
  const QSeries qA = QSeries::var(qorder) * A;
  QSeries L = QSeries::constant(x, qorder);
  auto residual = [&](const QSeries& c) {
    QSeries g = poly_at(P, c) - qA * pow_series(c, n);
    g.set_coeff(0, g.coeff(0) - Px);
    return g;
  };
  // Newton; each pass doubles the verified q-order.
  for (int reached = 1; reached <= qorder; reached *= 2) {
    QSeries gd = poly_at(Pd, L) - qA * pow_series(L, n - 1) * Rat(n);
    L = L - residual(L) / gd;
  }
  if (!residual(L).is_zero())
    throw CalcError("hyperalg: root iteration did not close");
  return {std::move(P), std::move(Pd), Px, std::move(L)};
}

QSeries psi_of(const RootData& rd, int n) {
  QSeries PL = poly_at(rd.P, rd.L);
  PL.set_coeff(0, PL.coeff(0) - rd.Px);
  return rd.L * poly_at(rd.Pd, rd.L) - PL * Rat(n);
}

QSeries phi0_of(const ModelSpec& m, const RootData& rd, const Rat& x) {
  if (x == 0) throw DomainError("hyperalg: phi0 needs a nonzero base point");
  QSeries psi = psi_of(rd, m.n);
  QSeries r1 = psi.inverted() * (x * rd.Pd.eval(x));
  if (r1.coeff(0) != 1)
    throw CalcError("hyperalg: phi0 radicand not normalized");
  return r1.power(Rat(1, 2)) * (rd.L * (1 / x)).power(Rat(m.l() + 1, 2));
}

}  // namespace

Poly weight_char_poly(const WeightSystem& w) {
  return Poly::from_roots(w.values());
}

QSeries L_series(const ModelSpec& m, const WeightSystem& w, const Rat& x,
                 int qorder) {
  return solve_root(m, w, x, qorder).L;
}

QSeries xi_series(const ModelSpec& m, const WeightSystem& w, const Rat& x,
                  int qorder) {
  QSeries d = L_series(m, w, x, qorder);
  d.set_coeff(0, Rat(0));
  return d.antiderivative_log();
}

QSeries eta_series(const ModelSpec& m, const WeightSystem& w, const Rat& x,
                   int qorder) {
  return xi_series(m, w, x, qorder) - J_series(m, qorder) * x;
}

QSeries psi_series(const ModelSpec& m, const WeightSystem& w, const Rat& x,
                   int qorder) {
  return psi_of(solve_root(m, w, x, qorder), m.n);
}

QSeries psi_dot_series(const ModelSpec& m, const WeightSystem& w, const Rat& x,
                       int qorder) {
  RootData rd = solve_root(m, w, x, qorder);
  Poly Pdd = rd.Pd.derivative();
  return rd.L * rd.L * poly_at(Pdd, rd.L) -
         rd.L * poly_at(rd.Pd, rd.L) * Rat(m.n - 1);
}

QSeries phi0_series(const ModelSpec& m, const WeightSystem& w, const Rat& x,
                    int qorder) {
  return phi0_of(m, solve_root(m, w, x, qorder), x);
}

QSeries phi1_series(const ModelSpec& m, const WeightSystem& w, const Rat& x,
                    int qorder) {
  return centered_vertex_expansion(m, w, x, qorder).phi1;
}

MirrorProfile mirror_profile(const ModelSpec& m, const WeightSystem& w,
                             const Rat& x, int qorder) {
  RootData rd = solve_root(m, w, x, qorder);
  QSeries d = rd.L;
  d.set_coeff(0, Rat(0));
  QSeries xi = d.antiderivative_log();
  QSeries eta = xi - J_series(m, qorder) * x;
  QSeries phi0 = phi0_of(m, rd, x);
  QSeries phi1 = centered_vertex_expansion(m, w, x, qorder).phi1;
  QSeries psi = psi_of(rd, m.n);
  Poly Pdd = rd.Pd.derivative();
  QSeries psi_dot = rd.L * rd.L * poly_at(Pdd, rd.L) -
                    rd.L * poly_at(rd.Pd, rd.L) * Rat(m.n - 1);
  return {std::move(rd.L),  std::move(xi),   std::move(eta), std::move(phi0),
          std::move(phi1),  std::move(psi),  std::move(psi_dot)};
}

HSeries centered_vertex(const ModelSpec& m, const WeightSystem& w,
                        const Rat& x, int qorder, bool low_range) {
  require_profile_inputs(m, w);
  const Poly P = weight_char_poly(w);
  if (P.derivative().eval(x) == 0)
    throw DegenerateWeights("hyperalg: P'(x) vanishes at the base point");
  // Taylor coefficients of P at the base point: P(x + t) = sum_j c_j t^j.
  const Poly S = P.shifted_arg(x);
  HSeries v(qorder);
  v.set_coeff(0, RatFunc(Rat(1)));
  for (int d = 1; d <= qorder; ++d) {
    Poly num(Rat(1));
    for (int a : m.degrees) {
      const Rat ax = Rat(a) * x;
      const int rlo = low_range ? 0 : 1;
      const int rhi = low_range ? a * d - 1 : a * d;
      for (int r = rlo; r <= rhi; ++r)
        num = num * Poly(std::vector<Rat>{ax, Rat(r)});
    }
    Poly den(Rat(1));
    for (int r = 1; r <= d; ++r) {
      std::vector<Rat> t(static_cast<size_t>(S.degree()) + 1, Rat(0));
      for (int j = 1; j <= S.degree(); ++j)
        t[static_cast<size_t>(j)] = S.coeff(j) * rat_pow(Rat(r), j);
      den = den * Poly(std::move(t));
    }
    v.set_coeff(d, RatFunc(std::move(num), std::move(den)));
  }
  return v;
}

VertexExpansion centered_vertex_expansion(const ModelSpec& m,
                                          const WeightSystem& w, const Rat& x,
                                          int qorder, bool low_range) {
  HSeries v = centered_vertex(m, w, x, qorder, low_range);
  HSeries lv = v.logarithm();
  QSeries xi(qorder);
  HSeries reg(qorder);
  int maxpole = 0;
  for (int d = 1; d <= qorder; ++d) {
    const RatFunc f = lv.coeff(d);
    maxpole = std::max(maxpole, f.pole_order_at_zero());
    const Rat xd = f.laurent_coeff_at_zero(-1);
    xi.set_coeff(d, xd);
    reg.set_coeff(d, f - RatFunc(Poly(xd), Poly::X()));
  }
  HSeries e = reg.exponential();
  QSeries phi0(qorder), phi1(qorder);
  for (int d = 0; d <= qorder; ++d) {
    phi0.set_coeff(d, e.coeff(d).laurent_coeff_at_zero(0));
    phi1.set_coeff(d, e.coeff(d).laurent_coeff_at_zero(1));
  }
  return {std::move(v), std::move(xi), std::move(phi0), std::move(phi1),
          maxpole};
}

}  // namespace gwm
