#include "gwm/hypergeom.hpp"

#include <algorithm>

namespace gwm {

namespace {

Poly trunc(const Poly& p, int cut) {
  if (p.degree() <= cut) return p;
  std::vector<Rat> c(p.coeffs().begin(), p.coeffs().begin() + cut + 1);
  return Poly(std::move(c));
}

Poly trunc_mul(const Poly& a, const Poly& b, int cut) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> out(static_cast<size_t>(std::min(a.degree() + b.degree(), cut)) + 1,
                       Rat(0));
  for (int i = 0; i <= a.degree() && i <= cut; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; j <= b.degree() && i + j <= cut; ++j)
      out[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  }
  return Poly(std::move(out));
}

// a / b mod w^{cut+1}; b(0) != 0.
Poly trunc_div(const Poly& a, const Poly& b, int cut) {
  if (b.coeff(0) == 0) throw DivisionByZero("trunc_div: divisor vanishes at 0");
  std::vector<Rat> out(static_cast<size_t>(cut) + 1, Rat(0));
  Rat inv = 1 / b.coeff(0);
  for (int k = 0; k <= cut; ++k) {
    Rat acc = a.coeff(k);
    for (int j = 1; j <= k && j <= b.degree(); ++j)
      acc -= b.coeff(j) * out[static_cast<size_t>(k - j)];
    out[static_cast<size_t>(k)] = acc * inv;
  }
  return Poly(std::move(out));
}

Laurent trunc_laurent(const Laurent& l, int cut) { return l.truncated_above(cut); }

}  // namespace

Rat factorials_ratio(const ModelSpec& m, int d) {
  Int num = 1;
  for (int a : m.degrees) num *= factorial(static_cast<unsigned long>(a) * d);
  Rat out(num, int_pow(factorial(static_cast<unsigned long>(d)),
                       static_cast<unsigned long>(m.n)));
  out.canonicalize();
  return out;
}

Rat double_factorials_ratio(const ModelSpec& m, int d) {
  Int num = 1;
  for (int a : m.degrees) num *= double_factorial(static_cast<long>(a) * d);
  Rat out(num, int_pow(double_factorial(d), static_cast<unsigned long>(m.n)));
  out.canonicalize();
  return out;
}

Poly hyper_coeff_jet(const ModelSpec& m, int d, int wcut, bool low_range) {
  if (d < 0 || wcut < 0) throw DomainError("hyper_coeff_jet: bad arguments");
  Poly num{Rat(1)};
  for (int a : m.degrees) {
    int r0 = low_range ? 0 : 1;
    int r1 = low_range ? a * d - 1 : a * d;
    for (int r = r0; r <= r1; ++r)
      num = trunc_mul(num, Poly({Rat(r), Rat(a)}), wcut);
  }
  Poly den{Rat(1)};
  for (int r = 1; r <= d; ++r) {
    Poly f = Poly({Rat(r), Rat(1)}).pow(static_cast<unsigned>(m.n));
    den = trunc_mul(den, f, wcut);
  }
  return trunc_div(num, den, wcut);
}

WJets hyper_series(const ModelSpec& m, int qorder, int wcut, bool low_range) {
  Series<Laurent> s(qorder);
  int nu = m.nu();
  for (int d = 0; d <= qorder; ++d) {
    int shift = nu * d;
    if (shift > wcut) continue;  // entirely above the jet window
    Poly jet = hyper_coeff_jet(m, d, wcut - shift, low_range);
    s.set_coeff(d, Laurent(shift, jet));
  }
  return WJets(std::move(s), wcut);
}

WJets op_D(const WJets& h) {
  int cut = h.wcut - 1;
  if (cut < 0) throw DomainError("op_D: w-precision exhausted");
  Series<Laurent> s(h.qorder());
  for (int d = 0; d <= h.qorder(); ++d) {
    Laurent c = h.coeff(d);
    Laurent out = c + c.times_xk(-1) * Rat(d);
    s.set_coeff(d, trunc_laurent(out, cut));
  }
  return WJets(std::move(s), cut);
}

WJets op_Dw(const WJets& h) {
  Series<Laurent> s(h.qorder());
  Laurent w = Laurent::monomial(1, 1);
  for (int d = 0; d <= h.qorder(); ++d) {
    Laurent c = h.coeff(d);
    Laurent out = w * c + c * Rat(d);
    s.set_coeff(d, trunc_laurent(out, h.wcut));
  }
  return WJets(std::move(s), h.wcut);
}

WJets op_M(const WJets& h) {
  QSeries v = value_at_w0(h);
  Series<Laurent> g = h.s.div_scalar_series(v);
  for (int d = 1; d <= h.qorder(); ++d)
    if (g.coeff(d).coeff(0) != 0)
      throw DomainError("op_M: normalized series does not vanish at w=0");
  return op_D(WJets(std::move(g), h.wcut));
}

QSeries value_at_w0(const WJets& h) {
  QSeries v(h.qorder());
  for (int d = 0; d <= h.qorder(); ++d) {
    Laurent c = h.coeff(d);
    if (!c.regular())
      throw PoleError("value_at_w0: coefficient has a pole at w=0");
    v.set_coeff(d, c.coeff(0));
  }
  return v;
}

std::vector<QSeries> ifunctions(const ModelSpec& m, int pmax, int qorder) {
  std::vector<QSeries> out;
  out.reserve(static_cast<size_t>(pmax) + 1);
  if (!m.calabi_yau()) {
    for (int p = 0; p <= pmax; ++p) out.push_back(QSeries::constant(1, qorder));
    return out;
  }
  WJets h = hyper_series(m, qorder, pmax);
  for (int p = 0; p <= pmax; ++p) {
    out.push_back(value_at_w0(h));
    if (p < pmax) h = op_M(h);
  }
  return out;
}

QSeries ifunction(const ModelSpec& m, int p, int qorder) {
  return ifunctions(m, p, qorder).back();
}

QSeries J_series(const ModelSpec& m, int qorder) {
  if (!m.calabi_yau()) throw DomainError("J_series: Calabi-Yau models only");
  QSeries raw(qorder);
  for (int d = 1; d <= qorder; ++d) {
    Rat tail = 0;
    for (int a : m.degrees)
      for (int r = d + 1; r <= a * d; ++r) tail += Rat(a, r);
    Rat base(factorials_ratio(m, d));
    raw.set_coeff(d, base * tail);
  }
  QSeries i0 = ifunction(m, 0, qorder);
  return raw.div_scalar_series(i0);
}

QSeries C1_series(const ModelSpec& m, int qorder) {
  if (!m.calabi_yau()) throw DomainError("C1_series: Calabi-Yau models only");
  QSeries raw(qorder);
  Rat harmonic = 0;
  for (int d = 1; d <= qorder; ++d) {
    harmonic += Rat(1, d);
    raw.set_coeff(d, Rat(factorials_ratio(m, d)) * harmonic);
  }
  QSeries i0 = ifunction(m, 0, qorder);
  return raw.div_scalar_series(i0);
}

QSeries mirror_map(const ModelSpec& m, int qorder) {
  return QSeries::var(qorder) * J_series(m, qorder).exponential();
}

QSeries mirror_inverse(const ModelSpec& m, int qorder) {
  return reverted(mirror_map(m, qorder));
}

}  // namespace gwm
