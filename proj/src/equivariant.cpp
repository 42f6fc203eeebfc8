#include "gwm/equivariant.hpp"

#include <algorithm>

#include "gwm/hypergeom.hpp"

namespace gwm {

// ---------------------------------------------------------------------------
// HbarExpansion

HbarExpansion::HbarExpansion(int qorder, int floor) : floor_(floor) {
  if (qorder < 0) throw DomainError("HbarExpansion: negative q-order");
  sl_.resize(static_cast<size_t>(qorder) + 1);
}

Poly HbarExpansion::slice(int d, int e) const {
  if (d < 0 || d > qorder()) throw DomainError("HbarExpansion::slice: degree");
  if (e < floor_)
    throw DomainError("HbarExpansion::slice: exponent below retained window");
  auto& m = sl_[static_cast<size_t>(d)];
  auto it = m.find(e);
  return it == m.end() ? Poly() : it->second;
}

void HbarExpansion::add_to(int d, int e, Poly p) {
  if (d < 0 || d > qorder()) throw DomainError("HbarExpansion::add_to: degree");
  if (e < floor_ || p.is_zero()) return;
  auto& m = sl_[static_cast<size_t>(d)];
  auto it = m.find(e);
  if (it == m.end()) {
    m.emplace(e, std::move(p));
  } else {
    it->second += p;
    if (it->second.is_zero()) m.erase(it);
  }
}

HbarExpansion HbarExpansion::plus(const HbarExpansion& o) const {
  HbarExpansion out(std::min(qorder(), o.qorder()),
                    std::max(floor_, o.floor_));
  for (int d = 0; d <= out.qorder(); ++d) {
    for (const auto& [e, p] : sl_[static_cast<size_t>(d)]) out.add_to(d, e, p);
    for (const auto& [e, p] : o.sl_[static_cast<size_t>(d)]) out.add_to(d, e, p);
  }
  return out;
}

HbarExpansion HbarExpansion::scaled(const Rat& t) const {
  HbarExpansion out(qorder(), floor_);
  if (t == 0) return out;
  for (int d = 0; d <= qorder(); ++d)
    for (const auto& [e, p] : sl_[static_cast<size_t>(d)])
      out.add_to(d, e, p * t);
  return out;
}

HbarExpansion HbarExpansion::times_qseries(const QSeries& f) const {
  if (f.grading_den() != 1)
    throw DomainError("HbarExpansion::times_qseries: grading mismatch");
  HbarExpansion out(std::min(qorder(), f.order()), floor_);
  for (int d = 0; d <= out.qorder(); ++d)
    for (int t = 0; t <= d; ++t) {
      Rat c = f.coeff(t);
      if (c == 0) continue;
      for (const auto& [e, p] : sl_[static_cast<size_t>(d - t)])
        out.add_to(d, e, p * c);
    }
  return out;
}

HbarExpansion HbarExpansion::hbar_times(int k) const {
  HbarExpansion out(qorder(), floor_ + k);
  for (int d = 0; d <= qorder(); ++d)
    for (const auto& [e, p] : sl_[static_cast<size_t>(d)])
      out.add_to(d, e + k, p);
  return out;
}

HbarExpansion HbarExpansion::x_times(int k) const {
  if (k < 0) throw DomainError("HbarExpansion::x_times: negative power");
  HbarExpansion out(qorder(), floor_);
  for (int d = 0; d <= qorder(); ++d)
    for (const auto& [e, p] : sl_[static_cast<size_t>(d)])
      out.add_to(d, e, p.times_xk(k));
  return out;
}

HbarExpansion HbarExpansion::applied_shift() const {
  // slice'(d, e) = x * slice(d, e) + d * slice(d, e - 1); the second term
  // needs one exponent below e, so the exact window shrinks by one.
  HbarExpansion out(qorder(), floor_ + 1);
  for (int d = 0; d <= qorder(); ++d)
    for (const auto& [e, p] : sl_[static_cast<size_t>(d)]) {
      out.add_to(d, e, p.times_xk(1));
      out.add_to(d, e + 1, p * Rat(d));
    }
  return out;
}

Series<Laurent> HbarExpansion::evaluated(const Rat& x) const {
  Series<Laurent> out(qorder());
  for (int d = 0; d <= qorder(); ++d) {
    const auto& m = sl_[static_cast<size_t>(d)];
    if (m.empty()) continue;
    int lo = m.begin()->first, hi = m.rbegin()->first;
    std::vector<Rat> c(static_cast<size_t>(hi - lo + 1), Rat(0));
    for (const auto& [e, p] : m) c[static_cast<size_t>(e - lo)] = p.eval(x);
    out.set_coeff(d, Laurent(lo, Poly(std::move(c))));
  }
  return out;
}

Laurent expansion_at_infinity(const RatFunc& f, int floor) {
  if (f.is_zero()) return Laurent();
  const Poly &num = f.num(), &den = f.den();
  int top = num.degree() - den.degree();
  if (top < floor) return Laurent();
  auto reverse_coeffs = [](const Poly& p) {
    std::vector<Rat> c = p.coeffs();
    std::reverse(c.begin(), c.end());
    return Poly(std::move(c));
  };
  RatFunc g(reverse_coeffs(num), reverse_coeffs(den));
  std::vector<Rat> taylor = g.laurent_at_zero(0, top - floor);
  std::vector<Rat> c(static_cast<size_t>(top - floor + 1));
  for (int e = floor; e <= top; ++e)
    c[static_cast<size_t>(e - floor)] = taylor[static_cast<size_t>(top - e)];
  return Laurent(floor, Poly(std::move(c)));
}

// ---------------------------------------------------------------------------
// TorusFamily

namespace {

// Truncated power series in u with polynomial-in-x coefficients; enough
// structure for the hbar = 1/u expansions of the hypergeometric ratios.
using UPoly = std::vector<Poly>;

// Multiply in place by (c + g u).
void umul_linear(UPoly& a, const Rat& c, const Poly& g) {
  for (int j = static_cast<int>(a.size()) - 1; j >= 0; --j) {
    Poly v = a[static_cast<size_t>(j)] * c;
    if (j > 0) v += g * a[static_cast<size_t>(j - 1)];
    a[static_cast<size_t>(j)] = std::move(v);
  }
}

// Inverse of a series whose constant term is a nonzero rational constant.
UPoly uinv(const UPoly& a) {
  if (a.empty() || a[0].degree() != 0)
    throw DomainError("uinv: constant term not a nonzero scalar");
  Rat c0 = a[0].coeff(0);
  if (c0 == 0) throw DivisionByZero("uinv: zero constant term");
  UPoly inv(a.size());
  inv[0] = Poly(1 / c0);
  for (size_t j = 1; j < a.size(); ++j) {
    Poly acc;
    for (size_t t = 1; t <= j; ++t) acc += a[t] * inv[j - t];
    inv[j] = acc * Rat(-1) / c0;
  }
  return inv;
}

UPoly umul(const UPoly& a, const UPoly& b) {
  size_t len = std::min(a.size(), b.size());
  UPoly out(len);
  for (size_t j = 0; j < len; ++j) {
    Poly acc;
    for (size_t t = 0; t <= j; ++t) acc += a[t] * b[j - t];
    out[j] = std::move(acc);
  }
  return out;
}

}  // namespace

TorusFamily::TorusFamily(ModelSpec m, WeightSystem w, int qorder, int smax)
    : m_(std::move(m)), w_(std::move(w)), qorder_(qorder),
      smax_(smax < 0 ? m_.n : smax), inv_norm0_(0) {
  if (w_.n() != m_.n) throw DomainError("TorusFamily: weight count != n");
  if (m_.nu() < 0) throw DomainError("TorusFamily: negative index");
  if (qorder_ < 0) throw DomainError("TorusFamily: negative q-order");
  if (smax_ < m_.n - 1)
    throw DomainError("TorusFamily: window too shallow for the tables");
  norms_.reserve(static_cast<size_t>(m_.n) + 1);
  for (int p = 0; p <= m_.n; ++p) norms_.push_back(ifunction(m_, p, qorder_));
  inv_norm0_ = norms_[0].inverted();
  build_expansions();
  build_tables();
  if (w_.distinct()) build_evaluations();
}

const QSeries& TorusFamily::cascade_norm(int p) const {
  if (p < 0 || p > m_.n) throw DomainError("TorusFamily::cascade_norm: index");
  return norms_[static_cast<size_t>(p)];
}

void TorusFamily::build_expansions() {
  const int n = m_.n, l = m_.l(), nu = m_.nu();
  // Base series: q^d coefficient is hbar^{-nu d} N(u)/D(u) with u = 1/hbar,
  //   N = prod_k prod_{r=1..a_k d} (r + a_k x u),
  //   D = prod_{r=1..d} prod_k (r + (x - alpha_k) u).
  HbarExpansion base(qorder_, -smax_);
  for (int d = 0; d <= qorder_; ++d) {
    int depth = smax_ - nu * d;
    if (depth < 0) continue;  // entirely below the retained window
    UPoly num(static_cast<size_t>(depth) + 1);
    num[0] = Poly(Rat(1));
    for (int a : m_.degrees) {
      Poly g = Poly::X() * Rat(a);
      for (int r = 1; r <= a * d; ++r) umul_linear(num, Rat(r), g);
    }
    UPoly den(static_cast<size_t>(depth) + 1);
    den[0] = Poly(Rat(1));
    for (int r = 1; r <= d; ++r)
      for (int k = 0; k < n; ++k)
        umul_linear(den, Rat(r), Poly::X() - Poly(w_.alpha(k)));
    UPoly ratio = umul(num, uinv(den));
    for (int j = 0; j <= depth; ++j)
      base.add_to(d, -nu * d - j, ratio[static_cast<size_t>(j)]);
  }

  cascade_exp_.reserve(static_cast<size_t>(n));
  cascade_exp_.push_back(base.x_times(l).times_qseries(inv_norm0_));
  for (int s = 1; s <= n - 1; ++s)
    cascade_exp_.push_back(cascade_exp_.back().applied_shift().times_qseries(
        norms_[static_cast<size_t>(s)].inverted()));
}

void TorusFamily::build_tables() {
  const int n = m_.n, l = m_.l();
  // Read the lower-triangular-in-hbar table off the cascade expansions.
  cexp_.resize(static_cast<size_t>(n));
  for (int p = 0; p <= n - 1; ++p) {
    auto& cp = cexp_[static_cast<size_t>(p)];
    cp.resize(static_cast<size_t>(smax_) + 1);
    for (int s = 0; s <= smax_; ++s) {
      auto& cps = cp[static_cast<size_t>(s)];
      cps.assign(static_cast<size_t>(s) + 1, QSeries(qorder_));
      for (int d = 0; d <= qorder_; ++d) {
        Poly sl = cascade_exp_[static_cast<size_t>(p)].slice(d, p - s);
        for (int k = 0; k <= sl.degree(); ++k)
          if (sl.coeff(k) != 0 && (k < l || k > l + s))
            throw CalcError("TorusFamily: expansion outside expected window");
        for (int r = 0; r <= s; ++r)
          cps[static_cast<size_t>(r)].set_coeff(d, sl.coeff(l + s - r));
      }
    }
  }

  // Solve the triangular system for the transfer table: for r <= s <= p the
  // convolution of the two tables must be delta_{r,0} delta_{p,s}.
  ct_.resize(static_cast<size_t>(n));
  for (int p = 0; p <= n - 1; ++p) {
    auto& tp = ct_[static_cast<size_t>(p)];
    tp.resize(static_cast<size_t>(p) + 1);
    for (int r = 0; r <= p; ++r)
      tp[static_cast<size_t>(r)].assign(static_cast<size_t>(p - r) + 1,
                                        QSeries(qorder_));
    for (int s = 0; s <= p; ++s)
      tp[0][static_cast<size_t>(s)].set_coeff(0, s == p ? Rat(1) : Rat(0));
    for (int r = 1; r <= p; ++r)
      for (int s = r; s <= p; ++s) {
        QSeries acc(qorder_);
        for (int r1 = 0; r1 < r; ++r1)
          for (int t = 0; t <= p - r1; ++t)
            acc = acc + tp[static_cast<size_t>(r1)][static_cast<size_t>(t)] *
                            cexp_[static_cast<size_t>(t)]
                                 [static_cast<size_t>(s - r1)]
                                 [static_cast<size_t>(r - r1)];
        for (int t = 0; t < s - r; ++t)
          acc = acc + tp[static_cast<size_t>(r)][static_cast<size_t>(t)] *
                          cexp_[static_cast<size_t>(t)]
                               [static_cast<size_t>(s - r)][0];
        tp[static_cast<size_t>(r)][static_cast<size_t>(s - r)] = -acc;
      }
  }

  // Assemble the family expansions and their first subleading tails.
  family_exp_.reserve(static_cast<size_t>(n));
  for (int p = 0; p <= n - 1; ++p) {
    HbarExpansion acc = cascade_exp_[static_cast<size_t>(p)];
    for (int r = 1; r <= p; ++r)
      for (int s = 0; s <= p - r; ++s)
        acc = acc.plus(cascade_exp_[static_cast<size_t>(s)]
                           .times_qseries(ct_[static_cast<size_t>(p)]
                                             [static_cast<size_t>(r)]
                                             [static_cast<size_t>(s)])
                           .hbar_times(p - r - s));
    family_exp_.push_back(std::move(acc));
  }
  sub_.resize(static_cast<size_t>(n));
  for (int p = 0; p <= n - 1; ++p) {
    auto& sp = sub_[static_cast<size_t>(p)];
    sp.assign(static_cast<size_t>(p) + 2, QSeries(qorder_));
    for (int d = 0; d <= qorder_; ++d) {
      Poly sl = family_exp_[static_cast<size_t>(p)].slice(d, -1);
      for (int r = 0; r <= p + 1; ++r)
        sp[static_cast<size_t>(r)].set_coeff(d, sl.coeff(l + p + 1 - r));
    }
  }
}

void TorusFamily::build_evaluations() {
  const int n = m_.n, l = m_.l();
  const Poly hbar = Poly::X();
  vertex_.reserve(static_cast<size_t>(n));
  vertex_low_.reserve(static_cast<size_t>(n));
  cascade_ev_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Rat& ai = w_.alpha(i);
    HSeries v(qorder_), vlow(qorder_);
    for (int d = 0; d <= qorder_; ++d) {
      Poly num(Rat(1)), numlow(Rat(1)), den(Rat(1));
      for (int a : m_.degrees)
        for (int r = 0; r <= a * d; ++r) {
          Poly f = hbar * Rat(r) + Poly(Rat(a) * ai);
          if (r >= 1) num = num * f;
          if (r <= a * d - 1) numlow = numlow * f;
        }
      for (int r = 1; r <= d; ++r)
        for (int k = 0; k < n; ++k)
          den = den * (hbar * Rat(r) + Poly(ai - w_.alpha(k)));
      v.set_coeff(d, RatFunc(num, den));
      vlow.set_coeff(d, RatFunc(numlow, den));
    }
    vertex_.push_back(std::move(v));
    vertex_low_.push_back(std::move(vlow));

    auto& casc = cascade_ev_[static_cast<size_t>(i)];
    casc.reserve(static_cast<size_t>(n));
    casc.push_back(vertex_.back()
                       .scaled(RatFunc(rat_pow(ai, l)))
                       .times_scalar_series(inv_norm0_));
    for (int s = 1; s <= n - 1; ++s) {
      const HSeries& prev = casc.back();
      HSeries next(qorder_);
      for (int d = 0; d <= qorder_; ++d)
        next.set_coeff(d, prev.coeff(d) * ai +
                              prev.coeff(d) * RatFunc(hbar * Rat(d)));
      casc.push_back(next.times_scalar_series(
          norms_[static_cast<size_t>(s)].inverted()));
    }
  }
}

void TorusFamily::require_distinct() const {
  if (!w_.distinct())
    throw DegenerateWeights(
        "TorusFamily: fixed-point evaluation needs distinct weights");
}

const HSeries& TorusFamily::vertex_series(int i) const {
  require_distinct();
  if (i < 0 || i >= m_.n) throw DomainError("TorusFamily::vertex_series: index");
  return vertex_[static_cast<size_t>(i)];
}

const HSeries& TorusFamily::vertex_series_low(int i) const {
  require_distinct();
  if (i < 0 || i >= m_.n)
    throw DomainError("TorusFamily::vertex_series_low: index");
  return vertex_low_[static_cast<size_t>(i)];
}

const HSeries& TorusFamily::cascade_eval(int i, int s) const {
  require_distinct();
  if (i < 0 || i >= m_.n || s < 0 || s > m_.n - 1)
    throw DomainError("TorusFamily::cascade_eval: index");
  return cascade_ev_[static_cast<size_t>(i)][static_cast<size_t>(s)];
}

HSeries TorusFamily::family(int i, int p) const {
  require_distinct();
  const int l = m_.l();
  if (i < 0 || i >= m_.n || p < -l || p > m_.n - 1)
    throw DomainError("TorusFamily::family: index");
  if (p < 0) {
    // Negative members come from the low-range series by iterating
    // {x + hbar q d/dq}, which acts on the q^d coefficient as (x + d hbar).
    const Rat& ai = w_.alpha(i);
    HSeries out(qorder_);
    for (int d = 0; d <= qorder_; ++d) {
      Poly f = Poly::X() * Rat(d) + Poly(ai);
      out.set_coeff(d, vertex_low_[static_cast<size_t>(i)].coeff(d) *
                           RatFunc(f.pow(static_cast<unsigned>(p + l))));
    }
    return out;
  }
  HSeries acc = cascade_ev_[static_cast<size_t>(i)][static_cast<size_t>(p)];
  for (int r = 1; r <= p; ++r)
    for (int s = 0; s <= p - r; ++s) {
      HSeries term =
          cascade_ev_[static_cast<size_t>(i)][static_cast<size_t>(s)]
              .times_scalar_series(ct_[static_cast<size_t>(p)]
                                      [static_cast<size_t>(r)]
                                      [static_cast<size_t>(s)]);
      acc = acc + term.scaled(RatFunc(Poly::monomial(Rat(1), p - r - s)));
    }
  return acc;
}

namespace {

// exp(c(q)/hbar) as a q-series of rational functions, c(0) = 0.
HSeries exp_over_hbar(const QSeries& c) {
  RatFunc inv_hbar(Poly(Rat(1)), Poly::X());
  Series<RatFunc> arg =
      c.mapped([&](const Rat& v) { return RatFunc(Poly(v)) * inv_hbar; });
  return arg.exponential();
}

}  // namespace

HSeries TorusFamily::family_mirror_q(int i, int p) const {
  HSeries base = family(i, p);
  const int nu = m_.nu();
  if (nu >= 2) return base;
  if (nu == 1) {
    QSeries c(qorder_);
    if (qorder_ >= 1) c.set_coeff(1, -Rat(m_.degree_factorial()));
    return base * exp_over_hbar(c);
  }
  QSeries c = J_series(m_, qorder_) * (-w_.alpha(i)) +
              C1_series(m_, qorder_) * (-w_.sigma(1));
  return base * exp_over_hbar(c);
}

HSeries TorusFamily::family_mirror(int i, int p) const {
  HSeries base = family_mirror_q(i, p);
  if (m_.nu() == 0) return base.composed(mirror_inverse(m_, qorder_));
  return base;
}

HSeries TorusFamily::mirror_series(int i) const {
  const HSeries& base = vertex_series(i);
  const int nu = m_.nu();
  if (nu >= 2) return base;
  if (nu == 1) {
    QSeries c(qorder_);
    if (qorder_ >= 1) c.set_coeff(1, -Rat(m_.degree_factorial()));
    return base * exp_over_hbar(c);
  }
  QSeries c = J_series(m_, qorder_) * (-w_.alpha(i)) +
              C1_series(m_, qorder_) * (-w_.sigma(1));
  return (base.times_scalar_series(inv_norm0_) * exp_over_hbar(c))
      .composed(mirror_inverse(m_, qorder_));
}

Rat TorusFamily::recursion_coeff(int i, int j, int d) const {
  require_distinct();
  if (i < 0 || i >= m_.n || j < 0 || j >= m_.n || i == j || d < 1)
    throw DomainError("TorusFamily::recursion_coeff: index");
  Rat step = (w_.alpha(j) - w_.alpha(i)) / d;
  Rat num(1);
  for (int a : m_.degrees)
    for (int r = 0; r <= a * d - 1; ++r) num *= Rat(a) * w_.alpha(i) + r * step;
  Rat den(d);
  for (int r = 1; r <= d; ++r)
    for (int k = 0; k < m_.n; ++k) {
      if (r == d && k == j) continue;
      den *= w_.alpha(i) - w_.alpha(k) + r * step;
    }
  if (den == 0)
    throw DegenerateWeights("TorusFamily::recursion_coeff: vanishing factor");
  return num / den;
}

const HbarExpansion& TorusFamily::cascade_expansion(int s) const {
  if (s < 0 || s > m_.n - 1)
    throw DomainError("TorusFamily::cascade_expansion: index");
  return cascade_exp_[static_cast<size_t>(s)];
}

const HbarExpansion& TorusFamily::family_expansion(int p) const {
  if (p < 0 || p > m_.n - 1)
    throw DomainError("TorusFamily::family_expansion: index");
  return family_exp_[static_cast<size_t>(p)];
}

const QSeries& TorusFamily::expansion_constants(int p, int s, int r) const {
  if (p < 0 || p > m_.n - 1 || s < 0 || s > smax_ || r < 0 || r > s)
    throw DomainError("TorusFamily::expansion_constants: index");
  return cexp_[static_cast<size_t>(p)][static_cast<size_t>(s)]
              [static_cast<size_t>(r)];
}

const QSeries& TorusFamily::transfer_constants(int p, int s, int r) const {
  if (p < 0 || p > m_.n - 1 || r < 0 || s < 0 || r + s > p)
    throw DomainError("TorusFamily::transfer_constants: index");
  return ct_[static_cast<size_t>(p)][static_cast<size_t>(r)]
            [static_cast<size_t>(s)];
}

const QSeries& TorusFamily::subleading(int p, int r) const {
  if (p < 0 || p > m_.n - 1 || r < 0 || r > p + 1)
    throw DomainError("TorusFamily::subleading: index");
  return sub_[static_cast<size_t>(p)][static_cast<size_t>(r)];
}

// ---------------------------------------------------------------------------
// Recursion and pairing checks

RatFunc recursion_remainder(const TorusFamily& t,
                            const std::vector<HSeries>& z, int i, int dstar) {
  const WeightSystem& w = t.weights();
  if (static_cast<int>(z.size()) != w.n())
    throw DomainError("recursion_remainder: one series per fixed point");
  RatFunc rem = z[static_cast<size_t>(i)].coeff(dstar);
  for (int d = 1; d <= dstar; ++d)
    for (int j = 0; j < w.n(); ++j) {
      if (j == i) continue;
      Rat z0 = (w.alpha(j) - w.alpha(i)) / d;
      Rat val = z[static_cast<size_t>(j)].coeff(dstar - d).eval(z0);
      Rat c = t.recursion_coeff(i, j, d);
      rem -= RatFunc(Poly(c * val), Poly::X() - Poly(z0));
    }
  return rem;
}

std::vector<std::vector<RatFunc>> mutual_pairing(const WeightSystem& w,
                                                 const std::vector<HSeries>& y,
                                                 const std::vector<HSeries>& z,
                                                 int zorder) {
  if (static_cast<int>(y.size()) != w.n() ||
      static_cast<int>(z.size()) != w.n())
    throw DomainError("mutual_pairing: one series per fixed point");
  int qorder = y[0].order();
  for (const HSeries& s : y) qorder = std::min(qorder, s.order());
  for (const HSeries& s : z) qorder = std::min(qorder, s.order());
  const size_t za = static_cast<size_t>(zorder) + 1;
  const size_t qe = static_cast<size_t>(qorder) + 1;
  // Accumulate numerators over explicit common denominators; reduced
  // rational-function sums at these degrees are far too gcd-heavy.
  std::vector<std::vector<Poly>> num(za, std::vector<Poly>(qe));
  Poly den{Rat(1)};
  for (int i = 0; i < w.n(); ++i) {
    std::vector<RatFunc> zn;
    zn.reserve(qe);
    for (int d2 = 0; d2 <= qorder; ++d2)
      zn.push_back(z[static_cast<size_t>(i)].coeff(d2).neg_arg());
    // Separate least common denominators for the two factors: a linear
    // factor shared across the sides must stay with multiplicity two.
    Poly Dy{Rat(1)}, Dz{Rat(1)};
    auto extend = [](Poly& acc, const Poly& f) {
      Poly g = Poly::gcd(acc, f), q, r;
      Poly::divmod(f, g, q, r);
      acc = acc * q;
    };
    for (int d1 = 0; d1 <= qorder; ++d1)
      extend(Dy, y[static_cast<size_t>(i)].coeff(d1).den());
    for (int d2 = 0; d2 <= qorder; ++d2)
      extend(Dz, zn[static_cast<size_t>(d2)].den());
    Poly D = Dy * Dz;
    Rat pf = 1 / w.point_factor(i);
    std::vector<std::vector<Poly>> numi(za, std::vector<Poly>(qe));
    for (int d1 = 0; d1 <= qorder; ++d1)
      for (int d2 = 0; d1 + d2 <= qorder; ++d2) {
        const RatFunc& a1 = y[static_cast<size_t>(i)].coeff(d1);
        const RatFunc& a2 = zn[static_cast<size_t>(d2)];
        if (a1.is_zero() || a2.is_zero()) continue;
        Poly cof, rem;
        Poly::divmod(D, a1.den() * a2.den(), cof, rem);
        if (!rem.is_zero())
          throw CalcError("mutual_pairing: denominator bookkeeping");
        Poly base = a1.num() * a2.num() * cof * pf;
        // exp(alpha_i z) exp(d1 hbar z) contributes z^a with coefficient
        // sum_{b+c=a} alpha_i^b d1^c hbar^c / (b! c!).
        for (int a = 0; a <= zorder; ++a) {
          std::vector<Rat> pc(static_cast<size_t>(a) + 1, Rat(0));
          for (int c = 0; c <= a; ++c)
            pc[static_cast<size_t>(c)] =
                rat_pow(w.alpha(i), a - c) / Rat(factorial(a - c)) *
                rat_pow(Rat(d1), c) / Rat(factorial(c));
          numi[static_cast<size_t>(a)][static_cast<size_t>(d1 + d2)] +=
              base * Poly(std::move(pc));
        }
      }
    for (size_t a = 0; a < za; ++a)
      for (size_t e = 0; e < qe; ++e)
        num[a][e] = num[a][e] * D + numi[a][e] * den;
    den = den * D;
  }
  std::vector<std::vector<RatFunc>> out(za, std::vector<RatFunc>(qe));
  for (size_t a = 0; a < za; ++a)
    for (size_t e = 0; e < qe; ++e) {
      if (num[a][e].is_zero()) continue;
      Poly q, r;
      Poly::divmod(num[a][e], den, q, r);
      out[a][e] = r.is_zero() ? RatFunc(std::move(q))
                              : RatFunc(std::move(num[a][e]), den);
    }
  return out;
}

PairSeries::PairSeries(std::vector<Term> terms, Rat extra)
    : c_(std::move(terms)), extra_(std::move(extra)) {
  if (c_.empty()) throw DomainError("PairSeries: empty coefficient list");
}

const PairSeries::Term& PairSeries::term(int d) const {
  if (d < 0 || d >= static_cast<int>(c_.size()))
    throw DomainError("PairSeries: degree out of range");
  return c_[static_cast<size_t>(d)];
}

Rat PairSeries::eval(int d, const Rat& h1, const Rat& h2) const {
  const Term& t = term(d);
  Rat d1 = t.den1.eval(h1), d2 = t.den2.eval(h2);
  if (d1 == 0 || d2 == 0) throw PoleError("PairSeries::eval: denominator pole");
  Rat acc(0);
  for (size_t a = 0; a < t.num.size(); ++a) {
    if (t.num[a].empty()) continue;
    Rat row(0);
    for (size_t b = t.num[a].size(); b-- > 0;)
      row = row * h2 + t.num[a][b];
    acc += row * rat_pow(h1, static_cast<int>(a));
  }
  acc /= d1 * d2;
  if (d == 0 && extra_ != 0) {
    Rat s = h1 + h2;
    if (s == 0) throw PoleError("PairSeries::eval: antidiagonal pole");
    acc += extra_ / s;
  }
  return acc;
}

namespace {

// Taylor coefficients 0..ord of 1 / p for p(0) != 0.
std::vector<Rat> taylor_inverse(const Poly& p, int ord) {
  if (p.is_zero() || p.coeff(0) == 0)
    throw DomainError("taylor_inverse: zero constant term");
  std::vector<Rat> t(static_cast<size_t>(ord) + 1, Rat(0));
  Rat i0 = 1 / p.coeff(0);
  t[0] = i0;
  for (int k = 1; k <= ord; ++k) {
    Rat acc(0);
    for (int j = 1; j <= std::min(k, p.degree()); ++j)
      acc += p.coeff(j) * t[static_cast<size_t>(k - j)];
    t[static_cast<size_t>(k)] = -acc * i0;
  }
  return t;
}

}  // namespace

PairSeries::Block PairSeries::laurent_block(int d, int hi1, int hi2) const {
  const Term& t = term(d);
  if (d == 0 && extra_ != 0)
    throw DomainError("PairSeries::laurent_block: antidiagonal term present");
  const int v1 = t.den1.valuation(), v2 = t.den2.valuation();
  Poly q1, q2, r;
  Poly::divmod(t.den1, Poly::X().pow(static_cast<unsigned>(v1)), q1, r);
  Poly::divmod(t.den2, Poly::X().pow(static_cast<unsigned>(v2)), q2, r);
  const int w1 = hi1 + v1, w2 = hi2 + v2;
  Block blk{-v1, -v2,
            std::vector<std::vector<Rat>>(
                static_cast<size_t>(std::max(w1, 0)) + 1,
                std::vector<Rat>(static_cast<size_t>(std::max(w2, 0)) + 1,
                                 Rat(0)))};
  if (w1 < 0 || w2 < 0) return blk;
  std::vector<Rat> i1 = taylor_inverse(q1, w1), i2 = taylor_inverse(q2, w2);
  for (size_t a = 0; a < t.num.size(); ++a)
    for (size_t b = 0; b < t.num[a].size(); ++b) {
      const Rat& c = t.num[a][b];
      if (c == 0) continue;
      for (int u = static_cast<int>(a); u <= w1; ++u) {
        Rat cf = c * i1[static_cast<size_t>(u - static_cast<int>(a))];
        if (cf == 0) continue;
        for (int v = static_cast<int>(b); v <= w2; ++v)
          blk.c[static_cast<size_t>(u)][static_cast<size_t>(v)] +=
              cf * i2[static_cast<size_t>(v - static_cast<int>(b))];
      }
    }
  return blk;
}

PairSeries build_Z_joint(const TorusFamily& t, int i, int j,
                         bool in_mirror_variable) {
  const ModelSpec& m = t.model();
  const WeightSystem& w = t.weights();
  const int n = m.n, l = m.l(), qorder = t.qorder();
  std::vector<HSeries> y1, y2;
  y1.reserve(static_cast<size_t>(n));
  y2.reserve(static_cast<size_t>(n));
  for (int p = 0; p <= n - 1; ++p) {
    y1.push_back(in_mirror_variable ? t.family_mirror(i, p)
                                    : t.family_mirror_q(i, p));
    y2.push_back(in_mirror_variable ? t.family_mirror(j, p - l)
                                    : t.family_mirror_q(j, p - l));
  }
  Poly D1{Rat(1)}, D2{Rat(1)};
  auto extend = [](Poly& acc, const Poly& f) {
    Poly g = Poly::gcd(acc, f), q, r;
    Poly::divmod(f, g, q, r);
    acc = acc * q;
  };
  for (int p = 0; p < n; ++p)
    for (int d = 0; d <= qorder; ++d) {
      extend(D1, y1[static_cast<size_t>(p)].coeff(d).den());
      extend(D2, y2[static_cast<size_t>(p)].coeff(d).den());
    }
  const Rat pa(m.degree_product());
  // Degree-zero bracket: the coupled members reduce to monomials whose
  // symmetric sum is the antidiagonal residue; it vanishes at distinct
  // fixed points.
  Rat s0(0);
  for (int p1 = 0; p1 <= n - 1; ++p1)
    for (int p2 = 0; p1 + p2 <= n - 1; ++p2) {
      int r = n - 1 - p1 - p2;
      s0 += rat_pow(Rat(-1), r) * w.sigma(r) * rat_pow(w.alpha(i), l + p1) *
            rat_pow(w.alpha(j), p2);
    }
  if (i != j && s0 != 0)
    throw CalcError("build_Z_joint: nonzero off-diagonal residue");
  std::vector<PairSeries::Term> terms;
  terms.reserve(static_cast<size_t>(qorder) + 1);
  for (int d = 0; d <= qorder; ++d) {
    std::vector<std::vector<Rat>> num;
    auto add = [&num](const Poly& f1, const Poly& f2, const Rat& c) {
      if (f1.is_zero() || f2.is_zero()) return;
      const size_t da = static_cast<size_t>(f1.degree()) + 1;
      const size_t db = static_cast<size_t>(f2.degree()) + 1;
      if (num.size() < da) num.resize(da);
      for (size_t a = 0; a < da; ++a) {
        Rat ca = c * f1.coeff(static_cast<int>(a));
        if (ca == 0) continue;
        auto& row = num[a];
        if (row.size() < db) row.resize(db, Rat(0));
        for (size_t b = 0; b < db; ++b)
          row[b] += ca * f2.coeff(static_cast<int>(b));
      }
    };
    if (d > 0) {
      for (int p1 = 0; p1 <= n - 1; ++p1)
        for (int p2 = 0; p1 + p2 <= n - 1; ++p2) {
          int r = n - 1 - p1 - p2;
          Rat c = rat_pow(Rat(-1), r) * w.sigma(r) * pa;
          for (int d1 = 0; d1 <= d; ++d1) {
            const RatFunc& a1 = y1[static_cast<size_t>(p1)].coeff(d1);
            const RatFunc& a2 = y2[static_cast<size_t>(p2)].coeff(d - d1);
            if (a1.is_zero() || a2.is_zero()) continue;
            Poly c1, c2, rem;
            Poly::divmod(D1, a1.den(), c1, rem);
            if (!rem.is_zero())
              throw CalcError("build_Z_joint: denominator bookkeeping");
            Poly::divmod(D2, a2.den(), c2, rem);
            if (!rem.is_zero())
              throw CalcError("build_Z_joint: denominator bookkeeping");
            add(a1.num() * c1, a2.num() * c2, c);
          }
        }
    }
    // Exact division by (h1 + h2), synthetic along h1 with -h2 carried
    // into the rows; a nonzero remainder means the bracket was wrong.
    std::vector<std::vector<Rat>> quo;
    if (!num.empty()) {
      const size_t da = num.size();
      quo.assign(da - 1, {});
      std::vector<Rat> carry;  // current row being divided, top down
      for (size_t a = da; a-- > 1;) {
        std::vector<Rat>& row = num[a];
        if (carry.size() < row.size()) carry.resize(row.size(), Rat(0));
        for (size_t b = 0; b < row.size(); ++b) carry[b] += row[b];
        quo[a - 1] = carry;
        // multiply by -h2: shift up one h2-slot and negate
        std::vector<Rat> nxt(carry.size() + 1, Rat(0));
        for (size_t b = 0; b < carry.size(); ++b) nxt[b + 1] = -carry[b];
        carry = std::move(nxt);
      }
      if (carry.size() < num[0].size()) carry.resize(num[0].size(), Rat(0));
      for (size_t b = 0; b < num[0].size(); ++b) carry[b] += num[0][b];
      for (const Rat& c : carry)
        if (c != 0)
          throw CalcError("build_Z_joint: antidiagonal division not exact");
    }
    terms.push_back(PairSeries::Term{std::move(quo), D1, D2});
  }
  return PairSeries(std::move(terms), pa * s0);
}

}  // namespace gwm
