#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "gwm/hyperalg.hpp"
#include "gwm/hypergeom.hpp"
#include "gwm/model.hpp"
#include "gwm/series.hpp"

using namespace gwm;

namespace {

const ModelSpec quintic(5, {5});
const ModelSpec bicubic(6, {3, 3});
const ModelSpec sextic4(6, {6});
const ModelSpec sevenfold(7, {7});

// Applies the defining linear recursion of the hypergeometric family:
// {Dw^{n-l} - q <a> prod_k prod_{r=1..a_k-1} (a_k Dw + r)} h, Dw = w + q d/dq.
Laurent ode_defect(const ModelSpec& m, const WJets& f, int d) {
  WJets lhs = f;
  for (int i = 0; i < m.n - m.l(); ++i) lhs = op_Dw(lhs);
  WJets rhs = f;
  for (int a : m.degrees)
    for (int r = 1; r <= a - 1; ++r) {
      WJets t = op_Dw(rhs);
      Series<Laurent> s(t.qorder());
      for (int k = 0; k <= t.qorder(); ++k)
        s.set_coeff(k, t.coeff(k) * Rat(a) + rhs.coeff(k) * Rat(r));
      rhs = WJets(std::move(s), t.wcut);
    }
  Rat pa(m.degree_product());
  // subtract q * <a> * rhs, i.e. shift rhs by one q power
  Laurent out = lhs.coeff(d);
  if (d >= 1) out = out - rhs.coeff(d - 1) * pa;
  return out;
}

}  // namespace

TEST_CASE("explicit low-degree coefficients") {
  QSeries i0 = ifunction(quintic, 0, 3);
  CHECK(i0.coeff(0) == 1);
  CHECK(i0.coeff(1) == 120);    // 5!/1
  CHECK(i0.coeff(2) == 113400); // 10!/2^5
  Rat d3(Int(factorial(15)), Int(int_pow(Int(6), 5)));
  d3.canonicalize();
  CHECK(i0.coeff(3) == d3);

  QSeries j = J_series(quintic, 2);
  CHECK(j.coeff(0) == 0);
  CHECK(j.coeff(1) == 770);  // 120 * 5 * (1/2+1/3+1/4+1/5)

  QSeries c1 = C1_series(quintic, 2);
  CHECK(c1.coeff(1) == 120);
  CHECK(c1.coeff(2) == 113400 * rat(3, 2) - 120 * 120);

  QSeries i0b = ifunction(bicubic, 0, 2);
  CHECK(i0b.coeff(1) == 36);        // (3!)^2
  CHECK(i0b.coeff(2) == rat(6 * 6 * 120 * 120, 4 * 16));  // (6!)^2/(2!)^6
}

TEST_CASE("one plus the log-derivative of the mirror shift is I_1") {
  for (const ModelSpec& m : {quintic, bicubic, sextic4}) {
    QSeries j = J_series(m, 8);
    QSeries lhs = QSeries::constant(1, 8) + j.logderiv();
    CHECK(lhs == ifunction(m, 1, 8));
  }
}

TEST_CASE("normalization series are palindromic") {
  for (const ModelSpec& m : {quintic, bicubic, sextic4, sevenfold,
                             ModelSpec(8, {2, 2, 2, 2}), ModelSpec(9, {5, 4})}) {
    int top = m.n - m.l();
    auto is = ifunctions(m, top, 6);
    for (int b = 0; b <= m.n - m.l() - 2; ++b)
      CHECK(is[static_cast<size_t>(b) + 1] == is[static_cast<size_t>(m.n - 1 - m.l() - b)]);
    CHECK(is[0] == is[static_cast<size_t>(top)]);
  }
}

TEST_CASE("product of all normalization series") {
  for (const ModelSpec& m : {quintic, bicubic, ModelSpec(6, {2, 4}), sextic4}) {
    int top = m.n - m.l();
    auto is = ifunctions(m, top, 7);
    QSeries prod = QSeries::constant(1, 7);
    for (const QSeries& f : is) prod = prod * f;
    Rat aa(m.degree_self_power());
    QSeries target = (QSeries::constant(1, 7) - QSeries::var(7) * aa).inverted();
    CHECK(prod == target);
  }
}

TEST_CASE("normalized log-derivative cascade collapses to a linear term") {
  for (const ModelSpec& m : {quintic, bicubic, sextic4,
                             ModelSpec(8, {2, 2, 2, 2}), ModelSpec(7, {3, 2, 2})}) {
    const int ord = 20;
    auto is = ifunctions(m, m.n - m.l(), ord);
    QSeries cur = is[0].inverted();
    for (int p = 1; p <= m.n - m.l(); ++p)
      cur = cur.logderiv().div_scalar_series(is[static_cast<size_t>(p)]);
    QSeries target = QSeries::var(ord) * Rat(-Int(m.degree_factorial()));
    CHECK(cur == target);
  }
}

TEST_CASE("hypergeometric series satisfies its defining recursion") {
  for (const ModelSpec& m : {quintic, bicubic, ModelSpec(6, {2, 4})}) {
    WJets f = hyper_series(m, 5, m.n - m.l() + 2);
    for (int d = 0; d <= 5; ++d) {
      Laurent defect = ode_defect(m, f, d);
      defect = defect.truncated_above(f.wcut);
      if (d == 0)
        CHECK(defect == Laurent::monomial(1, m.n - m.l()));
      else
        CHECK(defect.is_zero());
    }
  }
}

TEST_CASE("low-range series recovers the principal one after l derivations") {
  for (const ModelSpec& m : {quintic, bicubic, ModelSpec(7, {3, 2})}) {
    WJets low = hyper_series(m, 4, m.l() + 4, true);
    WJets cur = low;
    for (int p = 0; p < m.l(); ++p) cur = op_D(cur);
    WJets f = hyper_series(m, 4, cur.wcut);
    for (int d = 0; d <= 4; ++d) CHECK(cur.coeff(d) == f.coeff(d));
    // the low-range series itself is regular at w = 0 with value 1
    QSeries v = value_at_w0(low);
    CHECK(v == QSeries::constant(1, 4));
  }
}

TEST_CASE("top normalization flattens the series in w") {
  for (const ModelSpec& m : {quintic, bicubic}) {
    int top = m.n - m.l();
    WJets h = hyper_series(m, 4, top + 2);
    for (int p = 0; p < top; ++p) h = op_M(h);
    QSeries flat = value_at_w0(h);
    CHECK(flat == ifunction(m, top, 4));
    for (int d = 0; d <= 4; ++d) {
      CHECK(h.coeff(d).coeff(1) == 0);
      CHECK(h.coeff(d).coeff(2) == 0);
    }
  }
}

TEST_CASE("appending a linear factor changes nothing") {
  ModelSpec plus = quintic.with_appended_linear();
  CHECK(plus.calabi_yau());
  auto a = ifunctions(quintic, 4, 6);
  auto b = ifunctions(plus, 4, 6);
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  CHECK(J_series(quintic, 6) == J_series(plus, 6));
  CHECK(C1_series(quintic, 6) == C1_series(plus, 6));
  CHECK(mirror_map(quintic, 6) == mirror_map(plus, 6));
}

TEST_CASE("mirror map inverts cleanly") {
  for (const ModelSpec& m : {quintic, bicubic}) {
    QSeries big = mirror_map(m, 8);
    QSeries back = mirror_inverse(m, 8);
    CHECK(big.composed(back) == QSeries::var(8));
    CHECK(back.coeff(1) == 1);
  }
}

TEST_CASE("fano models have trivial normalization series") {
  ModelSpec fano(5, {3});
  auto is = ifunctions(fano, 3, 5);
  for (const auto& f : is) CHECK(f == QSeries::constant(1, 5));
  CHECK_THROWS_AS(J_series(fano, 4), DomainError);
  CHECK_THROWS_AS(C1_series(fano, 4), DomainError);
}

TEST_CASE("deformed root solves its defining equation") {
  WeightSystem w = WeightSystem::conjugate_pairs(5);
  Poly dp = weight_char_poly(w).derivative();
  for (const Rat& x : {w.alpha(0), rat(7, 3)}) {
    QSeries L = L_series(quintic, w, x, 6);
    CHECK(L.coeff(0) == x);
    CHECK(L.coeff(1) == Rat(Rat(3125) * rat_pow(x, 5) / dp.eval(x)));
    QSeries xi = xi_series(quintic, w, x, 6);
    CHECK(xi.coeff(0) == 0);
    CHECK(xi.logderiv() == L - QSeries::constant(x, 6));
  }
}

TEST_CASE("profile parity across the weight pairing") {
  struct Draw { ModelSpec m; unsigned seed; } draws[] = {{quintic, 7},
                                                         {bicubic, 11}};
  for (const auto& dr : draws) {
    WeightSystem w = WeightSystem::random_conjugate_pairs(dr.m.n, dr.seed);
    const Rat x = rat(5, 2);
    CHECK(eta_series(dr.m, w, x, 5) == -eta_series(dr.m, w, -x, 5));
    CHECK(phi0_series(dr.m, w, x, 5) == phi0_series(dr.m, w, -x, 5));
    CHECK(L_series(dr.m, w, x, 5) == -L_series(dr.m, w, -x, 5));
  }
}

TEST_CASE("profile normalizations at q = 0") {
  WeightSystem w = WeightSystem::conjugate_pairs(6);
  const Rat x = w.alpha(2);
  MirrorProfile pr = mirror_profile(bicubic, w, x, 4);
  CHECK(pr.L.coeff(0) == x);
  CHECK(pr.xi.coeff(0) == 0);
  CHECK(pr.eta.coeff(0) == 0);
  CHECK(pr.phi0.coeff(0) == 1);
  CHECK(pr.phi1.coeff(0) == 0);
  CHECK(pr.psi.coeff(0) == Rat(x * weight_char_poly(w).derivative().eval(x)));
  // q-derivative chain rule between Psi and its scaled L-derivative
  CHECK(pr.psi.logderiv() * pr.L == pr.psi_dot * pr.L.logderiv());
}

TEST_CASE("centered vertex log has at most simple poles in hbar") {
  WeightSystem w = WeightSystem::conjugate_pairs(5);
  for (const Rat& x : {w.alpha(0), rat(3, 4)}) {
    for (bool low : {false, true}) {
      VertexExpansion ve = centered_vertex_expansion(quintic, w, x, 4, low);
      CHECK(ve.max_log_pole <= 1);
    }
  }
}

TEST_CASE("regularized vertex expansion matches the closed profile") {
  WeightSystem w = WeightSystem::conjugate_pairs(5);
  for (const Rat& x : {w.alpha(1), rat(7, 3)}) {
    MirrorProfile pr = mirror_profile(quintic, w, x, 4);
    VertexExpansion hi = centered_vertex_expansion(quintic, w, x, 4);
    VertexExpansion lo = centered_vertex_expansion(quintic, w, x, 4, true);
    CHECK(hi.xi == pr.xi);
    CHECK(lo.xi == pr.xi);
    CHECK(hi.phi0 == pr.phi0);
    // one application of {1 + (hbar/x) q d/dq} per degree factor relates
    // the two normalizations at leading hbar-order
    CHECK(lo.phi0 * (pr.L * (1 / x)) == hi.phi0);
  }
}

TEST_CASE("degenerate base points are rejected") {
  ModelSpec cubic3(3, {3});
  WeightSystem rep(std::vector<Rat>{Rat(1), Rat(1), Rat(-2)});
  CHECK_THROWS_AS(L_series(cubic3, rep, Rat(1), 3), DegenerateWeights);
  WeightSystem w = WeightSystem::conjugate_pairs(5);
  CHECK_THROWS_AS(phi0_series(quintic, w, Rat(0), 3), DomainError);
  ModelSpec fano(5, {3});
  CHECK_THROWS_AS(L_series(fano, w, Rat(2), 3), DomainError);
}
