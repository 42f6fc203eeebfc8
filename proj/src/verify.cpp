#include "gwm/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gwm/coeffs.hpp"
#include "gwm/equivariant.hpp"
#include "gwm/hypergeom.hpp"
#include "gwm/open_gw.hpp"

namespace gwm {

namespace {

void run_check(std::vector<CheckResult>& out, const std::string& name,
               const std::function<bool(std::string&)>& body) {
  CheckResult r;
  r.name = name;
  try {
    std::string detail;
    r.pass = body(detail);
    r.detail = detail;
    if (!r.pass && r.detail.empty()) r.detail = "mismatch";
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  out.push_back(std::move(r));
}

bool series_zero(const HSeries& s) {
  for (int d = 0; d <= s.order(); ++d)
    if (!s.coeff(d).is_zero()) return false;
  return true;
}

}  // namespace

WeightSystem resolve_weights(const VerifyOptions& opts, bool conjugate) {
  const int n = opts.model.n;
  if (opts.weight_mode == "explicit") return WeightSystem(opts.weight_values);
  if (opts.weight_mode == "random")
    return conjugate ? WeightSystem::random_conjugate_pairs(n, opts.seed)
                     : WeightSystem::random(n, opts.seed);
  if (opts.weight_mode == "default")
    return conjugate ? WeightSystem::conjugate_pairs(n)
                     : WeightSystem::reference(n);
  throw DomainError("verify: unknown weight mode '" + opts.weight_mode + "'");
}

std::vector<CheckResult> verify_coeffs(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const ModelSpec m = opts.model;
  const int dmax = std::max(1, std::min(opts.dmax, 6));

  run_check(out, "coeffs: degree-zero tables are deltas", [&](std::string&) {
    CoeffTables ct(m, 1);
    for (int p = 0; p <= ct.pmax(); ++p)
      for (int s = 0; s <= ct.pmax(); ++s)
        if (ct.c(p, s, 0) != (p == s ? 1 : 0)) return false;
    return true;
  });

  run_check(out, "coeffs: inverse tables satisfy their convolution",
            [&](std::string& detail) {
              CoeffTables ct(m, dmax);
              const int nu = m.nu();
              for (int p = 0; p <= ct.pmax(); ++p)
                for (int d = 0; d <= dmax; ++d)
                  for (int s = 0; s + nu * d <= p; ++s) {
                    Rat acc = 0;
                    for (int d1 = 0; d1 <= d; ++d1)
                      for (int r = 0; r + nu * d1 <= p; ++r)
                        acc += ct.ctilde(p, r, d1) * ct.c(r, s, d - d1);
                    if (acc != ((d == 0 && p == s) ? 1 : 0)) {
                      std::ostringstream os;
                      os << "defect at p=" << p << " s=" << s << " d=" << d;
                      detail = os.str();
                      return false;
                    }
                  }
              return true;
            });

  run_check(out, "coeffs: degree-one inverse matches the closed form",
            [&](std::string&) {
              CoeffTables ct(m, 1);
              const int nu = m.nu();
              for (int p = nu; p <= ct.pmax(); ++p)
                for (int s = 0; s <= p - nu; ++s)
                  if (ct.ctilde(p, s, 1) != ctilde_deg1_closed(m, p, s))
                    return false;
              return true;
            });

  if (m.fano())
    run_check(out, "coeffs: structure series regular at the origin",
              [&](std::string&) {
                CoeffTables ct(m, 2);
                // regularity is asserted inside the builder
                for (int p = 0; p <= std::min(ct.pmax(), m.n - 1); ++p)
                  fano_structure_series(ct, p, 2, 3);
                return true;
              });

  return out;
}

std::vector<CheckResult> verify_hypergeom(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const ModelSpec m = opts.model;
  const int qo = std::max(2, opts.qorder);
  const int top = m.n - m.l();

  if (m.calabi_yau()) {
    run_check(out, "hypergeom: normalization series are palindromic",
              [&](std::string&) {
                auto is = ifunctions(m, top, qo);
                for (int b = 0; b + 2 <= top; ++b)
                  if (is[static_cast<size_t>(b) + 1] !=
                      is[static_cast<size_t>(top - 1 - b)])
                    return false;
                return is[0] == is[static_cast<size_t>(top)];
              });

    run_check(out, "hypergeom: normalization product matches the discriminant",
              [&](std::string&) {
                auto is = ifunctions(m, top, qo);
                QSeries prod = QSeries::constant(1, qo);
                for (const QSeries& f : is) prod = prod * f;
                QSeries disc = QSeries::constant(1, qo) -
                               QSeries::var(qo) * Rat(m.degree_self_power());
                return prod == disc.inverted();
              });

    run_check(out, "hypergeom: derivative cascade collapses to a linear term",
              [&](std::string&) {
                auto is = ifunctions(m, top, qo);
                QSeries cur = is[0].inverted();
                for (int p = 1; p <= top; ++p)
                  cur = cur.logderiv().div_scalar_series(
                      is[static_cast<size_t>(p)]);
                return cur ==
                       QSeries::var(qo) * Rat(-Int(m.degree_factorial()));
              });

    run_check(out, "hypergeom: mirror map round-trips", [&](std::string&) {
      return mirror_map(m, qo).composed(mirror_inverse(m, qo)) ==
             QSeries::var(qo);
    });
  } else {
    run_check(out, "hypergeom: normalization series trivialize",
              [&](std::string&) {
                auto is = ifunctions(m, top, qo);
                for (const QSeries& f : is)
                  if (f != QSeries::constant(1, qo)) return false;
                return true;
              });
  }

  return out;
}

std::vector<CheckResult> verify_equivariant(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const ModelSpec m = opts.model;
  const int qo = std::max(1, std::min(opts.qorder, 3));

  struct Setup {
    WeightSystem w;
    TorusFamily t;
  };
  std::vector<Setup> holder;
  try {
    WeightSystem w = resolve_weights(opts, false);
    holder.push_back({w, TorusFamily(m, w, qo)});
  } catch (const std::exception& e) {
    out.push_back({"equivariant: weight system", false, e.what()});
    return out;
  }
  const WeightSystem& w = holder.front().w;
  const TorusFamily& t = holder.front().t;
  const int n = m.n, l = m.l();

  run_check(out, "equivariant: mirror series start at one", [&](std::string&) {
    for (int i = 0; i < n; ++i)
      if (t.mirror_series(i).coeff(0) != RatFunc(Rat(1))) return false;
    return true;
  });

  run_check(out, "equivariant: families satisfy the pole recursion",
            [&](std::string& detail) {
              std::vector<HSeries> z;
              for (int i = 0; i < n; ++i) z.push_back(t.family(i, 0));
              for (int dstar = 1; dstar <= qo; ++dstar)
                for (int i = 0; i < n; ++i)
                  if (!recursion_remainder(t, z, i, dstar)
                           .den_is_power_of_var()) {
                    std::ostringstream os;
                    os << "foreign pole at i=" << i << " d=" << dstar;
                    detail = os.str();
                    return false;
                  }
              return true;
            });

  run_check(out, "equivariant: paired families couple polynomially",
            [&](std::string&) {
              std::vector<HSeries> y, z;
              for (int i = 0; i < n; ++i) {
                y.push_back(t.vertex_series(i));
                z.push_back(t.family(i, 1));
              }
              for (const auto& row : mutual_pairing(w, y, z, qo))
                for (const RatFunc& f : row)
                  if (!f.is_polynomial()) return false;
              return true;
            });

  run_check(out, "equivariant: alternating family sums vanish",
            [&](std::string&) {
              for (int i = 0; i < n; ++i)
                for (int p = n - l; p <= n - 1; ++p) {
                  HSeries acc(qo);
                  for (int r = 0; r <= n; ++r) {
                    Rat c = (r % 2 == 0 ? Rat(1) : Rat(-1)) * w.sigma(r);
                    acc = acc + t.family(i, p - r).scaled(RatFunc(c));
                  }
                  if (!series_zero(acc)) return false;
                }
              return true;
            });

  return out;
}

std::vector<CheckResult> verify_open(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const ModelSpec m = opts.model;

  if (!m.open_sector_ok()) {
    out.push_back({"open: model supports the open sector", false,
                   m.label() + " is not a Calabi-Yau threefold intersection"});
    return out;
  }
  out.push_back({"open: model supports the open sector", true, ""});

  std::vector<OpenModel> holder;
  try {
    holder.emplace_back(m, resolve_weights(opts, true));
  } catch (const std::exception& e) {
    out.push_back({"open: weight system", false, e.what()});
    return out;
  }
  const OpenModel& om = holder.front();

  run_check(out, "open: disk factor forms agree", [&](std::string&) {
    for (int i = 0; i < 2 * om.pairs(); ++i)
      for (int g : {1, 3})
        if (disk_factor(om, i, g) != disk_factor_product_form(om, i, g))
          return false;
    return true;
  });

  run_check(out, "open: disk graph sum equals the closed form",
            [&](std::string&) {
              const int uorder = 2 * std::min(opts.qorder, 2) + 1;
              return disk_potential(om, uorder, Route::graphsum) ==
                     disk_potential(om, uorder, Route::mirror);
            });

  run_check(out, "open: annulus graph sum equals the closed form",
            [&](std::string& detail) {
              const int dmax = std::max(1, std::min(opts.dmax, 3));
              auto a = annulus_invariants(om, dmax, Route::graphsum);
              auto b = annulus_invariants(om, dmax, Route::mirror);
              for (int d = 1; d <= dmax; ++d)
                if (a[d] != b[d]) {
                  detail = "first mismatch at degree " + std::to_string(d);
                  return false;
                }
              return true;
            });

  run_check(out, "open: klein graph sum equals the closed form",
            [&](std::string& detail) {
              const int dmax = std::max(1, std::min(opts.dmax, 2));
              auto a = klein_invariants(om, dmax, Route::graphsum);
              auto b = klein_invariants(om, dmax, Route::mirror);
              for (int d = 1; d <= dmax; ++d)
                if (a[d] != b[d]) {
                  detail = "first mismatch at degree " + std::to_string(d);
                  return false;
                }
              return true;
            });

  return out;
}

std::vector<CheckResult> run_suites(const std::vector<std::string>& names,
                                    const VerifyOptions& opts) {
  std::vector<std::string> want = names;
  if (want.empty() ||
      std::find(want.begin(), want.end(), "all") != want.end())
    want = {"coeffs", "hypergeom", "equivariant", "open"};

  std::vector<CheckResult> out;
  for (const std::string& s : want) {
    std::vector<CheckResult> part;
    if (s == "coeffs")
      part = verify_coeffs(opts);
    else if (s == "hypergeom")
      part = verify_hypergeom(opts);
    else if (s == "equivariant")
      part = verify_equivariant(opts);
    else if (s == "open")
      part = verify_open(opts);
    else
      part = {{"suite: " + s, false, "unknown suite name"}};
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace gwm
