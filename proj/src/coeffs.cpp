#include "gwm/coeffs.hpp"

#include <algorithm>

namespace gwm {

CoeffTables::CoeffTables(ModelSpec m, int dmax, int pmax, int smax)
    : m_(std::move(m)), dmax_(dmax) {
  if (!m_.fano()) throw DomainError("CoeffTables: Fano models only");
  if (dmax_ < 0) throw DomainError("CoeffTables: negative degree bound");
  pmax_ = pmax >= 0 ? pmax : m_.n - 1 - m_.l();
  scut_ = std::max(smax >= 0 ? smax : pmax_, pmax_);

  jets_.reserve(static_cast<size_t>(dmax_) + 1);
  for (int d = 0; d <= dmax_; ++d) jets_.push_back(hyper_coeff_jet(m_, d, scut_));

  const int nu = m_.nu();
  ct_.assign(static_cast<size_t>(pmax_) + 1, {});
  for (int p = 0; p <= pmax_; ++p) {
    auto& per_p = ct_[static_cast<size_t>(p)];
    per_p.assign(static_cast<size_t>(dmax_) + 1, {});
    for (int d = 0; d <= dmax_; ++d) {
      int stop = p - nu * d;
      if (stop < 0) continue;
      auto& row = per_p[static_cast<size_t>(d)];
      row.assign(static_cast<size_t>(stop) + 1, Rat(0));
      for (int s = 0; s <= stop; ++s) {
        if (d == 0) {
          row[static_cast<size_t>(s)] = p == s ? 1 : 0;
          continue;
        }
        Rat acc = 0;
        for (int d1 = 0; d1 < d; ++d1) {
          int rtop = p - nu * d1;
          for (int r = 0; r <= rtop; ++r) {
            const Rat& t = per_p[static_cast<size_t>(d1)][static_cast<size_t>(r)];
            if (t == 0) continue;
            acc += t * c(r, s, d - d1);
          }
        }
        row[static_cast<size_t>(s)] = -acc;
      }
    }
  }
}

Rat CoeffTables::c(int p, int s, int d) const {
  if (p < 0 || s < 0 || d < 0 || d > dmax_)
    throw DomainError("CoeffTables::c: index out of range");
  if (s > scut_) throw DomainError("CoeffTables::c: s beyond computed window");
  const Poly& jet = jets_[static_cast<size_t>(d)];
  Rat acc = 0;
  for (int j = std::max(0, s - jet.degree()); j <= std::min(p, s); ++j)
    acc += Rat(binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(j))) *
           rat_pow(Rat(d), p - j) * jet.coeff(s - j);
  return acc;
}

bool CoeffTables::ctilde_defined(int p, int s, int d) const {
  return p >= 0 && p <= pmax_ && d >= 0 && d <= dmax_ && s >= 0 &&
         s <= p - m_.nu() * d;
}

Rat CoeffTables::ctilde(int p, int s, int d) const {
  if (!ctilde_defined(p, s, d))
    throw DomainError("CoeffTables::ctilde: index out of range");
  return ct_[static_cast<size_t>(p)][static_cast<size_t>(d)][static_cast<size_t>(s)];
}

Rat ctilde_deg1_closed(const ModelSpec& m, int p, int s) {
  if (!m.fano()) throw DomainError("ctilde_deg1_closed: Fano models only");
  if (s < 0 || s > p - m.nu())
    throw DomainError("ctilde_deg1_closed: index out of range");
  Poly num{Rat(1)};
  auto tmul = [s](const Poly& a, const Poly& b) {
    Poly full = a * b;
    if (full.degree() <= s) return full;
    std::vector<Rat> c(full.coeffs().begin(), full.coeffs().begin() + s + 1);
    return Poly(std::move(c));
  };
  for (int a : m.degrees)
    for (int r = 1; r <= a - 1; ++r) num = tmul(num, Poly({Rat(r), Rat(a)}));
  // divide by (w+1)^{n-l-p} as a Taylor series at 0
  int e = m.n - m.l() - p;
  Rat acc = 0;
  for (int j = 0; j <= s && j <= num.degree(); ++j) {
    // [w^{s-j}] (1+w)^{-e} = binom(-e, s-j) = (-1)^{s-j} binom(e+s-j-1, s-j)
    int k = s - j;
    Rat b;
    if (e >= 0) {
      b = Rat(binomial(static_cast<unsigned long>(e + k - 1), static_cast<unsigned long>(k)));
      if (k % 2) b = -b;
    } else {
      b = Rat(binomial(static_cast<unsigned long>(-e), static_cast<unsigned long>(k)));
      if (k > -e) b = 0;
    }
    acc += num.coeff(j) * b;
  }
  return -Rat(m.degree_product()) * acc;
}

WJets fano_structure_series(const CoeffTables& ct, int p, int qorder, int wcut) {
  const ModelSpec& m = ct.model();
  if (p < 0) throw DomainError("fano_structure_series: negative p");
  if (p > ct.pmax()) throw DomainError("fano_structure_series: p beyond tables");
  const int nu = m.nu();
  if (ct.dmax() < std::min(qorder, p / nu))
    throw DomainError("fano_structure_series: tables too shallow");

  // D^s F for s = 0..p, starting with enough w-precision to survive the
  // s derivations and the division by w^{p - nu d - s}.
  std::vector<WJets> derivs;
  derivs.push_back(hyper_series(m, qorder, wcut + 2 * p));
  for (int s = 1; s <= p; ++s) derivs.push_back(op_D(derivs.back()));

  Series<Laurent> acc(qorder);
  for (int d = 0; d <= std::min(qorder, ct.dmax()); ++d) {
    if (p - nu * d < 0) break;
    for (int s = 0; s <= p - nu * d; ++s) {
      Rat t = ct.ctilde(p, s, d);
      if (t == 0) continue;
      const WJets& ds = derivs[static_cast<size_t>(s)];
      int down = p - nu * d - s;
      for (int e = 0; e + d <= qorder; ++e) {
        Laurent term = ds.coeff(e).times_xk(-down) * t;
        acc.set_coeff(e + d, acc.coeff(e + d) + term);
      }
    }
  }

  Series<Laurent> out(qorder);
  for (int d = 0; d <= qorder; ++d) {
    Laurent c = acc.coeff(d).truncated_above(wcut);
    if (!c.regular())
      throw DomainError("fano_structure_series: pole at w=0");
    out.set_coeff(d, c);
  }
  return WJets(std::move(out), wcut);
}

std::vector<ModelSpec> fano_models(int n) {
  std::vector<ModelSpec> out;
  std::vector<int> cur;
  // tuples with nonincreasing parts >= 2, |a| <= n-1, dim >= 1
  auto rec = [&](auto&& self, int maxpart, int room) -> void {
    if (n - 1 - static_cast<int>(cur.size()) >= 1) out.emplace_back(n, cur);
    for (int a = std::min(maxpart, room); a >= 2; --a) {
      cur.push_back(a);
      self(self, a, room - a);
      cur.pop_back();
    }
  };
  rec(rec, n - 1, n - 1);
  return out;
}

}  // namespace gwm
