#pragma once

#include <map>
#include <vector>

#include "gwm/model.hpp"
#include "gwm/series.hpp"
#include "gwm/weights.hpp"

namespace gwm {

// q-series whose coefficients are exact rational functions of hbar: the
// shape of a torus-fixed-point evaluation.
using HSeries = Series<RatFunc>;

// Expansion of a fixed-point family around hbar = infinity with x kept
// symbolic: for each q-degree, a map from hbar-exponent to a polynomial
// in x. Exponents below `floor` are dropped; every retained slice is exact.
class HbarExpansion {
 public:
  HbarExpansion() = default;
  HbarExpansion(int qorder, int floor);

  int qorder() const { return static_cast<int>(sl_.size()) - 1; }
  int floor() const { return floor_; }
  // Zero polynomial when the slice is absent; throws below the floor,
  // where dropped terms would be silently misread as zeros.
  Poly slice(int d, int e) const;
  void add_to(int d, int e, Poly p);

  HbarExpansion plus(const HbarExpansion& o) const;  // floor = max of floors
  HbarExpansion scaled(const Rat& t) const;
  HbarExpansion times_qseries(const QSeries& f) const;
  HbarExpansion hbar_times(int k) const;    // multiply by hbar^k
  HbarExpansion x_times(int k) const;       // multiply by x^k, k >= 0
  HbarExpansion applied_shift() const;      // {x + hbar q d/dq}; floor rises

  // Substitute a numeric x; per q-degree a Laurent polynomial in hbar.
  Series<Laurent> evaluated(const Rat& x) const;

 private:
  std::vector<std::map<int, Poly>> sl_;
  int floor_ = 0;
};

// Laurent expansion of f(hbar) around hbar = infinity, exponents down to
// `floor` (the returned Laurent's variable is hbar).
Laurent expansion_at_infinity(const RatFunc& f, int floor);

// The equivariant hypergeometric family of a model at a numeric weight
// system: fixed-point evaluations (exact in hbar), symbolic-x expansions,
// and the two triangular tables of structure constants connecting them.
class TorusFamily {
 public:
  // qorder: q-precision. smax: depth of the retained 1/hbar window; the
  // default n covers every structure constant and subleading extraction.
  TorusFamily(ModelSpec m, WeightSystem w, int qorder, int smax = -1);

  const ModelSpec& model() const { return m_; }
  const WeightSystem& weights() const { return w_; }
  int qorder() const { return qorder_; }
  int smax() const { return smax_; }

  // I_p normalizers of the derivative cascade; identically 1 unless the
  // model is Calabi-Yau.
  const QSeries& cascade_norm(int p) const;

  // --- fixed-point evaluations (need distinct weights) ---
  const HSeries& vertex_series(int i) const;      // base series at alpha_i
  const HSeries& vertex_series_low(int i) const;  // low-range numerator variant
  const HSeries& cascade_eval(int i, int s) const;
  HSeries family(int i, int p) const;             // -l <= p <= n-1
  HSeries family_mirror(int i, int p) const;      // in Q, prefactors applied
  // Prefactors applied but the variable left as q: the presentation the
  // residue calculus works in before the final mirror substitution.
  HSeries family_mirror_q(int i, int p) const;
  HSeries mirror_series(int i) const;             // degree-one-insertion series
  Rat recursion_coeff(int i, int j, int d) const;

  // --- symbolic-x expansions ---
  const HbarExpansion& cascade_expansion(int s) const;
  const HbarExpansion& family_expansion(int p) const;  // 0 <= p <= n-1

  // --- structure constants as q-series at the numeric weights ---
  // Read off the cascade expansion; defined for r <= s <= smax, p <= n-1.
  const QSeries& expansion_constants(int p, int s, int r) const;
  // Solved triangular inverses entering the family assembly; r + s <= p.
  const QSeries& transfer_constants(int p, int s, int r) const;
  // Coefficient of x^{l+p+1-r} hbar^{-1} in the family expansion: the
  // first subleading tail of family p, 0 <= r <= p+1.
  const QSeries& subleading(int p, int r) const;

 private:
  ModelSpec m_;
  WeightSystem w_;
  int qorder_;
  int smax_;

  std::vector<QSeries> norms_;               // I_0..I_{n}
  QSeries inv_norm0_;                        // 1 / I_0
  std::vector<HbarExpansion> cascade_exp_;   // s = 0..n-1
  std::vector<HbarExpansion> family_exp_;    // p = 0..n-1
  // cexp_[p][s][r], r <= s <= smax
  std::vector<std::vector<std::vector<QSeries>>> cexp_;
  // ct_[p][r][s], r <= p, s <= p-r
  std::vector<std::vector<std::vector<QSeries>>> ct_;
  // sub_[p][r], r <= p+1
  std::vector<std::vector<QSeries>> sub_;
  // eval caches, built only for distinct weights
  std::vector<HSeries> vertex_, vertex_low_;
  std::vector<std::vector<HSeries>> cascade_ev_;  // [i][s]

  void build_expansions();
  void build_tables();
  void build_evaluations();
  void require_distinct() const;
};

// Pole-subtracted recursion remainder at fixed-point index i and top degree
// dstar, for a family given by its per-fixed-point evaluations. The family
// is recursive at this degree exactly when the result is a Laurent
// polynomial in hbar (denominator a power of hbar).
RatFunc recursion_remainder(const TorusFamily& t,
                            const std::vector<HSeries>& z, int i, int dstar);

// Coefficients [z^a][Q^e] of the localization pairing of two families
// (first argument shifted by Q -> Q exp(hbar z), second by hbar -> -hbar).
// The pair is mutually polynomial exactly when every entry is a polynomial
// in hbar.
std::vector<std::vector<RatFunc>> mutual_pairing(const WeightSystem& w,
                                                 const std::vector<HSeries>& y,
                                                 const std::vector<HSeries>& z,
                                                 int zorder);

// Two-point joint family: per degree a bivariate rational function
// N(h1, h2) / (den1(h1) den2(h2)) with separable denominators, plus one
// explicit antidiagonal term extra / (h1 + h2) at degree zero, nonzero
// only when the two fixed points coincide.
class PairSeries {
 public:
  struct Term {
    std::vector<std::vector<Rat>> num;  // num[a][b] h1^a h2^b
    Poly den1, den2;
  };
  PairSeries(std::vector<Term> terms, Rat extra);

  int qorder() const { return static_cast<int>(c_.size()) - 1; }
  const Term& term(int d) const;
  const Rat& extra() const { return extra_; }

  // Value of the degree-d coefficient at numeric (h1, h2); degree 0
  // includes the antidiagonal term, so h1 + h2 must not vanish there
  // unless that term is absent.
  Rat eval(int d, const Rat& h1, const Rat& h2) const;

  // Dense Laurent window of the degree-d coefficient around (0, 0):
  // c[a][b] is the coefficient of h1^{lo1+a} h2^{lo2+b}, covering all
  // exponents up to (hi1, hi2). Refuses the antidiagonal term.
  struct Block {
    int lo1, lo2;
    std::vector<std::vector<Rat>> c;
  };
  Block laurent_block(int d, int hi1, int hi2) const;

 private:
  std::vector<Term> c_;
  Rat extra_;
};

// The joint family at fixed points (i, j): one-variable members coupled
// by elementary symmetric weights and divided once by (h1 + h2), which
// must be exact degree by degree. With in_mirror_variable the members are
// taken in the mirror variable Q; otherwise they are left in q with the
// exponential prefactors applied.
PairSeries build_Z_joint(const TorusFamily& t, int i, int j,
                         bool in_mirror_variable = true);

}  // namespace gwm
