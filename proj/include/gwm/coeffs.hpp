#pragma once

#include <vector>

#include "gwm/hypergeom.hpp"
#include "gwm/model.hpp"

namespace gwm {

// Structure coefficients of the Fano hypergeometric recursion.
//
// c(p,s,d) is the w^s Taylor coefficient of
//   (w+d)^p prod_k prod_{r=1..a_k d} (a_k w + r) / prod_{r=1..d} (w+r)^n,
// and ctilde is its convolution inverse in the triangular range
// s <= p - nu*d; entries outside that range are never defined.
class CoeffTables {
 public:
  CoeffTables(ModelSpec m, int dmax, int pmax = -1, int smax = -1);

  const ModelSpec& model() const { return m_; }
  int dmax() const { return dmax_; }
  int pmax() const { return pmax_; }

  Rat c(int p, int s, int d) const;
  Rat ctilde(int p, int s, int d) const;  // throws DomainError out of range
  bool ctilde_defined(int p, int s, int d) const;

 private:
  ModelSpec m_;
  int dmax_, pmax_, scut_;
  std::vector<Poly> jets_;
  std::vector<std::vector<std::vector<Rat>>> ct_;  // [p][d][s]
};

// Closed form for the degree-one inverse coefficients:
//   -[w^s] <a> prod_k prod_{r=1..a_k-1} (a_k w + r) / (w+1)^{n-l-p},
// valid for 0 <= s <= p - nu.
Rat ctilde_deg1_closed(const ModelSpec& m, int p, int s);

// The degree-p structure series of a Fano model as w-Laurent jets:
//   F_p = sum_{d, s <= p - nu d} ctilde(p,s,d) q^d w^{-(p - nu d - s)} D^s F.
// Regularity at w = 0 is asserted. For p < nu this reduces to D^p F.
WJets fano_structure_series(const CoeffTables& ct, int p, int qorder, int wcut);

// All Fano degree tuples (parts >= 2, possibly empty) for coordinate count n.
std::vector<ModelSpec> fano_models(int n);

}  // namespace gwm
