#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "gwm/open_gw.hpp"

#include <utility>
#include <vector>

using namespace gwm;

namespace {

const ModelSpec quintic{5, {5}};
const ModelSpec bicubic{6, {3, 3}};

OpenModel quintic_model(unsigned seed) {
  return OpenModel(quintic, WeightSystem::random_conjugate_pairs(5, seed));
}

OpenModel bicubic_model(unsigned seed) {
  return OpenModel(bicubic, WeightSystem::random_conjugate_pairs(6, seed));
}

bool all_zero(const QSeries& s) {
  for (int k = 0; k <= s.order(); ++k)
    if (s.coeff(k) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("disk factors agree in both printed forms and vanish for even degrees") {
  // hand-checked value at weights (1, -1, 1/2, -1/2, 0)
  OpenModel ref(quintic, WeightSystem::conjugate_pairs(5, {Rat(1), rat(1, 2)}));
  CHECK(disk_factor(ref, 0, 1) == 20);
  for (int i = 0; i < 4; ++i)
    for (int g : {1, 3, 5})
      CHECK(disk_factor(ref, i, g) == disk_factor_product_form(ref, i, g));

  OpenModel rnd = quintic_model(12);
  for (int i : {0, 2})
    for (int g : {1, 3})
      CHECK(disk_factor(rnd, i, g) == disk_factor_product_form(rnd, i, g));

  OpenModel even(ModelSpec{6, {2, 4}}, WeightSystem::conjugate_pairs(6));
  CHECK(!even.all_odd());
  CHECK(disk_factor(even, 0, 1) == 0);
  CHECK(disk_factor(even, 3, 3) == 0);
}

TEST_CASE("disk potential: graph sum equals closed form and encodes integral counts") {
  OpenModel om = quintic_model(4);
  QSeries graph = disk_potential(om, 5, Route::graphsum);
  QSeries closed = disk_potential(om, 5, Route::mirror);
  CHECK(graph == closed);
  CHECK(graph.coeff(1) == 30);
  CHECK(graph.coeff(2) == 0);
  CHECK(graph.coeff(3) == rat(4600, 3));
  CHECK(graph.coeff(4) == 0);
  CHECK(graph.coeff(5) == rat(5441256, 5));

  // multiple-cover reduction N_d = sum over odd k | d of n_{d/k} / k^2
  Rat n1 = graph.coeff(1);
  CHECK(n1 == 30);
  CHECK(graph.coeff(3) - n1 / 9 == 1530);
  CHECK(graph.coeff(5) - n1 / 25 == 1088250);

  // independent weight draw, same potential
  CHECK(disk_potential(quintic_model(9), 5, Route::graphsum) == closed);

  OpenModel bc = bicubic_model(7);
  QSeries bg = disk_potential(bc, 5, Route::graphsum);
  CHECK(bg == disk_potential(bc, 5, Route::mirror));
  CHECK(bg.coeff(1) == 18);
  CHECK(bg.coeff(2) == 0);
  CHECK(bg.coeff(4) == 0);

  OpenModel even(ModelSpec{6, {2, 4}}, WeightSystem::conjugate_pairs(6));
  CHECK(all_zero(disk_potential(even, 5, Route::graphsum)));
  CHECK(all_zero(disk_potential(even, 5, Route::mirror)));
}

TEST_CASE("disk moments vanish below the threshold and collapse at a nonpositive one") {
  OpenModel om = quintic_model(4);
  for (auto [b, p] : std::vector<std::pair<int, int>>{
           {0, -1}, {1, 0}, {1, -1}, {2, 1}, {2, 0}})
    CHECK(all_zero(disk_moment_sum(om, b, p, 5)));

  CHECK(disk_moment_sum(om, 0, 0, 7) == disk_moment_closed(quintic, 0, 7));
  CHECK(disk_moment_sum(om, -1, -1, 7) == disk_moment_closed(quintic, -1, 7));

  // at a positive threshold the sum no longer collapses, but swapping the
  // cascade derivative for the family member still gives the same sum
  QSeries via_cascade = disk_moment_sum(om, 1, 1, 5);
  CHECK(via_cascade == disk_moment_sum(om, 1, 1, 5, true));
  CHECK(via_cascade != disk_moment_closed(quintic, 1, 5));
  CHECK(all_zero(disk_moment_sum(om, 2, 0, 5, true)));

  OpenModel bc = bicubic_model(7);
  for (auto [b, p] : std::vector<std::pair<int, int>>{
           {0, -1}, {0, -2}, {1, 0}, {2, 1}})
    CHECK(all_zero(disk_moment_sum(bc, b, p, 5)));
  CHECK(disk_moment_sum(bc, 0, 0, 5) == disk_moment_closed(bicubic, 0, 5));
  CHECK(disk_moment_sum(bc, -2, -2, 5) == disk_moment_closed(bicubic, -2, 5));
}

TEST_CASE("annulus invariants agree between graph sum and closed form") {
  const std::vector<Rat> qref{rat(-45, 8), rat(-15525, 16), rat(-6387015, 4)};
  OpenModel om = quintic_model(4);
  auto g = annulus_invariants(om, 3, Route::graphsum);
  auto m = annulus_invariants(om, 3, Route::mirror);
  REQUIRE(g.size() == 4);
  REQUIRE(m.size() == 4);
  for (int d = 1; d <= 3; ++d) {
    CHECK(g[d] == qref[d - 1]);
    CHECK(m[d] == qref[d - 1]);
  }

  auto g2 = annulus_invariants(quintic_model(9), 2, Route::graphsum);
  CHECK(g2[1] == qref[0]);
  CHECK(g2[2] == qref[1]);

  const std::vector<Rat> bref{rat(-9, 8), rat(-585, 16), rat(-123501, 8)};
  OpenModel bc = bicubic_model(7);
  auto bg = annulus_invariants(bc, 3, Route::graphsum);
  auto bm = annulus_invariants(bc, 3, Route::mirror);
  for (int d = 1; d <= 3; ++d) {
    CHECK(bg[d] == bref[d - 1]);
    CHECK(bm[d] == bref[d - 1]);
  }
}

TEST_CASE("klein bottle invariants: raw and collapsed graph sums match closed form") {
  OpenModel om = quintic_model(4);
  auto g = klein_invariants(om, 2, Route::graphsum);
  auto m = klein_invariants(om, 2, Route::mirror);
  auto raw = klein_raw_low_layers(om, 2);
  REQUIRE(g.size() == 3);
  CHECK(g[1] == rat(45, 4));
  CHECK(g[2] == rat(582725, 4));
  CHECK(m[1] == g[1]);
  CHECK(m[2] == g[2]);
  CHECK(raw[1] == g[1]);
  CHECK(raw[2] == g[2]);

  auto g2 = klein_invariants(quintic_model(9), 2, Route::graphsum);
  CHECK(g2[1] == rat(45, 4));
  CHECK(g2[2] == rat(582725, 4));
}

TEST_CASE("pole transfer between fixed points") {
  // fully generic weights: every edge works, including into the last point
  {
    WeightSystem w = WeightSystem::random(5, 11);
    TorusFamily t(quintic, w, 3);
    CHECK(edge_residue_transfers(t, 0, 1, 1, 0));
    CHECK(edge_residue_transfers(t, 1, 3, 2, 0));
    CHECK(edge_residue_transfers(t, 2, 0, 1, -1));
    CHECK(edge_residue_transfers(t, 0, 4, 1, 0));
    CHECK(edge_residue_transfers(t, 3, 4, 2, 0));
  }
  // opposite-pair weights: pair edges at even degree take the limit value
  {
    WeightSystem w = WeightSystem::random_conjugate_pairs(5, 4);
    TorusFamily t(quintic, w, 3);
    CHECK(edge_residue_transfers(t, 0, 1, 2, -1));
    CHECK(edge_residue_transfers(t, 0, 1, 2, 2));
    CHECK(edge_residue_transfers(t, 2, 3, 2, 0));
    CHECK(edge_residue_transfers(t, 0, 2, 1, 0));
    CHECK(edge_residue_transfers(t, 1, 3, 1, 0));
    // the zero-weight target is structurally singular for these weights:
    // (0 - a_0)/1 is also a pole of the target's own series
    CHECK_THROWS_AS(edge_residue_transfers(t, 0, 4, 1, 0), PoleError);
  }
  // even count of nonzero weights: the pair-edge coefficient degenerates
  // to zero and the series has no pole at the would-be transfer point
  {
    WeightSystem w = WeightSystem::random_conjugate_pairs(6, 7);
    TorusFamily t(bicubic, w, 2);
    CHECK(edge_transfer_coeff(bicubic, w, 0, 1, 2) == 0);
    CHECK(edge_residue_transfers(t, 0, 1, 2, 0));
    CHECK(edge_residue_transfers(t, 0, 2, 1, 0));
  }
}

TEST_CASE("regularized residues match their closed forms") {
  OpenModel om = quintic_model(4);
  CHECK(klein_residue_forms_agree(om, 0, -1, 3));
  CHECK(klein_residue_forms_agree(om, 0, 2, 3));
  CHECK(klein_residue_forms_agree(om, 0, 3, 3));

  OpenModel bc = bicubic_model(7);
  CHECK(klein_residue_forms_agree(bc, 1, -2, 2));
  CHECK(klein_residue_forms_agree(bc, 1, 2, 2));
}
