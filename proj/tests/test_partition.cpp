#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsk/verify.hpp"

using namespace qsk;

namespace {
DimVector dv(std::vector<long long> v) { return DimVector(std::move(v)); }

// one-vertex partitioning from index blocks
Partitioning blocks(const std::vector<std::vector<int>>& bs) {
  Partitioning lam;
  for (const auto& b : bs) {
    std::vector<Slot> blk;
    for (int k : b) blk.push_back(Slot{0, k});
    lam.blocks.push_back(blk);
  }
  return lam;
}

WeylElem word(const WeylCtx& ctx, const std::vector<WeylGen>& gens) {
  WeylElem w = WeylElem::identity(ctx);
  for (const WeylGen& g : gens) w = w * WeylElem::generator(ctx, g);
  return w;
}
}

TEST_CASE("ordered intersection, eight points") {
  Partitioning lam = blocks({{1, 2, 3}, {4, 5}, {6, 7, 8}});
  Partitioning mu = blocks({{1, 2, 4, 5}, {6, 7}, {3, 8}});
  CHECK(ordered_intersection(lam, mu) == blocks({{1, 2}, {3}, {4, 5}, {6, 7}, {8}}));
  CHECK(ordered_intersection(mu, lam) == blocks({{1, 2}, {4, 5}, {6, 7}, {3}, {8}}));
}

TEST_CASE("ordered intersection, ten points") {
  Partitioning lam = blocks({{3, 5, 6}, {1, 4}, {2, 8}, {7, 9, 10}});
  Partitioning mu = blocks({{1, 5, 9, 10}, {2, 3, 4, 6, 7, 8}});
  CHECK(ordered_intersection(lam, mu) ==
        blocks({{5}, {3, 6}, {1}, {4}, {2, 8}, {9, 10}, {7}}));
  CHECK(ordered_intersection(mu, lam) ==
        blocks({{5}, {1}, {9, 10}, {3, 6}, {4}, {2, 8}, {7}}));
}

TEST_CASE("standard partitioning and block dimensions invert each other") {
  VectorComposition e({dv({3}), dv({2}), dv({3})});
  Partitioning lam = standard_partitioning(e);
  CHECK(lam == blocks({{1, 2, 3}, {4, 5}, {6, 7, 8}}));
  CHECK(block_dimensions(1, lam) == e);
}

TEST_CASE("refinement datum of the eight-point orbit datum") {
  Quiver a1 = make_a1();
  DimVector c = dv({8});
  WeylCtx ctx = WeylCtx::ordinary(a1, c);
  VectorComposition e({dv({3}), dv({2}), dv({3})});
  VectorComposition d({dv({4}), dv({2}), dv({2})});
  WeylElem w = word(ctx, {WeylGen{0, 3}, WeylGen{0, 4}, WeylGen{0, 5}, WeylGen{0, 6}});
  Partitioning mu = act_partitioning(ctx, a1, nullptr, c, w, standard_partitioning(d));
  CHECK(mu == blocks({{1, 2, 4, 5}, {6, 7}, {3, 8}}));

  OrbitDatum od{e, d, w};
  RefinementDatum rd = refinement_datum(a1, c, od);
  CHECK(rd.ehat == VectorComposition({dv({2}), dv({1}), dv({2}), dv({2}), dv({1})}));
  CHECK(rd.dhat == VectorComposition({dv({2}), dv({2}), dv({2}), dv({1}), dv({1})}));
  // the block permutation sends 2,3,4 to 3,4,2 (so dhat_j = ehat_{u(j)})
  WeylElem expect_u = word(rd.uctx, {WeylGen{0, 2}, WeylGen{0, 3}});
  CHECK(rd.u == expect_u);

  CrossingDatum cd = crossing_datum(a1, c, od, rd);
  CHECK(cd.even_chain.front() == rd.ehat);
  CHECK(cd.even_chain.back() == rd.dhat);
  CHECK(utilde(ctx, cd) == w);
  long long lsum = 0;
  for (const auto& wl : cd.coset_factors) lsum += wl.length();
  CHECK(lsum == w.length());
}

TEST_CASE("three-vertex refinement datum") {
  Quiver a3 = make_a3();
  DimVector c = dv({5, 4, 3});
  WeylCtx ctx = WeylCtx::ordinary(a3, c);
  VectorComposition e({dv({3, 0, 2}), dv({0, 2, 1}), dv({2, 0, 0}), dv({0, 2, 0})});
  VectorComposition d({dv({2, 0, 0}), dv({0, 3, 1}), dv({3, 1, 2})});
  // w = (s3 s2)(s2 s3)(s2 s1) acting on the three vertex blocks
  WeylElem w = word(ctx, {WeylGen{0, 3}, WeylGen{0, 2}, WeylGen{1, 2}, WeylGen{1, 3},
                          WeylGen{2, 2}, WeylGen{2, 1}});
  OrbitDatum od{e, d, w};
  RefinementDatum rd = refinement_datum(a3, c, od);
  CHECK(rd.ehat == VectorComposition({dv({1, 0, 0}), dv({2, 0, 2}), dv({0, 1, 1}),
                                      dv({0, 1, 0}), dv({1, 0, 0}), dv({1, 0, 0}),
                                      dv({0, 2, 0})}));
  CHECK(rd.dhat == VectorComposition({dv({1, 0, 0}), dv({1, 0, 0}), dv({0, 1, 1}),
                                      dv({0, 2, 0}), dv({2, 0, 2}), dv({0, 1, 0}),
                                      dv({1, 0, 0})}));
  // hand-matched block permutation: one-line form [1,5,3,7,2,4,6]
  WeylElem expect_u = WeylElem::identity(rd.uctx);
  expect_u.lines()[0] = {1, 5, 3, 7, 2, 4, 6};
  CHECK(rd.u == expect_u);
  CrossingDatum cd = crossing_datum(a3, c, od, rd);
  CHECK(utilde(ctx, cd) == w);
}

TEST_CASE("stabilizer of the ordered intersection") {
  Quiver a1 = make_a1();
  DimVector c = dv({5});
  WeylCtx ctx = WeylCtx::ordinary(a1, c);
  Partitioning lam = blocks({{1, 2, 4}, {3, 5}});
  Partitioning mu = blocks({{1, 3}, {2, 4, 5}});
  Partitioning nu = ordered_intersection(lam, mu);
  for (const WeylElem& w : generate_subgroup(ctx, ctx.simple_generators())) {
    bool fix_nu = act_partitioning(ctx, a1, nullptr, c, w, nu) == nu;
    bool fix_both = act_partitioning(ctx, a1, nullptr, c, w, lam) == lam &&
                    act_partitioning(ctx, a1, nullptr, c, w, mu) == mu;
    CHECK(fix_nu == fix_both);
  }
}

TEST_CASE("isotropic partitioning action") {
  Quiver jd = make_jordan();
  Involution inv = make_point_involution(jd, 1, 1);
  DimVector c = dv({6});
  WeylCtx ctx = WeylCtx::isotropic(jd, inv, c);
  IsoComposition d({dv({1}), dv({1})}, dv({2}));
  Partitioning lam = theta_standard_partitioning(inv, d);
  CHECK(is_isotropic_partitioning(jd, inv, c, lam));
  CHECK(theta_block_dimensions(jd, inv, c, lam) == d);
  for (const WeylElem& w : generate_subgroup(ctx, ctx.simple_generators()))
    CHECK(is_isotropic_partitioning(jd, inv, c,
                                    act_partitioning(ctx, jd, &inv, c, w, lam)));
}
