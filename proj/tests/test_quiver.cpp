#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsk/verify.hpp"

using namespace qsk;

namespace {
DimVector dv(std::vector<long long> v) { return DimVector(std::move(v)); }
}

TEST_CASE("dimension vector arithmetic") {
  DimVector a = dv({2, 1, 0}), b = dv({1, 0, 3});
  CHECK((a + b) == dv({3, 1, 3}));
  CHECK((a - b) == dv({1, 1, -3}));
  CHECK(a.total() == 3);
  CHECK(!a.is_zero());
  CHECK(dv({0, 0, 0}).is_zero());
}

TEST_CASE("involution on dimension vectors") {
  Quiver q({"i1", "i2"}, {});
  Involution inv;
  inv.vertex_map = {1, 0};
  inv.sigma = {1, 1};
  inv.compute_parts();
  CHECK(inv.vertex_part[0] == Involution::Part::Plus);
  CHECK(inv.vertex_part[1] == Involution::Part::Minus);
  DimVector d = dv({2, 1});
  CHECK(d.theta(inv) == dv({1, 2}));
  CHECK(d.doubled(inv) == dv({3, 3}));
  CHECK(!d.theta_symmetric(inv));
  CHECK(dv({2, 2}).theta_symmetric(inv));
}

TEST_CASE("coarsening along an integer composition") {
  // three-vertex path, five parts grouped (2, 3)
  VectorComposition d(
      {dv({1, 0, 0}), dv({2, 1, 0}), dv({0, 1, 1}), dv({1, 0, 0}), dv({0, 0, 1})});
  VectorComposition e = wedge_coarsen(d, {2, 3});
  CHECK(e == VectorComposition({dv({3, 1, 0}), dv({1, 1, 2})}));
  auto beta = refines(d, e);
  REQUIRE(beta.has_value());
  CHECK(*beta == IntComposition{2, 3});
  CHECK(!refines(e, d).has_value());
}

TEST_CASE("composition enumeration counts") {
  CHECK(all_compositions(dv({3})).size() == 4);        // (3) (1,2) (2,1) (1,1,1)
  CHECK(all_compositions(dv({1, 1})).size() == 3);     // 2 orderings + 1 joint
  Quiver jd = make_jordan();
  Involution inv = make_point_involution(jd, 1, 1);
  // c=2: ({},2), ({1},0) -> 2 isotropic compositions
  CHECK(all_iso_compositions(jd, inv, dv({2})).size() == 2);
}

TEST_CASE("isotropic coarsening absorbs the tail") {
  Quiver jd = make_jordan();
  Involution inv = make_point_involution(jd, 1, 1);
  IsoComposition d({dv({1}), dv({1})}, dv({2}));  // 1+1 doubled + 2 = c = 6
  IsoComposition e = theta_wedge_coarsen(inv, d, {1, 2});
  CHECK(e == IsoComposition({dv({1})}, dv({4})));
  auto beta = theta_refines(inv, d, e);
  REQUIRE(beta.has_value());
  CHECK(*beta == IntComposition{1, 2});
}

TEST_CASE("evenness constraint at sigma = -1") {
  Quiver jd = make_jordan();
  Involution inv = make_point_involution(jd, -1, 1);
  IsoComposition bad({dv({1})}, dv({1}));
  CHECK_THROWS(bad.validate(jd, inv));
  IsoComposition good({dv({1})}, dv({2}));
  CHECK_NOTHROW(good.validate(jd, inv));
}

TEST_CASE("text round trips") {
  Quiver a3 = make_a3();
  VectorComposition d({dv({3, 0, 2}), dv({0, 2, 1})});
  CHECK(parse_comp(a3, format_comp(a3, d)) == d);
  DimVector c = dv({5, 4, 3});
  CHECK(parse_dimvec(a3, format_dimvec(a3, c)) == c);
  Quiver jd = make_jordan();
  Involution inv = make_point_involution(jd, 1, 1);
  IsoComposition iso({dv({1}), dv({2})}, dv({2}));
  CHECK(parse_iso_comp(jd, format_comp(jd, iso)) == iso);
}

TEST_CASE("quiver json round trip") {
  Quiver a2 = make_a2();
  Quiver back = Quiver::from_json(a2.to_json());
  CHECK(back.num_vertices() == 2);
  CHECK(back.arrow_count(0, 1) == 1);
  CHECK(back.arrow_count(1, 0) == 0);
  Quiver jd = make_jordan();
  CHECK(jd.arrow_count(0, 0) == 1);
}
