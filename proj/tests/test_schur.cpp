#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsk/verify.hpp"

using namespace qsk;

namespace {
DimVector dv(std::vector<long long> v) { return DimVector(std::move(v)); }
}

TEST_CASE("elementary merge on one vertex") {
  Quiver a1 = make_a1();
  Ambient amb = Ambient::ordinary(a1, dv({2}));
  VectorComposition d({dv({1}), dv({1})}), e({dv({2})});
  GradedElem x;
  x.add(d, amb.parse("x[i1,1]"));
  GradedElem y = apply_merge(amb, d, e, x);
  REQUIRE(y.parts.count(e));
  CHECK(y.parts.at(e) == amb.parse("-1"));
  CHECK(apply_merge_demazure(amb, d, e, x) == y);
  // merging a symmetric class gives zero; zero components are not stored
  GradedElem z;
  z.add(d, amb.parse("x[i1,1]*x[i1,2]"));
  GradedElem w = apply_merge(amb, d, e, z);
  CHECK(w.parts.count(e) == 0);
}

TEST_CASE("split is an inclusion") {
  Quiver a1 = make_a1();
  Ambient amb = Ambient::ordinary(a1, dv({3}));
  VectorComposition e({dv({3})}), d({dv({1}), dv({2})});
  Polynomial f = amb.parse("x[i1,1]+x[i1,2]+x[i1,3]");
  GradedElem x;
  x.add(e, f);
  GradedElem y = apply_split(amb, e, d, x);
  REQUIRE(y.parts.count(d));
  CHECK(y.parts.at(d) == f);
}

TEST_CASE("crossing squares to zero on one vertex without arrows") {
  Quiver a1 = make_a1();
  Ambient amb = Ambient::ordinary(a1, dv({2}));
  VectorComposition d({dv({1}), dv({1})});
  GradedElem x;
  x.add(d, amb.parse("x[i1,1]"));
  GradedElem once = apply_crossing(amb, d, 1, x);
  REQUIRE(once.parts.count(d));
  CHECK(once.parts.at(d) == amb.parse("-1"));
  CHECK(apply_crossing(amb, d, 1, once).parts.count(d) == 0);
}

TEST_CASE("operator words compose back to front") {
  Quiver a1 = make_a1();
  Ambient amb = Ambient::ordinary(a1, dv({2}));
  VectorComposition d({dv({1}), dv({1})}), e({dv({2})});
  SchurWord w{{GenSplit{e, d}, GenMerge{d, e}}};  // merge first, then split
  CHECK(word_source(w) == d);
  GradedElem x;
  x.add(d, amb.parse("x[i1,1]"));
  GradedElem y = apply_word(amb, w, x);
  REQUIRE(y.parts.count(d));
  CHECK(y.parts.at(d) == amb.parse("-1"));
}

TEST_CASE("operator equality bounded by degree") {
  Quiver a1 = make_a1();
  Ambient amb = Ambient::ordinary(a1, dv({2}));
  VectorComposition d({dv({1}), dv({1})}), e({dv({2})});
  SchurWord lhs{{GenMerge{d, e}, GenSplit{e, d}, GenMerge{d, e}}};
  SchurWord rhs{{GenScalar{d, 0}, GenMerge{d, e}}};
  CHECK(operator_equal(amb, lhs, rhs, 6));
}

TEST_CASE("two-block isotropic merge against the direct formula") {
  Quiver jd = make_jordan();
  Involution inv = make_point_involution(jd, 1, 1);
  DimVector c = dv({4});
  Ambient amb = Ambient::isotropic(jd, inv, c);
  IsoComposition d({dv({1})}, dv({2})), e({}, c);
  auto gens_d = parabolic_generators(amb.weyl(), jd, inv, d);
  FactoredPoly te = class_theta_E(amb, dv({1}), dv({2}));
  FactoredPoly ts = class_theta_S(amb, dv({1}), dv({2}));
  auto reps = min_coset_reps(amb.weyl(), amb.weyl().simple_generators(), gens_d);
  for (const auto& f : invariant_basis(amb, gens_d, 3)) {
    ThetaGradedElem x;
    x.add(d, f);
    ThetaGradedElem y = apply_theta_merge(amb, d, e, x);
    Polynomial expect = shuffle_sum(amb, reps, te.expand(amb.nvars()) * f, ts);
    Polynomial got = y.parts.count(e) ? y.parts.at(e) : Polynomial(amb.nvars());
    CHECK(got == expect);
  }
}

TEST_CASE("finite isotropic merge reduces to the ordinary one") {
  Quiver jd = make_jordan();
  Involution inv = make_point_involution(jd, 1, 1);
  DimVector c = dv({4});
  Ambient amb = Ambient::isotropic(jd, inv, c);
  // merge the two finite blocks, keep the empty infinite part
  IsoComposition d({dv({1}), dv({1})}, dv({0})), e({dv({2})}, dv({0}));
  auto gens_d = parabolic_generators(amb.weyl(), jd, inv, d);
  for (const auto& f : invariant_basis(amb, gens_d, 2)) {
    ThetaGradedElem x;
    x.add(d, f);
    ThetaGradedElem y = apply_theta_merge(amb, d, e, x);
    REQUIRE(y.parts.count(e));
    // the result is invariant for the coarser parabolic subgroup
    CHECK(is_invariant(amb, parabolic_generators(amb.weyl(), jd, inv, e), y.parts.at(e)));
  }
}

TEST_CASE("bott samelson words reproduce crossings on complete compositions") {
  Quiver a1 = make_a1();
  DimVector c = dv({2});
  Ambient amb = Ambient::ordinary(a1, c);
  const WeylCtx& ctx = amb.weyl();
  VectorComposition d({dv({1}), dv({1})});
  WeylElem s = WeylElem::generator(ctx, WeylGen{0, 1});
  OrbitDatum od{d, d, s};
  RefinementDatum rd = refinement_datum(a1, c, od);
  CrossingDatum cd = crossing_datum(a1, c, od, rd);
  SchurWord w = bott_samelson_word(amb, od, rd, cd, amb.parse("1"));
  GradedElem x;
  x.add(d, amb.parse("x[i1,1]"));
  CHECK(apply_word(amb, w, x) == apply_crossing(amb, d, 1, x));
}

TEST_CASE("exact rank of rational matrices") {
  std::vector<std::vector<Rational>> rows = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(matrix_rank(rows) == 2);
  std::vector<std::vector<Rational>> id = {{1, 0}, {0, 1}};
  CHECK(matrix_rank(id) == 2);
}
