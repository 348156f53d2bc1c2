#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsk/verify.hpp"

using namespace qsk;

namespace {
DimVector dv(std::vector<long long> v) { return DimVector(std::move(v)); }
}

TEST_CASE("symmetrizer and Euler classes, one vertex") {
  Quiver a1 = make_a1();
  Ambient amb = Ambient::ordinary(a1, dv({2}));
  VectorComposition d({dv({1}), dv({1})});
  CHECK(class_S(amb, d).expand(amb.nvars()) == amb.parse("x[i1,2]-x[i1,1]"));
  CHECK(class_E(amb, d).expand(amb.nvars()) == amb.parse("1"));
  CHECK(r_count(amb, d, VectorComposition({dv({2})})) == 1);

  Quiver jd = make_jordan();
  Ambient ambj = Ambient::ordinary(jd, dv({2}));
  CHECK(class_E(ambj, d).expand(ambj.nvars()) == ambj.parse("x[i1,2]-x[i1,1]"));
  CHECK(class_S(ambj, d).expand(ambj.nvars()) == class_E(ambj, d).expand(ambj.nvars()));
}

TEST_CASE("relative classes multiply along coarsening") {
  Quiver a2 = make_a2();
  Ambient amb = Ambient::ordinary(a2, dv({2, 1}));
  VectorComposition d({dv({1, 0}), dv({1, 1})});
  VectorComposition e({dv({2, 1})});
  // E_d has the arrow factor between the blocks; S_d the group factor
  CHECK(class_S_rel(amb, d, e).expand(amb.nvars()) == amb.parse("x[i1,2]-x[i1,1]"));
  CHECK(class_E_rel(amb, d, e).expand(amb.nvars()) == amb.parse("x[i2,1]-x[i1,1]"));
  CHECK(r_count(amb, d, e) == 1);
  // S_d = S_rel(d -> (c)) because a one-block composition has no cross factors
  CHECK(class_S(amb, d).expand(amb.nvars()) == class_S_rel(amb, d, e).expand(amb.nvars()));
}

TEST_CASE("two-block isotropic classes, loop quiver") {
  Quiver jd = make_jordan();
  // sigma = 1, varsigma = -1, c = 2, a = 1, b = 0: both classes are 1
  Involution inv = make_point_involution(jd, 1, -1);
  Ambient amb = Ambient::isotropic(jd, inv, dv({2}));
  CHECK(class_theta_S(amb, dv({1}), dv({0})).expand(amb.nvars()) == amb.parse("1"));
  CHECK(class_theta_E(amb, dv({1}), dv({0})).expand(amb.nvars()) == amb.parse("1"));
  CHECK(theta_r_count(amb, dv({1}), dv({0})) == 0);
}

TEST_CASE("two-block isotropic classes depend on the signs") {
  Quiver jd = make_jordan();
  Involution invp = make_point_involution(jd, 1, 1);
  Ambient amb = Ambient::isotropic(jd, invp, dv({2}));
  // varsigma = +1 contributes an Euler factor -2x even though S stays 1
  CHECK(class_theta_S(amb, dv({1}), dv({0})).expand(amb.nvars()) == amb.parse("1"));
  CHECK(class_theta_E(amb, dv({1}), dv({0})).expand(amb.nvars()) == amb.parse("-2*x[i1,1]"));
}

TEST_CASE("degree of the symmetrizer class matches the root count") {
  Quiver jd = make_jordan();
  for (int sigma : {1, -1})
    for (int varsigma : {1, -1}) {
      Involution inv = make_point_involution(jd, sigma, varsigma);
      for (long long total = 2; total <= 6; ++total) {
        if (sigma == -1 && total % 2 != 0) continue;
        for (long long a = 1; 2 * a <= total; ++a) {
          long long b = total - 2 * a;
          if (sigma == -1 && b % 2 != 0) continue;
          Ambient amb = Ambient::isotropic(jd, inv, dv({total}));
          CHECK(class_theta_S(amb, dv({a}), dv({b})).degree() ==
                theta_r_count(amb, dv({a}), dv({b})));
        }
      }
    }
}

TEST_CASE("full root product factors through any two-block composition") {
  Quiver jd = make_jordan();
  Involution inv = make_point_involution(jd, 1, 1);
  Ambient amb = Ambient::isotropic(jd, inv, dv({5}));
  IsoComposition d({dv({2})}, dv({1}));
  Polynomial lhs = blacktriangle_full(amb).expand(amb.nvars());
  FactoredPoly rhs = blacktriangle(amb, d);
  rhs.mul(class_theta_S(amb, dv({2}), dv({1})));
  if (theta_r_count(amb, dv({2}), dv({1})) % 2 != 0) rhs.coeff = -rhs.coeff;
  CHECK(lhs == rhs.expand(amb.nvars()));
}
