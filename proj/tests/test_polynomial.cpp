#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsk/verify.hpp"

using namespace qsk;

namespace {
DimVector dv(std::vector<long long> v) { return DimVector(std::move(v)); }
}

TEST_CASE("polynomial arithmetic and parsing") {
  Quiver a1 = make_a1();
  Ambient amb = Ambient::ordinary(a1, dv({2}));
  Polynomial f = amb.parse("x[i1,1]^2 - 2*x[i1,1]*x[i1,2] + x[i1,2]^2");
  Polynomial g = amb.parse("x[i1,1] - x[i1,2]");
  CHECK(f == g * g);
  CHECK(f.exact_divide(g) == g);
  CHECK(amb.parse(amb.str(f)) == f);
  CHECK((f - f).is_zero());
  CHECK(f.scaled(Rational(1, 2)) + f.scaled(Rational(1, 2)) == f);
}

TEST_CASE("factored polynomials expand and divide") {
  Quiver a1 = make_a1();
  Ambient amb = Ambient::ordinary(a1, dv({3}));
  FactoredPoly p;
  p.mul_form({1, -1, 0});   // x1 - x2
  p.mul_form({1, 0, -1});   // x1 - x3
  p.mul_form({0, 1, -1});   // x2 - x3
  Polynomial d12 = amb.parse("x[i1,1]-x[i1,2]");
  Polynomial d13 = amb.parse("x[i1,1]-x[i1,3]");
  Polynomial d23 = amb.parse("x[i1,2]-x[i1,3]");
  CHECK(p.expand(amb.nvars()) == d12 * d13 * d23);
  CHECK(p.degree() == 3);
  FactoredPoly q = p;
  FactoredPoly mid;
  mid.mul_form({1, 0, -1});
  q.divide(mid);
  CHECK(q.expand(amb.nvars()) == d12 * d23);
}

TEST_CASE("divided difference operator") {
  Quiver a1 = make_a1();
  Ambient amb = Ambient::ordinary(a1, dv({2}));
  Polynomial x1 = amb.parse("x[i1,1]");
  CHECK(demazure_simple(amb, 0, 1, x1) == amb.parse("1"));
  CHECK(demazure_simple(amb, 0, 1, x1 * x1) == amb.parse("x[i1,1]+x[i1,2]"));
  CHECK(demazure_simple(amb, 0, 1, amb.parse("x[i1,1]*x[i1,2]")).is_zero());
  // twisted Leibniz: D(fg) = D(f) g + s(f) D(g)
  Polynomial f = amb.parse("x[i1,1]^2"), g = amb.parse("x[i1,1]+2*x[i1,2]");
  WeylElem s = WeylElem::generator(amb.weyl(), WeylGen{0, 1});
  CHECK(demazure_simple(amb, 0, 1, f * g) ==
        demazure_simple(amb, 0, 1, f) * g + amb.act(s, f) * demazure_simple(amb, 0, 1, g));
}

TEST_CASE("demazure word equals staircase normalization") {
  Quiver a1 = make_a1();
  Ambient amb = Ambient::ordinary(a1, dv({3}));
  const WeylCtx& ctx = amb.weyl();
  auto elems = generate_subgroup(ctx, ctx.simple_generators());
  auto rw = reduced_word(ctx, longest_element(elems));
  Polynomial stair = amb.parse("x[i1,1]^2*x[i1,2]");
  CHECK(demazure_word(amb, rw, stair) == amb.parse("1"));
}

TEST_CASE("signed Weyl action on variables") {
  Quiver jd = make_jordan();
  Involution inv = make_point_involution(jd, 1, 1);
  Ambient amb = Ambient::isotropic(jd, inv, dv({4}));  // two signed variables
  // the last simple generator flips the sign of the last variable
  auto gens = amb.weyl().simple_generators();
  WeylElem s = WeylElem::generator(amb.weyl(), gens.back());
  CHECK(amb.act(s, amb.parse("x[i1,2]")) == amb.parse("-x[i1,2]"));
  CHECK(amb.act(s, amb.parse("x[i1,1]")) == amb.parse("x[i1,1]"));
}

TEST_CASE("signed symmetrizer in rank one") {
  Quiver jd = make_jordan();
  Involution inv = make_point_involution(jd, 1, 1);
  Ambient amb = Ambient::isotropic(jd, inv, dv({3}));  // odd: short root x1
  Polynomial sum = demazure_sum(amb, amb.weyl().simple_generators(),
                                blacktriangle_full(amb), amb.parse("x[i1,1]"));
  CHECK(sum == amb.parse("2"));
  // even ambient dimension: empty root product, plain orbit sum
  Ambient amb2 = Ambient::isotropic(jd, inv, dv({2}));
  CHECK(demazure_sum(amb2, amb2.weyl().simple_generators(), blacktriangle_full(amb2),
                     amb2.parse("x[i1,1]"))
            .is_zero());
  CHECK(demazure_sum(amb2, amb2.weyl().simple_generators(), blacktriangle_full(amb2),
                     amb2.parse("x[i1,1]^2")) == amb2.parse("2*x[i1,1]^2"));
}

TEST_CASE("orbit sum basis of symmetric polynomials") {
  Quiver a1 = make_a1();
  Ambient amb = Ambient::ordinary(a1, dv({2}));
  auto basis = invariant_basis(amb, amb.weyl().simple_generators(), 2);
  REQUIRE(basis.size() == 4);  // 1, x1+x2, x1^2+x2^2, x1 x2
  for (const auto& f : basis) CHECK(is_invariant(amb, amb.weyl().simple_generators(), f));
}

TEST_CASE("variable maps and embeddings") {
  Quiver a2 = make_a2();
  Ambient small = Ambient::ordinary(a2, dv({1, 1}));
  Ambient big = Ambient::ordinary(a2, dv({2, 1}));
  Polynomial f = small.parse("x[i1,1]*x[i2,1]");
  // embed the small ring into positions (2; 1) of the big one
  std::vector<int> image = {big.var(0, 2) + 1, big.var(1, 1) + 1};
  CHECK(f.embed(big.nvars(), image) == big.parse("x[i1,2]*x[i2,1]"));
}
