#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsk/verify.hpp"

using namespace qsk;

namespace {
DimVector dv(std::vector<long long> v) { return DimVector(std::move(v)); }

WeylElem word(const WeylCtx& ctx, const std::vector<WeylGen>& gens) {
  WeylElem w = WeylElem::identity(ctx);
  for (const WeylGen& g : gens) w = w * WeylElem::generator(ctx, g);
  return w;
}
}

TEST_CASE("symmetric group basics") {
  Quiver a1 = make_a1();
  WeylCtx ctx = WeylCtx::ordinary(a1, dv({4}));
  CHECK(ctx.group_order() == 24);
  auto elems = generate_subgroup(ctx, ctx.simple_generators());
  CHECK(elems.size() == 24);
  WeylElem w0 = longest_element(elems);
  CHECK(w0.length() == 6);
  auto rw = reduced_word(ctx, w0);
  CHECK(static_cast<long long>(rw.size()) == 6);
  CHECK(word(ctx, rw) == w0);
}

TEST_CASE("signed group order") {
  Quiver jd = make_jordan();
  Involution inv = make_point_involution(jd, 1, 1);
  WeylCtx ctx = WeylCtx::isotropic(jd, inv, dv({4}));  // hyperoctahedral rank 2
  CHECK(ctx.group_order() == 8);
  CHECK(generate_subgroup(ctx, ctx.simple_generators()).size() == 8);
  // odd ambient dimension gives the same rank
  WeylCtx ctx5 = WeylCtx::isotropic(jd, inv, dv({5}));
  CHECK(ctx5.group_order() == 8);
}

TEST_CASE("one-line image of a permutation word") {
  Quiver a1 = make_a1();
  WeylCtx ctx = WeylCtx::ordinary(a1, dv({8}));
  // w = s3 s4 s5 s6, rightmost factor applied first
  WeylElem w = word(ctx, {WeylGen{0, 3}, WeylGen{0, 4}, WeylGen{0, 5}, WeylGen{0, 6}});
  std::vector<int> expect = {1, 2, 4, 5, 6, 7, 3, 8};
  for (int k = 1; k <= 8; ++k) CHECK(w.image(0, k) == expect[k - 1]);
  CHECK(w.length() == 4);
}

TEST_CASE("minimal coset representatives") {
  Quiver a1 = make_a1();
  WeylCtx ctx = WeylCtx::ordinary(a1, dv({3}));
  VectorComposition d({dv({2}), dv({1})});
  auto reps = min_coset_reps(ctx, ctx.simple_generators(), parabolic_generators(ctx, d));
  CHECK(reps.size() == 3);
  for (const auto& r : reps)
    for (const WeylGen& g : parabolic_generators(ctx, d))
      CHECK(!has_right_descent(ctx, r, g));
}

TEST_CASE("double coset representatives match brute force") {
  Quiver a1 = make_a1();
  WeylCtx ctx = WeylCtx::ordinary(a1, dv({4}));
  auto ambient = generate_subgroup(ctx, ctx.simple_generators());
  VectorComposition e({dv({2}), dv({2})});
  auto ge = parabolic_generators(ctx, e);
  auto reps = min_double_coset_reps(ctx, ambient, ge, ge);
  // contingency tables with margins (2,2): 3 double cosets
  CHECK(reps.size() == 3);
  CHECK(reps == min_double_coset_reps_bruteforce(ctx, ambient, ge, ge));
}

TEST_CASE("signed double cosets match brute force") {
  Quiver jd = make_jordan();
  Involution inv = make_point_involution(jd, 1, 1);
  WeylCtx ctx = WeylCtx::isotropic(jd, inv, dv({6}));
  auto ambient = generate_subgroup(ctx, ctx.simple_generators());
  IsoComposition e({dv({1})}, dv({4}));
  IsoComposition d({dv({1}), dv({1})}, dv({2}));
  auto ge = parabolic_generators(ctx, jd, inv, e);
  auto gd = parabolic_generators(ctx, jd, inv, d);
  CHECK(min_double_coset_reps(ctx, ambient, ge, gd) ==
        min_double_coset_reps_bruteforce(ctx, ambient, ge, gd));
}

TEST_CASE("parabolic generators of an isotropic composition") {
  Quiver jd = make_jordan();
  Involution inv = make_point_involution(jd, 1, 1);
  WeylCtx ctx = WeylCtx::isotropic(jd, inv, dv({6}));  // rank 3 signed
  // d = ((2), 2): one finite block of size 2 plus inf part
  IsoComposition d({dv({2})}, dv({2}));
  auto gens = parabolic_generators(ctx, jd, inv, d);
  // Sym_2 on the finite block and the full signed group on the inf window
  auto sub = generate_subgroup(ctx, gens);
  CHECK(sub.size() == 2 * 2);
}

TEST_CASE("inverses and composition order") {
  Quiver a1 = make_a1();
  WeylCtx ctx = WeylCtx::ordinary(a1, dv({3}));
  WeylElem s1 = WeylElem::generator(ctx, WeylGen{0, 1});
  WeylElem s2 = WeylElem::generator(ctx, WeylGen{0, 2});
  WeylElem w = s1 * s2;  // apply s2 first
  CHECK(w.image(0, 3) == 1);
  CHECK((w * w.inverse()) == WeylElem::identity(ctx));
  CHECK(w.length() == 2);
}
