#include "qsk/partition.hpp"

#include <algorithm>

namespace qsk {

namespace {

Partitioning partitioning_from_parts(const std::vector<DimVector>& parts) {
  Partitioning lam;
  if (parts.empty()) throw std::invalid_argument("empty partitioning");
  int nv = parts[0].size();
  std::vector<int> next(nv, 1);
  for (const DimVector& p : parts) {
    std::vector<Slot> block;
    for (int i = 0; i < nv; ++i)
      for (long long t = 0; t < p(i); ++t) block.push_back({i, next[i]++});
    if (!block.empty()) lam.blocks.push_back(std::move(block));
  }
  return lam;
}

}  // namespace

Partitioning standard_partitioning(const VectorComposition& d) {
  return partitioning_from_parts(d.parts);
}

VectorComposition block_dimensions(int num_vertices, const Partitioning& lam) {
  std::vector<DimVector> parts;
  for (const auto& block : lam.blocks) {
    DimVector p(num_vertices);
    for (const Slot& s : block) ++p(s.vertex);
    parts.push_back(p);
  }
  return VectorComposition(std::move(parts));
}

Partitioning theta_standard_partitioning(const Involution& inv, const IsoComposition& d) {
  std::vector<DimVector> doubled;
  for (const DimVector& p : d.finite) doubled.push_back(p);
  if (!d.inf.is_zero()) doubled.push_back(d.inf);
  for (int k = d.length() - 1; k >= 0; --k) doubled.push_back(d.finite[k].theta(inv));
  return partitioning_from_parts(doubled);
}

IsoComposition theta_block_dimensions(const Quiver& q, const Involution& inv,
                                      const DimVector& c, const Partitioning& lam) {
  (void)c;
  (void)inv;
  int n = lam.length();
  int m = n / 2;
  std::vector<DimVector> fin;
  for (int k = 0; k < m; ++k) {
    DimVector p(q.num_vertices());
    for (const Slot& s : lam.blocks[k]) ++p(s.vertex);
    fin.push_back(p);
  }
  DimVector inf(q.num_vertices());
  if (n % 2 == 1)
    for (const Slot& s : lam.blocks[m]) ++inf(s.vertex);
  return IsoComposition(std::move(fin), std::move(inf));
}

namespace {

Slot theta_slot(const Involution& inv, const DimVector& c, const Slot& s) {
  if (inv.is_fixed_vertex(s.vertex))
    return {s.vertex, static_cast<int>(c(s.vertex)) + 1 - s.idx};
  return {inv.vertex_map[s.vertex], s.idx};
}

}  // namespace

bool is_isotropic_partitioning(const Quiver& q, const Involution& inv, const DimVector& c,
                               const Partitioning& lam) {
  (void)q;
  int n = lam.length();
  for (int k = 0; k < n; ++k) {
    std::vector<Slot> mirror;
    for (const Slot& s : lam.blocks[n - 1 - k]) mirror.push_back(theta_slot(inv, c, s));
    std::sort(mirror.begin(), mirror.end());
    if (mirror != lam.blocks[k]) return false;
  }
  return true;
}

Partitioning ordered_intersection(const Partitioning& lam, const Partitioning& mu) {
  Partitioning out;
  for (const auto& a : lam.blocks) {
    for (const auto& b : mu.blocks) {
      std::vector<Slot> inter;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
      if (!inter.empty()) out.blocks.push_back(std::move(inter));
    }
  }
  return out;
}

Slot act_slot(const WeylCtx& ctx, const Quiver& q, const Involution* inv, const DimVector& c,
              const WeylElem& w, const Slot& s) {
  (void)q;
  if (!inv) return {s.vertex, w.image(s.vertex, s.idx)};
  switch (inv->vertex_part[s.vertex]) {
    case Involution::Part::Plus:
      return {s.vertex, w.image(s.vertex, s.idx)};
    case Involution::Part::Minus:
      // the block at the Plus partner carries the permutation
      return {s.vertex, w.image(inv->vertex_map[s.vertex], s.idx)};
    case Involution::Part::Fixed: {
      int ci = static_cast<int>(c(s.vertex));
      int m = ci / 2;
      int val;
      if (s.idx <= m) val = s.idx;
      else if (s.idx > ci - m) val = -(ci + 1 - s.idx);
      else return s;  // middle slot of an odd-dimensional space
      int img = w.image(s.vertex, val);
      return {s.vertex, img > 0 ? img : ci + 1 + img};
    }
  }
  throw std::logic_error("unreachable");
}

Partitioning act_partitioning(const WeylCtx& ctx, const Quiver& q, const Involution* inv,
                              const DimVector& c, const WeylElem& w, const Partitioning& lam) {
  Partitioning out;
  for (const auto& block : lam.blocks) {
    std::vector<Slot> img;
    for (const Slot& s : block) img.push_back(act_slot(ctx, q, inv, c, w, s));
    std::sort(img.begin(), img.end());
    out.blocks.push_back(std::move(img));
  }
  return out;
}

namespace {

// extend a (possibly signed) block permutation of m letters to a plain
// permutation of the n block places (0-based result)
std::vector<int> doubled_places(const WeylCtx& uctx, const WeylElem& u, int n) {
  const WeylBlock& blk = uctx.blocks()[0];
  int m = blk.rank;
  std::vector<int> img(n);
  if (!blk.is_signed) {
    if (m != n) throw std::invalid_argument("block permutation rank mismatch");
    for (int k = 1; k <= n; ++k) img[k - 1] = u.image(0, k) - 1;
    return img;
  }
  if (m != n / 2) throw std::invalid_argument("signed block permutation rank mismatch");
  for (int k = 1; k <= m; ++k) {
    int t = u.image(0, k);
    int tk = t > 0 ? t : n + 1 + t;
    img[k - 1] = tk - 1;
    img[n - k] = n - tk;
  }
  if (n % 2 == 1) img[m] = m;
  return img;
}

}  // namespace

Partitioning permute_blocks(const WeylCtx& uctx, const Quiver& q, const Involution* inv,
                            const DimVector& c, const Partitioning& nu, const WeylElem& u) {
  (void)q;
  (void)inv;
  (void)c;
  std::vector<int> img = doubled_places(uctx, u, nu.length());
  Partitioning out;
  for (int k = 0; k < nu.length(); ++k) out.blocks.push_back(nu.blocks[img[k]]);
  return out;
}

WeylElem find_block_permutation(const WeylCtx& uctx, const Quiver& q, const Involution* inv,
                                const DimVector& c, const Partitioning& nu,
                                const Partitioning& target) {
  (void)q;
  (void)inv;
  (void)c;
  int n = nu.length();
  if (target.length() != n) throw std::invalid_argument("partitioning lengths differ");
  auto find_in_nu = [&](const std::vector<Slot>& block) {
    for (int j = 0; j < n; ++j)
      if (nu.blocks[j] == block) return j;
    throw std::invalid_argument("partitionings do not share their blocks");
  };
  const WeylBlock& blk = uctx.blocks()[0];
  WeylElem u = WeylElem::identity(uctx);
  if (!blk.is_signed) {
    for (int k = 0; k < n; ++k) u.lines()[0][k] = find_in_nu(target.blocks[k]) + 1;
  } else {
    int m = blk.rank;
    for (int k = 0; k < m; ++k) {
      int j = find_in_nu(target.blocks[k]);
      u.lines()[0][k] = j < m ? j + 1 : -(n - j);
    }
  }
  return u;
}

namespace {

void check_min_rep(const WeylCtx& ctx, const std::vector<WeylGen>& gens_e,
                   const std::vector<WeylGen>& gens_d, const WeylElem& w) {
  for (const WeylGen& g : gens_d)
    if (has_right_descent(ctx, w, g))
      throw std::invalid_argument("w is not a minimal double coset representative");
  for (const WeylGen& g : gens_e)
    if (has_left_descent(ctx, w, g))
      throw std::invalid_argument("w is not a minimal double coset representative");
}

}  // namespace

RefinementDatum refinement_datum(const Quiver& q, const DimVector& c, const OrbitDatum& od) {
  WeylCtx ctx = WeylCtx::ordinary(q, c);
  check_min_rep(ctx, parabolic_generators(ctx, od.e), parabolic_generators(ctx, od.d), od.w);
  Partitioning lam = standard_partitioning(od.e);
  Partitioning mu =
      act_partitioning(ctx, q, nullptr, c, od.w, standard_partitioning(od.d));
  Partitioning lm = ordered_intersection(lam, mu);
  Partitioning ml = ordered_intersection(mu, lam);
  RefinementDatum rd;
  rd.ehat = block_dimensions(q.num_vertices(), lm);
  rd.dhat = block_dimensions(q.num_vertices(), ml);
  rd.uctx = WeylCtx::abstract(lm.length(), false);
  rd.u = find_block_permutation(rd.uctx, q, nullptr, c, lm, ml);
  return rd;
}

CrossingDatum crossing_datum(const Quiver& q, const DimVector& c, const OrbitDatum& od,
                             const RefinementDatum& rd) {
  (void)od;
  CrossingDatum cd;
  std::vector<WeylGen> word = reduced_word(rd.uctx, rd.u);
  WeylCtx ctx = WeylCtx::ordinary(q, c);
  VectorComposition cur = rd.ehat;
  cd.even_chain.push_back(cur);
  for (const WeylGen& g : word) {
    int j = g.pos;  // swap parts j, j+1
    cd.word.push_back(j);
    IntComposition beta;
    for (int t = 1; t <= cur.length(); ++t) {
      if (t == j) { beta.push_back(2); ++t; }
      else beta.push_back(1);
    }
    VectorComposition odd = wedge_coarsen(cur, beta);
    std::swap(cur.parts[j - 1], cur.parts[j]);
    cd.even_chain.push_back(cur);
    std::vector<WeylElem> reps = min_coset_reps(ctx, parabolic_generators(ctx, odd),
                                                parabolic_generators(ctx, cur));
    cd.coset_factors.push_back(longest_element(reps));
  }
  if (!(cur == rd.dhat)) throw std::logic_error("crossing chain does not reach dhat");
  return cd;
}

WeylElem utilde(const WeylCtx& ctx, const CrossingDatum& cd) {
  if (cd.coset_factors.empty()) return WeylElem::identity(ctx);
  WeylElem w = cd.coset_factors[0];
  for (size_t l = 1; l < cd.coset_factors.size(); ++l) w = w * cd.coset_factors[l];
  return w;
}

ThetaRefinementDatum theta_refinement_datum(const Quiver& q, const Involution& inv,
                                            const DimVector& c, const ThetaOrbitDatum& od) {
  WeylCtx ctx = WeylCtx::isotropic(q, inv, c);
  check_min_rep(ctx, parabolic_generators(ctx, q, inv, od.e),
                parabolic_generators(ctx, q, inv, od.d), od.w);
  Partitioning lam = theta_standard_partitioning(inv, od.e);
  Partitioning mu =
      act_partitioning(ctx, q, &inv, c, od.w, theta_standard_partitioning(inv, od.d));
  Partitioning lm = ordered_intersection(lam, mu);
  Partitioning ml = ordered_intersection(mu, lam);
  ThetaRefinementDatum rd;
  rd.ehat = theta_block_dimensions(q, inv, c, lm);
  rd.dhat = theta_block_dimensions(q, inv, c, ml);
  rd.uctx = WeylCtx::abstract(lm.length() / 2, true);
  rd.u = find_block_permutation(rd.uctx, q, &inv, c, lm, ml);
  return rd;
}

ThetaCrossingDatum theta_crossing_datum(const Quiver& q, const Involution& inv,
                                        const DimVector& c, const ThetaOrbitDatum& od,
                                        const ThetaRefinementDatum& rd) {
  (void)od;
  ThetaCrossingDatum cd;
  std::vector<WeylGen> word = reduced_word(rd.uctx, rd.u);
  WeylCtx ctx = WeylCtx::isotropic(q, inv, c);
  int m = rd.uctx.blocks()[0].rank;
  IsoComposition cur = rd.ehat;
  cd.even_chain.push_back(cur);
  for (const WeylGen& g : word) {
    int j = g.pos;
    cd.word.push_back(j);
    IntComposition beta;  // over length(cur) + 1 slots, last block holds inf
    if (j < m) {
      for (int t = 1; t <= cur.length() + 1; ++t) {
        if (t == j) { beta.push_back(2); ++t; }
        else beta.push_back(1);
      }
    } else {
      for (int t = 1; t < m; ++t) beta.push_back(1);
      beta.push_back(2);
    }
    IsoComposition odd = theta_wedge_coarsen(inv, cur, beta);
    if (j < m)
      std::swap(cur.finite[j - 1], cur.finite[j]);
    else
      cur.finite[m - 1] = cur.finite[m - 1].theta(inv);
    cd.even_chain.push_back(cur);
    std::vector<WeylElem> reps =
        min_coset_reps(ctx, parabolic_generators(ctx, q, inv, odd),
                       parabolic_generators(ctx, q, inv, cur));
    cd.coset_factors.push_back(longest_element(reps));
  }
  if (!(cur == rd.dhat)) throw std::logic_error("crossing chain does not reach dhat");
  return cd;
}

WeylElem theta_utilde(const WeylCtx& ctx, const ThetaCrossingDatum& cd) {
  if (cd.coset_factors.empty()) return WeylElem::identity(ctx);
  WeylElem w = cd.coset_factors[0];
  for (size_t l = 1; l < cd.coset_factors.size(); ++l) w = w * cd.coset_factors[l];
  return w;
}

}  // namespace qsk
