#include "qsk/hall.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsk {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// images embedding the ordinary ring of block j of d into the full ring
std::vector<int> block_embed(const Ambient& amb, const Ambient& ambj,
                             const VectorComposition& d, int j) {
  const Quiver& q = amb.quiver();
  std::vector<int> image(ambj.nvars(), 0);
  for (int v = 0; v < q.num_vertices(); ++v) {
    long long off = 0;
    for (int r = 0; r < j; ++r) off += d.parts[r](v);
    for (int k = 1; k <= ambj.var_count(v); ++k)
      image[ambj.var(v, k)] = amb.var(v, static_cast<int>(off + k)) + 1;
  }
  return image;
}

Polynomial embed_factors(const Quiver& q, const Ambient& amb, const VectorComposition& d,
                         const std::vector<HallElem>& factors) {
  Polynomial prod = Polynomial::constant(amb.nvars(), 1);
  for (size_t j = 0; j < factors.size(); ++j) {
    Ambient ambj = Ambient::ordinary(q, factors[j].dim);
    prod = prod * factors[j].poly.embed(amb.nvars(),
                                        block_embed(amb, ambj, d, static_cast<int>(j)));
  }
  return prod;
}

}  // namespace

Polynomial embed_pair(const Quiver& q, const HallElem& f, const HallElem& g) {
  DimVector c = f.dim + g.dim;
  Ambient amb = Ambient::ordinary(q, c);
  VectorComposition d{{f.dim, g.dim}};
  return embed_factors(q, amb, d, {f, g});
}

HallElem coha_mul(const Quiver& q, const HallElem& f, const HallElem& g) {
  require(!f.dim.is_zero() && !g.dim.is_zero(), "zero dimension factor");
  DimVector c = f.dim + g.dim;
  Ambient amb = Ambient::ordinary(q, c);
  VectorComposition d{{f.dim, g.dim}};
  VectorComposition e{{c}};
  GradedElem x;
  x.add(d, embed_pair(q, f, g));
  GradedElem y = apply_merge_demazure(amb, d, e, x);
  auto it = y.parts.find(e);
  return {c, it == y.parts.end() ? Polynomial(amb.nvars()) : it->second};
}

HallElem coha_mul_shuffle(const Quiver& q, const HallElem& f, const HallElem& g) {
  require(!f.dim.is_zero() && !g.dim.is_zero(), "zero dimension factor");
  DimVector c = f.dim + g.dim;
  Ambient amb = Ambient::ordinary(q, c);
  VectorComposition d{{f.dim, g.dim}};
  VectorComposition e{{c}};
  GradedElem x;
  x.add(d, embed_pair(q, f, g));
  GradedElem y = apply_merge(amb, d, e, x);
  auto it = y.parts.find(e);
  return {c, it == y.parts.end() ? Polynomial(amb.nvars()) : it->second};
}

Polynomial coha_comul(const Quiver& q, const HallElem& f, const DimVector& a) {
  (void)q;
  DimVector b = f.dim - a;
  for (int i = 0; i < b.size(); ++i)
    require(b(i) >= 0 && a(i) >= 0, "comultiplication component out of range");
  require(!a.is_zero() && !b.is_zero(), "comultiplication into a zero block");
  return f.poly;  // the split operator is the inclusion of invariants
}

ThetaHallElem cohm_act(const Quiver& q, const Involution& inv, const HallElem& f,
                       const ThetaHallElem& v) {
  require(!f.dim.is_zero(), "zero dimension factor");
  DimVector c = f.dim.doubled(inv) + v.dim;
  Ambient amb = Ambient::isotropic(q, inv, c);
  IsoComposition d{{f.dim}, v.dim};
  IsoComposition e{{}, c};
  Ambient ambf = Ambient::ordinary(q, f.dim);
  Ambient ambi = Ambient::isotropic(q, inv, v.dim);
  Polynomial prod = f.poly.embed(amb.nvars(), theta_finite_embed(amb, ambf, d)) *
                    v.poly.embed(amb.nvars(), theta_inf_embed(amb, ambi, d));
  ThetaGradedElem x;
  x.add(d, prod);
  ThetaGradedElem y = apply_theta_merge(amb, d, e, x);
  auto it = y.parts.find(e);
  return {c, it == y.parts.end() ? Polynomial(amb.nvars()) : it->second};
}

Polynomial cohm_coact(const Quiver& q, const Involution& inv, const ThetaHallElem& v,
                      const DimVector& a) {
  DimVector b = v.dim - a.doubled(inv);
  for (int i = 0; i < b.size(); ++i) require(b(i) >= 0, "coaction component out of range");
  require(!a.is_zero(), "coaction into a zero block");
  IsoComposition d{{a}, b};
  d.validate(q, inv);
  return v.poly;  // the coaction operator is the inclusion of invariants
}

HallElem multi_mul(const Quiver& q, const std::vector<HallElem>& factors) {
  require(!factors.empty(), "empty product");
  DimVector c = factors[0].dim;
  for (size_t j = 1; j < factors.size(); ++j) c = c + factors[j].dim;
  Ambient amb = Ambient::ordinary(q, c);
  std::vector<DimVector> parts;
  for (const auto& h : factors) {
    require(!h.dim.is_zero(), "zero dimension factor");
    parts.push_back(h.dim);
  }
  VectorComposition d{parts};
  GradedElem cur;
  cur.add(d, embed_factors(q, amb, d, factors));
  while (d.length() > 1) {
    VectorComposition e = d;
    e.parts[0] = d.parts[0] + d.parts[1];
    e.parts.erase(e.parts.begin() + 1);
    cur = apply_merge_demazure(amb, d, e, cur);
    d = e;
  }
  auto it = cur.parts.find(d);
  return {c, it == cur.parts.end() ? Polynomial(amb.nvars()) : it->second};
}

Polynomial multi_com(const Quiver& q, const HallElem& f, const VectorComposition& d) {
  (void)q;
  require(d.sum() == f.dim, "composition does not sum to the dimension");
  return f.poly;  // iterated splits compose to the inclusion
}

std::vector<long long> hilbert_coeffs(const Quiver& q, const DimVector& c, int max_degree) {
  Ambient amb = Ambient::ordinary(q, c);
  std::vector<long long> out(max_degree + 1, 0);
  for (const auto& f : invariant_basis(amb, amb.weyl().simple_generators(), max_degree))
    ++out[static_cast<size_t>(std::max<long long>(0, f.degree()))];
  return out;
}

std::vector<long long> hilbert_coeffs(const Quiver& q, const Involution& inv,
                                      const DimVector& c, int max_degree) {
  Ambient amb = Ambient::isotropic(q, inv, c);
  std::vector<long long> out(max_degree + 1, 0);
  for (const auto& f : invariant_basis(amb, amb.weyl().simple_generators(), max_degree))
    ++out[static_cast<size_t>(std::max<long long>(0, f.degree()))];
  return out;
}

}  // namespace qsk
