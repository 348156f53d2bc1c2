#pragma once

#include "qsk/schur.hpp"

namespace qsk {

// Element of the cohomological Hall algebra in a fixed dimension: a symmetric
// polynomial (invariant under the full Weyl group of its dimension vector).
struct HallElem {
  DimVector dim;
  Polynomial poly;  // in Ambient::ordinary(q, dim)
};

// Element of the Hall module: invariant under the isotropic Weyl group.
struct ThetaHallElem {
  DimVector dim;  // theta-symmetric
  Polynomial poly;  // in Ambient::isotropic(q, inv, dim)
};

// f into the leading variable windows, g into the trailing ones, of the
// two-block layout for (dim f, dim g).
Polynomial embed_pair(const Quiver& q, const HallElem& f, const HallElem& g);

// Hall multiplication: the signed Demazure operator applied to f g E_(a,b).
HallElem coha_mul(const Quiver& q, const HallElem& f, const HallElem& g);
// Same product computed by the symmetrized shuffle formula.
HallElem coha_mul_shuffle(const Quiver& q, const HallElem& f, const HallElem& g);

// Components of the comultiplication of f in dimensions (a, dim f - a).
Polynomial coha_comul(const Quiver& q, const HallElem& f, const DimVector& a);

// Hall module action of f on v (symmetrized shuffle formula).
ThetaHallElem cohm_act(const Quiver& q, const Involution& inv, const HallElem& f,
                       const ThetaHallElem& v);

// Component of the coaction of v in dimensions (a, dim v - D(a)).
Polynomial cohm_coact(const Quiver& q, const Involution& inv, const ThetaHallElem& v,
                      const DimVector& a);

// Product of several factors embedded into the blocks of a composition,
// merged into one block by iterated elementary Demazure merges.
HallElem multi_mul(const Quiver& q, const std::vector<HallElem>& factors);
// Component of the iterated comultiplication along the composition d.
Polynomial multi_com(const Quiver& q, const HallElem& f, const VectorComposition& d);

// Graded dimensions of the invariant ring up to the degree bound (cohomology
// of the classifying stack of representations), as coefficients 0..max_degree.
std::vector<long long> hilbert_coeffs(const Quiver& q, const DimVector& c, int max_degree);
std::vector<long long> hilbert_coeffs(const Quiver& q, const Involution& inv,
                                      const DimVector& c, int max_degree);

}  // namespace qsk
