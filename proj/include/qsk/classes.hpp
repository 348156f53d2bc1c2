#pragma once

#include "qsk/ambient.hpp"

namespace qsk {

// Product over vertices and block pairs r < s of (x_l(i) - x_k(i)) with k in
// block r and l in block s.
FactoredPoly class_S(const Ambient& amb, const VectorComposition& d);
// Same with (x_l(j) - x_k(i))^{a_ij} over arrow multiplicities.
FactoredPoly class_E(const Ambient& amb, const VectorComposition& d);
// Relative classes S_d / S_e and E_d / E_e for d refining e.
FactoredPoly class_S_rel(const Ambient& amb, const VectorComposition& d,
                         const VectorComposition& e);
FactoredPoly class_E_rel(const Ambient& amb, const VectorComposition& d,
                         const VectorComposition& e);

// number of positive roots of W_e not in W_d (= degree of S_d / S_e)
long long r_count(const Ambient& amb, const VectorComposition& d, const VectorComposition& e);

// Isotropic two-block classes for d = (a, b): one finite part a, infinite part
// b.  The ambient dimension must be a + theta(a) + b.
FactoredPoly class_theta_S(const Ambient& amb, const DimVector& a, const DimVector& b);
FactoredPoly class_theta_E(const Ambient& amb, const DimVector& a, const DimVector& b);

long long theta_r_count(const Ambient& amb, const DimVector& a, const DimVector& b);

}  // namespace qsk
