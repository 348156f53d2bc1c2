#pragma once

#include "qsk/quiver.hpp"
#include "qsk/weyl.hpp"

namespace qsk {

// One slot per basis vector: (vertex, idx) with idx in 1..c(vertex).
struct Slot {
  int vertex = 0;
  int idx = 0;
  bool operator==(const Slot& o) const { return vertex == o.vertex && idx == o.idx; }
  bool operator<(const Slot& o) const {
    return vertex != o.vertex ? vertex < o.vertex : idx < o.idx;
  }
};

// Surjection from the slot set onto {1..n}, stored as ordered blocks of
// sorted slots.  Blocks are nonempty.
struct Partitioning {
  std::vector<std::vector<Slot>> blocks;

  int length() const { return static_cast<int>(blocks.size()); }
  bool operator==(const Partitioning& o) const { return blocks == o.blocks; }
  bool operator<(const Partitioning& o) const { return blocks < o.blocks; }
};

// Standard partitioning of a vector composition: consecutive index windows.
Partitioning standard_partitioning(const VectorComposition& d);
// Its block dimensions.
VectorComposition block_dimensions(int num_vertices, const Partitioning& lam);

// Isotropic analogues.  Slots at a Fixed vertex run 1..c(i) with the slot
// involution idx -> c(i)+1-idx; at Plus/Minus pairs theta swaps the vertices.
Partitioning theta_standard_partitioning(const Involution& inv, const IsoComposition& d);
IsoComposition theta_block_dimensions(const Quiver& q, const Involution& inv,
                                      const DimVector& c, const Partitioning& lam);
bool is_isotropic_partitioning(const Quiver& q, const Involution& inv, const DimVector& c,
                               const Partitioning& lam);

// Blocks of the pairwise intersections, ordered by the first index ascending
// and then the second.
Partitioning ordered_intersection(const Partitioning& lam, const Partitioning& mu);

// Action of the ambient Weyl group on slots / partitionings.
Slot act_slot(const WeylCtx& ctx, const Quiver& q, const Involution* inv, const DimVector& c,
              const WeylElem& w, const Slot& s);
Partitioning act_partitioning(const WeylCtx& ctx, const Quiver& q, const Involution* inv,
                              const DimVector& c, const WeylElem& w, const Partitioning& lam);

// Block-permutation action (places): result block k is nu block u(k); for a
// signed u the mirror block image is used with the slot involution applied.
Partitioning permute_blocks(const WeylCtx& uctx, const Quiver& q, const Involution* inv,
                            const DimVector& c, const Partitioning& nu, const WeylElem& u);

// The unique (signed) block permutation with permute_blocks(nu, u) == target.
WeylElem find_block_permutation(const WeylCtx& uctx, const Quiver& q, const Involution* inv,
                                const DimVector& c, const Partitioning& nu,
                                const Partitioning& target);

struct OrbitDatum {
  VectorComposition e, d;
  WeylElem w;  // minimal double coset representative in W_e \ W_c / W_d
};

struct RefinementDatum {
  VectorComposition ehat, dhat;
  WeylCtx uctx;  // block permutations of the common length
  WeylElem u;
};

struct CrossingDatum {
  // chain e^0 .. e^{2k}; e^{2l-1} omitted (recoverable by coarsening), word
  // j_1..j_k applied left to right
  std::vector<VectorComposition> even_chain;
  std::vector<int> word;
  std::vector<WeylElem> coset_factors;  // w_l, in the ambient Weyl group
};

RefinementDatum refinement_datum(const Quiver& q, const DimVector& c, const OrbitDatum& od);
CrossingDatum crossing_datum(const Quiver& q, const DimVector& c, const OrbitDatum& od,
                             const RefinementDatum& rd);
// product of the coset factors; equals od.w with additive lengths
WeylElem utilde(const WeylCtx& ctx, const CrossingDatum& cd);

// Isotropic versions.
struct ThetaOrbitDatum {
  IsoComposition e, d;
  WeylElem w;
};

struct ThetaRefinementDatum {
  IsoComposition ehat, dhat;
  WeylCtx uctx;  // signed block permutations
  WeylElem u;
};

struct ThetaCrossingDatum {
  std::vector<IsoComposition> even_chain;
  std::vector<int> word;
  std::vector<WeylElem> coset_factors;
};

ThetaRefinementDatum theta_refinement_datum(const Quiver& q, const Involution& inv,
                                            const DimVector& c, const ThetaOrbitDatum& od);
ThetaCrossingDatum theta_crossing_datum(const Quiver& q, const Involution& inv,
                                        const DimVector& c, const ThetaOrbitDatum& od,
                                        const ThetaRefinementDatum& rd);
WeylElem theta_utilde(const WeylCtx& ctx, const ThetaCrossingDatum& cd);

}  // namespace qsk
