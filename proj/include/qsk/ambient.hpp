#pragma once

#include "qsk/polynomial.hpp"
#include "qsk/quiver.hpp"
#include "qsk/weyl.hpp"

namespace qsk {

// Polynomial ring attached to a quiver and dimension vector: one variable
// x[i,j] per vertex i and 1 <= j <= c(i); in the isotropic case j runs to
// floor(c(i)/2) at theta-fixed vertices and no variables live at Minus
// vertices.  Variable blocks are aligned with the Weyl context blocks.
class Ambient {
public:
  static Ambient ordinary(const Quiver& q, const DimVector& c);
  static Ambient isotropic(const Quiver& q, const Involution& inv, const DimVector& c);

  const Quiver& quiver() const { return *q_; }
  const Involution* involution() const { return inv_; }
  bool is_isotropic() const { return inv_ != nullptr; }
  const DimVector& dim() const { return c_; }
  const WeylCtx& weyl() const { return ctx_; }

  int nvars() const { return nvars_; }
  int var(int vertex, int j) const;       // 0-based global index of x[vertex,j]
  int var_count(int vertex) const { return counts_.at(vertex); }
  const std::vector<std::string>& var_names() const { return names_; }

  Polynomial parse(const std::string& text) const {
    return Polynomial::parse(nvars_, names_, text);
  }
  std::string str(const Polynomial& p) const { return p.to_string(names_); }

  // signed variable images (1-based, negative = sign flip) of a Weyl element
  std::vector<int> var_map(const WeylElem& w) const;
  Polynomial act(const WeylElem& w, const Polynomial& f) const;

private:
  const Quiver* q_ = nullptr;
  const Involution* inv_ = nullptr;
  DimVector c_;
  WeylCtx ctx_;
  std::vector<int> offsets_;
  std::vector<int> counts_;
  std::vector<std::string> names_;
  int nvars_ = 0;

  void build_vars();
};

// Signed sum over cosets applied to a rational function whose denominator is a
// product of linear forms: sum_w w(num/den).  Throws DivisionError when the
// result fails to clear to a polynomial.
Polynomial shuffle_sum(const Ambient& amb, const std::vector<WeylElem>& reps,
                       const Polynomial& num, const FactoredPoly& den);

// Divided-difference operator for the adjacent transposition of the j-th and
// (j+1)-st variable at a vertex: (f - s f) / (x_j - x_{j+1}).
Polynomial demazure_simple(const Ambient& amb, int vertex, int j, const Polynomial& f);
// Composite along a word of simple generators (sign generators are rejected;
// reduced words are the caller's responsibility).
Polynomial demazure_word(const Ambient& amb, const std::vector<WeylGen>& word,
                         const Polynomial& f);

// Product of the positive roots of the parabolic subgroup of a composition,
// with the root normalization at theta-fixed vertices determined by sigma and
// the parity: {x_k +- x_l} always, plus {x_k} when sigma=1 and the local
// dimension is odd, {2x_k} when sigma=-1, nothing when sigma=1 and even.
FactoredPoly blacktriangle(const Ambient& amb, const VectorComposition& d);
FactoredPoly blacktriangle(const Ambient& amb, const IsoComposition& d);
FactoredPoly blacktriangle_full(const Ambient& amb);  // whole Weyl group

// sum_{w in W} (-1)^{l(w)} w(f) / prod(positive roots): the symmetrizing
// divided-difference attached to the parabolic given by `gens`; `roots` is the
// blacktriangle product for the same subgroup.
Polynomial demazure_sum(const Ambient& amb, const std::vector<WeylGen>& gens,
                        const FactoredPoly& roots, const Polynomial& f);

bool is_invariant(const Ambient& amb, const std::vector<WeylGen>& gens, const Polynomial& f);

// Orbit sums of monomials up to the given total degree, graded-lex ordered.
std::vector<Polynomial> invariant_basis(const Ambient& amb, const std::vector<WeylGen>& gens,
                                        int max_degree);

}  // namespace qsk
