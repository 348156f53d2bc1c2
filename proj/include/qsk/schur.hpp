#pragma once

#include <variant>

#include "qsk/classes.hpp"
#include "qsk/partition.hpp"

namespace qsk {

// Element of the direct sum over compositions d of the rings of W_d-invariant
// polynomials; zero components are not stored.
template <class Comp>
struct Graded {
  std::map<Comp, Polynomial> parts;

  bool is_zero() const { return parts.empty(); }
  void add(const Comp& d, const Polynomial& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = parts.emplace(d, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) parts.erase(it);
    }
  }
  Graded operator+(const Graded& o) const {
    Graded r(*this);
    for (const auto& [d, f] : o.parts) r.add(d, f);
    return r;
  }
  Graded scaled(const Rational& c) const {
    Graded r;
    if (c == 0) return r;
    for (const auto& [d, f] : parts) r.parts.emplace(d, f.scaled(c));
    return r;
  }
  bool operator==(const Graded& o) const { return parts == o.parts; }
};

using GradedElem = Graded<VectorComposition>;
using ThetaGradedElem = Graded<IsoComposition>;

// --- ordinary operators ------------------------------------------------------

// shuffle-operator route: f -> sum over minimal coset representatives of
// w(E^e_d / S^e_d * f)
GradedElem apply_merge(const Ambient& amb, const VectorComposition& d,
                       const VectorComposition& e, const GradedElem& x);
// divided-difference route: f -> (-1)^{r^e_d} * Delta_w(E^e_d * f) along a
// reduced word of the longest minimal coset representative
GradedElem apply_merge_demazure(const Ambient& amb, const VectorComposition& d,
                                const VectorComposition& e, const GradedElem& x);
GradedElem apply_split(const Ambient& amb, const VectorComposition& e,
                       const VectorComposition& d, const GradedElem& x);
GradedElem apply_poly(const Ambient& amb, const VectorComposition& d, const Polynomial& g,
                      const GradedElem& x);
GradedElem apply_idem(const Ambient& amb, const VectorComposition& d, const GradedElem& x);
// split after merge through the coarsening at position k; lands in the
// composition with parts k, k+1 swapped
GradedElem apply_crossing(const Ambient& amb, const VectorComposition& d, int k,
                          const GradedElem& x);

struct GenMerge { VectorComposition d, e; };
struct GenSplit { VectorComposition e, d; };
struct GenCup { VectorComposition d; Polynomial f; };
struct GenIdem { VectorComposition d; };
struct GenCross { VectorComposition d; int k; };
struct GenScalar { VectorComposition d; Rational c; };
using SchurGen = std::variant<GenMerge, GenSplit, GenCup, GenIdem, GenCross, GenScalar>;

// Composable word of generators; gens.back() acts first.
struct SchurWord {
  std::vector<SchurGen> gens;
};

GradedElem apply_gen(const Ambient& amb, const SchurGen& g, const GradedElem& x);
GradedElem apply_word(const Ambient& amb, const SchurWord& w, const GradedElem& x);

// source/target component of a word (source of the first generator applied)
VectorComposition word_source(const SchurWord& w);

std::string format_word(const Quiver& q, const Ambient& amb, const SchurWord& w);

// Equality of the operators defined by two words on all invariants of the
// source components up to the degree bound; exact.
bool operator_equal(const Ambient& amb, const SchurWord& w1, const SchurWord& w2,
                    int max_degree);

// merge[e^0 -> e] * cross ... cross * cup[f] * split[d -> e^{2k}]
SchurWord bott_samelson_word(const Ambient& amb, const OrbitDatum& od,
                             const RefinementDatum& rd, const CrossingDatum& cd,
                             const Polynomial& cup);

// exact rank of a rational matrix given by rows
long long matrix_rank(std::vector<std::vector<Rational>> rows);

// --- isotropic operators -----------------------------------------------------

// Signed variable images embedding the ordinary ring of the finite parts of d
// (ambf) into the isotropic ring amb: leading windows at Plus and Fixed
// vertices, negated trailing windows at Minus vertices.
std::vector<int> theta_finite_embed(const Ambient& amb, const Ambient& ambf,
                                    const IsoComposition& d);
// Images embedding the isotropic ring of the infinite part (ambi) into the
// window after the finite blocks of d.
std::vector<int> theta_inf_embed(const Ambient& amb, const Ambient& ambi,
                                 const IsoComposition& d);

ThetaGradedElem apply_theta_merge(const Ambient& amb, const IsoComposition& d,
                                  const IsoComposition& e, const ThetaGradedElem& x);
ThetaGradedElem apply_theta_split(const Ambient& amb, const IsoComposition& e,
                                  const IsoComposition& d, const ThetaGradedElem& x);
ThetaGradedElem apply_theta_poly(const Ambient& amb, const IsoComposition& d,
                                 const Polynomial& g, const ThetaGradedElem& x);
ThetaGradedElem apply_theta_crossing(const Ambient& amb, const IsoComposition& d, int k,
                                     const ThetaGradedElem& x);

}  // namespace qsk
