#pragma once

#include <vector>

#include "qsk/quiver.hpp"

namespace qsk {

// One factor of a product Weyl group: a symmetric group Sym_rank, or (when
// is_signed) the group of signed permutations of rank letters with the sign
// generator at the last position.
struct WeylBlock {
  int vertex = -1;  // -1 for "abstract" contexts (block permutations)
  int rank = 0;
  bool is_signed = false;
};

struct WeylGen {
  int block = 0;
  int pos = 0;  // 1..rank-1: adjacent transposition at pos; rank: sign flip (signed only)
  bool operator==(const WeylGen& o) const { return block == o.block && pos == o.pos; }
  bool operator<(const WeylGen& o) const {
    return block != o.block ? block < o.block : pos < o.pos;
  }
};

class WeylCtx {
public:
  WeylCtx() = default;
  explicit WeylCtx(std::vector<WeylBlock> blocks) : blocks_(std::move(blocks)) {}

  // Weyl group of G_c: one Sym_{c(i)} per vertex (zero-rank blocks kept so
  // block indices equal vertex indices)
  static WeylCtx ordinary(const Quiver& q, const DimVector& c);
  // Weyl group of the theta-fixed subgroup: Sym_{c(i)} at Plus vertices,
  // signed permutations of floor(c(i)/2) letters at Fixed vertices, nothing at
  // Minus vertices (zero-rank placeholder blocks at Minus vertices)
  static WeylCtx isotropic(const Quiver& q, const Involution& inv, const DimVector& c);
  // single abstract block (used for block permutations of compositions)
  static WeylCtx abstract(int rank, bool is_signed);

  const std::vector<WeylBlock>& blocks() const { return blocks_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }

  std::vector<WeylGen> simple_generators() const;
  long long group_order() const;

private:
  std::vector<WeylBlock> blocks_;
};

// Element of a product of (signed) permutation groups.  line_[b][k-1] is the
// signed image of letter k in block b; negatives occur only in signed blocks.
class WeylElem {
public:
  WeylElem() = default;
  static WeylElem identity(const WeylCtx& ctx);
  static WeylElem generator(const WeylCtx& ctx, const WeylGen& g);

  int image(int block, int k) const;  // signed image of signed letter k
  const std::vector<std::vector<int>>& lines() const { return line_; }
  std::vector<std::vector<int>>& lines() { return line_; }

  // group multiplication: (a * b) applies b first, then a
  WeylElem operator*(const WeylElem& o) const;
  WeylElem inverse() const;
  bool is_identity() const;
  bool operator==(const WeylElem& o) const { return line_ == o.line_; }
  bool operator<(const WeylElem& o) const { return line_ < o.line_; }

  // number of positive roots sent to negative roots (Coxeter length)
  long long length() const;

private:
  std::vector<std::vector<int>> line_;
};

// Simple generators of the parabolic subgroup attached to a composition.
std::vector<WeylGen> parabolic_generators(const WeylCtx& ctx, const VectorComposition& d);
std::vector<WeylGen> parabolic_generators(const WeylCtx& ctx, const Quiver& q,
                                          const Involution& inv, const IsoComposition& d);

// Closure of a generating set (BFS); sorted by (length, one-line form).
std::vector<WeylElem> generate_subgroup(const WeylCtx& ctx, const std::vector<WeylGen>& gens);

bool has_right_descent(const WeylCtx& ctx, const WeylElem& w, const WeylGen& g);
bool has_left_descent(const WeylCtx& ctx, const WeylElem& w, const WeylGen& g);

// Unique minimal-length representatives of the double cosets W_e \ W / W_d,
// where W is generated by `ambient` (usually the whole group).
std::vector<WeylElem> min_double_coset_reps(const WeylCtx& ctx,
                                            const std::vector<WeylElem>& ambient,
                                            const std::vector<WeylGen>& gens_e,
                                            const std::vector<WeylGen>& gens_d);

// Independent oracle: partition `ambient` into double cosets by orbit closure
// and take the shortest element of each (ties broken lexicographically).
std::vector<WeylElem> min_double_coset_reps_bruteforce(const WeylCtx& ctx,
                                                       const std::vector<WeylElem>& ambient,
                                                       const std::vector<WeylGen>& gens_e,
                                                       const std::vector<WeylGen>& gens_d);

// Minimal representatives of right cosets W_e / W_d (gens_d inside the group
// generated by gens_e).
std::vector<WeylElem> min_coset_reps(const WeylCtx& ctx, const std::vector<WeylGen>& gens_e,
                                     const std::vector<WeylGen>& gens_d);

const WeylElem& longest_element(const std::vector<WeylElem>& elems);

// Reduced word, peeling the smallest left descent first: the returned sequence
// g_1..g_k satisfies w = g_1 * g_2 * ... * g_k (g_k applied first).
std::vector<WeylGen> reduced_word(const WeylCtx& ctx, const WeylElem& w);

std::string format_weyl(const WeylCtx& ctx, const WeylElem& w);

}  // namespace qsk
