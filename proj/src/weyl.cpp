#include "qsk/weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qsk {

WeylCtx WeylCtx::ordinary(const Quiver& q, const DimVector& c) {
  std::vector<WeylBlock> blocks;
  for (int i = 0; i < q.num_vertices(); ++i)
    blocks.push_back({i, static_cast<int>(c(i)), false});
  return WeylCtx(std::move(blocks));
}

WeylCtx WeylCtx::isotropic(const Quiver& q, const Involution& inv, const DimVector& c) {
  std::vector<WeylBlock> blocks;
  for (int i = 0; i < q.num_vertices(); ++i) {
    switch (inv.vertex_part[i]) {
      case Involution::Part::Plus:
        blocks.push_back({i, static_cast<int>(c(i)), false});
        break;
      case Involution::Part::Fixed:
        blocks.push_back({i, static_cast<int>(c(i) / 2), true});
        break;
      case Involution::Part::Minus:
        blocks.push_back({i, 0, false});
        break;
    }
  }
  return WeylCtx(std::move(blocks));
}

WeylCtx WeylCtx::abstract(int rank, bool is_signed) {
  return WeylCtx({WeylBlock{-1, rank, is_signed}});
}

std::vector<WeylGen> WeylCtx::simple_generators() const {
  std::vector<WeylGen> gens;
  for (int b = 0; b < num_blocks(); ++b) {
    for (int j = 1; j < blocks_[b].rank; ++j) gens.push_back({b, j});
    if (blocks_[b].is_signed && blocks_[b].rank >= 1) gens.push_back({b, blocks_[b].rank});
  }
  return gens;
}

long long WeylCtx::group_order() const {
  long long n = 1;
  for (const WeylBlock& b : blocks_) {
    for (int k = 2; k <= b.rank; ++k) n *= k;
    if (b.is_signed)
      for (int k = 0; k < b.rank; ++k) n *= 2;
  }
  return n;
}

WeylElem WeylElem::identity(const WeylCtx& ctx) {
  WeylElem w;
  for (const WeylBlock& b : ctx.blocks()) {
    std::vector<int> line(b.rank);
    for (int k = 1; k <= b.rank; ++k) line[k - 1] = k;
    w.line_.push_back(std::move(line));
  }
  return w;
}

WeylElem WeylElem::generator(const WeylCtx& ctx, const WeylGen& g) {
  WeylElem w = identity(ctx);
  const WeylBlock& b = ctx.blocks()[g.block];
  if (g.pos == b.rank) {
    if (!b.is_signed) throw std::invalid_argument("sign generator in unsigned block");
    w.line_[g.block][b.rank - 1] = -b.rank;
  } else {
    std::swap(w.line_[g.block][g.pos - 1], w.line_[g.block][g.pos]);
  }
  return w;
}

int WeylElem::image(int block, int k) const {
  if (k > 0) return line_[block][k - 1];
  return -line_[block][-k - 1];
}

WeylElem WeylElem::operator*(const WeylElem& o) const {
  WeylElem r;
  r.line_.resize(line_.size());
  for (size_t b = 0; b < line_.size(); ++b) {
    r.line_[b].resize(line_[b].size());
    for (size_t k = 0; k < line_[b].size(); ++k)
      r.line_[b][k] = image(static_cast<int>(b), o.line_[b][k]);
  }
  return r;
}

WeylElem WeylElem::inverse() const {
  WeylElem r;
  r.line_.resize(line_.size());
  for (size_t b = 0; b < line_.size(); ++b) {
    r.line_[b].resize(line_[b].size());
    for (size_t k = 0; k < line_[b].size(); ++k) {
      int img = line_[b][k];
      if (img > 0)
        r.line_[b][img - 1] = static_cast<int>(k) + 1;
      else
        r.line_[b][-img - 1] = -(static_cast<int>(k) + 1);
    }
  }
  return r;
}

bool WeylElem::is_identity() const {
  for (const auto& line : line_)
    for (size_t k = 0; k < line.size(); ++k)
      if (line[k] != static_cast<int>(k) + 1) return false;
  return true;
}

long long WeylElem::length() const {
  // positive roots sent to negative ones; the signed roots x_k + x_l and x_k
  // contribute zero in blocks without sign flips, so no context is needed
  long long len = 0;
  for (const auto& line : line_) {
    int m = static_cast<int>(line.size());
    for (int k = 0; k < m; ++k) {
      for (int l = k + 1; l < m; ++l) {
        // root x_{k+1} - x_{l+1}; negative iff the coefficient of the smaller
        // surviving variable is negative
        int a = line[k], b = line[l];
        int pa = std::abs(a), pb = std::abs(b);
        int lead;
        if (pa < pb) lead = a > 0 ? 1 : -1;
        else lead = b > 0 ? -1 : 1;
        if (lead < 0) ++len;
        // root x_{k+1} + x_{l+1}
        lead = (pa < pb) ? (a > 0 ? 1 : -1) : (b > 0 ? 1 : -1);
        if (lead < 0) ++len;
      }
      if (line[k] < 0) ++len;  // root x_{k+1}
    }
  }
  return len;
}


std::vector<WeylGen> parabolic_generators(const WeylCtx& ctx, const VectorComposition& d) {
  std::vector<WeylGen> gens;
  for (int b = 0; b < ctx.num_blocks(); ++b) {
    int vertex = ctx.blocks()[b].vertex;
    int pos = 0;
    for (const DimVector& part : d.parts) {
      int sz = static_cast<int>(part(vertex));
      for (int j = 1; j < sz; ++j) gens.push_back({b, pos + j});
      pos += sz;
    }
    if (pos != ctx.blocks()[b].rank)
      throw std::invalid_argument("composition does not match the ambient dimension");
  }
  return gens;
}

std::vector<WeylGen> parabolic_generators(const WeylCtx& ctx, const Quiver& q,
                                          const Involution& inv, const IsoComposition& d) {
  std::vector<WeylGen> gens;
  for (int b = 0; b < ctx.num_blocks(); ++b) {
    const WeylBlock& blk = ctx.blocks()[b];
    if (blk.rank == 0) continue;
    int i = blk.vertex;
    if (!blk.is_signed) {
      // Plus vertex: Young subgroup of the doubled sequence
      // (d_1(i),...,d_l(i), inf(i), d_l(theta i),...,d_1(theta i))
      int ti = inv.vertex_map[i];
      std::vector<int> seq;
      for (const DimVector& p : d.finite) seq.push_back(static_cast<int>(p(i)));
      seq.push_back(static_cast<int>(d.inf(i)));
      for (int k = d.length() - 1; k >= 0; --k)
        seq.push_back(static_cast<int>(d.finite[k](ti)));
      int pos = 0;
      for (int sz : seq) {
        for (int j = 1; j < sz; ++j) gens.push_back({b, pos + j});
        pos += sz;
      }
      if (pos != blk.rank)
        throw std::invalid_argument("isotropic composition does not match the ambient");
    } else {
      // Fixed vertex: Sym blocks for the finite parts, then a full signed
      // group on the trailing floor(inf(i)/2) letters
      int pos = 0;
      for (const DimVector& p : d.finite) {
        int sz = static_cast<int>(p(i));
        for (int j = 1; j < sz; ++j) gens.push_back({b, pos + j});
        pos += sz;
      }
      int tail = blk.rank - pos;
      if (tail != static_cast<int>(d.inf(i) / 2))
        throw std::invalid_argument("isotropic composition does not match the ambient");
      for (int j = 1; j < tail; ++j) gens.push_back({b, pos + j});
      if (tail >= 1) gens.push_back({b, blk.rank});
    }
  }
  (void)q;
  return gens;
}

std::vector<WeylElem> generate_subgroup(const WeylCtx& ctx, const std::vector<WeylGen>& gens) {
  std::vector<WeylElem> gelems;
  for (const WeylGen& g : gens) gelems.push_back(WeylElem::generator(ctx, g));
  std::set<WeylElem> seen;
  std::vector<WeylElem> frontier{WeylElem::identity(ctx)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<WeylElem> next;
    for (const WeylElem& w : frontier)
      for (const WeylElem& g : gelems) {
        WeylElem x = w * g;
        if (seen.insert(x).second) next.push_back(x);
      }
    frontier = std::move(next);
  }
  std::vector<WeylElem> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [&](const WeylElem& a, const WeylElem& b) {
    long long la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    return a < b;
  });
  return out;
}

bool has_right_descent(const WeylCtx& ctx, const WeylElem& w, const WeylGen& g) {
  return (w * WeylElem::generator(ctx, g)).length() < w.length();
}

bool has_left_descent(const WeylCtx& ctx, const WeylElem& w, const WeylGen& g) {
  return (WeylElem::generator(ctx, g) * w).length() < w.length();
}

std::vector<WeylElem> min_double_coset_reps(const WeylCtx& ctx,
                                            const std::vector<WeylElem>& ambient,
                                            const std::vector<WeylGen>& gens_e,
                                            const std::vector<WeylGen>& gens_d) {
  std::vector<WeylElem> out;
  for (const WeylElem& w : ambient) {
    bool minimal = true;
    for (const WeylGen& g : gens_d)
      if (has_right_descent(ctx, w, g)) { minimal = false; break; }
    if (minimal)
      for (const WeylGen& g : gens_e)
        if (has_left_descent(ctx, w, g)) { minimal = false; break; }
    if (minimal) out.push_back(w);
  }
  return out;
}

std::vector<WeylElem> min_double_coset_reps_bruteforce(const WeylCtx& ctx,
                                                       const std::vector<WeylElem>& ambient,
                                                       const std::vector<WeylGen>& gens_e,
                                                       const std::vector<WeylGen>& gens_d) {
  std::vector<WeylElem> le, rd;
  for (const WeylGen& g : gens_e) le.push_back(WeylElem::generator(ctx, g));
  for (const WeylGen& g : gens_d) rd.push_back(WeylElem::generator(ctx, g));
  std::set<WeylElem> remaining(ambient.begin(), ambient.end());
  std::vector<WeylElem> out;
  while (!remaining.empty()) {
    WeylElem seed = *remaining.begin();
    std::set<WeylElem> coset;
    std::vector<WeylElem> frontier{seed};
    coset.insert(seed);
    while (!frontier.empty()) {
      std::vector<WeylElem> next;
      for (const WeylElem& w : frontier) {
        for (const WeylElem& g : le) {
          WeylElem x = g * w;
          if (coset.insert(x).second) next.push_back(x);
        }
        for (const WeylElem& g : rd) {
          WeylElem x = w * g;
          if (coset.insert(x).second) next.push_back(x);
        }
      }
      frontier = std::move(next);
    }
    const WeylElem* best = nullptr;
    long long bestlen = 0;
    for (const WeylElem& w : coset) {
      long long l = w.length();
      if (!best || l < bestlen || (l == bestlen && w < *best)) { best = &w; bestlen = l; }
      remaining.erase(w);
    }
    out.push_back(*best);
  }
  std::sort(out.begin(), out.end(), [&](const WeylElem& a, const WeylElem& b) {
    long long la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    return a < b;
  });
  return out;
}

std::vector<WeylElem> min_coset_reps(const WeylCtx& ctx, const std::vector<WeylGen>& gens_e,
                                     const std::vector<WeylGen>& gens_d) {
  std::vector<WeylElem> group = generate_subgroup(ctx, gens_e);
  std::vector<WeylElem> out;
  for (const WeylElem& w : group) {
    bool minimal = true;
    for (const WeylGen& g : gens_d)
      if (has_right_descent(ctx, w, g)) { minimal = false; break; }
    if (minimal) out.push_back(w);
  }
  return out;
}

const WeylElem& longest_element(const std::vector<WeylElem>& elems) {
  const WeylElem* best = nullptr;
  long long bestlen = -1;
  for (const WeylElem& w : elems) {
    long long l = w.length();
    if (l > bestlen) { best = &w; bestlen = l; }
  }
  if (!best) throw std::invalid_argument("longest element of an empty set");
  return *best;
}

std::vector<WeylGen> reduced_word(const WeylCtx& ctx, const WeylElem& w) {
  std::vector<WeylGen> gens = ctx.simple_generators();
  std::vector<WeylGen> word;
  WeylElem cur = w;
  while (!cur.is_identity()) {
    bool found = false;
    for (const WeylGen& g : gens) {
      if (has_left_descent(ctx, cur, g)) {
        word.push_back(g);
        cur = WeylElem::generator(ctx, g) * cur;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no descent found for a non-identity element");
  }
  return word;
}

std::string format_weyl(const WeylCtx& ctx, const WeylElem& w) {
  std::ostringstream os;
  bool firstblk = true;
  for (int b = 0; b < ctx.num_blocks(); ++b) {
    if (ctx.blocks()[b].rank == 0) continue;
    if (!firstblk) os << " ";
    firstblk = false;
    os << "[";
    for (size_t k = 0; k < w.lines()[b].size(); ++k) {
      if (k) os << ",";
      os << w.lines()[b][k];
    }
    os << "]";
  }
  return os.str();
}

}  // namespace qsk
