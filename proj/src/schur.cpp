#include "qsk/schur.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qsk {

namespace {

const Polynomial* component(const GradedElem& x, const VectorComposition& d) {
  auto it = x.parts.find(d);
  return it == x.parts.end() ? nullptr : &it->second;
}

const Polynomial* component(const ThetaGradedElem& x, const IsoComposition& d) {
  auto it = x.parts.find(d);
  return it == x.parts.end() ? nullptr : &it->second;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

GradedElem apply_merge(const Ambient& amb, const VectorComposition& d,
                       const VectorComposition& e, const GradedElem& x) {
  require(refines(d, e).has_value(), "merge: target does not coarsen source");
  GradedElem out;
  const Polynomial* f = component(x, d);
  if (!f) return out;
  const WeylCtx& ctx = amb.weyl();
  auto reps = min_coset_reps(ctx, parabolic_generators(ctx, e), parabolic_generators(ctx, d));
  Polynomial num = class_E_rel(amb, d, e).expand(amb.nvars()) * (*f);
  out.add(e, shuffle_sum(amb, reps, num, class_S_rel(amb, d, e)));
  return out;
}

GradedElem apply_merge_demazure(const Ambient& amb, const VectorComposition& d,
                                const VectorComposition& e, const GradedElem& x) {
  require(refines(d, e).has_value(), "merge: target does not coarsen source");
  GradedElem out;
  const Polynomial* f = component(x, d);
  if (!f) return out;
  const WeylCtx& ctx = amb.weyl();
  auto reps = min_coset_reps(ctx, parabolic_generators(ctx, e), parabolic_generators(ctx, d));
  auto word = reduced_word(ctx, longest_element(reps));
  Polynomial num = class_E_rel(amb, d, e).expand(amb.nvars()) * (*f);
  Polynomial g = demazure_word(amb, word, num);
  if (r_count(amb, d, e) % 2 != 0) g = -g;
  out.add(e, g);
  return out;
}

GradedElem apply_split(const Ambient& amb, const VectorComposition& e,
                       const VectorComposition& d, const GradedElem& x) {
  require(refines(d, e).has_value(), "split: target does not refine source");
  (void)amb;
  GradedElem out;
  const Polynomial* f = component(x, e);
  if (f) out.add(d, *f);
  return out;
}

GradedElem apply_poly(const Ambient& amb, const VectorComposition& d, const Polynomial& g,
                      const GradedElem& x) {
  require(is_invariant(amb, parabolic_generators(amb.weyl(), d), g),
          "cup polynomial is not invariant");
  GradedElem out;
  const Polynomial* f = component(x, d);
  if (f) out.add(d, g * (*f));
  return out;
}

GradedElem apply_idem(const Ambient& amb, const VectorComposition& d, const GradedElem& x) {
  (void)amb;
  GradedElem out;
  const Polynomial* f = component(x, d);
  if (f) out.add(d, *f);
  return out;
}

GradedElem apply_crossing(const Ambient& amb, const VectorComposition& d, int k,
                          const GradedElem& x) {
  require(k >= 1 && k + 1 <= d.length(), "crossing index out of range");
  VectorComposition mid = d;
  mid.parts[k - 1] = d.parts[k - 1] + d.parts[k];
  mid.parts.erase(mid.parts.begin() + k);
  VectorComposition tgt = d;
  std::swap(tgt.parts[k - 1], tgt.parts[k]);
  return apply_split(amb, mid, tgt, apply_merge(amb, d, mid, x));
}

GradedElem apply_gen(const Ambient& amb, const SchurGen& g, const GradedElem& x) {
  return std::visit(
      [&](const auto& gen) -> GradedElem {
        using T = std::decay_t<decltype(gen)>;
        if constexpr (std::is_same_v<T, GenMerge>) {
          return apply_merge(amb, gen.d, gen.e, x);
        } else if constexpr (std::is_same_v<T, GenSplit>) {
          return apply_split(amb, gen.e, gen.d, x);
        } else if constexpr (std::is_same_v<T, GenCup>) {
          return apply_poly(amb, gen.d, gen.f, x);
        } else if constexpr (std::is_same_v<T, GenIdem>) {
          return apply_idem(amb, gen.d, x);
        } else if constexpr (std::is_same_v<T, GenCross>) {
          return apply_crossing(amb, gen.d, gen.k, x);
        } else {
          return apply_idem(amb, gen.d, x).scaled(gen.c);
        }
      },
      g);
}

GradedElem apply_word(const Ambient& amb, const SchurWord& w, const GradedElem& x) {
  GradedElem cur = x;
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) cur = apply_gen(amb, *it, cur);
  return cur;
}

VectorComposition word_source(const SchurWord& w) {
  require(!w.gens.empty(), "empty word has no source");
  return std::visit(
      [](const auto& gen) -> VectorComposition {
        using T = std::decay_t<decltype(gen)>;
        if constexpr (std::is_same_v<T, GenSplit>) return gen.e;
        else return gen.d;
      },
      w.gens.back());
}

std::string format_word(const Quiver& q, const Ambient& amb, const SchurWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& g : w.gens) {
    if (!first) os << " * ";
    first = false;
    std::visit(
        [&](const auto& gen) {
          using T = std::decay_t<decltype(gen)>;
          if constexpr (std::is_same_v<T, GenMerge>) {
            os << "merge[" << format_comp(q, gen.d) << " -> " << format_comp(q, gen.e) << "]";
          } else if constexpr (std::is_same_v<T, GenSplit>) {
            os << "split[" << format_comp(q, gen.e) << " -> " << format_comp(q, gen.d) << "]";
          } else if constexpr (std::is_same_v<T, GenCup>) {
            os << "cup[" << format_comp(q, gen.d) << "; " << amb.str(gen.f) << "]";
          } else if constexpr (std::is_same_v<T, GenIdem>) {
            os << "idem[" << format_comp(q, gen.d) << "]";
          } else if constexpr (std::is_same_v<T, GenCross>) {
            os << "cross[" << format_comp(q, gen.d) << "; " << gen.k << "]";
          } else {
            os << "scalar[" << format_comp(q, gen.d) << "; " << gen.c.str() << "]";
          }
        },
        g);
  }
  return os.str();
}

bool operator_equal(const Ambient& amb, const SchurWord& w1, const SchurWord& w2,
                    int max_degree) {
  std::vector<VectorComposition> sources{word_source(w1)};
  VectorComposition s2 = word_source(w2);
  if (!(s2 == sources[0])) sources.push_back(s2);
  for (const auto& src : sources) {
    auto gens = parabolic_generators(amb.weyl(), src);
    for (const auto& f : invariant_basis(amb, gens, max_degree)) {
      GradedElem x;
      x.add(src, f);
      if (!(apply_word(amb, w1, x) == apply_word(amb, w2, x))) return false;
    }
  }
  return true;
}

SchurWord bott_samelson_word(const Ambient& amb, const OrbitDatum& od,
                             const RefinementDatum& rd, const CrossingDatum& cd,
                             const Polynomial& cup) {
  (void)amb;
  (void)rd;
  const auto& chain = cd.even_chain;
  require(!chain.empty(), "empty crossing chain");
  SchurWord w;
  w.gens.push_back(GenMerge{chain.front(), od.e});
  for (size_t l = 1; l <= cd.word.size(); ++l)
    w.gens.push_back(GenCross{chain[l], cd.word[l - 1]});
  w.gens.push_back(GenCup{chain.back(), cup});
  w.gens.push_back(GenSplit{od.d, chain.back()});
  return w;
}

long long matrix_rank(std::vector<std::vector<Rational>> rows) {
  long long rank = 0;
  size_t ncols = rows.empty() ? 0 : rows[0].size();
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < rows.size(); ++col) {
    size_t piv = row;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[row]);
    for (size_t r = row + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rational factor = rows[r][col] / rows[row][col];
      for (size_t cc = col; cc < ncols; ++cc) rows[r][cc] -= factor * rows[row][cc];
    }
    ++row;
    ++rank;
  }
  return rank;
}

// --- isotropic operators -----------------------------------------------------

namespace {

}  // namespace

// Leading windows at Plus and Fixed vertices; at Minus vertices the negated
// trailing windows after the infinite block, in reversed block order.
std::vector<int> theta_finite_embed(const Ambient& amb, const Ambient& ambf,
                                    const IsoComposition& d) {
  const Quiver& q = amb.quiver();
  const Involution& inv = *amb.involution();
  std::vector<int> image(ambf.nvars(), 0);
  for (int v = 0; v < q.num_vertices(); ++v) {
    int nv = ambf.var_count(v);
    if (nv == 0) continue;
    if (inv.vertex_part[v] != Involution::Part::Minus) {
      for (int k = 1; k <= nv; ++k) image[ambf.var(v, k)] = amb.var(v, k) + 1;
      continue;
    }
    int p = inv.vertex_map[v];
    // leading finite windows at the Plus partner, then its infinite window
    long long lead = 0;
    for (const auto& part : d.finite) lead += part(p);
    lead += d.inf(p);
    // block j of the Minus vertex sits after the later blocks j+1..l
    int pos = 0;
    for (size_t j = 0; j < d.finite.size(); ++j) {
      long long after = 0;
      for (size_t r = j + 1; r < d.finite.size(); ++r) after += d.finite[r](v);
      for (int t = 1; t <= d.finite[j](v); ++t) {
        image[ambf.var(v, ++pos)] = -(amb.var(p, static_cast<int>(lead + after + t)) + 1);
      }
    }
  }
  return image;
}

std::vector<int> theta_inf_embed(const Ambient& amb, const Ambient& ambi,
                                 const IsoComposition& d) {
  const Quiver& q = amb.quiver();
  std::vector<int> image(ambi.nvars(), 0);
  for (int v = 0; v < q.num_vertices(); ++v) {
    int nv = ambi.var_count(v);
    if (nv == 0) continue;
    long long off = 0;
    for (const auto& part : d.finite) off += part(v);
    for (int k = 1; k <= nv; ++k)
      image[ambi.var(v, k)] = amb.var(v, static_cast<int>(off + k)) + 1;
  }
  return image;
}

namespace {

// Dimension vector of the finite parts (sum over all vertices).
DimVector finite_dim(const Quiver& q, const IsoComposition& d) {
  DimVector cf(q.num_vertices());
  for (const auto& part : d.finite) cf = cf + part;
  return cf;
}

// Signed images embedding the trailing two-block window ring (dimension
// D(d_l) + inf) into the full isotropic ring.
std::vector<int> window_embed_map(const Ambient& amb, const Ambient& ambw,
                                  const IsoComposition& d) {
  const Quiver& q = amb.quiver();
  const Involution& inv = *amb.involution();
  std::vector<int> image(ambw.nvars(), 0);
  for (int v = 0; v < q.num_vertices(); ++v) {
    int nv = ambw.var_count(v);
    if (nv == 0) continue;
    long long off = 0;
    for (size_t j = 0; j + 1 < d.finite.size(); ++j) off += d.finite[j](v);
    for (int k = 1; k <= nv; ++k)
      image[ambw.var(v, k)] = amb.var(v, static_cast<int>(off + k)) + 1;
  }
  return image;
}

// Merge of the trailing finite block into the infinite one, leading blocks
// untouched: shuffle with the two-block window classes.
ThetaGradedElem elementary_inf_merge(const Ambient& amb, const IsoComposition& d,
                                     const Polynomial& f) {
  const Quiver& q = amb.quiver();
  const Involution& inv = *amb.involution();
  require(!d.finite.empty(), "no finite block to absorb");
  IsoComposition e = d;
  DimVector a = e.finite.back();
  e.finite.pop_back();
  e.inf = e.inf + a.doubled(inv);

  DimVector cw = a.doubled(inv) + d.inf;
  Ambient ambw = Ambient::isotropic(q, inv, cw);
  auto image = window_embed_map(amb, ambw, d);
  FactoredPoly ts = class_theta_S(ambw, a, d.inf).apply_var_map(image, amb.nvars());
  FactoredPoly te = class_theta_E(ambw, a, d.inf).apply_var_map(image, amb.nvars());

  const WeylCtx& ctx = amb.weyl();
  auto reps = min_coset_reps(ctx, parabolic_generators(ctx, q, inv, e),
                             parabolic_generators(ctx, q, inv, d));
  ThetaGradedElem out;
  out.add(e, shuffle_sum(amb, reps, te.expand(amb.nvars()) * f, ts));
  return out;
}

// Merge only among the finite blocks (the infinite parts agree): ordinary
// relative classes of the finite parts, embedded.
ThetaGradedElem finite_merge(const Ambient& amb, const IsoComposition& d,
                             const IsoComposition& e, const Polynomial& f) {
  const Quiver& q = amb.quiver();
  const Involution& inv = *amb.involution();
  Ambient ambf = Ambient::ordinary(q, finite_dim(q, d));
  VectorComposition df{d.finite}, ef{e.finite};
  auto image = theta_finite_embed(amb, ambf, d);
  FactoredPoly s = class_S_rel(ambf, df, ef).apply_var_map(image, amb.nvars());
  FactoredPoly ee = class_E_rel(ambf, df, ef).apply_var_map(image, amb.nvars());

  const WeylCtx& ctx = amb.weyl();
  auto reps = min_coset_reps(ctx, parabolic_generators(ctx, q, inv, e),
                             parabolic_generators(ctx, q, inv, d));
  ThetaGradedElem out;
  out.add(e, shuffle_sum(amb, reps, ee.expand(amb.nvars()) * f, s));
  return out;
}

}  // namespace

ThetaGradedElem apply_theta_merge(const Ambient& amb, const IsoComposition& d,
                                  const IsoComposition& e, const ThetaGradedElem& x) {
  const Quiver& q = amb.quiver();
  const Involution& inv = *amb.involution();
  auto beta = theta_refines(inv, d, e);
  require(beta.has_value(), "merge: target does not coarsen source");
  ThetaGradedElem out;
  const Polynomial* f = component(x, d);
  if (!f) return out;
  if (d == e) {
    out.add(e, *f);
    return out;
  }
  int absorbed = beta->back() - 1;  // finite d-blocks merged into infinity
  if (absorbed == 0) return finite_merge(amb, d, e, *f);
  // group the finite blocks first, then absorb the tail one block at a time
  IsoComposition mid = e;
  mid.inf = d.inf;
  int lead = d.length() - absorbed;
  mid.finite.assign(d.finite.begin() + lead, d.finite.end());
  mid.finite.insert(mid.finite.begin(), e.finite.begin(), e.finite.end());
  ThetaGradedElem cur;
  if (mid == d) {
    cur.add(d, *f);
  } else {
    cur = finite_merge(amb, d, mid, *f);
  }
  for (int step = 0; step < absorbed; ++step) {
    const Polynomial* g = component(cur, mid);
    if (!g) return ThetaGradedElem{};
    ThetaGradedElem next = elementary_inf_merge(amb, mid, *g);
    mid.inf = mid.inf + mid.finite.back().doubled(inv);
    mid.finite.pop_back();
    cur = next;
  }
  return cur;
}

ThetaGradedElem apply_theta_split(const Ambient& amb, const IsoComposition& e,
                                  const IsoComposition& d, const ThetaGradedElem& x) {
  require(theta_refines(*amb.involution(), d, e).has_value(),
          "split: target does not refine source");
  ThetaGradedElem out;
  const Polynomial* f = component(x, e);
  if (f) out.add(d, *f);
  return out;
}

ThetaGradedElem apply_theta_poly(const Ambient& amb, const IsoComposition& d,
                                 const Polynomial& g, const ThetaGradedElem& x) {
  require(is_invariant(amb, parabolic_generators(amb.weyl(), amb.quiver(), *amb.involution(), d), g),
          "cup polynomial is not invariant");
  ThetaGradedElem out;
  const Polynomial* f = component(x, d);
  if (f) out.add(d, g * (*f));
  return out;
}

ThetaGradedElem apply_theta_crossing(const Ambient& amb, const IsoComposition& d, int k,
                                     const ThetaGradedElem& x) {
  const Involution& inv = *amb.involution();
  require(k >= 1 && k <= d.length(), "crossing index out of range");
  IsoComposition mid = d;
  IsoComposition tgt = d;
  if (k < d.length()) {
    mid.finite[k - 1] = d.finite[k - 1] + d.finite[k];
    mid.finite.erase(mid.finite.begin() + k);
    std::swap(tgt.finite[k - 1], tgt.finite[k]);
  } else {
    mid.inf = mid.inf + mid.finite.back().doubled(inv);
    mid.finite.pop_back();
    tgt.finite.back() = d.finite.back().theta(inv);
  }
  return apply_theta_split(amb, mid, tgt, apply_theta_merge(amb, d, mid, x));
}

}  // namespace qsk
