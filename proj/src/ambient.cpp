#include "qsk/ambient.hpp"

#include <algorithm>
#include <set>

namespace qsk {

void Ambient::build_vars() {
  int nv = q_->num_vertices();
  offsets_.assign(nv, -1);
  counts_.assign(nv, 0);
  nvars_ = 0;
  for (int b = 0; b < ctx_.num_blocks(); ++b) {
    const WeylBlock& blk = ctx_.blocks()[b];
    offsets_[blk.vertex] = nvars_;
    counts_[blk.vertex] = blk.rank;
    for (int j = 1; j <= blk.rank; ++j)
      names_.push_back("x[" + q_->vertex_name(blk.vertex) + "," + std::to_string(j) + "]");
    nvars_ += blk.rank;
  }
}

Ambient Ambient::ordinary(const Quiver& q, const DimVector& c) {
  Ambient a;
  a.q_ = &q;
  a.c_ = c;
  a.ctx_ = WeylCtx::ordinary(q, c);
  a.build_vars();
  return a;
}

Ambient Ambient::isotropic(const Quiver& q, const Involution& inv, const DimVector& c) {
  Ambient a;
  a.q_ = &q;
  a.inv_ = &inv;
  a.c_ = c;
  a.ctx_ = WeylCtx::isotropic(q, inv, c);
  a.build_vars();
  return a;
}

int Ambient::var(int vertex, int j) const {
  if (j < 1 || j > counts_.at(vertex))
    throw std::invalid_argument("variable index out of range");
  return offsets_[vertex] + j - 1;
}

std::vector<int> Ambient::var_map(const WeylElem& w) const {
  std::vector<int> image(nvars_, 0);
  for (int b = 0; b < ctx_.num_blocks(); ++b) {
    const WeylBlock& blk = ctx_.blocks()[b];
    int off = offsets_[blk.vertex];
    for (int k = 1; k <= blk.rank; ++k) {
      int img = w.image(b, k);
      image[off + k - 1] = img > 0 ? off + img : -(off - img);
    }
  }
  return image;
}

Polynomial Ambient::act(const WeylElem& w, const Polynomial& f) const {
  return f.apply_var_map(var_map(w));
}

Polynomial shuffle_sum(const Ambient& amb, const std::vector<WeylElem>& reps,
                       const Polynomial& num, const FactoredPoly& den) {
  // common denominator: union of the images of den, with max multiplicities
  std::vector<FactoredPoly> dens;
  std::vector<Polynomial> nums;
  std::map<std::vector<int>, int> common;
  for (const WeylElem& w : reps) {
    std::vector<int> vm = amb.var_map(w);
    dens.push_back(den.apply_var_map(vm));
    nums.push_back(num.apply_var_map(vm));
    for (const auto& [f, m] : dens.back().factors) {
      int& cm = common[f];
      cm = std::max(cm, m);
    }
  }
  FactoredPoly total;
  for (const auto& [f, m] : common) total.factors[f] = m;
  Polynomial acc(amb.nvars());
  for (size_t t = 0; t < reps.size(); ++t) {
    FactoredPoly cof = total;
    cof.divide(dens[t]);  // removes dens[t] factors; coeff becomes 1/dens[t].coeff
    acc += nums[t] * cof.expand(amb.nvars());
  }
  return acc.exact_divide(total.expand(amb.nvars()));
}

Polynomial demazure_simple(const Ambient& amb, int vertex, int j, const Polynomial& f) {
  int a = amb.var(vertex, j), b = amb.var(vertex, j + 1);
  std::vector<int> image(amb.nvars());
  for (int k = 0; k < amb.nvars(); ++k) image[k] = k + 1;
  image[a] = b + 1;
  image[b] = a + 1;
  Polynomial diff = f - f.apply_var_map(image);
  Polynomial root = Polynomial::variable(amb.nvars(), a) - Polynomial::variable(amb.nvars(), b);
  return diff.exact_divide(root);
}

Polynomial demazure_word(const Ambient& amb, const std::vector<WeylGen>& word,
                         const Polynomial& f) {
  Polynomial g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const WeylBlock& blk = amb.weyl().blocks()[it->block];
    if (it->pos >= blk.rank && blk.is_signed)
      throw std::invalid_argument("sign generator in a divided-difference word");
    g = demazure_simple(amb, blk.vertex, it->pos, g);
  }
  return g;
}

namespace {

void signed_block_roots(const Ambient& amb, int vertex, int lo, int hi, long long localdim,
                        FactoredPoly& out) {
  // full signed root system on variables lo..hi (1-based positions at vertex);
  // extra roots depend on sigma at the vertex and the parity of localdim
  int sigma = amb.involution()->sigma[vertex];
  for (int k = lo; k <= hi; ++k) {
    for (int l = k + 1; l <= hi; ++l) {
      std::vector<int> fdiff(amb.nvars(), 0), fsum(amb.nvars(), 0);
      fdiff[amb.var(vertex, k)] = 1;
      fdiff[amb.var(vertex, l)] = -1;
      fsum[amb.var(vertex, k)] = 1;
      fsum[amb.var(vertex, l)] = 1;
      out.mul_form(std::move(fdiff));
      out.mul_form(std::move(fsum));
    }
    if (sigma == 1 && localdim % 2 == 1) {
      std::vector<int> f(amb.nvars(), 0);
      f[amb.var(vertex, k)] = 1;
      out.mul_form(std::move(f));
    } else if (sigma == -1) {
      std::vector<int> f(amb.nvars(), 0);
      f[amb.var(vertex, k)] = 2;
      out.mul_form(std::move(f));
    }
  }
}

void type_a_roots(const Ambient& amb, int vertex, int lo, int hi, FactoredPoly& out) {
  for (int k = lo; k <= hi; ++k)
    for (int l = k + 1; l <= hi; ++l) {
      std::vector<int> f(amb.nvars(), 0);
      f[amb.var(vertex, k)] = 1;
      f[amb.var(vertex, l)] = -1;
      out.mul_form(std::move(f));
    }
}

}  // namespace

FactoredPoly blacktriangle(const Ambient& amb, const VectorComposition& d) {
  if (amb.is_isotropic()) throw std::invalid_argument("ordinary composition in isotropic ring");
  FactoredPoly out;
  for (int i = 0; i < amb.quiver().num_vertices(); ++i) {
    int pos = 0;
    for (const DimVector& p : d.parts) {
      int sz = static_cast<int>(p(i));
      type_a_roots(amb, i, pos + 1, pos + sz, out);
      pos += sz;
    }
  }
  return out;
}

FactoredPoly blacktriangle(const Ambient& amb, const IsoComposition& d) {
  if (!amb.is_isotropic()) throw std::invalid_argument("isotropic composition in ordinary ring");
  const Involution& inv = *amb.involution();
  FactoredPoly out;
  for (int i = 0; i < amb.quiver().num_vertices(); ++i) {
    if (inv.vertex_part[i] == Involution::Part::Minus) continue;
    if (inv.vertex_part[i] == Involution::Part::Plus) {
      int ti = inv.vertex_map[i];
      std::vector<int> seq;
      for (const DimVector& p : d.finite) seq.push_back(static_cast<int>(p(i)));
      seq.push_back(static_cast<int>(d.inf(i)));
      for (int k = d.length() - 1; k >= 0; --k)
        seq.push_back(static_cast<int>(d.finite[k](ti)));
      int pos = 0;
      for (int sz : seq) {
        type_a_roots(amb, i, pos + 1, pos + sz, out);
        pos += sz;
      }
    } else {
      int pos = 0;
      for (const DimVector& p : d.finite) {
        int sz = static_cast<int>(p(i));
        type_a_roots(amb, i, pos + 1, pos + sz, out);
        pos += sz;
      }
      signed_block_roots(amb, i, pos + 1, amb.var_count(i), d.inf(i), out);
    }
  }
  return out;
}

FactoredPoly blacktriangle_full(const Ambient& amb) {
  FactoredPoly out;
  for (int i = 0; i < amb.quiver().num_vertices(); ++i) {
    int n = amb.var_count(i);
    if (n == 0) continue;
    if (amb.is_isotropic() && amb.involution()->is_fixed_vertex(i)) {
      signed_block_roots(amb, i, 1, n, amb.dim()(i), out);
    } else {
      type_a_roots(amb, i, 1, n, out);
    }
  }
  return out;
}

Polynomial demazure_sum(const Ambient& amb, const std::vector<WeylGen>& gens,
                        const FactoredPoly& roots, const Polynomial& f) {
  std::vector<WeylElem> group = generate_subgroup(amb.weyl(), gens);
  Polynomial tri = roots.expand(amb.nvars());
  Polynomial acc(amb.nvars());
  for (const WeylElem& w : group) {
    // sum of w(f / tri): each w sends the root product to plus or minus itself
    Polynomial img = amb.act(w, f);
    acc += (amb.act(w, tri) == tri) ? img : -img;
  }
  return acc.exact_divide(tri);
}

bool is_invariant(const Ambient& amb, const std::vector<WeylGen>& gens, const Polynomial& f) {
  for (const WeylGen& g : gens) {
    WeylElem w = WeylElem::generator(amb.weyl(), g);
    if (!(amb.act(w, f) == f)) return false;
  }
  return true;
}

namespace {

void enumerate_monomials(int nvars, int max_degree, std::vector<int>& cur, int k,
                         std::vector<std::vector<int>>& out) {
  if (k == nvars) {
    out.push_back(cur);
    return;
  }
  int used = 0;
  for (int t = 0; t < k; ++t) used += cur[t];
  for (int e = 0; e <= max_degree - used; ++e) {
    cur[k] = e;
    enumerate_monomials(nvars, max_degree, cur, k + 1, out);
  }
  cur[k] = 0;
}

}  // namespace

std::vector<Polynomial> invariant_basis(const Ambient& amb, const std::vector<WeylGen>& gens,
                                        int max_degree) {
  std::vector<WeylElem> group = generate_subgroup(amb.weyl(), gens);
  std::vector<std::vector<int>> monos;
  std::vector<int> cur(amb.nvars(), 0);
  enumerate_monomials(amb.nvars(), max_degree, cur, 0, monos);
  std::sort(monos.begin(), monos.end(), [](const auto& a, const auto& b) {
    return GradedLexLess()(a, b);
  });

  std::set<std::vector<int>> seen;
  std::vector<Polynomial> basis;
  std::vector<std::vector<int>> vmaps;
  for (const WeylElem& w : group) vmaps.push_back(amb.var_map(w));
  for (const auto& m : monos) {
    if (seen.count(m)) continue;
    // orbit of the monomial, tracking signs
    std::map<std::vector<int>, int> orbit;
    bool cancels = false;
    for (const auto& vm : vmaps) {
      std::vector<int> img(amb.nvars(), 0);
      int sign = 1;
      for (int k = 0; k < amb.nvars(); ++k) {
        if (m[k] == 0) continue;
        int t = vm[k];
        img[std::abs(t) - 1] += m[k];
        if (t < 0 && m[k] % 2 != 0) sign = -sign;
      }
      auto [it, inserted] = orbit.emplace(img, sign);
      if (!inserted && it->second != sign) { cancels = true; break; }
    }
    for (const auto& [e, s] : orbit) seen.insert(e);
    if (cancels) continue;
    // normalize so the leading (graded-lex largest) monomial has coefficient 1
    int lead_sign = orbit.rbegin()->second;
    Polynomial p(amb.nvars());
    for (const auto& [e, s] : orbit) p.add_term(e, Rational(s * lead_sign));
    basis.push_back(std::move(p));
  }
  return basis;
}

}  // namespace qsk
