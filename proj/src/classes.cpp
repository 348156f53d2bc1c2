#include "qsk/classes.hpp"

namespace qsk {

namespace {

std::vector<int> form1(const Ambient& amb, int var, int coef) {
  std::vector<int> f(amb.nvars(), 0);
  f[var] = coef;
  return f;
}

// a*x_u + b*x_v for signed 1-based global indices u, v
std::vector<int> form2(const Ambient& amb, int u, int cu, int v, int cv) {
  std::vector<int> f(amb.nvars(), 0);
  f[std::abs(u) - 1] += u > 0 ? cu : -cu;
  f[std::abs(v) - 1] += v > 0 ? cv : -cv;
  if (std::all_of(f.begin(), f.end(), [](int x) { return x == 0; }))
    throw std::invalid_argument("degenerate linear form in a characteristic class");
  return f;
}

std::vector<int> block_starts(const Ambient& amb, const VectorComposition& d, int vertex) {
  std::vector<int> starts{0};
  for (const DimVector& p : d.parts)
    starts.push_back(starts.back() + static_cast<int>(p(vertex)));
  return starts;
}

}  // namespace

FactoredPoly class_S(const Ambient& amb, const VectorComposition& d) {
  FactoredPoly out;
  const Quiver& q = amb.quiver();
  for (int i = 0; i < q.num_vertices(); ++i) {
    std::vector<int> st = block_starts(amb, d, i);
    int ell = d.length();
    for (int r = 0; r < ell; ++r)
      for (int s = r + 1; s < ell; ++s)
        for (int k = st[r] + 1; k <= st[r + 1]; ++k)
          for (int l = st[s] + 1; l <= st[s + 1]; ++l)
            out.mul_form(form2(amb, amb.var(i, l) + 1, 1, amb.var(i, k) + 1, -1));
  }
  return out;
}

FactoredPoly class_E(const Ambient& amb, const VectorComposition& d) {
  FactoredPoly out;
  const Quiver& q = amb.quiver();
  for (int i = 0; i < q.num_vertices(); ++i) {
    for (int j = 0; j < q.num_vertices(); ++j) {
      int mult = q.arrow_count(i, j);
      if (mult == 0) continue;
      std::vector<int> sti = block_starts(amb, d, i);
      std::vector<int> stj = block_starts(amb, d, j);
      int ell = d.length();
      for (int r = 0; r < ell; ++r)
        for (int s = r + 1; s < ell; ++s)
          for (int k = sti[r] + 1; k <= sti[r + 1]; ++k)
            for (int l = stj[s] + 1; l <= stj[s + 1]; ++l)
              out.mul_form(form2(amb, amb.var(j, l) + 1, 1, amb.var(i, k) + 1, -1), mult);
    }
  }
  return out;
}

FactoredPoly class_S_rel(const Ambient& amb, const VectorComposition& d,
                         const VectorComposition& e) {
  FactoredPoly out = class_S(amb, d);
  out.divide(class_S(amb, e));
  return out;
}

FactoredPoly class_E_rel(const Ambient& amb, const VectorComposition& d,
                         const VectorComposition& e) {
  FactoredPoly out = class_E(amb, d);
  out.divide(class_E(amb, e));
  return out;
}

long long r_count(const Ambient& amb, const VectorComposition& d, const VectorComposition& e) {
  return class_S_rel(amb, d, e).degree();
}

namespace {

// signed 1-based global variable index realizing the symbol x_k(v) in the
// two-block context (a, b): at Minus vertices x_k(theta v) = -x_{a+b+k}(v)
int tvar(const Ambient& amb, const DimVector& a, const DimVector& b, int v, int k) {
  const Involution& inv = *amb.involution();
  switch (inv.vertex_part[v]) {
    case Involution::Part::Plus:
    case Involution::Part::Fixed:
      return amb.var(v, k) + 1;
    case Involution::Part::Minus: {
      int u = inv.vertex_map[v];
      return -(amb.var(u, static_cast<int>(a(u) + b(u)) + k) + 1);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

FactoredPoly class_theta_S(const Ambient& amb, const DimVector& a, const DimVector& b) {
  const Quiver& q = amb.quiver();
  const Involution& inv = *amb.involution();
  FactoredPoly out;
  for (int i = 0; i < q.num_vertices(); ++i) {
    int ai = static_cast<int>(a(i)), bi = static_cast<int>(b(i));
    if (inv.vertex_part[i] == Involution::Part::Plus) {
      // ordinary symmetrizer class of the three-block window (a, b, theta a)
      int ati = static_cast<int>(a(inv.vertex_map[i]));
      std::vector<int> st{0, ai, ai + bi, ai + bi + ati};
      for (int r = 0; r < 3; ++r)
        for (int s = r + 1; s < 3; ++s)
          for (int k = st[r] + 1; k <= st[r + 1]; ++k)
            for (int l = st[s] + 1; l <= st[s + 1]; ++l)
              out.mul_form(form2(amb, amb.var(i, l) + 1, 1, amb.var(i, k) + 1, -1));
    } else if (inv.vertex_part[i] == Involution::Part::Fixed) {
      int m = amb.var_count(i);
      long long ci = amb.dim()(i);
      // g_i prefactor
      if (inv.sigma[i] == 1 && ci % 2 == 1) {
        for (int k = 1; k <= ai; ++k) {
          out.mul_form(form1(amb, amb.var(i, k), 1));
          out.coeff = -out.coeff;
        }
      } else if (inv.sigma[i] == -1) {
        for (int k = 1; k <= ai; ++k) {
          out.mul_form(form1(amb, amb.var(i, k), 1));
          out.coeff *= -2;
        }
      }
      for (int k = 1; k <= ai; ++k)
        for (int l = k + 1; l <= ai; ++l)
          out.mul_form(form2(amb, amb.var(i, k) + 1, -1, amb.var(i, l) + 1, -1));
      for (int k = 1; k <= ai; ++k)
        for (int l = ai + 1; l <= m; ++l) {
          out.mul_form(form2(amb, amb.var(i, k) + 1, 1, amb.var(i, l) + 1, -1));
          out.mul_form(form2(amb, amb.var(i, k) + 1, 1, amb.var(i, l) + 1, 1));
        }
    }
  }
  return out;
}

FactoredPoly class_theta_E(const Ambient& amb, const DimVector& a, const DimVector& b) {
  const Quiver& q = amb.quiver();
  const Involution& inv = *amb.involution();
  FactoredPoly out;
  auto epsilon = [&](int v) { return amb.dim()(v) % 2 == 1 ? 1 : 0; };
  auto xk = [&](int v, int k) { return tvar(amb, a, b, v, k); };

  for (int ar = 0; ar < static_cast<int>(q.arrows().size()); ++ar) {
    if (inv.arrow_part[ar] == Involution::Part::Minus) continue;
    const Arrow& arr = q.arrows()[ar];
    int i = arr.src, j = arr.tgt;
    int ti = inv.vertex_map[i], tj = inv.vertex_map[j];
    if (inv.arrow_part[ar] == Involution::Part::Plus) {
      int ai = static_cast<int>(a(i)), bi = static_cast<int>(b(i));
      int aj = static_cast<int>(a(j)), bj = static_cast<int>(b(j));
      int atj = static_cast<int>(a(tj));
      for (int m = 1; m <= atj; ++m)
        for (int k = 1; k <= ai; ++k)
          out.mul_form(form2(amb, xk(tj, m), -1, xk(i, k), -1));
      if (!inv.is_fixed_vertex(i)) {
        for (int l = ai + 1; l <= ai + bi; ++l)
          for (int m = 1; m <= atj; ++m)
            out.mul_form(form2(amb, xk(tj, m), -1, xk(i, l), -1));
      } else {
        int mi = amb.var_count(i);
        for (int l = ai + 1; l <= mi; ++l)
          for (int m = 1; m <= atj; ++m) {
            out.mul_form(form2(amb, xk(tj, m), 1, xk(i, l), -1));
            out.mul_form(form2(amb, xk(tj, m), 1, xk(i, l), 1));
          }
        if (epsilon(i))
          for (int m = 1; m <= atj; ++m) {
            out.mul_form(form1(amb, std::abs(xk(tj, m)) - 1, 1));
            if (xk(tj, m) > 0) out.coeff = -out.coeff;
          }
      }
      if (!inv.is_fixed_vertex(j)) {
        for (int k = 1; k <= ai; ++k)
          for (int l = aj + 1; l <= aj + bj; ++l)
            out.mul_form(form2(amb, xk(j, l), 1, xk(i, k), -1));
      } else {
        int mj = amb.var_count(j);
        for (int k = 1; k <= ai; ++k)
          for (int l = aj + 1; l <= mj; ++l) {
            out.mul_form(form2(amb, xk(i, k), 1, xk(j, l), -1));
            out.mul_form(form2(amb, xk(i, k), 1, xk(j, l), 1));
          }
        if (epsilon(j))
          for (int k = 1; k <= ai; ++k) {
            out.mul_form(form1(amb, std::abs(xk(i, k)) - 1, 1));
            if (xk(i, k) > 0) out.coeff = -out.coeff;
          }
      }
    } else {
      // theta-fixed arrow theta(i) -> i with i := t(arrow)
      int tgt = j;
      int src_dual = i;  // src == theta(tgt)
      if (ti != tgt && tj != i)
        throw std::invalid_argument("theta-fixed arrow endpoints are not dual");
      int at_dual = static_cast<int>(a(src_dual));
      int a_tgt = static_cast<int>(a(tgt)), b_tgt = static_cast<int>(b(tgt));
      int strict = inv.sigma[tgt] * inv.varsigma[ar];
      for (int k = 1; k <= at_dual; ++k)
        for (int l = k; l <= at_dual; ++l) {
          if (k == l && strict == -1) continue;
          out.mul_form(form2(amb, xk(src_dual, k), -1, xk(src_dual, l), -1));
        }
      if (!inv.is_fixed_vertex(tgt)) {
        for (int l = a_tgt + 1; l <= a_tgt + b_tgt; ++l)
          for (int m = 1; m <= at_dual; ++m)
            out.mul_form(form2(amb, xk(tgt, l), 1, xk(src_dual, m), -1));
      } else {
        int mt = amb.var_count(tgt);
        for (int m = 1; m <= a_tgt; ++m)
          for (int l = a_tgt + 1; l <= mt; ++l) {
            out.mul_form(form2(amb, xk(tgt, m), 1, xk(tgt, l), -1));
            out.mul_form(form2(amb, xk(tgt, m), 1, xk(tgt, l), 1));
          }
        if (epsilon(tgt))
          for (int m = 1; m <= a_tgt; ++m) {
            out.mul_form(form1(amb, std::abs(xk(tgt, m)) - 1, 1));
            if (xk(tgt, m) > 0) out.coeff = -out.coeff;
          }
      }
    }
  }
  return out;
}

long long theta_r_count(const Ambient& amb, const DimVector& a, const DimVector& b) {
  return class_theta_S(amb, a, b).degree();
}

}  // namespace qsk
