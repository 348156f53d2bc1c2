#include "qsk/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace qsk {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (int i = 0; i < num_vertices(); ++i) {
    if (!vertex_by_name_.emplace(vertices_[i], i).second)
      throw std::invalid_argument("duplicate vertex name: " + vertices_[i]);
  }
  for (int a = 0; a < static_cast<int>(arrows_.size()); ++a) {
    const Arrow& ar = arrows_[a];
    if (ar.src < 0 || ar.src >= num_vertices() || ar.tgt < 0 || ar.tgt >= num_vertices())
      throw std::invalid_argument("arrow endpoint out of range: " + ar.name);
    if (!arrow_by_name_.emplace(ar.name, a).second)
      throw std::invalid_argument("duplicate arrow name: " + ar.name);
  }
}

Quiver Quiver::from_json(const nlohmann::json& j) {
  std::vector<std::string> verts = j.at("vertices").get<std::vector<std::string>>();
  std::vector<Arrow> arrows;
  std::map<std::string, int> vidx;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) vidx[verts[i]] = i;
  if (j.contains("arrows")) {
    for (const auto& ja : j.at("arrows")) {
      Arrow a;
      a.name = ja.at("name").get<std::string>();
      a.src = vidx.at(ja.at("src").get<std::string>());
      a.tgt = vidx.at(ja.at("tgt").get<std::string>());
      arrows.push_back(a);
    }
  }
  return Quiver(std::move(verts), std::move(arrows));
}

nlohmann::json Quiver::to_json() const {
  nlohmann::json j;
  j["vertices"] = vertices_;
  j["arrows"] = nlohmann::json::array();
  for (const Arrow& a : arrows_)
    j["arrows"].push_back({{"name", a.name}, {"src", vertices_[a.src]}, {"tgt", vertices_[a.tgt]}});
  return j;
}

int Quiver::vertex_index(const std::string& name) const {
  auto it = vertex_by_name_.find(name);
  if (it == vertex_by_name_.end()) throw std::invalid_argument("unknown vertex: " + name);
  return it->second;
}

int Quiver::arrow_index(const std::string& name) const {
  auto it = arrow_by_name_.find(name);
  if (it == arrow_by_name_.end()) throw std::invalid_argument("unknown arrow: " + name);
  return it->second;
}

int Quiver::arrow_count(int i, int j) const {
  int n = 0;
  for (const Arrow& a : arrows_)
    if (a.src == i && a.tgt == j) ++n;
  return n;
}

Involution Involution::from_json(const Quiver& q, const nlohmann::json& j) {
  Involution inv;
  int nv = q.num_vertices(), na = static_cast<int>(q.arrows().size());
  inv.vertex_map.assign(nv, -1);
  inv.arrow_map.assign(na, -1);
  inv.sigma.assign(nv, 1);
  inv.varsigma.assign(na, 1);
  for (auto& [k, v] : j.at("vertices").items())
    inv.vertex_map[q.vertex_index(k)] = q.vertex_index(v.get<std::string>());
  for (auto& [k, v] : j.at("arrows").items())
    inv.arrow_map[q.arrow_index(k)] = q.arrow_index(v.get<std::string>());
  if (j.contains("sigma"))
    for (auto& [k, v] : j.at("sigma").items()) inv.sigma[q.vertex_index(k)] = v.get<int>();
  if (j.contains("varsigma"))
    for (auto& [k, v] : j.at("varsigma").items())
      inv.varsigma[q.arrow_index(k)] = v.get<int>();
  for (int i = 0; i < nv; ++i)
    if (inv.vertex_map[i] < 0) throw std::invalid_argument("involution misses a vertex");
  for (int a = 0; a < na; ++a)
    if (inv.arrow_map[a] < 0) throw std::invalid_argument("involution misses an arrow");
  inv.compute_parts();
  return inv;
}

nlohmann::json Involution::to_json(const Quiver& q) const {
  nlohmann::json j;
  for (int i = 0; i < q.num_vertices(); ++i) {
    j["vertices"][q.vertex_name(i)] = q.vertex_name(vertex_map[i]);
    j["sigma"][q.vertex_name(i)] = sigma[i];
  }
  for (int a = 0; a < static_cast<int>(q.arrows().size()); ++a) {
    j["arrows"][q.arrows()[a].name] = q.arrows()[arrow_map[a]].name;
    j["varsigma"][q.arrows()[a].name] = varsigma[a];
  }
  return j;
}

void Involution::compute_parts() {
  vertex_part.assign(vertex_map.size(), Part::Plus);
  for (size_t i = 0; i < vertex_map.size(); ++i) {
    if (vertex_map[i] == static_cast<int>(i))
      vertex_part[i] = Part::Fixed;
    else
      vertex_part[i] = static_cast<int>(i) < vertex_map[i] ? Part::Plus : Part::Minus;
  }
  arrow_part.assign(arrow_map.size(), Part::Plus);
  for (size_t a = 0; a < arrow_map.size(); ++a) {
    if (arrow_map[a] == static_cast<int>(a))
      arrow_part[a] = Part::Fixed;
    else
      arrow_part[a] = static_cast<int>(a) < arrow_map[a] ? Part::Plus : Part::Minus;
  }
}

std::vector<std::string> validate_duality(const Quiver& q, const Involution& inv) {
  std::vector<std::string> report;
  int nv = q.num_vertices(), na = static_cast<int>(q.arrows().size());
  for (int i = 0; i < nv; ++i) {
    if (inv.vertex_map.at(inv.vertex_map.at(i)) != i)
      report.push_back("theta is not involutive on vertex " + q.vertex_name(i));
    if (inv.sigma[i] != 1 && inv.sigma[i] != -1)
      report.push_back("sigma not a sign at vertex " + q.vertex_name(i));
    if (inv.sigma[inv.vertex_map[i]] != inv.sigma[i])
      report.push_back("sigma not theta-invariant at vertex " + q.vertex_name(i));
  }
  for (int a = 0; a < na; ++a) {
    const Arrow& ar = q.arrows()[a];
    const Arrow& tar = q.arrows()[inv.arrow_map[a]];
    if (inv.arrow_map.at(inv.arrow_map.at(a)) != a)
      report.push_back("theta is not involutive on arrow " + ar.name);
    // contravariance: s(theta a) = theta(t a), t(theta a) = theta(s a)
    if (tar.src != inv.vertex_map[ar.tgt] || tar.tgt != inv.vertex_map[ar.src])
      report.push_back("theta is not contravariant on arrow " + ar.name);
    // an arrow with t(a) = theta(s(a)) must be theta-fixed
    if (ar.tgt == inv.vertex_map[ar.src] && inv.arrow_map[a] != a)
      report.push_back("arrow " + ar.name + " joins a vertex to its dual but is not theta-fixed");
    if (inv.varsigma[a] != 1 && inv.varsigma[a] != -1)
      report.push_back("varsigma not a sign on arrow " + ar.name);
    if (inv.varsigma[a] * inv.varsigma[inv.arrow_map[a]] !=
        inv.sigma[ar.src] * inv.sigma[ar.tgt])
      report.push_back("varsigma(a)varsigma(theta a) != sigma(s a)sigma(t a) on arrow " + ar.name);
  }
  return report;
}

long long DimVector::total() const { return std::accumulate(v.begin(), v.end(), 0LL); }

bool DimVector::is_zero() const {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

DimVector DimVector::operator+(const DimVector& o) const {
  DimVector r(*this);
  for (size_t i = 0; i < v.size(); ++i) r.v[i] += o.v[i];
  return r;
}

DimVector DimVector::operator-(const DimVector& o) const {
  DimVector r(*this);
  for (size_t i = 0; i < v.size(); ++i) r.v[i] -= o.v[i];
  return r;
}

DimVector DimVector::theta(const Involution& inv) const {
  DimVector r(size());
  for (int i = 0; i < size(); ++i) r.v[inv.vertex_map[i]] = v[i];
  return r;
}

DimVector DimVector::doubled(const Involution& inv) const { return *this + theta(inv); }

bool DimVector::theta_symmetric(const Involution& inv) const { return theta(inv) == *this; }

VectorComposition::VectorComposition(std::vector<DimVector> p) : parts(std::move(p)) {
  for (const DimVector& d : parts)
    if (d.is_zero()) throw std::invalid_argument("zero part in vector composition");
}

DimVector VectorComposition::sum() const {
  if (parts.empty()) throw std::invalid_argument("empty vector composition");
  DimVector s(parts[0].size());
  for (const DimVector& d : parts) s = s + d;
  return s;
}

IsoComposition::IsoComposition(std::vector<DimVector> fin, DimVector infpart)
    : finite(std::move(fin)), inf(std::move(infpart)) {
  for (const DimVector& d : finite)
    if (d.is_zero()) throw std::invalid_argument("zero finite part in isotropic composition");
}

DimVector IsoComposition::sum(const Involution& inv) const {
  DimVector s = inf;
  for (const DimVector& d : finite) s = s + d.doubled(inv);
  return s;
}

void IsoComposition::validate(const Quiver& q, const Involution& inv) const {
  if (!inf.theta_symmetric(inv))
    throw std::invalid_argument("infinite part is not theta-symmetric");
  for (int i = 0; i < q.num_vertices(); ++i)
    if (inv.is_fixed_vertex(i) && inv.sigma[i] == -1 && inf(i) % 2 != 0)
      throw std::invalid_argument("odd infinite part at a theta-fixed vertex with sigma = -1");
}

static void check_beta(const IntComposition& beta, int n) {
  int s = 0;
  for (int b : beta) {
    if (b <= 0) throw std::invalid_argument("beta has a nonpositive part");
    s += b;
  }
  if (s != n) throw std::invalid_argument("beta does not sum to the composition length");
}

VectorComposition wedge_coarsen(const VectorComposition& d, const IntComposition& beta) {
  check_beta(beta, d.length());
  std::vector<DimVector> out;
  int pos = 0;
  for (int b : beta) {
    DimVector s(d.parts[0].size());
    for (int t = 0; t < b; ++t) s = s + d.parts[pos++];
    out.push_back(s);
  }
  return VectorComposition(std::move(out));
}

IsoComposition theta_wedge_coarsen(const Involution& inv, const IsoComposition& d,
                                   const IntComposition& beta) {
  check_beta(beta, d.length() + 1);
  std::vector<DimVector> out;
  int pos = 0;
  for (size_t r = 0; r + 1 < beta.size(); ++r) {
    DimVector s(d.inf.size());
    for (int t = 0; t < beta[r]; ++t) s = s + d.finite[pos++];
    out.push_back(s);
  }
  DimVector newinf = d.inf;
  while (pos < d.length()) newinf = newinf + d.finite[pos++].doubled(inv);
  return IsoComposition(std::move(out), std::move(newinf));
}

std::optional<IntComposition> refines(const VectorComposition& d, const VectorComposition& e) {
  IntComposition beta;
  int pos = 0;
  for (const DimVector& target : e.parts) {
    DimVector s(target.size());
    int b = 0;
    while (!(s == target)) {
      if (pos >= d.length()) return std::nullopt;
      s = s + d.parts[pos++];
      ++b;
      for (int i = 0; i < s.size(); ++i)
        if (s(i) > target(i)) return std::nullopt;
    }
    if (b == 0) return std::nullopt;
    beta.push_back(b);
  }
  if (pos != d.length()) return std::nullopt;
  return beta;
}

std::optional<IntComposition> theta_refines(const Involution& inv, const IsoComposition& d,
                                            const IsoComposition& e) {
  // the finite parts of e must be matched by leading finite blocks of d
  IntComposition beta;
  int pos = 0;
  for (const DimVector& target : e.finite) {
    DimVector s(target.size());
    int b = 0;
    while (!(s == target)) {
      if (pos >= d.length()) return std::nullopt;
      s = s + d.finite[pos++];
      ++b;
      for (int i = 0; i < s.size(); ++i)
        if (s(i) > target(i)) return std::nullopt;
    }
    if (b == 0) return std::nullopt;
    beta.push_back(b);
  }
  DimVector rest = d.inf;
  int tail = 1;
  while (pos < d.length()) {
    rest = rest + d.finite[pos++].doubled(inv);
    ++tail;
  }
  if (!(rest == e.inf)) return std::nullopt;
  beta.push_back(tail);
  return beta;
}

static void rec_subvectors(const DimVector& c, int i, DimVector& cur,
                           std::vector<DimVector>& out) {
  if (i == c.size()) {
    if (!cur.is_zero()) out.push_back(cur);
    return;
  }
  for (long long k = 0; k <= c(i); ++k) {
    cur(i) = k;
    rec_subvectors(c, i + 1, cur, out);
  }
  cur(i) = 0;
}

static void rec_compositions(const DimVector& rem, const std::vector<DimVector>& subs,
                             std::vector<DimVector>& cur,
                             std::vector<VectorComposition>& out) {
  if (rem.is_zero()) {
    if (!cur.empty()) out.push_back(VectorComposition(cur));
    return;
  }
  for (const DimVector& s : subs) {
    bool ok = true;
    for (int i = 0; i < rem.size(); ++i)
      if (s(i) > rem(i)) { ok = false; break; }
    if (!ok) continue;
    cur.push_back(s);
    rec_compositions(rem - s, subs, cur, out);
    cur.pop_back();
  }
}

std::vector<VectorComposition> all_compositions(const DimVector& c) {
  std::vector<DimVector> subs;
  DimVector cur(c.size());
  rec_subvectors(c, 0, cur, subs);
  std::vector<VectorComposition> out;
  std::vector<DimVector> stack;
  rec_compositions(c, subs, stack, out);
  return out;
}

std::vector<IsoComposition> all_iso_compositions(const Quiver& q, const Involution& inv,
                                                 const DimVector& c) {
  std::vector<DimVector> subs;
  DimVector cur(c.size());
  rec_subvectors(c, 0, cur, subs);
  std::vector<IsoComposition> out;

  // finite parts are accumulated as long as the doubled remainder stays valid
  struct Rec {
    const Quiver& q;
    const Involution& inv;
    const std::vector<DimVector>& subs;
    std::vector<IsoComposition>& out;
    std::vector<DimVector> stack;
    void go(const DimVector& rem) {
      // rem may itself serve as the infinite part
      if (rem.theta_symmetric(inv)) {
        bool ok = true;
        for (int i = 0; i < rem.size(); ++i)
          if (inv.is_fixed_vertex(i) && inv.sigma[i] == -1 && rem(i) % 2 != 0) ok = false;
        if (ok) out.push_back(IsoComposition(stack, rem));
      }
      for (const DimVector& s : subs) {
        DimVector dd = s.doubled(inv);
        bool fits = true;
        for (int i = 0; i < rem.size(); ++i)
          if (dd(i) > rem(i)) { fits = false; break; }
        if (!fits) continue;
        stack.push_back(s);
        go(rem - dd);
        stack.pop_back();
      }
    }
  } rec{q, inv, subs, out, {}};
  rec.go(c);
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_dimvec(const Quiver& q, const DimVector& d) {
  if (q.num_vertices() == 1) return std::to_string(d(0));
  std::string s;
  for (int i = 0; i < d.size(); ++i) {
    if (d(i) == 0) continue;
    if (!s.empty()) s += "+";
    if (d(i) != 1) s += std::to_string(d(i));
    s += q.vertex_name(i);
  }
  return s.empty() ? "0" : s;
}

std::string format_comp(const Quiver& q, const VectorComposition& d) {
  std::string s = "(";
  for (int k = 0; k < d.length(); ++k) {
    if (k) s += ", ";
    s += format_dimvec(q, d.parts[k]);
  }
  return s + ")";
}

std::string format_comp(const Quiver& q, const IsoComposition& d) {
  std::string s = "(";
  for (int k = 0; k < d.length(); ++k) {
    if (k) s += ", ";
    s += format_dimvec(q, d.finite[k]);
  }
  if (d.length()) s += ", ";
  s += "inf:" + format_dimvec(q, d.inf);
  return s + ")";
}

namespace {

void skip_ws(const std::string& s, size_t& p) {
  while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
}

// term = [number]['*']?[vertex-name] ; bare number allowed for 1-vertex quivers
DimVector parse_dimvec_at(const Quiver& q, const std::string& s, size_t& p) {
  DimVector d(q.num_vertices());
  skip_ws(s, p);
  if (p < s.size() && s[p] == '0' &&
      (p + 1 == s.size() || !std::isalnum(static_cast<unsigned char>(s[p + 1])))) {
    ++p;
    return d;
  }
  while (true) {
    skip_ws(s, p);
    long long coeff = 1;
    bool have_num = false;
    if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
      coeff = 0;
      while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p])))
        coeff = coeff * 10 + (s[p++] - '0');
      have_num = true;
    }
    if (p < s.size() && s[p] == '*') ++p;
    skip_ws(s, p);
    std::string name;
    while (p < s.size() && (std::isalnum(static_cast<unsigned char>(s[p])) || s[p] == '_'))
      name += s[p++];
    if (name.empty()) {
      if (!have_num) throw std::invalid_argument("bad dimension vector: " + s);
      if (q.num_vertices() != 1)
        throw std::invalid_argument("bare integer dimension needs a one-vertex quiver");
      d(0) += coeff;
    } else {
      d(q.vertex_index(name)) += coeff;
    }
    skip_ws(s, p);
    if (p < s.size() && s[p] == '+') { ++p; continue; }
    break;
  }
  return d;
}

}  // namespace

DimVector parse_dimvec(const Quiver& q, const std::string& s) {
  size_t p = 0;
  DimVector d = parse_dimvec_at(q, s, p);
  skip_ws(s, p);
  if (p != s.size()) throw std::invalid_argument("trailing junk in dimension vector: " + s);
  return d;
}

static std::vector<std::string> split_comp_parts(const std::string& s) {
  size_t p = 0;
  skip_ws(s, p);
  if (p >= s.size() || s[p] != '(') throw std::invalid_argument("composition must start with (");
  size_t end = s.rfind(')');
  if (end == std::string::npos) throw std::invalid_argument("composition must end with )");
  std::string body = s.substr(p + 1, end - p - 1);
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : body) {
    if (ch == ',') { parts.push_back(cur); cur.clear(); }
    else cur += ch;
  }
  parts.push_back(cur);
  return parts;
}

VectorComposition parse_comp(const Quiver& q, const std::string& s) {
  std::vector<DimVector> parts;
  for (const std::string& ps : split_comp_parts(s)) parts.push_back(parse_dimvec(q, ps));
  return VectorComposition(std::move(parts));
}

IsoComposition parse_iso_comp(const Quiver& q, const std::string& s) {
  std::vector<std::string> raw = split_comp_parts(s);
  std::vector<DimVector> fin;
  DimVector inf(q.num_vertices());
  bool have_inf = false;
  for (const std::string& ps : raw) {
    size_t p = 0;
    skip_ws(ps, p);
    if (ps.compare(p, 4, "inf:") == 0) {
      inf = parse_dimvec(q, ps.substr(p + 4));
      have_inf = true;
    } else {
      if (have_inf) throw std::invalid_argument("inf: part must come last");
      fin.push_back(parse_dimvec(q, ps));
    }
  }
  if (!have_inf) throw std::invalid_argument("isotropic composition needs an inf: part");
  return IsoComposition(std::move(fin), std::move(inf));
}

}  // namespace qsk
