#include "qsk/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace qsk {

bool GradedLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  long long da = std::accumulate(a.begin(), a.end(), 0LL);
  long long db = std::accumulate(b.begin(), b.end(), 0LL);
  if (da != db) return da < db;
  return a < b;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_[std::vector<int>(nvars, 0)] = c;
  return p;
}

Polynomial Polynomial::variable(int nvars, int k) {
  Polynomial p(nvars);
  std::vector<int> e(nvars, 0);
  e.at(k) = 1;
  p.terms_[std::move(e)] = 1;
  return p;
}

Polynomial Polynomial::monomial(int nvars, std::vector<int> exp, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_[std::move(exp)] = c;
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](int e) { return e == 0; }));
}

Rational Polynomial::constant_term() const {
  std::vector<int> z(nvars_, 0);
  auto it = terms_.find(z);
  return it == terms_.end() ? Rational(0) : it->second;
}

long long Polynomial::degree() const {
  if (terms_.empty()) return -1;
  const std::vector<int>& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0LL);
}

void Polynomial::add_term(std::vector<int> exp, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(exp), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(*this);
  r += o;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<int> e(nvars_);
      for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

bool Polynomial::operator<(const Polynomial& o) const {
  if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
  return std::lexicographical_compare(
      terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
      [](const auto& a, const auto& b) {
        GradedLexLess less;
        if (less(a.first, b.first)) return true;
        if (less(b.first, a.first)) return false;
        return a.second < b.second;
      });
}

Polynomial Polynomial::apply_var_map(const std::vector<int>& image) const {
  return embed(nvars_, image);
}

Polynomial Polynomial::embed(int new_nvars, const std::vector<int>& image) const {
  Polynomial r(new_nvars);
  for (const auto& [e, c] : terms_) {
    std::vector<int> ne(new_nvars, 0);
    long long negodd = 0;
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      int img = image.at(k);
      if (img == 0) throw std::invalid_argument("variable map drops a used variable");
      ne[std::abs(img) - 1] += e[k];
      if (img < 0) negodd += e[k];
    }
    r.add_term(std::move(ne), negodd % 2 == 0 ? c : -c);
  }
  return r;
}

Polynomial Polynomial::exact_divide(const Polynomial& g) const {
  if (g.is_zero()) throw DivisionError("division by zero polynomial");
  Polynomial rem(*this), quot(nvars_);
  const auto& [ge, gc] = *g.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    std::vector<int> qe(nvars_);
    for (int k = 0; k < nvars_; ++k) {
      qe[k] = re[k] - ge[k];
      if (qe[k] < 0) throw DivisionError("inexact polynomial division");
    }
    Rational qc = rc / gc;
    quot.add_term(qe, qc);
    rem = rem - g * Polynomial::monomial(nvars_, std::move(qe), qc);
  }
  return quot;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      if (a < 0) { os << " - "; a = -a; }
      else os << " + ";
    }
    first = false;
    bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    bool coeff_shown = false;
    if (a != 1 || !any_var) {
      os << a;
      coeff_shown = true;
    }
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (coeff_shown) os << "*";
      coeff_shown = true;
      os << names.at(k);
      if (e[k] != 1) os << "^" << e[k];
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  const std::vector<std::string>& names;
  int nvars;
  size_t p = 0;

  void ws() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }

  bool eat(char c) {
    ws();
    if (p < s.size() && s[p] == c) { ++p; return true; }
    return false;
  }

  Integer integer() {
    ws();
    if (p >= s.size() || !std::isdigit(static_cast<unsigned char>(s[p])))
      throw std::invalid_argument("expected integer at position " + std::to_string(p));
    Integer v = 0;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p])))
      v = v * 10 + (s[p++] - '0');
    return v;
  }

  // x[name,j] possibly followed by ^e
  std::pair<int, int> var_power() {
    ws();
    size_t close = s.find(']', p);
    if (close == std::string::npos) throw std::invalid_argument("unterminated variable");
    std::string token = s.substr(p, close - p + 1);
    // strip internal whitespace for matching
    std::string norm;
    for (char ch : token)
      if (!std::isspace(static_cast<unsigned char>(ch))) norm += ch;
    int idx = -1;
    for (int k = 0; k < nvars; ++k)
      if (names[k] == norm) { idx = k; break; }
    if (idx < 0) throw std::invalid_argument("unknown variable " + norm);
    p = close + 1;
    int e = 1;
    if (eat('^')) e = static_cast<int>(integer());
    return {idx, e};
  }

  // [coeff][*]var_powers...
  void term(Polynomial& out, int sign) {
    Rational coeff = sign;
    ws();
    bool have_coeff = false;
    if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
      Integer num = integer();
      Integer den = 1;
      if (eat('/')) den = integer();
      coeff *= Rational(num, den);
      have_coeff = true;
    }
    std::vector<int> exp(nvars, 0);
    bool have_var = false;
    while (true) {
      ws();
      if (have_coeff || have_var) {
        size_t save = p;
        if (!eat('*')) {
          if (p < s.size() && s[p] == 'x') { /* implicit product tolerated */ }
          else { p = save; break; }
        }
      }
      ws();
      if (p < s.size() && s[p] == 'x') {
        auto [k, e] = var_power();
        exp[k] += e;
        have_var = true;
      } else {
        break;
      }
    }
    if (!have_coeff && !have_var) throw std::invalid_argument("empty term");
    out.add_term(std::move(exp), coeff);
  }

  Polynomial run() {
    Polynomial out(nvars);
    ws();
    if (p >= s.size()) throw std::invalid_argument("empty polynomial");
    int sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    term(out, sign);
    while (true) {
      ws();
      if (p >= s.size()) break;
      if (eat('+')) sign = 1;
      else if (eat('-')) sign = -1;
      else throw std::invalid_argument("expected + or - at position " + std::to_string(p));
      term(out, sign);
    }
    return out;
  }
};

}  // namespace

Polynomial Polynomial::parse(int nvars, const std::vector<std::string>& names,
                             const std::string& text) {
  if (text == "0") return Polynomial(nvars);
  Parser parser{text, names, nvars};
  return parser.run();
}

namespace {

// canonicalize sign so the first nonzero coefficient is positive
int canonical_form(std::vector<int>& form) {
  for (int c : form) {
    if (c > 0) return 1;
    if (c < 0) {
      for (int& x : form) x = -x;
      return -1;
    }
  }
  throw std::invalid_argument("zero linear form");
}

}  // namespace

void FactoredPoly::mul_form(std::vector<int> form, int mult) {
  if (mult == 0) return;
  int sgn = canonical_form(form);
  if (sgn < 0 && mult % 2 != 0) coeff = -coeff;
  factors[std::move(form)] += mult;
}

void FactoredPoly::mul(const FactoredPoly& o) {
  coeff *= o.coeff;
  for (const auto& [f, m] : o.factors) factors[f] += m;
}

void FactoredPoly::divide(const FactoredPoly& o) {
  if (o.coeff == 0) throw DivisionError("division by zero");
  coeff /= o.coeff;
  for (const auto& [f, m] : o.factors) {
    auto it = factors.find(f);
    if (it == factors.end() || it->second < m)
      throw DivisionError("factored division is not exact");
    it->second -= m;
    if (it->second == 0) factors.erase(it);
  }
}

FactoredPoly FactoredPoly::apply_var_map(const std::vector<int>& image, int new_nvars) const {
  FactoredPoly r;
  r.coeff = coeff;
  for (const auto& [f, m] : factors) {
    std::vector<int> nf(new_nvars < 0 ? f.size() : static_cast<size_t>(new_nvars), 0);
    for (size_t k = 0; k < f.size(); ++k) {
      if (f[k] == 0) continue;
      int img = image.at(k);
      if (img == 0) throw std::invalid_argument("variable map drops a used variable");
      nf[std::abs(img) - 1] += img > 0 ? f[k] : -f[k];
    }
    r.mul_form(std::move(nf), m);
  }
  return r;
}

Polynomial FactoredPoly::expand(int nvars) const {
  Polynomial r = Polynomial::constant(nvars, coeff);
  for (const auto& [f, m] : factors) {
    Polynomial lin(nvars);
    for (int k = 0; k < nvars; ++k)
      if (f[k] != 0) lin += Polynomial::variable(nvars, k).scaled(f[k]);
    for (int t = 0; t < m; ++t) r = r * lin;
  }
  return r;
}

long long FactoredPoly::degree() const {
  long long d = 0;
  for (const auto& [f, m] : factors) d += m;
  return d;
}

}  // namespace qsk
