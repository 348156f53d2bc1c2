#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsk {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct DivisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// total degree first, then lexicographic with earlier variables weighing more
struct GradedLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse multivariate polynomial over the rationals with a fixed number of
// variables.  Terms are kept in ascending graded-lex order.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int k);  // 0-based variable index
  static Polynomial monomial(int nvars, std::vector<int> exp, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  long long degree() const;  // -1 for zero
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const std::map<std::vector<int>, Rational, GradedLexLess>& terms() const { return terms_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial scaled(const Rational& c) const;
  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator<(const Polynomial& o) const;

  // substitute variable k by sign * variable (|image|-1): image[k] = +-(j+1);
  // image[k] = 0 is not allowed
  Polynomial apply_var_map(const std::vector<int>& image) const;
  // embed into a ring with new_nvars variables along the same signed images
  Polynomial embed(int new_nvars, const std::vector<int>& image) const;

  // throws DivisionError unless g divides exactly
  Polynomial exact_divide(const Polynomial& g) const;

  void add_term(std::vector<int> exp, const Rational& c);

  // canonical text, terms in descending graded-lex order; names are the
  // variable display names
  std::string to_string(const std::vector<std::string>& names) const;
  static Polynomial parse(int nvars, const std::vector<std::string>& names,
                          const std::string& text);

private:
  int nvars_ = 0;
  std::map<std::vector<int>, Rational, GradedLexLess> terms_;
};

// Product of a rational constant and linear forms with integer coefficients.
// Forms are canonicalized so that the first nonzero coefficient is positive;
// the sign is absorbed into the constant.
struct FactoredPoly {
  Rational coeff = 1;
  std::map<std::vector<int>, int> factors;  // linear form -> multiplicity

  static FactoredPoly one() { return FactoredPoly(); }
  void mul_form(std::vector<int> form, int mult = 1);
  void mul(const FactoredPoly& o);
  // throws DivisionError if o is not a sub-multiset
  void divide(const FactoredPoly& o);
  FactoredPoly apply_var_map(const std::vector<int>& image, int new_nvars = -1) const;
  Polynomial expand(int nvars) const;
  long long degree() const;
  bool is_one() const { return coeff == 1 && factors.empty(); }
};

}  // namespace qsk
