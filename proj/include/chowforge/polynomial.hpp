#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chowforge/scalar.hpp"

namespace chowforge {

/// Exponent vector over the declared variables.
using Monomial = std::vector<std::uint16_t>;

int degree(const Monomial& m);
Monomial variable_monomial(int nvars, int var, int exponent = 1);
bool divides(const Monomial& a, const Monomial& b);

/// Sparse polynomial with rational coefficients; zero terms are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial variable(int nvars, int var);
  static Polynomial monomial(Monomial m, Rational c = 1);
  static Polynomial constant(int nvars, Rational c);

  int nvars() const { return nvars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial; throws InhomogeneousGenerator when mixed.
  int homogeneous_degree() const;
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(const Monomial& m, const Rational& c);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  Polynomial pow(int e) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// "2*x_12*x_123^2 - x_13" using the given names.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int nvars_ = 0;
  std::map<Monomial, Rational> terms_;
};

/// Standard graded algebra k[variables]/(relations), all variables of degree 1.
struct PresentedAlgebra {
  std::string name;
  std::vector<std::string> variables;
  std::vector<Polynomial> relations;
  int max_degree = 0;  // degree cutoff
  FieldDescriptor field;

  int nvars() const { return static_cast<int>(variables.size()); }
  int max_relation_degree() const;
};

}  // namespace chowforge
