#include "chowforge/polynomial.hpp"

#include <algorithm>

namespace chowforge {

int degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

Monomial variable_monomial(int nvars, int var, int exponent) {
  Monomial m(static_cast<std::size_t>(nvars), 0);
  m[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(exponent);
  return m;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Polynomial Polynomial::variable(int nvars, int var) { return monomial(variable_monomial(nvars, var)); }

Polynomial Polynomial::monomial(Monomial m, Rational c) {
  Polynomial p(static_cast<int>(m.size()));
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::constant(int nvars, Rational c) {
  return monomial(Monomial(static_cast<std::size_t>(nvars), 0), std::move(c));
}

int Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  int d = degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (degree(m) != d) throw Error(ErrorKind::InhomogeneousGenerator, "polynomial mixes degrees");
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return degree(t.first) == d; });
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  if (nvars_ == 0) nvars_ = static_cast<int>(m.size());
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  if (nvars_ == 0) nvars_ = o.nvars_;
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  if (nvars_ == 0) nvars_ = o.nvars_;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(m[i] + mb[i]);
      out.add_term(m, ca * cb);
    }
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  Polynomial out(a.nvars_);
  for (const auto& [m, x] : a.terms_) out.add_term(m, c * x);
  return out;
}

Polynomial Polynomial::pow(int e) const {
  Polynomial out = constant(nvars_, 1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  // largest monomial first: reverse map order puts high exponents of early variables first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    bool unit = a == 1;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      s += a.get_str();
    } else {
      if (!unit) s += a.get_str() + "*";
      s += mono;
    }
  }
  return s;
}

int PresentedAlgebra::max_relation_degree() const {
  int d = 0;
  for (const auto& r : relations) d = std::max(d, r.homogeneous_degree());
  return d;
}

}  // namespace chowforge
