#include "chowforge/series.hpp"

#include <algorithm>

namespace chowforge {

RationalSeries RationalSeries::polynomial(const std::vector<Rational>& p) {
  RationalSeries s;
  s.coeffs = p;
  if (s.coeffs.empty()) s.coeffs.push_back(0);
  s.order = static_cast<int>(s.coeffs.size()) - 1;
  s.numerator = s.coeffs;
  s.denominator = std::vector<Rational>{1};
  return s;
}

RationalSeries RationalSeries::polynomial(const std::vector<int>& p) {
  std::vector<Rational> q;
  for (int x : p) q.emplace_back(x);
  return polynomial(q);
}

std::string polynomial_string(const std::vector<Rational>& p, const std::string& var) {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Rational& c = p[k];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (s.empty()) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (mono.empty()) s += a.get_str();
    else s += (a == 1 ? "" : a.get_str()) + mono;
  }
  return s.empty() ? "0" : s;
}

std::string polynomial_string(const std::vector<int>& p, const std::string& var) {
  std::vector<Rational> q;
  for (int x : p) q.emplace_back(x);
  return polynomial_string(q, var);
}

std::string RationalSeries::to_string() const {
  std::vector<Rational> c(coeffs.begin(), coeffs.begin() + std::min<long>(static_cast<long>(coeffs.size()), order + 1));
  std::string s = polynomial_string(c);
  bool is_poly = denominator && denominator->size() == 1 && (*denominator)[0] == 1;
  if (!is_poly) s += " + O(t^" + std::to_string(order + 1) + ")";
  return s;
}

RationalSeries multiply(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries out;
  out.order = std::min(a.order, b.order);
  out.coeffs.assign(static_cast<std::size_t>(out.order + 1), Rational(0));
  for (int i = 0; i <= out.order; ++i)
    for (int j = 0; i + j <= out.order; ++j) out.coeffs[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  return out;
}

RationalSeries poincare_from_hilbert(const RationalSeries& hs, int order) {
  if (hs.coeff(0) != 1) throw Error(ErrorKind::MalformedSpec, "Hilbert series must start with 1");
  // h(t) = HS(-t)
  std::vector<Rational> h;
  for (int k = 0; k <= hs.order; ++k) h.push_back((k % 2 ? -1 : 1) * hs.coeff(k));
  RationalSeries out;
  out.order = order;
  out.coeffs.assign(static_cast<std::size_t>(order + 1), Rational(0));
  out.coeffs[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational s = 0;
    for (int k = 1; k <= n && k < static_cast<int>(h.size()); ++k) s += h[static_cast<std::size_t>(k)] * out.coeffs[static_cast<std::size_t>(n - k)];
    out.coeffs[static_cast<std::size_t>(n)] = -s;
  }
  out.numerator = std::vector<Rational>{1};
  out.denominator = h;
  return out;
}

}  // namespace chowforge
