#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chowforge/scalar.hpp"

namespace chowforge {

/// Power series known through t^order, with an optional closed form num/den.
struct RationalSeries {
  std::vector<Rational> coeffs;  // coeffs[k] for k <= order
  int order = 0;
  std::optional<std::vector<Rational>> numerator, denominator;

  static RationalSeries polynomial(const std::vector<Rational>& p);
  static RationalSeries polynomial(const std::vector<int>& p);
  Rational coeff(int k) const { return k <= order && k < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(k)] : Rational(0); }
  std::string to_string() const;
};

/// "1 + 4t + t^2"
std::string polynomial_string(const std::vector<Rational>& p, const std::string& var = "t");
std::string polynomial_string(const std::vector<int>& p, const std::string& var = "t");

/// Product of two series, truncated to the smaller order.
RationalSeries multiply(const RationalSeries& a, const RationalSeries& b);
/// 1/HS(-t) through t^order, with closed form 1/HS(-t) attached. Needs HS(0) = 1.
RationalSeries poincare_from_hilbert(const RationalSeries& hs, int order);

}  // namespace chowforge
