#pragma once

#include <vector>

#include "flatperm/integer.hpp"
#include "flatperm/poly.hpp"
#include "flatperm/series.hpp"

namespace flatperm {

/// Bivariate integer polynomial in (x, v), stored as one x-polynomial per
/// power of v. No trailing zero v-coefficients are kept.
class XVPoly {
 public:
  XVPoly() = default;
  explicit XVPoly(std::vector<Poly> by_v_power);
  /// rows[i][j] is the coefficient of x^i v^j.
  static XVPoly from_matrix(const std::vector<std::vector<Integer>>& rows);
  /// c(x) * v^k
  static XVPoly monomial(const Poly& c, int k);
  static XVPoly constant(const Poly& c) { return monomial(c, 0); }

  Integer coeff(int x_power, int v_power) const;
  /// [v^k] as a polynomial in x.
  Poly v_coeff(int k) const;
  const std::vector<Poly>& v_coeffs() const { return by_v_; }
  /// rows[i][j] = [x^i v^j], rectangular, (degree_x()+1) x (degree_v()+1).
  std::vector<std::vector<Integer>> to_matrix() const;

  int degree_v() const { return static_cast<int>(by_v_.size()) - 1; }
  int degree_x() const;
  bool is_zero() const { return by_v_.empty(); }

  /// Substitution v = w for a polynomial w in x.
  Poly at_v(const Poly& w) const;
  VPoly to_vpoly(int order) const;

  XVPoly& operator+=(const XVPoly& rhs);
  XVPoly& operator-=(const XVPoly& rhs);
  friend XVPoly operator+(XVPoly a, const XVPoly& b) { return a += b; }
  friend XVPoly operator-(XVPoly a, const XVPoly& b) { return a -= b; }
  friend XVPoly operator*(const XVPoly& a, const XVPoly& b);
  friend XVPoly operator*(const XVPoly& a, const Integer& c);

  friend bool operator==(const XVPoly&, const XVPoly&) = default;

 private:
  void normalize();

  std::vector<Poly> by_v_;
};

XVPoly pow(const XVPoly& base, unsigned exponent);

inline constexpr int kDefaultGuard = 8;

/// Recovers an integer polynomial from a truncated series.
///
/// Forms pre_factor * g, divides every v-coefficient by x^divide_x_power
/// and by divide_const, then requires all x-coefficients above
/// degree_bound_x to vanish within the remaining truncation. Needs
/// g.order() >= divide_x_power + degree_bound_x + guard so that at least
/// `guard` tail coefficients are actually checked. Throws InexactDivision
/// when a division is not exact or the tail does not vanish.
XVPoly xvpoly_extract_from_series(const VPoly& g, const XVPoly& pre_factor, int divide_x_power,
                                  const Integer& divide_const, int degree_bound_x, int guard = kDefaultGuard);

}  // namespace flatperm
