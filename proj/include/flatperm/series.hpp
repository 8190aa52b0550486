#pragma once

#include <string>
#include <vector>

#include "flatperm/integer.hpp"
#include "flatperm/poly.hpp"

namespace flatperm {

/// Power series in x with integer coefficients, truncated after x^order.
/// Binary operations produce the smaller of the two operand orders.
class XSeries {
 public:
  explicit XSeries(int order);
  XSeries(std::vector<Integer> coeffs, int order);

  static XSeries constant(const Integer& c, int order);
  static XSeries one(int order) { return constant(1, order); }
  /// x^k (the zero series if k > order).
  static XSeries x_power(int k, int order);
  static XSeries from_poly(const Poly& p, int order);

  int order() const { return order_; }
  const Integer& coeff(int power) const;
  void set_coeff(int power, Integer value);
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// Index of the lowest nonzero coefficient, or order()+1 for zero.
  int valuation() const;

  XSeries truncated(int new_order) const;
  /// Multiplication by x^k, keeping the order.
  XSeries shifted_up(int k) const;
  /// Division by x^k; the order drops by k. Throws InexactDivision if any
  /// of the k lowest coefficients is nonzero.
  XSeries shifted_down(int k) const;
  /// Exact division of every coefficient by d.
  XSeries divided_by(const Integer& d) const;
  bool all_coefficients_divisible_by(const Integer& d) const;
  /// Multiplicative inverse; requires constant term +1 or -1.
  XSeries inverse() const;

  XSeries& operator+=(const XSeries& rhs);
  XSeries& operator-=(const XSeries& rhs);
  XSeries& operator*=(const Integer& c);

  friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
  friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }
  friend XSeries operator*(const XSeries& a, const XSeries& b);
  friend XSeries operator*(XSeries a, const Integer& c) { return a *= c; }
  friend XSeries operator*(const Integer& c, XSeries a) { return a *= c; }
  XSeries operator-() const;

  /// Same order and same coefficients.
  friend bool operator==(const XSeries&, const XSeries&) = default;
  /// Equal after truncating both to the smaller order.
  bool agrees_with(const XSeries& other) const;

 private:
  int order_;
  std::vector<Integer> coeffs_;  // size order_ + 1
};

XSeries pow(const XSeries& base, unsigned exponent);

/// q with q*b = a up to truncation; b must have constant term +1 or -1.
XSeries series_div_exact(const XSeries& a, const XSeries& b);

/// Polynomial in v whose coefficients are truncated x-series of one
/// common order. Trailing zero coefficients are dropped.
class VPoly {
 public:
  explicit VPoly(int order);
  explicit VPoly(std::vector<XSeries> coeffs);

  static VPoly constant(const XSeries& c);
  /// c * v^k
  static VPoly monomial(const XSeries& c, int k);

  int order() const { return order_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  XSeries coeff(int k) const;
  const std::vector<XSeries>& coeffs() const { return coeffs_; }

  VPoly truncated(int new_order) const;
  VPoly times_v_power(int k) const;
  XSeries at_one() const;

  VPoly& operator+=(const VPoly& rhs);
  VPoly& operator-=(const VPoly& rhs);
  friend VPoly operator+(VPoly a, const VPoly& b) { return a += b; }
  friend VPoly operator-(VPoly a, const VPoly& b) { return a -= b; }
  friend VPoly operator*(const VPoly& a, const VPoly& b);
  friend VPoly operator*(const VPoly& a, const XSeries& c);
  friend VPoly operator*(const XSeries& c, const VPoly& a) { return a * c; }
  friend VPoly operator*(const VPoly& a, const Integer& c);
  VPoly operator-() const;

  friend bool operator==(const VPoly&, const VPoly&) = default;
  bool agrees_with(const VPoly& other) const;

 private:
  void normalize();
  void unify_order(int other_order);

  int order_;
  std::vector<XSeries> coeffs_;
};

/// sum_k p[v^k] * w^k
XSeries substitute_v_with_series(const VPoly& p, const XSeries& w);

/// Quotient Q of b by the kernel (1 - s*v), where s is a unit series.
/// Long division runs from the top v-degree; the remainder must vanish,
/// deg_v Q must not exceed vdeg, and (1 - s*v)*Q == b is re-checked.
/// Any failure throws InexactDivision.
VPoly vpoly_div_kernel(const VPoly& b, const XSeries& s, int vdeg);

}  // namespace flatperm
