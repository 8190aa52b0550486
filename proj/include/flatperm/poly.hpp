#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "flatperm/integer.hpp"

namespace flatperm {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, stored in ascending powers. The highest stored
/// coefficient is always nonzero; the zero polynomial stores nothing.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Integer> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Integer& c);
  static Poly monomial(const Integer& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of the given power; zero outside the stored range.
  Integer coeff(int power) const;
  std::span<const Integer> coeffs() const { return coeffs_; }

  Integer eval(const Integer& at) const;
  Rational eval(const Rational& at) const;
  Poly derivative() const;
  /// Drops every term of degree above max_degree.
  Poly truncated(int max_degree) const;
  /// Exact division by an integer constant; throws InexactDivision otherwise.
  Poly divided_by(const Integer& d) const;
  bool all_coefficients_divisible_by(const Integer& d) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Integer& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Integer& c) { return a *= c; }
  friend Poly operator*(const Integer& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

/// Univariate polynomial in q; houses g_n, g_n(1k), b_{n,j}, a_{k,j}.
using QPoly = Poly;

Poly pow(const Poly& base, unsigned exponent);

/// Quotient a / b; throws InexactDivision unless b divides a in Z[x].
Poly divide_exact(const Poly& a, const Poly& b);

/// Human-readable form such as "4 + 2*q".
std::string to_string(const Poly& p, char var = 'q');

}  // namespace flatperm
