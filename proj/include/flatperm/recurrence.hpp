#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatperm/integer.hpp"
#include "flatperm/poly.hpp"

namespace flatperm::recurrence {

/// b_{n,j} for 1 <= j <= n-1. b_{n,1} is the constant n; for j >= 2 the
/// defining sum with its division by j, carried out in exact rationals and
/// checked to be integral (InexactDivision otherwise).
QPoly b_poly(int n, int j);

/// b_{n,j} through the division-free rewriting
/// sum_k C(j+k-2, j-2) (C(n-k-2, j-1) + C(n-k-1, j)) q^k.
QPoly b_poly_integral_form(int n, int j);

/// The defining sum evaluated literally for every j >= 1, using the
/// binomial convention C(m, -1) = [m == -1].
QPoly b_poly_by_definition(int n, int j);

/// a_{k,j} and b_{n,j} for 2 <= k <= k_max.
class ABTable {
 public:
  explicit ABTable(int k_max);

  int k_max() const { return k_max_; }
  /// Zero for j <= 0 or j >= k.
  const QPoly& a(int k, int j) const;
  /// b_{n,j} = sum_{k <= n} a_{k,j} for j >= 2, and n for j = 1.
  QPoly b(int n, int j) const;

 private:
  int k_max_;
  std::vector<std::vector<QPoly>> a_;  // a_[k][j], 0 <= j <= k
  QPoly zero_;
};

/// g_n and g_n(1k) for all 2 <= k <= n <= n_max. With q_cap set, every
/// polynomial is reduced modulo q^{q_cap+1}, which is enough for
/// coefficient extraction up to q^{q_cap}.
class GTable {
 public:
  explicit GTable(int n_max, std::optional<int> q_cap = std::nullopt);

  int n_max() const { return n_max_; }
  std::optional<int> q_cap() const { return q_cap_; }
  const ABTable& ab() const { return ab_; }

  const QPoly& g(int n) const;
  /// g_n(1k); zero for k > n. Throws std::out_of_range for k < 2.
  const QPoly& g1k(int n, int k) const;

 private:
  QPoly cap(QPoly p) const;

  int n_max_;
  std::optional<int> q_cap_;
  ABTable ab_;
  std::vector<QPoly> g_;                // g_[n], n >= 1
  std::vector<std::vector<QPoly>> g1k_;  // g1k_[n][k], 2 <= k <= n
  QPoly zero_;
};

GTable g_table(int n_max, std::optional<int> q_cap = std::nullopt);
QPoly g_poly(int n);
QPoly g1k_poly(int n, int k);

/// [q^r] g_n, or [q^r] g_n(1k) when k is given.
Integer coeff_g(const GTable& table, int n, int r, std::optional<int> k = std::nullopt);
Integer coeff_g(int n, int r, std::optional<int> k = std::nullopt);

// Identities the g_n(1k) satisfy, each returning its right-hand side.

/// g_{n-1} + sum_{2 <= j < i} (q^{i-j} - 1) g_{n-1}(1j), 3 <= i <= n.
QPoly rec_g1i_rhs(const GTable& t, int n, int i);
/// (1+q) g_n(1(k-1)) - q g_n(1(k-2)) - (1-q) g_{n-1}(1(k-1)), 5 <= k <= n.
QPoly rec_g1k_rhs(const GTable& t, int n, int k);
/// g_{n-1} - 2(1-q) g_{n-2}, n >= 3.
QPoly ini_g13_rhs(const GTable& t, int n);
/// g_{n-1} - (1-q)(3+2q) g_{n-2} + 2(1-q)^2 g_{n-3}, n >= 4.
QPoly ini_g14_rhs(const GTable& t, int n);

/// f_n from the q = 0 specialisation of the g_n recurrence; throws
/// IdentityViolation unless it equals 2^{n-1}.
Integer avoider_count(int n);

/// g_n'(1)/n!; throws IdentityViolation unless it equals
/// (n^2+3n+8)/12 - H_n.
Rational average_occurrences(int n);
Rational average_closed_form(int n);

struct ClosedFormReport {
  bool ok = true;
  int coefficients_checked = 0;
  std::string first_mismatch;
};

/// Expands (1 - qx + xy) / ((1-x)(1-qx) - xy) by generic series division
/// and compares [x^{k-2} y^{j-1}] with a_{k,j} for k <= k_max; then checks
/// that the coefficient of y^{j-1} z^{n-2} in A(z,y)/(1-z) equals b_{n,j}
/// for 2 <= j < n <= k_max. `order` is the x-truncation of the expansion
/// and must be at least k_max - 2.
ClosedFormReport verify_A_closed_form(int k_max, int order);

}  // namespace flatperm::recurrence
