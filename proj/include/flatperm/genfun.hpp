#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flatperm/check.hpp"
#include "flatperm/integer.hpp"
#include "flatperm/poly.hpp"
#include "flatperm/recurrence.hpp"
#include "flatperm/series.hpp"
#include "flatperm/xvpoly.hpp"

namespace flatperm::genfun {

inline constexpr int kDefaultRLimit = 8;

/// Truncation order that leaves kDefaultGuard checked coefficients beyond
/// the x-degree 4r+2 of 2 x^{r+3} P_r.
constexpr int default_order(int r) { return 4 * r + 10; }

/// s = 1 - x and t = 1 - 2x.
Poly s_poly();
Poly t_poly_x();

/// The finite data g_{r+2,r}(1i) and g_{n+3,j}(1k) that H_r depends on.
struct BoundaryData {
  int r = 0;
  /// top_row[i-2] = g_{r+2,r}(1i), 2 <= i <= r+2.
  std::vector<Integer> top_row;
  /// inner[n][j][k-2] = g_{n+3,j}(1k), 0 <= j <= n <= r-2, 2 <= k <= j+2.
  std::vector<std::vector<std::vector<Integer>>> inner;

  const Integer& top(int i) const { return top_row.at(static_cast<std::size_t>(i - 2)); }
  const Integer& inner_at(int n, int j, int k) const {
    return inner.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(k - 2));
  }
};

/// Throws LimitExceeded for r > r_limit.
BoundaryData boundary_data(int r, int r_limit = kDefaultRLimit);
BoundaryData boundary_data(const recurrence::GTable& table, int r);

/// T_h(x,v) = 1 - (1-2x)(1-v) sum_{k<h} (1-x)^k v^k, h >= 1.
XVPoly t_poly(int h);

/// H_r(x,v), an integer polynomial in x and v.
XVPoly h_poly(const BoundaryData& data);
VPoly h_r(int r, int order);

/// H~_r = H_r(x,v) - (2-v) s t^{-1} H_r(x, 1/s), as a truncated series.
VPoly htilde(const BoundaryData& data, int order);

/// H~_r / (1 - s v) from the expansion over boundary data, geometric
/// partial sums and T_h.
VPoly htilde_over_kernel_expanded(const BoundaryData& data, int order);
/// H~_r / (1 - s v) by dividing htilde() by the kernel.
VPoly htilde_over_kernel_direct(const BoundaryData& data, int order);
/// Both routes; throws IdentityViolation if they disagree, otherwise
/// returns the common value.
VPoly htilde_over_kernel(int r, int order);

/// c_{r,0}, ..., c_{r,r} with P_r = 2 c_{r,0} + sum_l c_{r,l} s^{l-1} t^l v^l.
struct CTable {
  int r = 0;
  std::vector<Poly> c;
};

/// G_r(x,v) = numerator / ((1-x)^{s_power} (1-2x)^{t_power}).
struct RationalGF {
  int r = 0;
  XVPoly numerator;
  int s_power = 0;
  int t_power = 0;

  VPoly expand(int order) const;
};

/// Memoized kernel-method pipeline at one truncation order. Not safe for
/// concurrent mutation; finished results are plain values.
class Pipeline {
 public:
  /// Handles every r with default_order(r) <= order.
  explicit Pipeline(int order, int r_limit = kDefaultRLimit);

  int order() const { return order_; }
  int r_limit() const { return r_limit_; }
  int max_r() const;

  /// g_n(1k) coefficients up to q^{r_limit}, for n <= order.
  const recurrence::GTable& table();
  const BoundaryData& boundary(int r);
  /// G_r(x,v) truncated after x^order.
  const VPoly& g_series(int r);
  const XVPoly& p_poly(int r);
  const CTable& c_table(int r);
  RationalGF rational_gf(int r);

  /// G_r(x,1) through the kernel substitution v = 1/s:
  /// (x/t) sum_{j<r} s^{j-r} G_j(x,1/s) - (x^2 s/t) H_r(x,1/s).
  XSeries g_at_one_via_kernel(int r);
  /// Both sides of (1-v+vx) G_r = x(1-v) sum_{j<r} v^{r-j} G_j
  /// + x(2-v) G_r(x,1) + x^3 H_r.
  std::pair<VPoly, VPoly> rec_gr_sides(int r);

 private:
  void check_r(int r, bool need_polynomial) const;
  VPoly compute_g_series(int r);

  int order_;
  int r_limit_;
  XSeries s_, t_, s_inv_, t_inv_;
  std::unique_ptr<recurrence::GTable> table_;
  std::map<int, BoundaryData> boundary_;
  std::map<int, VPoly> g_;
  std::map<int, XVPoly> p_;
  std::map<int, CTable> c_;
};

VPoly g_series(int r, int order);
XVPoly p_poly(int r);
CTable c_table(int r);
RationalGF rational_gf(int r);

/// Integrality of every c_{r,i}, c_{r,0}(1/2) = 2^{1-r}, the degree
/// bounds (equalities for r >= 4) and positivity of g_{r+2,r}(1(i+2))
/// for r >= 4, for each 1 <= r <= r_max.
std::vector<Check> verify_theorem36(int r_max);
std::vector<Check> verify_theorem36(Pipeline& pipeline, int r_max);

}  // namespace flatperm::genfun
