#include "flatperm/genfun.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "flatperm/errors.hpp"
#include "flatperm/permcore.hpp"

namespace flatperm::genfun {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Largest n for which the boundary data is re-derived by brute force.
constexpr int kOracleCheckMaxN = 9;

XVPoly x_power(int k) { return XVPoly::constant(Poly::monomial(1, k)); }
XVPoly v_power(int k) { return XVPoly::monomial(Poly{1}, k); }

// Sum_i coeffs[i] v^i as an XVPoly with constant x-coefficients.
XVPoly v_poly(const std::vector<Integer>& coeffs) {
  std::vector<Poly> by_v;
  for (const auto& c : coeffs) by_v.push_back(Poly::constant(c));
  return XVPoly(std::move(by_v));
}

VPoly v_linear(const XSeries& c0, const XSeries& c1) { return VPoly(std::vector<XSeries>{c0, c1}); }

// (2 - v) and (1 - v) at a given order.
VPoly two_minus_v(int order) { return v_linear(XSeries::constant(2, order), XSeries::constant(-1, order)); }
VPoly one_minus_v(int order) { return v_linear(XSeries::one(order), XSeries::constant(-1, order)); }

void cross_check_with_oracle(const BoundaryData& data, int r) {
  std::map<int, std::map<int, OccurrenceTable>> by_n;
  auto oracle = [&by_n](int n, int k, int j) -> Integer {
    auto it = by_n.find(n);
    if (it == by_n.end()) it = by_n.emplace(n, distributions_by_second_letter(n)).first;
    return it->second.at(k).at(j);
  };
  for (int i = 2; i <= r + 2; ++i) {
    if (oracle(r + 2, i, r) != data.top(i)) {
      throw IdentityViolation("g_{" + std::to_string(r + 2) + "," + std::to_string(r) + "}(1" + std::to_string(i) +
                              ") from the recurrence disagrees with enumeration");
    }
  }
  for (int n = 0; n <= r - 2; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (int k = 2; k <= j + 2; ++k) {
        if (oracle(n + 3, k, j) != data.inner_at(n, j, k)) {
          throw IdentityViolation("g_{" + std::to_string(n + 3) + "," + std::to_string(j) + "}(1" +
                                  std::to_string(k) + ") from the recurrence disagrees with enumeration");
        }
      }
    }
  }
}

CTable decompose(const XVPoly& p, int r) {
  CTable table{r, {}};
  table.c.push_back(p.v_coeff(0).divided_by(2));
  const Poly s = s_poly();
  const Poly t = t_poly_x();
  for (int l = 1; l <= r; ++l) {
    table.c.push_back(divide_exact(p.v_coeff(l), pow(s, static_cast<unsigned>(l - 1)) * pow(t, static_cast<unsigned>(l))));
  }
  return table;
}

XVPoly recompose(const CTable& table) {
  const Poly s = s_poly();
  const Poly t = t_poly_x();
  XVPoly p = XVPoly::constant(table.c[0] * Integer(2));
  for (int l = 1; l < static_cast<int>(table.c.size()); ++l) {
    p += XVPoly::monomial(table.c[idx(l)] * pow(s, static_cast<unsigned>(l - 1)) * pow(t, static_cast<unsigned>(l)), l);
  }
  return p;
}

Rational expected_c0_at_half(int r) { return make_rational(1, pow2(r - 1)); }

}  // namespace

Poly s_poly() { return Poly{1, -1}; }
Poly t_poly_x() { return Poly{1, -2}; }

// --- Boundary data ------------------------------------------------------------

BoundaryData boundary_data(const recurrence::GTable& table, int r) {
  if (r < 0) throw std::invalid_argument("boundary_data: r must be nonnegative");
  if (table.n_max() < r + 2) throw std::invalid_argument("boundary_data: g-table too short");
  if (table.q_cap() && *table.q_cap() < r) throw std::invalid_argument("boundary_data: g-table q cap below r");
  BoundaryData data;
  data.r = r;
  for (int i = 2; i <= r + 2; ++i) data.top_row.push_back(recurrence::coeff_g(table, r + 2, r, i));
  for (int n = 0; n <= r - 2; ++n) {
    std::vector<std::vector<Integer>> by_j;
    for (int j = 0; j <= n; ++j) {
      std::vector<Integer> by_k;
      for (int k = 2; k <= j + 2; ++k) by_k.push_back(recurrence::coeff_g(table, n + 3, j, k));
      by_j.push_back(std::move(by_k));
    }
    data.inner.push_back(std::move(by_j));
  }
  if (r + 2 <= kOracleCheckMaxN) cross_check_with_oracle(data, r);
  return data;
}

BoundaryData boundary_data(int r, int r_limit) {
  if (r > r_limit) {
    throw LimitExceeded("r = " + std::to_string(r) + " exceeds the configured limit " + std::to_string(r_limit));
  }
  return boundary_data(recurrence::GTable(std::max(r + 2, 2), r), r);
}

// --- T_h and H_r ----------------------------------------------------------------

XVPoly t_poly(int h) {
  if (h < 1) throw std::invalid_argument("t_poly: h must be at least 1");
  std::vector<Poly> geometric;
  for (int k = 0; k < h; ++k) geometric.push_back(pow(s_poly(), static_cast<unsigned>(k)));
  const XVPoly one_minus_v_t = XVPoly(std::vector<Poly>{t_poly_x(), -t_poly_x()});
  return XVPoly::constant(Poly{1}) - one_minus_v_t * XVPoly(std::move(geometric));
}

XVPoly h_poly(const BoundaryData& data) {
  const int r = data.r;
  const XVPoly g_top = v_poly(data.top_row);
  Integer g_top_at_one = 0;
  for (const auto& c : data.top_row) g_top_at_one += c;

  XVPoly h = x_power(r) * XVPoly(std::vector<Poly>{Poly::constant(2 * g_top_at_one), Poly::constant(-g_top_at_one)});
  h -= x_power(r) * v_power(1) * g_top;

  XVPoly inner_sum;
  for (int n = 0; n <= r - 2; ++n) {
    for (int j = 0; j <= n; ++j) {
      const auto& row = data.inner[idx(n)][idx(j)];
      inner_sum += v_power(r - j) * v_poly(row) * x_power(n);
    }
  }
  h -= x_power(1) * XVPoly(std::vector<Poly>{Poly{1}, Poly{-1}}) * inner_sum;
  return h;
}

VPoly h_r(int r, int order) { return h_poly(boundary_data(r)).to_vpoly(order); }

VPoly htilde(const BoundaryData& data, int order) {
  const XSeries s = XSeries::from_poly(s_poly(), order);
  const XSeries t = XSeries::from_poly(t_poly_x(), order);
  const VPoly h = h_poly(data).to_vpoly(order);
  const XSeries h_at_inv_s = substitute_v_with_series(h, s.inverse());
  return h - two_minus_v(order) * (s * t.inverse() * h_at_inv_s);
}

VPoly htilde_over_kernel_expanded(const BoundaryData& data, int order) {
  const int r = data.r;
  const XSeries s = XSeries::from_poly(s_poly(), order);
  const XSeries t = XSeries::from_poly(t_poly_x(), order);
  const XSeries s_inv = s.inverse();
  const XSeries t_inv = t.inverse();

  VPoly top_part(order);
  for (int i = 2; i <= r + 2; ++i) {
    // 1 + t * sum_{k=0}^{i-2} (s v)^k
    std::vector<XSeries> geometric;
    for (int k = 0; k <= i - 2; ++k) geometric.push_back(t * pow(s, static_cast<unsigned>(k)));
    geometric[0] += XSeries::one(order);
    top_part += VPoly(std::move(geometric)) * (data.top(i) * pow(s_inv, static_cast<unsigned>(i - 1)));
  }
  VPoly result = top_part * (XSeries::x_power(r, order) * t_inv);

  VPoly inner_part(order);
  for (int n = 0; n <= r - 2; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (int k = 2; k <= j + 2; ++k) {
        const Integer& g = data.inner_at(n, j, k);
        if (g == 0) continue;
        const int h = r - j + k - 2;
        inner_part += t_poly(h).to_vpoly(order) *
                      (g * XSeries::x_power(n + 1, order) * pow(s_inv, static_cast<unsigned>(h)));
      }
    }
  }
  result -= inner_part * t_inv;
  return result;
}

VPoly htilde_over_kernel_direct(const BoundaryData& data, int order) {
  const XSeries s = XSeries::from_poly(s_poly(), order);
  return vpoly_div_kernel(htilde(data, order), s, data.r);
}

VPoly htilde_over_kernel(int r, int order) {
  const BoundaryData data = boundary_data(r);
  VPoly expanded = htilde_over_kernel_expanded(data, order);
  const VPoly direct = htilde_over_kernel_direct(data, order);
  if (!(expanded == direct)) {
    throw IdentityViolation("H~_" + std::to_string(r) + "/(1-sv): the expanded form and kernel division disagree");
  }
  return expanded;
}

// --- RationalGF -------------------------------------------------------------------

VPoly RationalGF::expand(int order) const {
  const XSeries s_inv = XSeries::from_poly(s_poly(), order).inverse();
  const XSeries t_inv = XSeries::from_poly(t_poly_x(), order).inverse();
  std::vector<XSeries> by_v;
  for (const Poly& c : numerator.v_coeffs()) by_v.push_back(XSeries::from_poly(c, order));
  if (by_v.empty()) return VPoly(order);
  return VPoly(std::move(by_v)) *
         (pow(s_inv, static_cast<unsigned>(s_power)) * pow(t_inv, static_cast<unsigned>(t_power)));
}

// --- Pipeline ---------------------------------------------------------------------

Pipeline::Pipeline(int order, int r_limit)
    : order_(order),
      r_limit_(r_limit),
      s_(XSeries::from_poly(s_poly(), order)),
      t_(XSeries::from_poly(t_poly_x(), order)),
      s_inv_(s_.inverse()),
      t_inv_(t_.inverse()) {
  if (order < 3) throw std::invalid_argument("Pipeline: truncation order must be at least 3");
  if (r_limit < 0) throw std::invalid_argument("Pipeline: r_limit must be nonnegative");
}

int Pipeline::max_r() const {
  int r = 0;
  while (r + 1 <= r_limit_ && default_order(r + 1) <= order_) ++r;
  return r;
}

void Pipeline::check_r(int r, bool need_polynomial) const {
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  if (r > r_limit_) {
    throw LimitExceeded("r = " + std::to_string(r) + " exceeds the configured limit " + std::to_string(r_limit_));
  }
  if (need_polynomial) {
    if (r < 1) throw std::invalid_argument("P_r is defined for r >= 1");
    if (default_order(r) > order_) {
      throw LimitExceeded("truncation order " + std::to_string(order_) + " is too small for r = " + std::to_string(r) +
                          " (needs " + std::to_string(default_order(r)) + ")");
    }
  }
}

const recurrence::GTable& Pipeline::table() {
  if (!table_) table_ = std::make_unique<recurrence::GTable>(std::max(order_, r_limit_ + 2), r_limit_);
  return *table_;
}

const BoundaryData& Pipeline::boundary(int r) {
  check_r(r, false);
  auto it = boundary_.find(r);
  if (it == boundary_.end()) it = boundary_.emplace(r, boundary_data(table(), r)).first;
  return it->second;
}

const VPoly& Pipeline::g_series(int r) {
  check_r(r, false);
  auto it = g_.find(r);
  if (it == g_.end()) it = g_.emplace(r, compute_g_series(r)).first;
  return it->second;
}

VPoly Pipeline::compute_g_series(int r) {
  const int n = order_;
  const XSeries x = XSeries::x_power(1, n);
  if (r == 0) return VPoly::constant(XSeries::constant(4, n).shifted_up(3) * t_inv_);

  // 4x^4/t * ((1-v) v^r + x(2-v)/(s^r t))
  const XSeries c = pow(s_inv_, static_cast<unsigned>(r)) * t_inv_;
  VPoly bracket = (one_minus_v(n).times_v_power(r) + two_minus_v(n) * (x * c)) *
                  (XSeries::constant(4, n).shifted_up(4) * t_inv_);
  // + x^3 H~_r
  bracket += htilde(boundary(r), n) * XSeries::x_power(3, n);
  // + x sum_{j=1}^{r-1} ((1-v) v^{r-j} G_j + x(2-v) G_j(x,1/s) / (s^{r-j} t))
  VPoly lower(n);
  for (int j = 1; j <= r - 1; ++j) {
    const VPoly& gj = g_series(j);
    lower += (one_minus_v(n) * gj).times_v_power(r - j);
    const XSeries gj_at = substitute_v_with_series(gj, s_inv_);
    lower += two_minus_v(n) * (x * gj_at * pow(s_inv_, static_cast<unsigned>(r - j)) * t_inv_);
  }
  bracket += lower * x;
  return vpoly_div_kernel(bracket, s_, r);
}

const XVPoly& Pipeline::p_poly(int r) {
  check_r(r, true);
  auto it = p_.find(r);
  if (it == p_.end()) {
    const XVPoly pre = XVPoly::constant(pow(s_poly(), static_cast<unsigned>(2 * r - 1)) *
                                        pow(t_poly_x(), static_cast<unsigned>(r + 1)));
    it = p_.emplace(r, xvpoly_extract_from_series(g_series(r), pre, r + 3, 2, 3 * r - 1)).first;
  }
  return it->second;
}

const CTable& Pipeline::c_table(int r) {
  auto it = c_.find(r);
  if (it != c_.end()) return it->second;
  const XVPoly& p = p_poly(r);
  CTable table = decompose(p, r);
  if (recompose(table) != p) throw IdentityViolation("P_" + std::to_string(r) + " does not recompose from c_{r,l}");
  if (table.c[0].eval(Rational(1, 2)) != expected_c0_at_half(r)) {
    throw IdentityViolation("c_{" + std::to_string(r) + ",0}(1/2) differs from 2^{1-r}");
  }
  for (int l = 0; l <= r; ++l) {
    const int bound = l == 0 ? 3 * r - 1 : 3 * r - 2 * l;
    const int deg = table.c[idx(l)].degree();
    if (deg > bound || (r >= 4 && deg != bound)) {
      throw IdentityViolation("deg c_{" + std::to_string(r) + "," + std::to_string(l) + "} = " + std::to_string(deg) +
                              ", expected " + (r >= 4 ? "" : "at most ") + std::to_string(bound));
    }
  }
  return c_.emplace(r, std::move(table)).first->second;
}

RationalGF Pipeline::rational_gf(int r) {
  RationalGF gf;
  gf.r = r;
  if (r == 0) {
    check_r(0, false);
    gf.numerator = XVPoly::constant(Poly::monomial(4, 3));
    gf.s_power = 0;
    gf.t_power = 1;
  } else {
    gf.numerator = x_power(r + 3) * p_poly(r) * Integer(2);
    gf.s_power = 2 * r - 1;
    gf.t_power = r + 1;
  }
  if (!(gf.expand(order_) == g_series(r))) {
    throw IdentityViolation("re-expanding the rational form of G_" + std::to_string(r) + " does not reproduce G_r");
  }
  return gf;
}

XSeries Pipeline::g_at_one_via_kernel(int r) {
  check_r(r, false);
  const int n = order_;
  XSeries acc(n);
  for (int j = 0; j <= r - 1; ++j) {
    acc += pow(s_inv_, static_cast<unsigned>(r - j)) * substitute_v_with_series(g_series(j), s_inv_);
  }
  acc = acc * XSeries::x_power(1, n) * t_inv_;
  const XSeries h_at = substitute_v_with_series(h_poly(boundary(r)).to_vpoly(n), s_inv_);
  return acc - XSeries::x_power(2, n) * s_ * t_inv_ * h_at;
}

std::pair<VPoly, VPoly> Pipeline::rec_gr_sides(int r) {
  check_r(r, false);
  const int n = order_;
  const XSeries x = XSeries::x_power(1, n);
  const VPoly& gr = g_series(r);
  VPoly lhs = v_linear(XSeries::one(n), -s_) * gr;

  VPoly lower(n);
  for (int j = 0; j <= r - 1; ++j) lower += g_series(j).times_v_power(r - j);
  VPoly rhs = one_minus_v(n) * lower * x;
  rhs += two_minus_v(n) * (x * gr.at_one());
  rhs += h_poly(boundary(r)).to_vpoly(n) * XSeries::x_power(3, n);
  return {std::move(lhs), std::move(rhs)};
}

// --- Free functions -------------------------------------------------------------

VPoly g_series(int r, int order) {
  Pipeline p(order);
  return p.g_series(r);
}

XVPoly p_poly(int r) {
  Pipeline p(default_order(r));
  return p.p_poly(r);
}

CTable c_table(int r) {
  Pipeline p(default_order(r));
  return p.c_table(r);
}

RationalGF rational_gf(int r) {
  Pipeline p(default_order(std::max(r, 1)));
  return p.rational_gf(r);
}

std::vector<Check> verify_theorem36(int r_max) {
  Pipeline p(default_order(std::max(r_max, 1)));
  return verify_theorem36(p, r_max);
}

std::vector<Check> verify_theorem36(Pipeline& pipeline, int r_max) {
  std::vector<Check> checks;
  auto add = [&checks](std::string claim, bool passed, std::string detail = {}) {
    checks.push_back({std::move(claim), passed, std::move(detail)});
  };
  for (int r = 1; r <= r_max; ++r) {
    const std::string tag = "r=" + std::to_string(r) + ": ";
    CTable table;
    try {
      table = decompose(pipeline.p_poly(r), r);
      add(tag + "P_r is an integer polynomial and every c_{r,i} has integer coefficients", true);
    } catch (const IdentityViolation& e) {
      add(tag + "P_r is an integer polynomial and every c_{r,i} has integer coefficients", false, e.what());
      continue;
    }
    const Rational at_half = table.c[0].eval(Rational(1, 2));
    add(tag + "c_{r,0}(1/2) = 2^{1-r}", at_half == expected_c0_at_half(r), "value " + at_half.get_str());

    for (int l = 0; l <= r; ++l) {
      const int bound = l == 0 ? 3 * r - 1 : 3 * r - 2 * l;
      const int deg = table.c[idx(l)].degree();
      const std::string name = "deg c_{r," + std::to_string(l) + "}";
      if (r >= 4) add(tag + name + " = " + std::to_string(bound), deg == bound, "degree " + std::to_string(deg));
      else add(tag + name + " <= " + std::to_string(bound), deg <= bound, "degree " + std::to_string(deg));
    }

    if (r >= 4) {
      const BoundaryData& data = pipeline.boundary(r);
      for (int i = 0; i <= r; ++i) {
        const Integer& g = data.top(i + 2);
        const Permutation w = appendix_c_witness(r, i);
        const bool witness_ok = count_13_2(w) == r && w[0] == 1 && w[1] == i + 2;
        add(tag + "g_{r+2,r}(1(" + std::to_string(i) + "+2)) >= 1", g >= 1 && witness_ok,
            "value " + g.get_str() + ", witness " + to_string(w));
      }
    }
  }
  return checks;
}

}  // namespace flatperm::genfun
