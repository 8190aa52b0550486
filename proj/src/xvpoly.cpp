#include "flatperm/xvpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "flatperm/errors.hpp"

namespace flatperm {

XVPoly::XVPoly(std::vector<Poly> by_v_power) : by_v_(std::move(by_v_power)) { normalize(); }

XVPoly XVPoly::from_matrix(const std::vector<std::vector<Integer>>& rows) {
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.size());
  std::vector<Poly> by_v;
  for (std::size_t j = 0; j < width; ++j) {
    std::vector<Integer> col(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (j < rows[i].size()) col[i] = rows[i][j];
    }
    by_v.emplace_back(std::move(col));
  }
  return XVPoly(std::move(by_v));
}

XVPoly XVPoly::monomial(const Poly& c, int k) {
  std::vector<Poly> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return XVPoly(std::move(v));
}

void XVPoly::normalize() {
  while (!by_v_.empty() && by_v_.back().is_zero()) by_v_.pop_back();
}

Integer XVPoly::coeff(int x_power, int v_power) const { return v_coeff(v_power).coeff(x_power); }

Poly XVPoly::v_coeff(int k) const {
  if (k < 0 || k > degree_v()) return {};
  return by_v_[static_cast<std::size_t>(k)];
}

int XVPoly::degree_x() const {
  int d = -1;
  for (const auto& p : by_v_) d = std::max(d, p.degree());
  return d;
}

std::vector<std::vector<Integer>> XVPoly::to_matrix() const {
  const int dx = degree_x();
  const int dv = degree_v();
  std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(dx + 1),
                                         std::vector<Integer>(static_cast<std::size_t>(dv + 1)));
  for (int j = 0; j <= dv; ++j) {
    for (int i = 0; i <= by_v_[static_cast<std::size_t>(j)].degree(); ++i) {
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = by_v_[static_cast<std::size_t>(j)].coeff(i);
    }
  }
  return rows;
}

Poly XVPoly::at_v(const Poly& w) const {
  Poly acc;
  for (int k = degree_v(); k >= 0; --k) acc = acc * w + by_v_[static_cast<std::size_t>(k)];
  return acc;
}

VPoly XVPoly::to_vpoly(int order) const {
  if (is_zero()) return VPoly(order);
  std::vector<XSeries> coeffs;
  coeffs.reserve(by_v_.size());
  for (const auto& p : by_v_) {
    if (p.degree() > order) {
      throw std::invalid_argument("XVPoly::to_vpoly: x-degree " + std::to_string(p.degree()) +
                                  " exceeds truncation order " + std::to_string(order));
    }
    coeffs.push_back(XSeries::from_poly(p, order));
  }
  return VPoly(std::move(coeffs));
}

XVPoly& XVPoly::operator+=(const XVPoly& rhs) {
  if (rhs.by_v_.size() > by_v_.size()) by_v_.resize(rhs.by_v_.size());
  for (std::size_t i = 0; i < rhs.by_v_.size(); ++i) by_v_[i] += rhs.by_v_[i];
  normalize();
  return *this;
}

XVPoly& XVPoly::operator-=(const XVPoly& rhs) {
  if (rhs.by_v_.size() > by_v_.size()) by_v_.resize(rhs.by_v_.size());
  for (std::size_t i = 0; i < rhs.by_v_.size(); ++i) by_v_[i] -= rhs.by_v_[i];
  normalize();
  return *this;
}

XVPoly operator*(const XVPoly& a, const XVPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Poly> out(a.by_v_.size() + b.by_v_.size() - 1);
  for (std::size_t i = 0; i < a.by_v_.size(); ++i) {
    for (std::size_t j = 0; j < b.by_v_.size(); ++j) out[i + j] += a.by_v_[i] * b.by_v_[j];
  }
  return XVPoly(std::move(out));
}

XVPoly operator*(const XVPoly& a, const Integer& c) {
  std::vector<Poly> out = a.by_v_;
  for (auto& p : out) p *= c;
  return XVPoly(std::move(out));
}

XVPoly pow(const XVPoly& base, unsigned exponent) {
  XVPoly result = XVPoly::constant(Poly{1});
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

XVPoly xvpoly_extract_from_series(const VPoly& g, const XVPoly& pre_factor, int divide_x_power,
                                  const Integer& divide_const, int degree_bound_x, int guard) {
  const int needed = divide_x_power + degree_bound_x + guard;
  if (g.order() < needed) {
    throw std::invalid_argument("xvpoly_extract_from_series: truncation order " + std::to_string(g.order()) +
                                " is below the required " + std::to_string(needed));
  }
  const VPoly product = pre_factor.to_vpoly(g.order()) * g;
  std::vector<Poly> by_v;
  for (int k = 0; k <= product.degree(); ++k) {
    const XSeries reduced = product.coeff(k).shifted_down(divide_x_power).divided_by(divide_const);
    for (int i = degree_bound_x + 1; i <= reduced.order(); ++i) {
      if (reduced.coeff(i) != 0) {
        throw InexactDivision("coefficient of x^" + std::to_string(i) + " v^" + std::to_string(k) +
                              " is nonzero beyond the degree bound " + std::to_string(degree_bound_x));
      }
    }
    const auto& c = reduced.coeffs();
    by_v.emplace_back(std::vector<Integer>(c.begin(), c.begin() + degree_bound_x + 1));
  }
  return XVPoly(std::move(by_v));
}

}  // namespace flatperm
