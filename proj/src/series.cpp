#include "flatperm/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "flatperm/errors.hpp"

namespace flatperm {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

std::size_t storage_size(int order) {
  if (order < 0) throw std::invalid_argument("XSeries: negative truncation order");
  return idx(order) + 1;
}

}  // namespace

XSeries::XSeries(int order) : order_(order), coeffs_(storage_size(order)) {}

XSeries::XSeries(std::vector<Integer> coeffs, int order) : XSeries(order) {
  const std::size_t n = std::min(coeffs.size(), coeffs_.size());
  std::move(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(n), coeffs_.begin());
}

XSeries XSeries::constant(const Integer& c, int order) {
  XSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

XSeries XSeries::x_power(int k, int order) {
  XSeries s(order);
  if (k <= order) s.coeffs_[idx(k)] = 1;
  return s;
}

XSeries XSeries::from_poly(const Poly& p, int order) {
  return XSeries(std::vector<Integer>(p.coeffs().begin(), p.coeffs().end()), order);
}

const Integer& XSeries::coeff(int power) const {
  if (power < 0 || power > order_) throw std::out_of_range("XSeries::coeff: power outside truncation");
  return coeffs_[idx(power)];
}

void XSeries::set_coeff(int power, Integer value) {
  if (power < 0 || power > order_) throw std::out_of_range("XSeries::set_coeff: power outside truncation");
  coeffs_[idx(power)] = std::move(value);
}

bool XSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

int XSeries::valuation() const {
  for (int i = 0; i <= order_; ++i) {
    if (coeffs_[idx(i)] != 0) return i;
  }
  return order_ + 1;
}

XSeries XSeries::truncated(int new_order) const {
  if (new_order > order_) throw std::invalid_argument("XSeries::truncated: cannot raise the order");
  return XSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + new_order + 1), new_order);
}

XSeries XSeries::shifted_up(int k) const {
  XSeries s(order_);
  for (int i = 0; i + k <= order_; ++i) s.coeffs_[idx(i + k)] = coeffs_[idx(i)];
  return s;
}

XSeries XSeries::shifted_down(int k) const {
  if (k > order_) throw std::invalid_argument("XSeries::shifted_down: shift exceeds the order");
  for (int i = 0; i < k; ++i) {
    if (coeffs_[idx(i)] != 0) {
      throw InexactDivision("series is not divisible by x^" + std::to_string(k) + " (coefficient of x^" +
                            std::to_string(i) + " is " + coeffs_[idx(i)].get_str() + ")");
    }
  }
  return XSeries(std::vector<Integer>(coeffs_.begin() + k, coeffs_.end()), order_ - k);
}

bool XSeries::all_coefficients_divisible_by(const Integer& d) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [&](const Integer& c) { return mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()) != 0; });
}

XSeries XSeries::divided_by(const Integer& d) const {
  if (d == 0) throw std::domain_error("XSeries::divided_by: division by zero");
  XSeries s(order_);
  for (int i = 0; i <= order_; ++i) {
    const Integer& c = coeffs_[idx(i)];
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
      throw InexactDivision("coefficient of x^" + std::to_string(i) + " (" + c.get_str() +
                            ") is not divisible by " + d.get_str());
    }
    mpz_divexact(s.coeffs_[idx(i)].get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return s;
}

XSeries XSeries::inverse() const {
  const Integer& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1) throw std::domain_error("XSeries::inverse: constant term is not a unit");
  // c0 is its own inverse.
  XSeries inv(order_);
  inv.coeffs_[0] = c0;
  for (int m = 1; m <= order_; ++m) {
    Integer acc = 0;
    for (int i = 1; i <= m; ++i) mpz_addmul(acc.get_mpz_t(), coeffs_[idx(i)].get_mpz_t(), inv.coeffs_[idx(m - i)].get_mpz_t());
    inv.coeffs_[idx(m)] = -acc * c0;
  }
  return inv;
}

XSeries& XSeries::operator+=(const XSeries& rhs) {
  if (rhs.order_ < order_) *this = truncated(rhs.order_);
  for (int i = 0; i <= order_; ++i) coeffs_[idx(i)] += rhs.coeffs_[idx(i)];
  return *this;
}

XSeries& XSeries::operator-=(const XSeries& rhs) {
  if (rhs.order_ < order_) *this = truncated(rhs.order_);
  for (int i = 0; i <= order_; ++i) coeffs_[idx(i)] -= rhs.coeffs_[idx(i)];
  return *this;
}

XSeries& XSeries::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
  const int n = std::min(a.order_, b.order_);
  XSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[idx(i)] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      mpz_addmul(out.coeffs_[idx(i + j)].get_mpz_t(), a.coeffs_[idx(i)].get_mpz_t(), b.coeffs_[idx(j)].get_mpz_t());
    }
  }
  return out;
}

XSeries XSeries::operator-() const {
  XSeries s = *this;
  for (auto& x : s.coeffs_) x = -x;
  return s;
}

bool XSeries::agrees_with(const XSeries& other) const {
  const int n = std::min(order_, other.order_);
  for (int i = 0; i <= n; ++i) {
    if (coeffs_[idx(i)] != other.coeffs_[idx(i)]) return false;
  }
  return true;
}

XSeries pow(const XSeries& base, unsigned exponent) {
  XSeries result = XSeries::one(base.order());
  XSeries b = base;
  while (exponent != 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent != 0) b = b * b;
  }
  return result;
}

XSeries series_div_exact(const XSeries& a, const XSeries& b) {
  const Integer& b0 = b.coeff(0);
  if (b0 != 1 && b0 != -1) throw std::domain_error("series_div_exact: divisor is not a unit");
  const int n = std::min(a.order(), b.order());
  XSeries q(n);
  for (int m = 0; m <= n; ++m) {
    Integer acc = a.coeff(m);
    for (int i = 1; i <= m; ++i) acc -= b.coeff(i) * q.coeff(m - i);
    q.set_coeff(m, acc * b0);
  }
  return q;
}

// ---------------------------------------------------------------------------

VPoly::VPoly(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("VPoly: negative truncation order");
}

VPoly::VPoly(std::vector<XSeries> coeffs) : order_(0), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("VPoly: use VPoly(order) for the zero polynomial");
  order_ = coeffs_.front().order();
  for (const auto& c : coeffs_) order_ = std::min(order_, c.order());
  for (auto& c : coeffs_) {
    if (c.order() != order_) c = c.truncated(order_);
  }
  normalize();
}

VPoly VPoly::constant(const XSeries& c) { return VPoly(std::vector<XSeries>{c}); }

VPoly VPoly::monomial(const XSeries& c, int k) {
  std::vector<XSeries> v(idx(k) + 1, XSeries(c.order()));
  v.back() = c;
  return VPoly(std::move(v));
}

void VPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void VPoly::unify_order(int other_order) {
  if (other_order >= order_) return;
  order_ = other_order;
  for (auto& c : coeffs_) c = c.truncated(order_);
}

XSeries VPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return XSeries(order_);
  return coeffs_[idx(k)];
}

VPoly VPoly::truncated(int new_order) const {
  VPoly r = *this;
  if (new_order > order_) throw std::invalid_argument("VPoly::truncated: cannot raise the order");
  r.unify_order(new_order);
  r.normalize();
  return r;
}

VPoly VPoly::times_v_power(int k) const {
  if (is_zero()) return *this;
  VPoly r(order_);
  r.coeffs_.assign(idx(k), XSeries(order_));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

XSeries VPoly::at_one() const {
  XSeries acc(order_);
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

VPoly& VPoly::operator+=(const VPoly& rhs) {
  unify_order(rhs.order_);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), XSeries(order_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

VPoly& VPoly::operator-=(const VPoly& rhs) {
  unify_order(rhs.order_);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), XSeries(order_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

VPoly operator*(const VPoly& a, const VPoly& b) {
  const int order = std::min(a.order_, b.order_);
  if (a.is_zero() || b.is_zero()) return VPoly(order);
  std::vector<XSeries> out(a.coeffs_.size() + b.coeffs_.size() - 1, XSeries(order));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  VPoly r(order);
  r.coeffs_ = std::move(out);
  r.normalize();
  return r;
}

VPoly operator*(const VPoly& a, const XSeries& c) {
  const int order = std::min(a.order_, c.order());
  VPoly r(order);
  for (const auto& x : a.coeffs_) r.coeffs_.push_back(x * c);
  r.normalize();
  return r;
}

VPoly operator*(const VPoly& a, const Integer& c) {
  VPoly r = a;
  for (auto& x : r.coeffs_) x *= c;
  r.normalize();
  return r;
}

VPoly VPoly::operator-() const {
  VPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

bool VPoly::agrees_with(const VPoly& other) const {
  const std::size_t n = std::max(coeffs_.size(), other.coeffs_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (!coeff(static_cast<int>(k)).agrees_with(other.coeff(static_cast<int>(k)))) return false;
  }
  return true;
}

XSeries substitute_v_with_series(const VPoly& p, const XSeries& w) {
  // Horner in v.
  const int order = std::min(p.order(), w.order());
  XSeries acc(order);
  for (int k = p.degree(); k >= 0; --k) acc = acc * w + p.coeff(k).truncated(order);
  return acc;
}

VPoly vpoly_div_kernel(const VPoly& b, const XSeries& s, int vdeg) {
  const int order = std::min(b.order(), s.order());
  const VPoly bb = b.truncated(order);
  const XSeries ss = s.truncated(order);
  const XSeries s_inv = ss.inverse();
  const int d = bb.degree();
  if (d < 0) return VPoly(order);
  if (d == 0) throw InexactDivision("kernel division of a nonzero v-constant leaves a remainder");
  // (1 - s v) Q = b  <=>  b_k = Q_k - s Q_{k-1}; solve from the top.
  std::vector<XSeries> q(idx(d), XSeries(order));
  XSeries upper(order);  // Q_k, with Q_d = 0
  for (int k = d; k >= 1; --k) {
    XSeries next = (upper - bb.coeff(k)) * s_inv;
    q[idx(k - 1)] = next;
    upper = std::move(next);
  }
  const XSeries remainder = bb.coeff(0) - q[0];
  if (!remainder.is_zero()) {
    throw InexactDivision("kernel division by (1 - s v) left a nonzero remainder (valuation " +
                          std::to_string(remainder.valuation()) + ")");
  }
  VPoly quotient(std::move(q));
  if (quotient.degree() > vdeg) {
    throw InexactDivision("kernel quotient has v-degree " + std::to_string(quotient.degree()) + " > " +
                          std::to_string(vdeg));
  }
  const VPoly kernel(std::vector<XSeries>{XSeries::one(order), -ss});
  if (!(kernel * quotient == bb)) throw InexactDivision("kernel division failed the re-multiplication check");
  return quotient;
}

}  // namespace flatperm
