#include "flatperm/poly.hpp"

#include <algorithm>
#include <sstream>

#include "flatperm/errors.hpp"

namespace flatperm {

Integer binomial(long n, long k) {
  if (k == -1) return n == -1 ? 1 : 0;
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer pow2(long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

Rational harmonic(long n) {
  Rational h = 0;
  for (long k = 1; k <= n; ++k) h += Rational(1, k);
  h.canonicalize();
  return h;
}

Poly::Poly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Poly Poly::constant(const Integer& c) { return Poly(std::vector<Integer>{c}); }

Poly Poly::monomial(const Integer& c, int degree) {
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer Poly::coeff(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

Integer Poly::eval(const Integer& at) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Rational Poly::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + Rational(*it);
  }
  acc.canonicalize();
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Integer> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return Poly(std::move(d));
}

Poly Poly::truncated(int max_degree) const {
  if (max_degree < 0) return {};
  if (degree() <= max_degree) return *this;
  return Poly(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

bool Poly::all_coefficients_divisible_by(const Integer& d) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [&](const Integer& c) { return mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()) != 0; });
}

Poly Poly::divided_by(const Integer& d) const {
  if (d == 0) throw std::domain_error("Poly::divided_by: division by zero");
  std::vector<Integer> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), d.get_mpz_t())) {
      throw InexactDivision("coefficient " + coeffs_[i].get_str() + " of x^" + std::to_string(i) +
                            " is not divisible by " + d.get_str());
    }
    mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), d.get_mpz_t());
  }
  return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result = Poly::constant(1);
  Poly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InexactDivision("divide_exact: divisor degree exceeds dividend degree");
  std::vector<Integer> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const Integer& lead = b.coeffs()[static_cast<std::size_t>(db)];
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree() - db; k >= 0; --k) {
    Integer& top = rem[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw InexactDivision("divide_exact: leading coefficient " + top.get_str() + " not divisible by " +
                            lead.get_str());
    }
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k + i)] -= c * b.coeffs()[static_cast<std::size_t>(i)];
    quot[static_cast<std::size_t>(k)] = c;
  }
  for (const auto& r : rem) {
    if (r != 0) throw InexactDivision("divide_exact: nonzero remainder");
  }
  return Poly(std::move(quot));
}

std::string to_string(const Poly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    Integer c = p.coeff(i);
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Integer mag = abs(c);
    if (i == 0) os << mag;
    else {
      if (mag != 1) os << mag << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace flatperm
