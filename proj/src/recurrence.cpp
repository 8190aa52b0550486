#include "flatperm/recurrence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "flatperm/errors.hpp"

namespace flatperm::recurrence {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void check_b_range(int n, int j) {
  if (n < 2 || j < 1 || j > n - 1) {
    throw std::invalid_argument("b_{n,j} requires n >= 2 and 1 <= j <= n-1 (got n=" + std::to_string(n) +
                                ", j=" + std::to_string(j) + ")");
  }
}

QPoly b_sum(int n, int j) {
  std::vector<Integer> coeffs;
  for (int k = 0; k <= n - 1 - j; ++k) {
    Rational term(Integer(n - 1 + j - k) * binomial(j + k - 2, j - 2) * binomial(n - 2 - k, j - 1), Integer(j));
    term.canonicalize();
    if (term.get_den() != 1) {
      throw InexactDivision("b_{" + std::to_string(n) + "," + std::to_string(j) + "}: coefficient of q^" +
                            std::to_string(k) + " is " + term.get_str());
    }
    coeffs.push_back(term.get_num());
  }
  return QPoly(std::move(coeffs));
}

const QPoly kQMinusOne{-1, 1};

}  // namespace

QPoly b_poly(int n, int j) {
  check_b_range(n, j);
  if (j == 1) return QPoly::constant(n);
  return b_sum(n, j);
}

QPoly b_poly_by_definition(int n, int j) {
  check_b_range(n, j);
  return b_sum(n, j);
}

QPoly b_poly_integral_form(int n, int j) {
  check_b_range(n, j);
  std::vector<Integer> coeffs;
  for (int k = 0; k <= n - 1 - j; ++k) {
    coeffs.push_back(binomial(j + k - 2, j - 2) * (binomial(n - k - 2, j - 1) + binomial(n - k - 1, j)));
  }
  return QPoly(std::move(coeffs));
}

// --- ABTable ------------------------------------------------------------------

ABTable::ABTable(int k_max) : k_max_(std::max(k_max, 3)), a_(idx(k_max_) + 1) {
  for (int k = 0; k <= k_max_; ++k) a_[idx(k)].resize(idx(k) + 1);
  a_[2][1] = QPoly{1};
  a_[3][1] = QPoly{1};
  a_[3][2] = QPoly{2};
  const QPoly one_plus_q{1, 1};
  const QPoly q{0, 1};
  for (int k = 4; k <= k_max_; ++k) {
    for (int j = 1; j < k; ++j) {
      QPoly v = one_plus_q * a(k - 1, j) - q * a(k - 2, j) + a(k - 1, j - 1);
      a_[idx(k)][idx(j)] = std::move(v);
    }
  }
}

const QPoly& ABTable::a(int k, int j) const {
  if (k < 2 || k > k_max_) {
    if (k > k_max_) throw std::out_of_range("ABTable::a: k beyond the table");
    return zero_;
  }
  if (j <= 0 || j >= k) return zero_;
  return a_[idx(k)][idx(j)];
}

QPoly ABTable::b(int n, int j) const {
  check_b_range(n, j);
  if (n > k_max_) throw std::out_of_range("ABTable::b: n beyond the table");
  if (j == 1) return QPoly::constant(n);
  QPoly sum;
  for (int k = 2; k <= n; ++k) sum += a(k, j);
  return sum;
}

// --- GTable -------------------------------------------------------------------

GTable::GTable(int n_max, std::optional<int> q_cap)
    : n_max_(n_max), q_cap_(q_cap), ab_(std::max(n_max, 3)), g_(idx(std::max(n_max, 1)) + 1),
      g1k_(idx(std::max(n_max, 1)) + 1) {
  if (n_max < 1) throw std::invalid_argument("g_table: n_max must be at least 1");
  if (q_cap && *q_cap < 0) throw std::invalid_argument("g_table: q_cap must be nonnegative");
  g_[1] = cap(QPoly{1});
  for (int n = 2; n <= n_max_; ++n) {
    // h[j] = (q-1)^{j-1} g_{n-j}
    std::vector<QPoly> h(idx(n));
    QPoly power{1};
    for (int j = 1; j <= n - 1; ++j) {
      h[idx(j)] = cap(power * g_[idx(n - j)]);
      power = cap(power * kQMinusOne);
    }
    QPoly gn;
    for (int j = 1; j <= n - 1; ++j) gn += cap(b_poly(n, j) * h[idx(j)]);
    g_[idx(n)] = cap(std::move(gn));

    auto& row = g1k_[idx(n)];
    row.resize(idx(n) + 1);
    row[2] = cap(QPoly{2} * g_[idx(n - 1)]);
    for (int k = 3; k <= n; ++k) {
      QPoly v;
      for (int j = 1; j <= k - 1; ++j) v += ab_.a(k, j) * h[idx(j)];
      row[idx(k)] = cap(std::move(v));
    }
  }
}

QPoly GTable::cap(QPoly p) const { return q_cap_ ? p.truncated(*q_cap_) : p; }

const QPoly& GTable::g(int n) const {
  if (n < 1 || n > n_max_) throw std::out_of_range("GTable::g: n outside 1.." + std::to_string(n_max_));
  return g_[idx(n)];
}

const QPoly& GTable::g1k(int n, int k) const {
  if (n < 1 || n > n_max_) throw std::out_of_range("GTable::g1k: n outside 1.." + std::to_string(n_max_));
  if (k < 2) throw std::out_of_range("GTable::g1k: k must be at least 2");
  if (k > n) return zero_;
  return g1k_[idx(n)][idx(k)];
}

GTable g_table(int n_max, std::optional<int> q_cap) { return GTable(n_max, q_cap); }

QPoly g_poly(int n) { return GTable(n).g(n); }

QPoly g1k_poly(int n, int k) {
  if (k < 2 || k > n) throw std::invalid_argument("g1k_poly requires 2 <= k <= n");
  return GTable(n).g1k(n, k);
}

Integer coeff_g(const GTable& table, int n, int r, std::optional<int> k) {
  if (r < 0) throw std::invalid_argument("coeff_g: r must be nonnegative");
  if (table.q_cap() && r > *table.q_cap()) throw std::out_of_range("coeff_g: r exceeds the table's q cap");
  if (!k) return table.g(n).coeff(r);
  return table.g1k(n, *k).coeff(r);
}

Integer coeff_g(int n, int r, std::optional<int> k) { return coeff_g(GTable(n, r), n, r, k); }

// --- Identities -----------------------------------------------------------------

QPoly rec_g1i_rhs(const GTable& t, int n, int i) {
  if (i < 3 || i > n) throw std::invalid_argument("rec_g1i_rhs requires 3 <= i <= n");
  QPoly rhs = t.g(n - 1);
  for (int j = 2; j < i; ++j) rhs += (QPoly::monomial(1, i - j) - QPoly{1}) * t.g1k(n - 1, j);
  return rhs;
}

QPoly rec_g1k_rhs(const GTable& t, int n, int k) {
  if (k < 5 || k > n) throw std::invalid_argument("rec_g1k_rhs requires 5 <= k <= n");
  return QPoly{1, 1} * t.g1k(n, k - 1) - QPoly{0, 1} * t.g1k(n, k - 2) - QPoly{1, -1} * t.g1k(n - 1, k - 1);
}

QPoly ini_g13_rhs(const GTable& t, int n) {
  if (n < 3) throw std::invalid_argument("ini_g13_rhs requires n >= 3");
  return t.g(n - 1) - QPoly{2, -2} * t.g(n - 2);
}

QPoly ini_g14_rhs(const GTable& t, int n) {
  if (n < 4) throw std::invalid_argument("ini_g14_rhs requires n >= 4");
  const QPoly one_minus_q{1, -1};
  return t.g(n - 1) - one_minus_q * QPoly{3, 2} * t.g(n - 2) + QPoly{2} * one_minus_q * one_minus_q * t.g(n - 3);
}

// --- Corollaries ----------------------------------------------------------------

Integer avoider_count(int n) {
  if (n < 1) throw std::invalid_argument("avoider_count: n must be at least 1");
  std::vector<Integer> f(idx(n) + 1);
  f[1] = 1;
  for (int m = 2; m <= n; ++m) {
    Rational acc = 0;
    for (int j = 1; j <= m - 1; ++j) {
      Rational term(Integer(m - 1 + j) * binomial(m - 2, j - 1) * f[idx(m - j)], Integer(j));
      if (j % 2 == 0) term = -term;
      acc += term;
    }
    acc.canonicalize();
    if (acc.get_den() != 1) throw InexactDivision("f_" + std::to_string(m) + " is not an integer");
    f[idx(m)] = acc.get_num();
  }
  if (f[idx(n)] != pow2(n - 1)) {
    throw IdentityViolation("f_" + std::to_string(n) + " = " + f[idx(n)].get_str() + " differs from 2^" +
                            std::to_string(n - 1));
  }
  return f[idx(n)];
}

Rational average_closed_form(int n) {
  Rational v = make_rational(Integer(n) * n + 3 * n + 8, 12) - harmonic(n);
  v.canonicalize();
  return v;
}

Rational average_occurrences(int n) {
  if (n < 1) throw std::invalid_argument("average_occurrences: n must be at least 1");
  const QPoly gn = g_poly(n);
  const Rational avg = make_rational(gn.derivative().eval(Integer(1)), factorial(n));
  const Rational expected = average_closed_form(n);
  if (avg != expected) {
    throw IdentityViolation("average for n=" + std::to_string(n) + " is " + avg.get_str() + ", closed form gives " +
                            expected.get_str());
  }
  return avg;
}

// --- Closed form of A(x, y) -------------------------------------------------------

namespace {

// Polynomial in y with QPoly coefficients.
using YPoly = std::vector<QPoly>;

YPoly y_mul(const YPoly& a, const YPoly& b) {
  if (a.empty() || b.empty()) return {};
  YPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void y_add(YPoly& acc, const YPoly& b, int sign) {
  if (b.size() > acc.size()) acc.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (sign > 0) acc[i] += b[i];
    else acc[i] -= b[i];
  }
}

QPoly y_coeff(const YPoly& p, int power) {
  if (power < 0 || idx(power) >= p.size()) return {};
  return p[idx(power)];
}

// Series in x with YPoly coefficients, numerator / denominator, x^0..x^order.
std::vector<YPoly> series_quotient(const std::vector<YPoly>& num, const std::vector<YPoly>& den, int order) {
  const YPoly& d0 = den.front();
  if (d0.size() != 1 || d0[0] != QPoly{1}) throw std::domain_error("series_quotient: denominator must start with 1");
  std::vector<YPoly> f(idx(order) + 1);
  for (int m = 0; m <= order; ++m) {
    YPoly acc = idx(m) < num.size() ? num[idx(m)] : YPoly{};
    for (int i = 1; i <= m && idx(i) < den.size(); ++i) y_add(acc, y_mul(den[idx(i)], f[idx(m - i)]), -1);
    f[idx(m)] = std::move(acc);
  }
  return f;
}

}  // namespace

ClosedFormReport verify_A_closed_form(int k_max, int order) {
  if (k_max < 2) throw std::invalid_argument("verify_A_closed_form: k_max must be at least 2");
  if (order < k_max - 2) throw std::invalid_argument("verify_A_closed_form: order must be at least k_max - 2");
  ClosedFormReport report;
  const QPoly q{0, 1};
  // 1 - q x + x y
  const std::vector<YPoly> num{{QPoly{1}}, {-q, QPoly{1}}};
  // (1-x)(1-qx) - xy = 1 - (1+q) x - y x + q x^2
  const std::vector<YPoly> den{{QPoly{1}}, {QPoly{-1, -1}, QPoly{-1}}, {q}};
  const std::vector<YPoly> series = series_quotient(num, den, order);
  const ABTable ab(k_max);

  auto fail = [&report](const std::string& what) {
    if (report.ok) report.first_mismatch = what;
    report.ok = false;
  };
  for (int k = 2; k <= k_max; ++k) {
    const YPoly& row = series[idx(k - 2)];
    for (int j = 0; j <= std::max<int>(k, static_cast<int>(row.size())); ++j) {
      ++report.coefficients_checked;
      if (y_coeff(row, j - 1) != ab.a(k, j)) {
        fail("a_{" + std::to_string(k) + "," + std::to_string(j) + "}: series gives " +
             to_string(y_coeff(row, j - 1)) + ", recurrence gives " + to_string(ab.a(k, j)));
      }
    }
  }
  // A(z,y)/(1-z): the z^{n-2} coefficient is the prefix sum of A's x-coefficients.
  YPoly prefix;
  for (int n = 2; n <= k_max; ++n) {
    y_add(prefix, series[idx(n - 2)], +1);
    for (int j = 2; j <= n - 1; ++j) {
      const QPoly expected = b_poly(n, j);
      ++report.coefficients_checked;
      if (y_coeff(prefix, j - 1) != expected) {
        fail("b_{" + std::to_string(n) + "," + std::to_string(j) + "} from A(z,y)/(1-z) is " +
             to_string(y_coeff(prefix, j - 1)) + ", definition gives " + to_string(expected));
      }
      if (ab.b(n, j) != expected) {
        fail("b_{" + std::to_string(n) + "," + std::to_string(j) + "} as a sum of a_{k,j} is " +
             to_string(ab.b(n, j)) + ", definition gives " + to_string(expected));
      }
    }
  }
  return report;
}

}  // namespace flatperm::recurrence
