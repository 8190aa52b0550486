#include <gtest/gtest.h>

#include <random>

#include "flatperm/errors.hpp"
#include "flatperm/integer.hpp"
#include "flatperm/poly.hpp"
#include "flatperm/series.hpp"
#include "flatperm/xvpoly.hpp"

namespace flatperm {
namespace {

class RandomAlgebra : public ::testing::Test {
 protected:
  Integer small() { return Integer(coefficient_(rng_)); }

  Poly poly(int max_degree) {
    std::vector<Integer> c;
    for (int i = 0; i <= degree_(rng_) % (max_degree + 1); ++i) c.push_back(small());
    return Poly(std::move(c));
  }

  XSeries series(int order) {
    std::vector<Integer> c;
    for (int i = 0; i <= order; ++i) c.push_back(small());
    return XSeries(std::move(c), order);
  }

  XSeries unit_series(int order) {
    XSeries s = series(order);
    s.set_coeff(0, degree_(rng_) % 2 == 0 ? 1 : -1);
    return s;
  }

  VPoly vpoly(int order, int vdeg) {
    std::vector<XSeries> c;
    for (int k = 0; k <= vdeg; ++k) c.push_back(series(order));
    return VPoly(std::move(c));
  }

  std::mt19937 rng_{20240611};
  std::uniform_int_distribution<long> coefficient_{-50, 50};
  std::uniform_int_distribution<int> degree_{0, 1000};
};

TEST(Integer, Helpers) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(-1, -1), 1);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(factorial(20).get_str(), "2432902008176640000");
  EXPECT_EQ(pow2(70).get_str(), "1180591620717411303424");
  EXPECT_EQ(harmonic(4), make_rational(25, 12));
  EXPECT_EQ(to_string(make_rational(4, -6)), "-2/3");
  EXPECT_EQ(to_string(make_rational(6, 3)), "2");
}

TEST(Poly, NormalizationAndAccess) {
  const Poly p{4, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p, (Poly{4, 2}));
  EXPECT_EQ(Poly{}.degree(), -1);
  EXPECT_TRUE((Poly{0, 0}).is_zero());
  EXPECT_EQ(p.coeff(7), 0);
  EXPECT_EQ(to_string(Poly{4, 2}), "4 + 2*q");
  EXPECT_EQ(to_string(Poly{}), "0");
}

TEST(Poly, Evaluation) {
  const Poly g3{4, 2};
  EXPECT_EQ(g3.eval(Integer(1)), 6);
  EXPECT_EQ(g3.eval(Integer(0)), 4);
  EXPECT_EQ((Poly{3, -2}).eval(Rational(1, 2)), 2);
  EXPECT_EQ(g3.derivative(), Poly{2});
  EXPECT_EQ((Poly{1, 1, 1}).truncated(1), (Poly{1, 1}));
}

TEST(Poly, CheckedDivision) {
  EXPECT_EQ((Poly{4, 2}).divided_by(2), (Poly{2, 1}));
  EXPECT_THROW((Poly{4, 3}).divided_by(2), InexactDivision);
  EXPECT_EQ(divide_exact(Poly{-1, 0, 1}, Poly{-1, 1}), (Poly{1, 1}));
  EXPECT_THROW(divide_exact(Poly{1, 0, 1}, Poly{-1, 1}), InexactDivision);
  EXPECT_THROW(divide_exact(Poly{1, 1}, Poly{}), std::domain_error);
}

TEST_F(RandomAlgebra, PolyRingAxioms) {
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = poly(6), b = poly(6), c = poly(6);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Poly{});
    EXPECT_EQ(a * Poly{1}, a);
    EXPECT_EQ(pow(a, 3), a * a * a);
    if (!b.is_zero()) EXPECT_EQ(divide_exact(a * b, b), a);
    EXPECT_EQ((a * b).eval(Integer(3)), a.eval(Integer(3)) * b.eval(Integer(3)));
  }
}

TEST(XSeries, DivisionByUnitExamples) {
  const XSeries t = XSeries::from_poly(Poly{1, -2}, 5);
  const XSeries q = series_div_exact(XSeries::from_poly(Poly{0, 0, 0, 4}, 5), t);
  EXPECT_EQ(q, XSeries(std::vector<Integer>{0, 0, 0, 4, 8, 16}, 5));
  EXPECT_EQ(series_div_exact(t, t), XSeries::one(5));
  const XSeries s = XSeries::from_poly(Poly{1, -1}, 5);
  EXPECT_EQ(series_div_exact(s * t, t), s);
}

TEST(XSeries, Errors) {
  const XSeries two = XSeries::constant(2, 4);
  EXPECT_THROW(two.inverse(), std::domain_error);
  EXPECT_THROW(series_div_exact(XSeries::one(4), two), std::domain_error);
  EXPECT_THROW(XSeries::constant(3, 4).divided_by(2), InexactDivision);
  EXPECT_THROW(XSeries::one(4).shifted_down(1), InexactDivision);
  EXPECT_THROW(XSeries::one(4).coeff(5), std::out_of_range);
  EXPECT_THROW(XSeries(-1), std::invalid_argument);
  EXPECT_EQ(XSeries::from_poly(Poly{1, 0, 0, 0, 0, 0, 1}, 4), XSeries::one(4));
}

TEST(XSeries, ShiftsAndValuation) {
  const XSeries x3 = XSeries::x_power(3, 8);
  EXPECT_EQ(x3.valuation(), 3);
  EXPECT_EQ(x3.shifted_down(3), XSeries::one(5));
  EXPECT_EQ(XSeries::one(8).shifted_up(3), x3);
  EXPECT_EQ(XSeries(4).valuation(), 5);
  EXPECT_TRUE(XSeries(4).is_zero());
}

TEST_F(RandomAlgebra, SeriesRingAxiomsAndMinOrder) {
  for (int trial = 0; trial < 100; ++trial) {
    const XSeries a = series(9), b = series(7), c = series(9);
    EXPECT_EQ((a * b).order(), 7);
    EXPECT_EQ((a + b).order(), 7);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a * c).agrees_with((a.truncated(4) * c.truncated(4))));
    EXPECT_EQ((a * c).truncated(4), a.truncated(4) * c.truncated(4));
  }
}

TEST_F(RandomAlgebra, SeriesDivisionRoundTrip) {
  for (int trial = 0; trial < 100; ++trial) {
    const XSeries a = series(10), u = unit_series(10);
    EXPECT_EQ(series_div_exact(a, u) * u, a);
    EXPECT_EQ(series_div_exact(a * u, u), a);
    EXPECT_EQ(u * u.inverse(), XSeries::one(10));
  }
}

TEST(VPoly, Basics) {
  const int order = 6;
  const XSeries one = XSeries::one(order);
  const VPoly v = VPoly::monomial(one, 1);
  EXPECT_EQ(v.degree(), 1);
  EXPECT_EQ((v * v).degree(), 2);
  EXPECT_EQ(VPoly(order).degree(), -1);
  EXPECT_EQ((v - v), VPoly(order));
  EXPECT_EQ(v.at_one(), one);
  EXPECT_EQ(v.times_v_power(2), VPoly::monomial(one, 3));
  EXPECT_THROW(VPoly(std::vector<XSeries>{}), std::invalid_argument);
}

TEST(VPoly, SubstituteSeries) {
  const int order = 7;
  const XSeries s = XSeries::from_poly(Poly{1, -1}, order);
  const XSeries geometric = s.inverse();
  EXPECT_EQ(geometric, XSeries(std::vector<Integer>(8, Integer(1)), order));
  EXPECT_EQ(substitute_v_with_series(VPoly::monomial(XSeries::one(order), 1), geometric), geometric);
  const XSeries g0 = series_div_exact(XSeries::from_poly(Poly{0, 0, 0, 4}, order), XSeries::from_poly(Poly{1, -2}, order));
  EXPECT_EQ(substitute_v_with_series(VPoly::constant(g0), geometric), g0);
  EXPECT_EQ(substitute_v_with_series(VPoly::monomial(XSeries::constant(2, order), 1), geometric), geometric * Integer(2));
}

TEST_F(RandomAlgebra, KernelDivisionRoundTrip) {
  const int order = 12;
  const XSeries s = XSeries::from_poly(Poly{1, -1}, order);
  const VPoly kernel(std::vector<XSeries>{XSeries::one(order), -s});
  for (int trial = 0; trial < 50; ++trial) {
    const VPoly q = vpoly(order, trial % 4);
    EXPECT_EQ(vpoly_div_kernel(kernel * q, s, 3), q);
  }
  EXPECT_EQ(vpoly_div_kernel(kernel, s, 0), VPoly::constant(XSeries::one(order)));
}

TEST(VPoly, KernelDivisionFailures) {
  const int order = 8;
  const XSeries s = XSeries::from_poly(Poly{1, -1}, order);
  const VPoly kernel(std::vector<XSeries>{XSeries::one(order), -s});
  const VPoly not_divisible(std::vector<XSeries>{XSeries::one(order), XSeries::one(order)});
  EXPECT_THROW(vpoly_div_kernel(not_divisible, s, 2), IdentityViolation);
  EXPECT_THROW(vpoly_div_kernel(VPoly::constant(XSeries::one(order)), s, 2), IdentityViolation);
  const VPoly cubic = kernel * VPoly::monomial(XSeries::one(order), 2);
  EXPECT_THROW(vpoly_div_kernel(cubic, s, 1), IdentityViolation);
  EXPECT_EQ(vpoly_div_kernel(VPoly(order), s, 2), VPoly(order));
}

TEST(XVPoly, MatrixRoundTripAndProducts) {
  const XVPoly p = XVPoly::from_matrix({{Integer(2), Integer(3)}, {Integer(0), Integer(-8)}, {Integer(0), Integer(4)}});
  EXPECT_EQ(p, XVPoly(std::vector<Poly>{Poly{2}, Poly{3, -8, 4}}));
  EXPECT_EQ(XVPoly::from_matrix(p.to_matrix()), p);
  EXPECT_EQ(p.degree_v(), 1);
  EXPECT_EQ(p.degree_x(), 2);
  EXPECT_EQ(p.coeff(1, 1), -8);
  EXPECT_EQ(p.at_v(Poly{1}), (Poly{5, -8, 4}));
  const XVPoly v = XVPoly::monomial(Poly{1}, 1);
  EXPECT_EQ((p * v).degree_v(), 2);
  EXPECT_EQ(pow(v, 3), XVPoly::monomial(Poly{1}, 3));
  EXPECT_THROW(p.to_vpoly(1), std::invalid_argument);
  EXPECT_EQ(p.to_vpoly(4).coeff(1), XSeries::from_poly(Poly{3, -8, 4}, 4));
}

TEST(XVPoly, ExtractFromSeries) {
  const int order = 12;
  const VPoly g = VPoly::constant(XSeries::x_power(3, order) * Integer(2));
  EXPECT_EQ(xvpoly_extract_from_series(g, XVPoly::constant(Poly{1}), 3, 2, 0), XVPoly::constant(Poly{1}));
  EXPECT_THROW(xvpoly_extract_from_series(g, XVPoly::constant(Poly{1}), 3, 4, 0), InexactDivision);
  const VPoly tail = VPoly::constant(XSeries::from_poly(Poly{0, 0, 0, 2, 0, 2}, order));
  EXPECT_THROW(xvpoly_extract_from_series(tail, XVPoly::constant(Poly{1}), 3, 2, 0), IdentityViolation);
  EXPECT_THROW(xvpoly_extract_from_series(g, XVPoly::constant(Poly{1}), 3, 2, 4), std::invalid_argument);
}

}  // namespace
}  // namespace flatperm
