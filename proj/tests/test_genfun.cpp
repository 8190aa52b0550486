#include <gtest/gtest.h>

#include "flatperm/errors.hpp"
#include "flatperm/genfun.hpp"
#include "flatperm/recurrence.hpp"
#include "flatperm/reference.hpp"

namespace flatperm::genfun {
namespace {

XSeries s_series(int order) { return XSeries::from_poly(s_poly(), order); }
XSeries t_series(int order) { return XSeries::from_poly(t_poly_x(), order); }

const XVPoly& p1() {
  static const XVPoly p(std::vector<Poly>{Poly{2}, Poly{3, -8, 4}});
  return p;
}

TEST(BoundaryData, SmallR) {
  EXPECT_EQ(boundary_data(0).top_row, std::vector<Integer>{2});
  const BoundaryData d1 = boundary_data(1);
  EXPECT_EQ(d1.top(2), 0);
  EXPECT_EQ(d1.top(3), 2);
}

TEST(BoundaryData, EvenAndPositiveAtR4) {
  const BoundaryData d = boundary_data(4);
  for (int i = 2; i <= 6; ++i) {
    EXPECT_EQ(d.top(i) % 2, 0);
    EXPECT_GE(d.top(i), 1);
  }
}

TEST(TPoly, Coefficients) {
  EXPECT_EQ(t_poly(1), XVPoly(std::vector<Poly>{Poly{0, 2}, Poly{1, -2}}));
  for (int h = 1; h <= 8; ++h) {
    const XVPoly t = t_poly(h);
    EXPECT_EQ(t.v_coeff(0), (Poly{0, 2}));
    EXPECT_EQ(t.v_coeff(h), t_poly_x() * pow(s_poly(), static_cast<unsigned>(h - 1)));
    EXPECT_EQ(t.degree_v(), h);
  }
  EXPECT_THROW(t_poly(0), std::invalid_argument);
}

TEST(HPoly, SmallR) {
  const int order = 12;
  EXPECT_EQ(h_r(0, order), XVPoly(std::vector<Poly>{Poly{4}, Poly{-4}}).to_vpoly(order));
  // 2x(1-v)(2+v) = 4x - 2xv - 2xv^2
  EXPECT_EQ(h_r(1, order), XVPoly(std::vector<Poly>{Poly{0, 4}, Poly{0, -2}, Poly{0, -2}}).to_vpoly(order));
}

TEST(HtildeOverKernel, SmallR) {
  const int order = 14;
  const XSeries t = t_series(order);
  const XSeries s = s_series(order);
  EXPECT_EQ(htilde_over_kernel(0, order), VPoly::constant(series_div_exact(XSeries::constant(4, order), t)));

  // 2x(1-v+xv)(2+v-2xv)/(st)
  const XVPoly kernel(std::vector<Poly>{Poly{1}, Poly{-1, 1}});
  const XVPoly other(std::vector<Poly>{Poly{2}, Poly{1, -2}});
  const XVPoly numerator = XVPoly::constant(Poly{0, 2}) * kernel * other;
  const XSeries inv_st = (s * t).inverse();
  const VPoly expected = numerator.to_vpoly(order) * inv_st;
  EXPECT_EQ(htilde(boundary_data(1), order), expected);
  EXPECT_EQ(htilde_over_kernel(1, order) * kernel.to_vpoly(order), expected);
}

TEST(HtildeOverKernel, RoutesAgree) {
  for (int r = 0; r <= 6; ++r) EXPECT_NO_THROW(htilde_over_kernel(r, default_order(r))) << r;
}

TEST(GSeries, G0AndG1) {
  const int order = 14;
  const XSeries t = t_series(order);
  const XSeries s = s_series(order);
  const VPoly g0 = g_series(0, order);
  EXPECT_EQ(g0.degree(), 0);
  EXPECT_EQ(g0.coeff(0).coeff(3), 4);
  EXPECT_EQ(g0.coeff(0).coeff(4), 8);
  EXPECT_EQ(g0.coeff(0).coeff(5), 16);

  const XVPoly num = XVPoly::constant(Poly::monomial(2, 4)) * p1();
  const VPoly expected = num.to_vpoly(order) * (s * t * t).inverse();
  EXPECT_EQ(g_series(1, order), expected);
}

TEST(GSeries, CoefficientsMatchRecurrence) {
  const int order = default_order(4);
  Pipeline pipeline(order);
  const recurrence::GTable table(order);
  for (int r = 0; r <= 4; ++r) {
    const VPoly& g = pipeline.g_series(r);
    for (int n = r + 3; n <= order; ++n) {
      for (int i = 2; i <= r + 2; ++i) {
        EXPECT_EQ(g.coeff(i - 2).coeff(n), recurrence::coeff_g(table, n, r, i)) << n << "," << r << "," << i;
      }
    }
  }
}

TEST(PPoly, Examples) {
  EXPECT_EQ(p_poly(1), p1());
  Pipeline pipeline(default_order(6));
  for (int r = 1; r <= 6; ++r) EXPECT_EQ(pipeline.p_poly(r).degree_v(), r);
}

TEST(CTable, MatchesPublishedRows) {
  const CTable c1 = c_table(1);
  EXPECT_EQ(c1.c, (std::vector<Poly>{Poly{1}, Poly{3, -2}}));
  const CTable c2 = c_table(2);
  EXPECT_EQ(c2.c.at(0), (Poly{3, -6, 2}));
  EXPECT_EQ(c2.c.at(2), (Poly{10, -15, 6}));
  const CTable c5 = c_table(5);
  EXPECT_EQ(c5.c.at(5), (Poly{462, -1980, 3465, -3080, 1386, -252}));
  for (int r = 1; r <= reference::kPublishedCTableMaxR; ++r) EXPECT_EQ(c_table(r).c, reference::published_c_table(r));
}

TEST(CTable, HalfEvaluationAndDegrees) {
  Pipeline pipeline(default_order(6));
  for (int r = 1; r <= 6; ++r) {
    const CTable& c = pipeline.c_table(r);
    EXPECT_EQ(c.c.at(0).eval(Rational(1, 2)), make_rational(1, 1) / Rational(pow2(r - 1)));
  }
  EXPECT_EQ(pipeline.c_table(4).c.at(0).degree(), 11);
  EXPECT_EQ(pipeline.c_table(5).c.at(3).degree(), 9);
}

TEST(RationalGF, Forms) {
  const RationalGF g0 = rational_gf(0);
  EXPECT_EQ(g0.numerator, XVPoly::constant(Poly::monomial(4, 3)));
  EXPECT_EQ(g0.s_power, 0);
  EXPECT_EQ(g0.t_power, 1);
  const RationalGF g1 = rational_gf(1);
  EXPECT_EQ(g1.numerator, XVPoly::constant(Poly::monomial(2, 4)) * p1());
  EXPECT_EQ(g1.s_power, 1);
  EXPECT_EQ(g1.t_power, 2);
}

TEST(RationalGF, ReexpansionAtR3MatchesRecurrence) {
  const int order = 12;
  const VPoly g = rational_gf(3).expand(order);
  for (int n = 6; n <= order; ++n) {
    for (int i = 2; i <= 5; ++i) EXPECT_EQ(g.coeff(i - 2).coeff(n), recurrence::coeff_g(n, 3, i));
  }
}

TEST(Pipeline, FunctionalEquationAndKernelSubstitution) {
  Pipeline pipeline(default_order(4));
  for (int r = 0; r <= 4; ++r) {
    const auto [lhs, rhs] = pipeline.rec_gr_sides(r);
    EXPECT_EQ(lhs, rhs) << r;
    EXPECT_EQ(pipeline.g_series(r).at_one(), pipeline.g_at_one_via_kernel(r)) << r;
  }
}

TEST(Pipeline, Limits) {
  Pipeline pipeline(10);
  EXPECT_THROW(pipeline.g_series(9), LimitExceeded);
  EXPECT_THROW(pipeline.p_poly(0), std::invalid_argument);
  EXPECT_THROW(pipeline.p_poly(2), LimitExceeded);
  EXPECT_THROW(Pipeline(2), std::invalid_argument);
}

TEST(NumeratorStructure, AllChecksPass) {
  for (const Check& c : verify_theorem36(6)) EXPECT_TRUE(c.passed) << c.claim << " " << c.detail;
}

}  // namespace
}  // namespace flatperm::genfun
