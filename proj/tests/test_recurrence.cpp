#include <gtest/gtest.h>

#include "flatperm/errors.hpp"
#include "flatperm/permcore.hpp"
#include "flatperm/recurrence.hpp"

namespace flatperm::recurrence {
namespace {

TEST(BPoly, Examples) {
  EXPECT_EQ(b_poly(3, 2), QPoly{2});
  for (int n = 3; n <= 12; ++n) EXPECT_EQ(b_poly(n, n - 1), QPoly{2}) << n;
  for (int n = 2; n <= 12; ++n) EXPECT_EQ(b_poly(n, 1), QPoly::constant(n)) << n;
}

TEST(BPoly, ThreeRoutesAgree) {
  const ABTable ab(20);
  for (int n = 3; n <= 20; ++n) {
    for (int j = 2; j <= n - 1; ++j) {
      const QPoly b = b_poly(n, j);
      EXPECT_EQ(b, b_poly_integral_form(n, j));
      EXPECT_EQ(b, b_poly_by_definition(n, j));
      EXPECT_EQ(b, ab.b(n, j));
    }
    EXPECT_EQ(b_poly_by_definition(n, 1), QPoly::constant(n));
  }
}

TEST(BPoly, RejectsOutOfRange) {
  EXPECT_THROW(b_poly(3, 3), std::invalid_argument);
  EXPECT_THROW(b_poly(3, 0), std::invalid_argument);
  EXPECT_THROW(b_poly(1, 1), std::invalid_argument);
}

TEST(ABTable, InitialValues) {
  const ABTable ab(12);
  for (int k = 2; k <= 12; ++k) {
    EXPECT_EQ(ab.a(k, 1), QPoly{1});
    EXPECT_EQ(ab.a(k, 0), QPoly{});
    EXPECT_EQ(ab.a(k, k), QPoly{});
  }
  EXPECT_EQ(ab.a(3, 2), QPoly{2});
  EXPECT_EQ(ab.b(7, 6), QPoly{2});
  EXPECT_EQ(ab.b(7, 6), b_poly(7, 6));
  EXPECT_THROW(ab.a(13, 1), std::out_of_range);
}

TEST(GTable, BaseValues) {
  const GTable t(4);
  EXPECT_EQ(t.g(1), QPoly{1});
  EXPECT_EQ(t.g(2), QPoly{2});
  EXPECT_EQ(t.g(3), (QPoly{4, 2}));
  EXPECT_EQ(t.g1k(3, 2), QPoly{4});
  EXPECT_EQ(t.g1k(3, 3), (QPoly{0, 2}));
  EXPECT_EQ(t.g1k(4, 3), (QPoly{0, 6}));
  EXPECT_EQ(t.g(4), (QPoly{8, 10, 6}));
  EXPECT_EQ(t.g1k(4, 5), QPoly{});
  EXPECT_THROW(t.g(5), std::out_of_range);
  EXPECT_THROW(t.g1k(4, 1), std::out_of_range);
}

TEST(GTable, AgreesWithEnumeration) {
  const GTable t(8);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(t.g(n), distribution(n).as_poly()) << n;
    for (const auto& [k, table] : distributions_by_second_letter(n)) {
      EXPECT_EQ(t.g1k(n, k), table.as_poly()) << n << "," << k;
    }
  }
}

TEST(GTable, Invariants) {
  const GTable t(25);
  for (int n = 2; n <= 25; ++n) {
    EXPECT_EQ(t.g(n).eval(Integer(1)), factorial(n));
    EXPECT_EQ(t.g(n).degree(), max_occurrences(n));
    EXPECT_EQ(t.g1k(n, 2), QPoly{2} * t.g(n - 1));
    QPoly sum;
    for (int k = 2; k <= n; ++k) sum += t.g1k(n, k);
    EXPECT_EQ(sum, t.g(n));
  }
}

TEST(GTable, CapTruncatesEveryPolynomial) {
  const GTable full(14);
  const GTable capped(14, 3);
  for (int n = 1; n <= 14; ++n) {
    EXPECT_EQ(capped.g(n), full.g(n).truncated(3));
    for (int k = 2; k <= n; ++k) EXPECT_EQ(capped.g1k(n, k), full.g1k(n, k).truncated(3));
  }
}

TEST(CoeffG, Examples) {
  EXPECT_EQ(coeff_g(3, 1, 3), 2);
  EXPECT_EQ(coeff_g(3, 1, 2), 0);
  EXPECT_EQ(coeff_g(6, 0), 32);
  for (int r = 0; r <= 4; ++r) {
    for (int n = r + 3; n <= 12; ++n) EXPECT_EQ(coeff_g(n, r, r + 3), 0) << n << "," << r;
  }
  const GTable capped(10, 2);
  EXPECT_THROW(coeff_g(capped, 10, 3), std::out_of_range);
  EXPECT_EQ(coeff_g(5, 2, 9), 0);
  EXPECT_THROW(coeff_g(5, 2, 1), std::out_of_range);
}

TEST(Identities, InitialFormsAndRecurrences) {
  const GTable t(12);
  EXPECT_EQ(ini_g13_rhs(t, 4), (QPoly{0, 6}));
  for (int n = 3; n <= 12; ++n) {
    EXPECT_EQ(t.g1k(n, 3), ini_g13_rhs(t, n));
    if (n >= 4) EXPECT_EQ(t.g1k(n, 4), ini_g14_rhs(t, n));
    for (int k = 5; k <= n; ++k) EXPECT_EQ(t.g1k(n, k), rec_g1k_rhs(t, n, k));
    for (int i = 3; i <= n; ++i) EXPECT_EQ(t.g1k(n, i), rec_g1i_rhs(t, n, i));
  }
}

TEST(Avoiders, Examples) {
  EXPECT_EQ(avoider_count(1), 1);
  EXPECT_EQ(avoider_count(5), 16);
  EXPECT_EQ(avoider_count(30), pow2(29));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(avoider_count(n), distribution(n).at(0));
}

TEST(Average, Examples) {
  EXPECT_EQ(average_occurrences(1), 0);
  EXPECT_EQ(average_occurrences(2), 0);
  EXPECT_EQ(average_occurrences(3), make_rational(1, 3));
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(average_occurrences(n), average_closed_form(n));
}

TEST(ClosedFormA, MatchesTables) {
  const ClosedFormReport report = verify_A_closed_form(15, 15);
  EXPECT_TRUE(report.ok) << report.first_mismatch;
  EXPECT_GT(report.coefficients_checked, 0);
}

}  // namespace
}  // namespace flatperm::recurrence
