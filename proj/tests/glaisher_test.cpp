#include "glaisher/glaisher.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

namespace glaisher {
namespace {

IntSeries ser(std::initializer_list<long> values) {
  std::vector<Integer> c;
  for (long v : values) c.emplace_back(v);
  return IntSeries(std::move(c));
}

IntSeries table_series(Family f, int m, std::int64_t n_max) {
  return IntSeries(count_table({f, m, std::nullopt}, n_max).counts);
}

TEST(GeneratingFunctions, Regular) {
  EXPECT_EQ(gf_regular(3, RegularForm::B_product, 5), ser({1, 1, 2, 2, 4, 5}));
  EXPECT_EQ(gf_regular(2, RegularForm::B_product, 5), ser({1, 1, 1, 2, 2, 3}));
  EXPECT_EQ(gf_regular(2, RegularForm::A_product, 5), ser({1, 1, 1, 2, 2, 3}));
  for (int m = 2; m <= 6; ++m) {
    EXPECT_EQ(gf_regular(m, RegularForm::A_product, 0), ser({1}));
    EXPECT_EQ(gf_regular(m, RegularForm::B_product, 0), ser({1}));
  }
}

TEST(GeneratingFunctions, BjLhs) {
  EXPECT_EQ(gf_Bj_lhs(2, 1, 6), ser({1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(gf_Bj_lhs(3, kInfinite, 10), table_series(Family::B, 3, 10));
  for (int m = 2; m <= 5; ++m) EXPECT_EQ(gf_Bj_lhs(m, 3, 20)[0], 1);
}

TEST(GeneratingFunctions, CAndD) {
  EXPECT_EQ(gf_C(3, 6), ser({1, 0, 0, 1, 1, 2, 3}));
  EXPECT_EQ(gf_D(3, 5), ser({1, 1, 2, 3, 4, 6}));
  for (int m = 2; m <= 6; ++m) {
    EXPECT_EQ(gf_C(m, 4)[1], 0);
    EXPECT_EQ(gf_D(m, 4)[0], 1);
  }
}

TEST(GeneratingFunctions, AgreeWithCounters) {
  constexpr std::int64_t N = 120;
  for (int m = 2; m <= 5; ++m) {
    EXPECT_EQ(gf_C(m, N), table_series(Family::C, m, N)) << m;
    EXPECT_EQ(gf_D(m, N), table_series(Family::D, m, N)) << m;
    EXPECT_EQ(gf_regular(m, RegularForm::A_product, N), table_series(Family::A, m, N)) << m;
    EXPECT_EQ(gf_regular(m, RegularForm::B_product, N), table_series(Family::B, m, N)) << m;
    EXPECT_EQ(gf_Bj_lhs(m, kInfinite, N), table_series(Family::B, m, N)) << m;
  }
}

TEST(Epsilon, MThreePrefixByEveryRoute) {
  const auto expected = ser({2, -1, -2, 0, -1, 0, 0, 1, 0, 0, 0, 2, 0});
  for (auto r : applicable_routes(3)) EXPECT_EQ(epsilon(3, 12, r), expected) << to_string(r);
}

TEST(Epsilon, MTwoTriangularIsOne) {
  EXPECT_EQ(epsilon(2, 20, EpsilonRoute::triangular), IntSeries::one(20, Integer(0)));
}

TEST(Epsilon, IdentityRouteAtMThree) {
  EXPECT_EQ(epsilon(3, 3, EpsilonRoute::identity)[3], 0);
  EXPECT_EQ(3 * count_C(3, 3) - count_D(3, 3), 0);
}

TEST(Epsilon, Closed3RejectsOtherM) {
  EXPECT_THROW(epsilon(4, 10, EpsilonRoute::closed3), domain_error);
  EXPECT_THROW(epsilon(1, 10, EpsilonRoute::triangular), domain_error);
}

TEST(Epsilon, SeriesRoutesAgree) {
  constexpr std::size_t N = 200;
  for (int m = 2; m <= 6; ++m) {
    const auto tri = epsilon(m, N, EpsilonRoute::triangular);
    EXPECT_EQ(epsilon(m, N, EpsilonRoute::definition), tri) << m;
    EXPECT_EQ(epsilon(m, N, EpsilonRoute::qbinomial), tri) << m;
  }
  EXPECT_EQ(epsilon(3, N, EpsilonRoute::identity), epsilon(3, N, EpsilonRoute::triangular));
  EXPECT_EQ(epsilon(3, N, EpsilonRoute::closed3), epsilon(3, N, EpsilonRoute::triangular));
}

// Values from a floating-point complex evaluation of the root-of-unity products,
// and from brute-force enumeration of m*C_m(n) - D_m(n).
TEST(Epsilon, FrozenValuesOffMThree) {
  EXPECT_EQ(epsilon(4, 20, EpsilonRoute::definition),
            ser({3, -2, -3, -2, 2, 2, 0, 2, 2, 0, 0, -2, -2, 0, 0, 0, -2, -2, 0, 0, 0}));
  EXPECT_EQ(epsilon(5, 20, EpsilonRoute::definition),
            ser({4, -3, -4, -2, -1, 7, 2, 2, -1, -2, 1, -3, -4, -3, -1, 0, 3, 4, 3, 1, 0}));
  EXPECT_EQ(epsilon(4, 20, EpsilonRoute::identity),
            ser({3, -1, -2, -3, -1, -2, -2, -1, 1, 0, 3, 1, 2, 3, 5, 4, 5, 3, 5, 3, 4}));
  EXPECT_EQ(epsilon(2, 6, EpsilonRoute::identity), ser({1, -1, 0, 0, 0, 0, 0}));
}

TEST(Epsilon, IdentityRouteDivergesFromRootOfUnitySeriesOffMThree) {
  for (int m : {2, 4, 5, 6}) {
    const auto id = epsilon(m, 40, EpsilonRoute::identity);
    const auto tri = epsilon(m, 40, EpsilonRoute::triangular);
    EXPECT_EQ(id[0], tri[0]) << m;
    EXPECT_NE(id[1], tri[1]) << m;
  }
}

TEST(Epsilon, MThreeSupport) {
  constexpr std::int64_t N = 2000;
  const auto eps = epsilon(3, N, EpsilonRoute::triangular);
  EXPECT_EQ(eps, epsilon(3, N, EpsilonRoute::closed3));
  std::vector<bool> near_triangular(N + 1, false);
  for (std::int64_t k = 0; triangular(k) + 1 <= N; ++k) near_triangular[static_cast<std::size_t>(triangular(k) + 1)] = true;
  for (std::int64_t n = 1; n <= N; ++n) {
    ASSERT_EQ(!is_zero(eps[static_cast<std::size_t>(n)]), near_triangular[static_cast<std::size_t>(n)]) << n;
  }
  for (std::int64_t k = 2; triangular(k) + 1 <= N; ++k) {
    const Integer expected = (k % 2 == 0 ? 1 : -1) * chi(3, k - 1);
    ASSERT_EQ(eps[static_cast<std::size_t>(triangular(k) + 1)], expected) << k;
  }
}

TEST(Epsilon, MTwoIsOneToHighPrecision) {
  const auto one = IntSeries::one(2000, Integer(0));
  EXPECT_EQ(epsilon(2, 2000, EpsilonRoute::triangular), one);
  EXPECT_EQ(epsilon(2, 2000, EpsilonRoute::qbinomial), one);
}

TEST(PPolynomial, Values) {
  EXPECT_EQ(p_polynomial(2), ser({1}));
  EXPECT_EQ(p_polynomial(3), ser({2}));
  // from an independent symbolic evaluation of the defining double sum
  EXPECT_EQ(p_polynomial(4), ser({3, 0, 1}));
  EXPECT_EQ(p_polynomial(5), ser({4, 0, 2, 2}));
  EXPECT_EQ(p_polynomial(6), ser({5, 0, 3, 4, 3, 0, 1}));
  EXPECT_EQ(p_polynomial(7), ser({6, 0, 4, 6, 6, 4, 2, 2, 2}));
  for (int m = 2; m <= 9; ++m) EXPECT_LT(static_cast<std::int64_t>(p_polynomial(m).precision()), triangular(m - 1));
}

TEST(PPolynomial, QBinomialRouteMatchesTriangularAtM4) {
  EXPECT_EQ(epsilon(4, 60, EpsilonRoute::qbinomial), epsilon(4, 60, EpsilonRoute::triangular));
}

TEST(Verify, DocumentedExamples) {
  VerifyOptions opts;
  opts.n_max = 300;
  EXPECT_TRUE(verify(Theorem::T1_2, 3, opts).pass);
  EXPECT_TRUE(verify(Theorem::T1_4, 3, opts).pass);

  VerifyOptions t19;
  t19.n_sum = 1;
  t19.precision = 50;
  EXPECT_TRUE(verify(Theorem::T1_9, 2, t19).pass);
}

TEST(Verify, ReportShape) {
  const auto r = verify(Theorem::T1_3, 4, VerifyOptions{150, 200, 1, {}});
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(r.first_failure.has_value());
  EXPECT_EQ(r.theorem, "T1.3");
  EXPECT_EQ(r.range_lo, 0);
  EXPECT_EQ(r.range_hi, 150);
}

TEST(Verify, RequiresMThreeWhereStated) {
  EXPECT_THROW(verify(Theorem::T1_5, 4), domain_error);
  EXPECT_THROW(verify(Theorem::T1_6, 2), domain_error);
  EXPECT_THROW(verify(Theorem::T1_4, 4, VerifyOptions{20, 20, 1, {EpsilonRoute::closed3}}), domain_error);
}

TEST(Verify, EasyIdentities) {
  for (int m = 2; m <= 4; ++m) {
    EXPECT_TRUE(verify(Theorem::E1_4, m, VerifyOptions{100, 100, 1, {}}).pass) << m;
    EXPECT_TRUE(verify(Theorem::C1_10, m, VerifyOptions{100, 100, 1, {}}).pass) << m;
  }
  EXPECT_TRUE(verify(Theorem::T1_5, 3, VerifyOptions{100, 100, 1, {}}).pass);
  EXPECT_TRUE(verify(Theorem::T1_6, 3, VerifyOptions{200, 200, 1, {}}).pass);
  EXPECT_TRUE(verify(Theorem::T1_8, 3, VerifyOptions{150, 150, 1, {}}).pass);
}

TEST(Verify, FiniteProductIdentity) {
  for (int m = 2; m <= 5; ++m) {
    for (std::int64_t n_sum = 1; n_sum <= 10; ++n_sum) {
      ASSERT_TRUE(verify(Theorem::T1_9, m, VerifyOptions{0, 100, n_sum, {}}).pass) << m << " " << n_sum;
    }
  }
}

TEST(Verify, TheoremFourReportsSmallN) {
  const auto r3 = verify(Theorem::T1_4, 3, VerifyOptions{30, 30, 1, {}});
  EXPECT_TRUE(r3.pass);
  EXPECT_NE(std::find(r3.routes.begin(), r3.routes.end(), "note: n=0 holds"), r3.routes.end());
  EXPECT_NE(std::find(r3.routes.begin(), r3.routes.end(), "note: n=1 holds"), r3.routes.end());

  // At m = 2 the root-of-unity series is exactly 1 while 2C_2(1) - D_2(1) = -1.
  const auto r2 = verify(Theorem::T1_4, 2, VerifyOptions{30, 30, 1, {EpsilonRoute::triangular}});
  ASSERT_FALSE(r2.pass);
  EXPECT_EQ(r2.first_failure->n, 1);
  EXPECT_EQ(r2.first_failure->lhs, "m*C=0");
  EXPECT_EQ(r2.first_failure->rhs, "D+E=1");
  EXPECT_NE(std::find(r2.routes.begin(), r2.routes.end(), "note: n=1 fails"), r2.routes.end());
}

TEST(Verify, TheoremSixFlagsTheExcludedSet) {
  // E_3 vanishes at n = 3, so the identity holds there: the check must not treat 3 as excluded.
  EXPECT_EQ(3 * count_C(3, 3), count_D(3, 3));
  EXPECT_NE(3 * count_C(3, 4), count_D(3, 4));
}

TEST(Density, SmallScans) {
  const auto d2 = density_report(2, 1000);
  EXPECT_EQ(d2.nonzero_count, 1);
  EXPECT_TRUE(d2.bound_satisfied);

  const auto d3 = density_report(3, 1000);
  // n = 0 together with T_k + 1 for k = 0..44 (T_44 + 1 = 991)
  EXPECT_EQ(d3.nonzero_count, 46);
  EXPECT_EQ(d3.n_x, 954);
  EXPECT_EQ(d3.ratio_fraction(), "954/1000");
  EXPECT_TRUE(d3.consistent);
  EXPECT_TRUE(d3.bound_satisfied);
  EXPECT_EQ(d3.window_bound, 1 * (44 + 1) + 1);
  EXPECT_THROW(density_report(3, 0), domain_error);
}

TEST(Density, PartitionOfRangeHoldsOnlyAtMThree) {
  EXPECT_TRUE(density_report(3, 400).consistent);
  EXPECT_FALSE(density_report(2, 400).consistent);  // 2C_2(1) != D_2(1) although eps_2 = 1
  EXPECT_FALSE(density_report(4, 400).consistent);
}

TEST(Density, IntegerSquareRoot) {
  EXPECT_EQ(isqrt(10000), 100);
  EXPECT_EQ(isqrt(9999), 99);
  EXPECT_EQ(isqrt(0), 0);
}

}  // namespace
}  // namespace glaisher
