#include "glaisher/ring.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace glaisher {
namespace {

std::vector<Integer> ints(std::initializer_list<long> values) {
  std::vector<Integer> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

CycInt cyc(int m, std::initializer_list<long> coords) { return CycInt::from_polynomial(m, ints(coords)); }

TEST(Cyclotomic, SmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(1).coeffs, ints({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(3).coeffs, ints({1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6).coeffs, ints({1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12).coeffs, ints({1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, ZeroIsRejected) { EXPECT_THROW(cyclotomic_polynomial(0), domain_error); }

TEST(Cyclotomic, DivisorProductIsXmMinusOne) {
  for (int m = 1; m <= 12; ++m) {
    std::vector<Integer> prod{Integer(1)};
    for (int d = 1; d <= m; ++d) {
      if (m % d == 0) prod = detail::poly_mul(prod, cyclotomic_polynomial(d).coeffs);
    }
    std::vector<Integer> expected(static_cast<std::size_t>(m) + 1, Integer(0));
    expected.front() = -1;
    expected.back() = 1;
    EXPECT_EQ(prod, expected) << "m=" << m;

    const auto phi = cyclotomic_polynomial(m);
    EXPECT_EQ(phi.degree(), euler_phi(m)) << "m=" << m;
    EXPECT_EQ(phi.coeffs.back(), 1) << "m=" << m;
  }
}

TEST(CycInt, RootPowers) {
  EXPECT_EQ(cyc_root_power(3, 0).coords(), ints({1, 0}));
  EXPECT_EQ(cyc_root_power(3, 2).coords(), ints({-1, -1}));
  EXPECT_EQ(cyc_root_power(4, 3).coords(), ints({0, -1}));
  EXPECT_EQ(cyc_root_power(5, -1), cyc_root_power(5, 4));
  EXPECT_EQ(cyc_root_power(7, 7), CycInt::one(7));
  EXPECT_THROW(cyc_root_power(1, 0), domain_error);
}

TEST(CycInt, Arithmetic) {
  EXPECT_EQ(cyc_arith(cyc_root_power(3, 1), cyc_root_power(3, 2), CycOp::add).coords(), ints({-1, 0}));
  EXPECT_EQ(cyc_arith(cyc_root_power(4, 1), cyc_root_power(4, 1), CycOp::mul).coords(), ints({-1, 0}));
  const auto a = CycInt::one(3) + cyc_root_power(3, 1);
  const auto b = CycInt::one(3) + cyc_root_power(3, 2);
  EXPECT_EQ(cyc_arith(a, b, CycOp::mul).coords(), ints({1, 0}));
  EXPECT_EQ(cyc_arith(a, a, CycOp::sub), CycInt::zero(3));
}

TEST(CycInt, MismatchedModuliThrow) {
  EXPECT_THROW(cyc_arith(CycInt::one(3), CycInt::one(4), CycOp::add), domain_error);
  EXPECT_THROW(cyc_arith(CycInt::one(3), CycInt::one(5), CycOp::mul), domain_error);
}

TEST(CycInt, AsInteger) {
  EXPECT_EQ(cyc_as_integer(cyc(3, {7, 0})), Integer(7));
  EXPECT_FALSE(cyc_as_integer(cyc(3, {0, 1})).has_value());
  const auto s = cyc_root_power(5, 1) + cyc_root_power(5, 2) + cyc_root_power(5, 3) + cyc_root_power(5, 4);
  EXPECT_EQ(cyc_as_integer(s), Integer(-1));
}

TEST(Chi, Values) {
  EXPECT_EQ(chi(3, 0), 2);
  EXPECT_EQ(chi(3, 4), -1);
  EXPECT_EQ(chi(4, -2), -1);
  EXPECT_EQ(chi(4, -8), 3);
  EXPECT_EQ(chi(2, -1), -1);
}

TEST(Chi, MatchesRootOfUnitySum) {
  for (int m = 2; m <= 8; ++m) {
    for (int n = -20; n <= 20; ++n) {
      EXPECT_EQ(cyc_as_integer(chi_by_roots(m, n)), chi(m, n)) << "m=" << m << " n=" << n;
    }
  }
}

TEST(Chi, PeriodSumVanishes) {
  for (int m = 2; m <= 8; ++m) {
    for (int n = -20; n <= 20; ++n) {
      Integer sum = 0;
      for (int r = 0; r < m; ++r) sum += chi(m, n - r);
      EXPECT_EQ(sum, 0) << "m=" << m << " n=" << n;
    }
  }
}

CycInt random_cyc(int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-50, 50);
  std::vector<Integer> poly(static_cast<std::size_t>(euler_phi(m)));
  for (auto& c : poly) c = coeff(rng);
  // occasionally feed an unreduced polynomial to exercise the reduction
  if (rng() % 3 == 0) poly.resize(poly.size() + 3, Integer(coeff(rng)));
  return CycInt::from_polynomial(m, poly);
}

TEST(CycInt, CommutativeRingAxioms) {
  std::mt19937_64 rng(20241016);
  for (int m : {3, 4, 5, 7, 8, 9, 12}) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = random_cyc(m, rng);
      const auto b = random_cyc(m, rng);
      const auto c = random_cyc(m, rng);
      ASSERT_EQ((a * b) * c, a * (b * c)) << "m=" << m;
      ASSERT_EQ((a + b) + c, a + (b + c)) << "m=" << m;
      ASSERT_EQ(a * b, b * a) << "m=" << m;
      ASSERT_EQ(a * (b + c), a * b + a * c) << "m=" << m;
      ASSERT_EQ(a * CycInt::one(m), a) << "m=" << m;
      ASSERT_EQ(a - a, CycInt::zero(m)) << "m=" << m;
    }
  }
}

TEST(CycInt, ZetaHasOrderM) {
  for (int m = 2; m <= 12; ++m) {
    auto z = CycInt::one(m);
    const auto zeta = cyc_root_power(m, 1);
    for (int k = 1; k < m; ++k) {
      z *= zeta;
      EXPECT_NE(z, CycInt::one(m)) << "m=" << m << " k=" << k;
    }
    z *= zeta;
    EXPECT_EQ(z, CycInt::one(m)) << "m=" << m;
  }
}

}  // namespace
}  // namespace glaisher
