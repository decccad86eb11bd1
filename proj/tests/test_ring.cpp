#include <gtest/gtest.h>

#include <random>

#include "arraycode/errors.hpp"
#include "arraycode/ring.hpp"
#include "oracles.hpp"

using namespace arraycode;

namespace {

RingPoly P(int p, std::initializer_list<long long> e) { return RingPoly::from_exponents(p, e); }

RingPoly random_even(int p, std::mt19937_64& rng) {
  RingPoly f = oracle::poly_of(oracle::random_bits(p, rng));
  if (parity_at_one(f)) f.flip(static_cast<int>(rng() % p));
  return f;
}

}  // namespace

TEST(RingPoly, AddExamples) {
  XorTally t;
  EXPECT_TRUE(add(P(5, {0, 1}), P(5, {0, 1}), t).is_zero());
  EXPECT_EQ(add(P(5, {0, 1}), P(5, {1, 2}), t), P(5, {0, 2}));
  const RingPoly a = P(5, {0, 3, 4});
  EXPECT_EQ(add(a, RingPoly(5), t), a);
  EXPECT_EQ(t.count, 15u);
}

TEST(RingPoly, AddRejectsMismatchedP) {
  XorTally t;
  EXPECT_THROW(add(P(5, {0}), P(7, {0}), t), ParameterError);
}

TEST(RingPoly, ShiftExamples) {
  EXPECT_EQ(shift(P(5, {0}), 1), P(5, {1}));
  EXPECT_EQ(shift(P(5, {4}), 2), P(5, {1}));
  const RingPoly a = P(5, {0, 2, 3});
  EXPECT_EQ(shift(a, 0), a);
  EXPECT_EQ(shift(a, -3), shift(a, 2));
}

TEST(RingPoly, ShiftMatchesOracleForWideP) {
  std::mt19937_64 rng(3);
  for (int p : {3, 5, 67, 131}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto bits = oracle::random_bits(p, rng);
      const long long d = static_cast<long long>(rng() % 400) - 200;
      oracle::Bits expect(p);
      for (int i = 0; i < p; ++i) expect[oracle::md(i + d, p)] = bits[i];
      EXPECT_EQ(oracle::bits_of(shift(oracle::poly_of(bits), d)), expect);
    }
  }
}

TEST(RingPoly, MulExamples) {
  EXPECT_EQ(mul(P(5, {0, 1}), P(5, {1, 2, 3, 4})), P(5, {0, 1}));
  const RingPoly a = P(5, {1, 3});
  EXPECT_EQ(mul(a, P(5, {0})), a);
  EXPECT_TRUE(mul(RingPoly::all_ones(5), P(5, {0, 1})).is_zero());
}

TEST(RingPoly, MulMatchesConvolutionOracle) {
  std::mt19937_64 rng(5);
  for (int p : {3, 7, 13}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = oracle::random_bits(p, rng);
      const auto b = oracle::random_bits(p, rng);
      EXPECT_EQ(oracle::bits_of(mul(oracle::poly_of(a), oracle::poly_of(b))), oracle::cyclic_mul(a, b));
    }
  }
}

TEST(RingPoly, ParityAtOne) {
  EXPECT_FALSE(parity_at_one(P(5, {0, 1})));
  EXPECT_TRUE(parity_at_one(P(5, {0, 1, 2})));
  EXPECT_FALSE(parity_at_one(RingPoly(5)));
}

TEST(RingPoly, ReduceExamples) {
  XorTally t;
  EXPECT_TRUE(reduce_mod_mp(RingPoly::all_ones(5), t).is_zero());
  EXPECT_EQ(t.count, 4u);
  EXPECT_EQ(reduce_mod_mp(P(5, {4}), t), P(5, {0, 1, 2, 3}));
  EXPECT_EQ(t.count, 8u);
  const RingPoly a = P(5, {0, 2});
  EXPECT_EQ(reduce_mod_mp(a, t), a);
  EXPECT_EQ(t.count, 8u);
}

TEST(RingPoly, ReduceMatchesLongDivision) {
  std::mt19937_64 rng(11);
  for (int p : {3, 5, 7, 11, 13}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = oracle::random_bits(p, rng);
      XorTally t;
      auto got = oracle::bits_of(reduce_mod_mp(oracle::poly_of(a), t));
      EXPECT_EQ(got[p - 1], 0);
      got.resize(p - 1);
      EXPECT_EQ(got, oracle::residue(a));
    }
  }
}

TEST(Division, AnyFormExamples) {
  XorTally t;
  EXPECT_EQ(div_one_plus_xd_any(P(5, {0, 1}), 1, t), P(5, {0}));
  EXPECT_EQ(div_one_plus_xd_any(P(5, {1, 2}), 1, t), P(5, {1}));
  EXPECT_TRUE(div_one_plus_xd_any(RingPoly(5), 1, t).is_zero());
  EXPECT_EQ(t.count, 6u);
}

TEST(Division, EvenFormExamples) {
  XorTally t;
  EXPECT_EQ(div_one_plus_xd_even(P(5, {0, 1}), 1, t), P(5, {1, 2, 3, 4}));
  EXPECT_EQ(div_one_plus_xd_even(P(5, {0, 2}), 2, t), P(5, {1, 2, 3, 4}));
  EXPECT_TRUE(div_one_plus_xd_even(RingPoly(5), 3, t).is_zero());
  EXPECT_EQ(t.count, 15u);
}

TEST(Division, BinomialExamples) {
  XorTally t;
  EXPECT_EQ(div_binomial(P(5, {1, 2}), 1, 0, false, t), P(5, {1}));
  EXPECT_EQ(div_binomial(P(5, {2, 3}), 2, 1, false, t), P(5, {1}));
  EXPECT_TRUE(div_binomial(RingPoly(5), 3, 1, true, t).is_zero());
}

TEST(Division, Errors) {
  XorTally t;
  EXPECT_THROW(div_one_plus_xd_any(P(5, {0, 1}), 0, t), ParameterError);
  EXPECT_THROW(div_one_plus_xd_any(P(5, {0, 1}), 5, t), ParameterError);
  EXPECT_THROW(div_one_plus_xd_even(P(9, {0, 1}), 3, t), ParameterError);
  EXPECT_THROW(div_one_plus_xd_any(P(5, {0, 1, 2}), 1, t), InputError);
  EXPECT_THROW(div_binomial(P(5, {0, 1}), 2, 2, false, t), ParameterError);
}

TEST(Division, MultiplyBackAndCostProperty) {
  std::mt19937_64 rng(17);
  for (int p : {3, 5, 7, 11, 13}) {
    for (int d = 1; d < p; ++d) {
      const RingPoly divisor = P(p, {0, d});
      for (int trial = 0; trial < 100; ++trial) {
        const RingPoly f = random_even(p, rng);
        XorTally ta;
        XorTally te;
        const RingPoly ga = div_one_plus_xd_any(f, d, ta);
        const RingPoly ge = div_one_plus_xd_even(f, d, te);
        ASSERT_EQ(oracle::cyclic_mul(oracle::bits_of(divisor), oracle::bits_of(ga)), oracle::bits_of(f));
        ASSERT_EQ(oracle::cyclic_mul(oracle::bits_of(divisor), oracle::bits_of(ge)), oracle::bits_of(f));
        EXPECT_FALSE(ga.top());
        EXPECT_FALSE(parity_at_one(ge));
        RingPoly diff = ga;
        diff ^= ge;
        EXPECT_TRUE(diff.is_zero() || diff == RingPoly::all_ones(p));
        EXPECT_EQ(ta.count, static_cast<std::uint64_t>(p - 3));
        EXPECT_EQ(te.count, static_cast<std::uint64_t>((3 * p - 5) / 2));
      }
    }
  }
}

TEST(Division, PinnedSelectsRequestedZero) {
  std::mt19937_64 rng(19);
  for (int p : {5, 7, 11}) {
    for (int d = 1; d < p; ++d) {
      for (int q = 0; q < p; ++q) {
        const RingPoly f = random_even(p, rng);
        for (bool value : {false, true}) {
          XorTally t;
          const RingPoly g = div_one_plus_xd_pinned(f, d, q, t, value);
          EXPECT_EQ(g.coeff(q), value);
          EXPECT_EQ(mul(P(p, {0, d}), g), f);
          EXPECT_EQ(t.count, static_cast<std::uint64_t>(p - 3));
        }
        XorTally t;
        const RingPoly zero = div_one_plus_xd_pinned(RingPoly(p), d, q, t, true);
        EXPECT_EQ(zero, RingPoly::all_ones(p));
        EXPECT_EQ(t.count, static_cast<std::uint64_t>(p - 3));
      }
    }
  }
}

TEST(Quotient, InverseAndArithmetic) {
  const int p = 5;
  for (int mask = 1; mask < 16; ++mask) {
    RingPoly a(p);
    for (int i = 0; i < 4; ++i) a.set_coeff(i, mask >> i & 1);
    const QuotientPoly q = QuotientPoly::from_ring(a);
    const auto inv = inverse(q);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(q * *inv, QuotientPoly::one(p));
  }
  EXPECT_FALSE(inverse(QuotientPoly(5)).has_value());
  EXPECT_FALSE(inverse(QuotientPoly::from_ring(P(9, {0, 3}))).has_value());
  EXPECT_TRUE(inverse(QuotientPoly::from_ring(P(9, {0, 2}))).has_value());
}

TEST(RingPoly, ToString) {
  EXPECT_EQ(P(5, {0, 1, 3}).to_string(), "1+x+x^3");
  EXPECT_EQ(RingPoly(5).to_string(), "0");
}
