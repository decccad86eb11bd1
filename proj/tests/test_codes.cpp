#include <gtest/gtest.h>

#include <random>

#include "arraycode/codes.hpp"
#include "arraycode/errors.hpp"
#include "oracles.hpp"

using namespace arraycode;

namespace {

std::vector<RingPoly> impulse(const CodeParams& params, int row, int col) {
  std::vector<RingPoly> info(params.k, RingPoly(params.p));
  info[col].set_coeff(row, true);
  return info;
}

std::vector<int> ones_in(const RingPoly& c, int rows) {
  std::vector<int> out;
  for (int i = 0; i < rows; ++i) {
    if (c.coeff(i)) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST(Params, Validation) {
  EXPECT_NO_THROW(make_params(Family::Evenodd, 5, 3, 3, std::vector<int>{0, 1, 2}, true));
  EXPECT_THROW(make_params(Family::Rdp, 5, 5, 2), ParameterError);
  EXPECT_THROW(make_params(Family::Evenodd, 9, 5, 2, std::nullopt, true), ParameterError);
  EXPECT_NO_THROW(make_params(Family::Evenodd, 9, 5, 2));
  EXPECT_THROW(make_params(Family::Evenodd, 5, 3, 2, std::vector<int>{0, 0, 1}), ParameterError);
  EXPECT_THROW(make_params(Family::Evenodd, 5, 3, 2, std::vector<int>{0, 1}), ParameterError);
  EXPECT_THROW(make_params(Family::Evenodd, 6, 3, 2), ParameterError);
  EXPECT_THROW(make_params(Family::Evenodd, 5, 3, 2, std::vector<int>{0, 1, 4}, true), ParameterError);
  EXPECT_THROW(make_params(Family::Evenodd, 7, 5, 4, std::nullopt, true), ParameterError);
  EXPECT_NO_THROW(make_params(Family::Evenodd, 7, 5, 3, std::nullopt, true));
  EXPECT_EQ(make_params(Family::Rdp, 5, 3, 2).g, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_TRUE(two_is_primitive(5));
  EXPECT_FALSE(two_is_primitive(7));
  EXPECT_TRUE(two_is_primitive(13));
}

TEST(Encode, EvenoddZero) {
  const CodeParams params = make_params(Family::Evenodd, 5, 3, 3, std::vector<int>{0, 1, 4});
  XorTally t;
  for (const RingPoly& c : encode_evenodd(params, std::vector<RingPoly>(3, RingPoly(5)), t).cols) {
    EXPECT_TRUE(c.is_zero());
  }
}

TEST(Encode, EvenoddImpulses) {
  const CodeParams params = make_params(Family::Evenodd, 5, 3, 3, std::vector<int>{0, 1, 4});
  XorTally t;
  const CodewordArray c = encode_evenodd(params, impulse(params, 3, 1), t);
  EXPECT_EQ(ones_in(c.cols[3], 4), (std::vector<int>{3}));
  EXPECT_EQ(ones_in(c.cols[4], 4), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(ones_in(c.cols[5], 4), (std::vector<int>{0}));
  const CodewordArray d = encode_evenodd(params, impulse(params, 0, 0), t);
  for (int col = 3; col < 6; ++col) EXPECT_EQ(ones_in(d.cols[col], 4), (std::vector<int>{0}));
}

TEST(Encode, RdpImpulse) {
  const CodeParams params = make_params(Family::Rdp, 5, 3, 3, std::vector<int>{0, 1, 4, 3});
  XorTally t;
  const CodewordArray c = encode_rdp(params, impulse(params, 0, 0), t);
  EXPECT_EQ(ones_in(c.cols[3], 4), (std::vector<int>{0}));
  EXPECT_EQ(ones_in(c.cols[4], 4), (std::vector<int>{0, 3}));
  EXPECT_EQ(ones_in(c.cols[5], 4), (std::vector<int>{0, 1}));
  const AugmentedArray a = augment_rdp(c, t);
  EXPECT_FALSE(a.bit(4, 4));
  EXPECT_FALSE(a.bit(4, 5));
}

TEST(Encode, MatchesBitwiseOracle) {
  std::mt19937_64 rng(43);
  const std::vector<CodeParams> cases = {
      make_params(Family::Evenodd, 5, 3, 3, std::vector<int>{0, 1, 4}),
      make_params(Family::Rdp, 5, 3, 3, std::vector<int>{0, 1, 4, 3}),
      make_params(Family::Evenodd, 7, 7, 3),
      make_params(Family::Rdp, 7, 6, 3),
      make_params(Family::Evenodd, 13, 9, 5),
      make_params(Family::Rdp, 11, 7, 4, std::vector<int>{3, 0, 9, 1, 5, 2, 8, 4}),
  };
  for (const CodeParams& params : cases) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<oracle::Bits> info;
      for (int j = 0; j < params.k; ++j) info.push_back(oracle::random_bits(params.p - 1, rng));
      XorTally t;
      const CodewordArray c = encode(params, oracle::info_polys(info, params.p), t);
      EXPECT_EQ(oracle::stripe_bits(c), oracle::encode_bitwise(params, info));
    }
  }
}

TEST(Encode, ParityCostsFollowTermCounts) {
  const CodeParams e = make_params(Family::Evenodd, 7, 5, 3, std::nullopt, true);
  const CodeParams r = make_params(Family::Rdp, 7, 5, 3, std::nullopt, true);
  for (int ell = 1; ell < 3; ++ell) {
    EXPECT_EQ(parity_column_cost(e, ell), static_cast<std::uint64_t>(5 * 7 - 5 - 1));
    EXPECT_EQ(parity_column_cost(r, ell), static_cast<std::uint64_t>(5 * (7 - 2)));
  }
  EXPECT_EQ(parity_column_cost(e, 0), static_cast<std::uint64_t>(4 * 6));
}

TEST(Encode, Linearity) {
  std::mt19937_64 rng(47);
  for (Family family : {Family::Evenodd, Family::Rdp}) {
    const CodeParams params = make_params(family, 7, 5, 3, std::nullopt, true);
    for (int trial = 0; trial < 30; ++trial) {
      const auto x = random_info(params, rng);
      const auto y = random_info(params, rng);
      std::vector<RingPoly> sum = x;
      for (int j = 0; j < params.k; ++j) sum[j] ^= y[j];
      XorTally t;
      CodewordArray ex = encode(params, x, t);
      const CodewordArray ey = encode(params, y, t);
      for (int c = 0; c < params.columns(); ++c) ex.cols[c] ^= ey.cols[c];
      EXPECT_EQ(encode(params, sum, t), ex);
    }
  }
}

TEST(Augment, EvenoddExamples) {
  const CodeParams params = make_params(Family::Evenodd, 5, 3, 3, std::vector<int>{0, 1, 4});
  XorTally t;
  const CodewordArray zero = encode(params, std::vector<RingPoly>(3, RingPoly(5)), t);
  for (const RingPoly& c : augment_evenodd(zero, t).cols) EXPECT_TRUE(c.is_zero());
  const CodewordArray c = encode(params, impulse(params, 3, 1), t);
  const AugmentedArray a = augment_evenodd(c, t);
  EXPECT_EQ(ones_in(a.cols[4], 5), (std::vector<int>{4}));
  XorTally d;
  EXPECT_EQ(deaugment(a, d), c);
}

TEST(Augment, EvenoddSubsetAndCost) {
  const CodeParams params = make_params(Family::Evenodd, 7, 5, 4, std::vector<int>{0, 1, 2, 3, 4});
  std::mt19937_64 rng(53);
  XorTally t;
  const CodewordArray c = encode(params, random_info(params, rng), t);
  XorTally only;
  const std::vector<int> cols{7};
  const AugmentedArray a = augment_evenodd(c, only, cols);
  EXPECT_EQ(only.count, static_cast<std::uint64_t>((7 - 2) + 2 * (7 - 1)));
  XorTally all;
  const AugmentedArray full = augment_evenodd(c, all);
  EXPECT_EQ(a.cols[7], full.cols[7]);
  EXPECT_EQ(a.cols[6], c.cols[6]);
}

TEST(Augment, MatchesAlgebraicEncode) {
  std::mt19937_64 rng(59);
  for (Family family : {Family::Evenodd, Family::Rdp}) {
    for (int p : {5, 7, 11}) {
      const CodeParams params = make_params(family, p, p - 2, 3);
      for (int trial = 0; trial < 20; ++trial) {
        const auto info = random_info(params, rng);
        XorTally t;
        const AugmentedArray a = augment(encode(params, info, t), t);
        EXPECT_EQ(algebraic_encode(params, info).cols, a.cols);
        if (family == Family::Rdp) {
          for (int c = params.k + 1; c < params.columns(); ++c) EXPECT_FALSE(parity_at_one(a.cols[c]));
        }
        XorTally d;
        EXPECT_EQ(deaugment(a, d), encode(params, info, t));
      }
    }
  }
}

TEST(Shorten, Examples) {
  const CodeParams ev = make_params(Family::Evenodd, 5, 4, 3, std::vector<int>{0, 1, 4, 3});
  const CodeParams rdp = make_params(Family::Rdp, 5, 3, 3, std::vector<int>{0, 1, 4, 3});
  EXPECT_TRUE(shorten_check(ev, rdp, std::vector<RingPoly>(3, RingPoly(5))));
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) EXPECT_TRUE(shorten_check(ev, rdp, random_info(rdp, rng)));
  const auto info = random_info(rdp, rng);
  XorTally t;
  AugmentedArray a = augment_rdp(encode_rdp(rdp, info, t), t);
  a.cols[4].flip(2);
  EXPECT_FALSE(shorten_matches(ev, info, a));
}

TEST(Shorten, RejectsMismatchedParameters) {
  const CodeParams ev = make_params(Family::Evenodd, 5, 4, 3, std::vector<int>{0, 1, 4, 3});
  const CodeParams rdp = make_params(Family::Rdp, 5, 3, 3);
  EXPECT_THROW(shorten_check(ev, rdp, std::vector<RingPoly>(3, RingPoly(5))), ParameterError);
}

TEST(Mds, BruteForce) {
  EXPECT_TRUE(mds_check(make_params(Family::Evenodd, 5, 5, 2)).mds);
  EXPECT_TRUE(mds_check(make_params(Family::Evenodd, 5, 3, 3, std::vector<int>{0, 1, 2})).mds);
  EXPECT_TRUE(mds_check(make_params(Family::Rdp, 5, 4, 2)).mds);
  const MdsReport bad = mds_check(make_params(Family::Evenodd, 9, 5, 2));
  EXPECT_FALSE(bad.mds);
  EXPECT_EQ(bad.witness_erased, (std::vector<int>{0, 3}));
}
