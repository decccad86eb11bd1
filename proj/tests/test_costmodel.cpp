#include <gtest/gtest.h>

#include "arraycode/costmodel.hpp"
#include "arraycode/errors.hpp"

using namespace arraycode;

TEST(CostModel, PredictLu) {
  EXPECT_EQ(predict_lu(1, 5), 0);
  EXPECT_EQ(predict_lu(2, 5), 12);
  EXPECT_EQ(predict_lu(3, 5), 39);
}

TEST(CostModel, PredictDecodeExamples) {
  EXPECT_EQ(predict_decode(Family::Evenodd, 5, 3, 2, 0, true), 31);
  for (int k : {2, 3, 5}) EXPECT_EQ(predict_decode(Family::Evenodd, 7, k, 0, 1, true), k * 7 - k - 1);
  EXPECT_EQ(predict_decode(Family::Rdp, 5, 3, 2, 0, true), 27);
  EXPECT_EQ(predict_decode(Family::Rdp, 7, 4, 0, 2, false), 2 * 4 * 5);
}

TEST(CostModel, BreakdownSumsToFormula) {
  for (Family family : {Family::Evenodd, Family::Rdp}) {
    for (int p : {5, 7, 11, 13}) {
      for (int k = 2; k <= p - 1; ++k) {
        for (int gamma = 0; gamma <= std::min(k, 5); ++gamma) {
          for (int delta = 0; delta <= 2; ++delta) {
            for (bool zero : {true, false}) {
              const CostBreakdown b = predict_decode_breakdown(family, p, k, gamma, delta, zero);
              EXPECT_EQ(static_cast<std::int64_t>(b.total()),
                        predict_decode(family, p, k, gamma, delta, zero))
                  << family_name(family) << " p=" << p << " k=" << k << " gamma=" << gamma;
            }
          }
        }
      }
    }
  }
}

TEST(CostModel, BlaumRothExamples) {
  EXPECT_EQ(predict_blaum_roth(Family::Evenodd, 5, 5, 4, 0, true), 444);
  EXPECT_EQ(predict_blaum_roth(Family::Evenodd, 7, 4, 0, 2, true), 2 * (4 * 7 - 4 - 1));
  // 4*8*5 + (48+14-3)*5 + 16 - 14 + 3
  EXPECT_EQ(predict_blaum_roth(Family::Rdp, 5, 4, 4, 0, true), 160 + 295 + 5);
}

TEST(CostModel, ComparisonReportShape) {
  const auto rows = comparison_report(Family::Evenodd, 4, 5, 59);
  ASSERT_EQ(rows.size(), 28u);
  EXPECT_EQ(rows.front().p, 5);
  EXPECT_EQ(rows.back().p, 59);
  for (const auto& row : rows) {
    EXPECT_EQ(row.k, row.p);
    EXPECT_LT(row.lu_xors, row.blaum_roth_xors);
    EXPECT_GT(row.reduction_percent, 0.0);
  }
  EXPECT_NEAR(rows.back().reduction_percent, 19.8, 0.3);
  EXPECT_NEAR(rows.front().reduction_percent, 72.1, 0.3);

  const auto rdp5 = comparison_report(Family::Rdp, 5, 5, 7);
  ASSERT_EQ(rdp5.size(), 2u);
  EXPECT_FALSE(rdp5[0].realizable);
  EXPECT_EQ(rdp5[0].lu_xors, 146);
  EXPECT_EQ(rdp5[0].blaum_roth_xors, 683);
  EXPECT_TRUE(rdp5[1].realizable);
  EXPECT_THROW(predict_decode(Family::Rdp, 5, 4, 5, 0, true), ParameterError);
}
