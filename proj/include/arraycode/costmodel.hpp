#pragma once

// Closed-form XOR counts for the LU solver and the erasure decoders, the
// Blaum-Roth reference costs, and the normalized comparison between them.

#include <cstdint>
#include <string>
#include <vector>

#include "arraycode/codes.hpp"

namespace arraycode {

struct CostBreakdown {
  std::uint64_t augment_cost = 0;
  std::uint64_t syndrome_cost = 0;
  std::uint64_t solve_cost = 0;
  std::uint64_t reduce_cost = 0;
  std::uint64_t reencode_cost = 0;

  std::uint64_t total() const noexcept {
    return augment_cost + syndrome_cost + solve_cost + reduce_cost + reencode_cost;
  }

  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

// r(r-1)p + (r-1)(p-3) + (r-1)(r-2)(3p-5)/4
std::int64_t predict_lu(int r, int p);

std::int64_t predict_decode(Family family, int p, int k, int gamma, int delta, bool lambda_is_zero);
// The same expression without requiring gamma <= k.
std::int64_t decode_formula(Family family, int p, int k, int gamma, int delta, bool lambda_is_zero);

// Per-stage split of predict_decode (the reduce stage is an upper bound).
CostBreakdown predict_decode_breakdown(Family family, int p, int k, int gamma, int delta,
                                       bool lambda_is_zero);

std::int64_t predict_blaum_roth(Family family, int p, int k, int gamma, int delta,
                                bool lambda_is_zero);
std::int64_t blaum_roth_formula(Family family, int p, int k, int gamma, int delta,
                                bool lambda_is_zero);

struct ComparisonRow {
  Family family;
  int r = 0;
  int p = 0;
  int k = 0;
  std::int64_t lu_xors = 0;
  std::int64_t blaum_roth_xors = 0;
  double lu_normalized = 0;
  double blaum_roth_normalized = 0;
  double reduction_percent = 0;
  // False when r > k, i.e. no stripe has that many information columns.
  bool realizable = true;
};

// k = p (EVENODD) or p-1 (RDP), gamma = r, delta = 0, lambda = 0, costs
// normalized by the number of information bits k(p-1). Only odd p are used;
// rows with r > k are kept as plain formula evaluations.
std::vector<ComparisonRow> comparison_report(Family family, int r, int p_min, int p_max);

}  // namespace arraycode
