#include "arraycode/costmodel.hpp"

#include <boost/rational.hpp>
#include <stdexcept>

#include "arraycode/errors.hpp"

namespace arraycode {

namespace {

using Q = boost::rational<long long>;

std::int64_t as_integer(const Q& value, const char* what) {
  if (value.denominator() != 1) {
    throw std::logic_error(std::string(what) + " evaluated to a non-integer");
  }
  return value.numerator();
}

void check_formula_range(int p, int k, int gamma, int delta) {
  if (p < 3 || p % 2 == 0) throw ParameterError("p must be odd and >= 3");
  if (k < 1 || gamma < 0 || delta < 0) {
    throw ParameterError("cost formula arguments out of range");
  }
}

void check_range(int p, int k, int gamma, int delta) {
  check_formula_range(p, k, gamma, delta);
  if (gamma > k) throw ParameterError("more erased information columns than k");
}

Q reencode_term(Family family, int p, int k, int delta) {
  if (family == Family::Evenodd) return Q(delta) * (k * p - k - 1);
  return Q(delta) * k * (p - 2);
}

}  // namespace

std::int64_t predict_lu(int r, int p) {
  if (r < 1) throw ParameterError("r must be >= 1");
  const Q value = Q(r) * (r - 1) * p + Q(r - 1) * (p - 3) + Q((r - 1) * (r - 2)) * (3 * p - 5) / 4;
  return as_integer(value, "LU solver cost");
}

std::int64_t decode_formula(Family family, int p, int k, int gamma, int delta,
                            bool lambda_is_zero) {
  check_formula_range(p, k, gamma, delta);
  const Q re = reencode_term(family, p, k, delta);
  if (gamma == 0) return as_integer(re, "decode cost");
  const Q g(gamma);
  const Q base = g * k + Q(3) * g * g / 4 - g / 4;
  const Q tail = -g * k - g * g / 4;
  Q value;
  if (family == Family::Evenodd) {
    value = lambda_is_zero ? Q(p) * (base - Q(1, 2)) + tail - Q(5) * g / 4 + Q(1, 2)
                           : Q(p) * (base + Q(5, 2)) + tail - Q(5) * g / 4 - Q(5, 2);
  } else {
    value = lambda_is_zero ? Q(p) * (base - Q(3, 2)) + tail - Q(9) * g / 4 + Q(7, 2)
                           : Q(p) * (base + Q(3, 2)) + tail - Q(9) * g / 4 - Q(1, 2);
  }
  return as_integer(value + re, "decode cost");
}

std::int64_t predict_decode(Family family, int p, int k, int gamma, int delta,
                            bool lambda_is_zero) {
  check_range(p, k, gamma, delta);
  return decode_formula(family, p, k, gamma, delta, lambda_is_zero);
}

CostBreakdown predict_decode_breakdown(Family family, int p, int k, int gamma, int delta,
                                       bool lambda_is_zero) {
  check_range(p, k, gamma, delta);
  CostBreakdown out;
  out.reencode_cost = static_cast<std::uint64_t>(as_integer(reencode_term(family, p, k, delta), "re-encode"));
  if (gamma == 0) return out;
  const std::uint64_t g = gamma;
  const std::uint64_t window_aug = lambda_is_zero ? g - 1 : g;
  if (family == Family::Evenodd) {
    out.augment_cost = 2 * (p - 1) * window_aug + (p - 2);
    out.syndrome_cost = g * (k - g) * (p - 1);
  } else {
    out.augment_cost = window_aug * (p - 2);
    out.syndrome_cost = lambda_is_zero ? (k - g) * (p - 1) + (g - 1) * (k - g + 1) * (p - 1)
                                       : g * (k - g + 1) * (p - 1);
  }
  out.solve_cost = static_cast<std::uint64_t>(predict_lu(gamma, p));
  out.reduce_cost = lambda_is_zero ? 0 : p - 1;
  return out;
}

std::int64_t blaum_roth_formula(Family family, int p, int k, int gamma, int delta,
                                bool lambda_is_zero) {
  check_formula_range(p, k, gamma, delta);
  const Q g(gamma);
  Q value;
  if (family == Family::Evenodd) {
    value = reencode_term(family, p, k, delta);
    if (gamma > 0) {
      value += g * (k + g) * p + (Q(3) * g * g + g / 2) * p + g * g - g / 2;
    }
    return as_integer(value, "Blaum-Roth cost");
  }
  value = Q(delta) * (k * p - 2 * k);
  if (gamma == 0) return as_integer(value, "Blaum-Roth cost");
  if (lambda_is_zero) {
    value += g * (k + g) * p + (Q(3) * g * g + Q(7, 2) * g - 3) * p + g * g - Q(7, 2) * g + 3;
  } else {
    value += g * (k + g) * p + (Q(3) * g * g + Q(7, 2) * g) * p + g * g - g / 2 - 3;
  }
  return as_integer(value, "Blaum-Roth cost");
}

std::int64_t predict_blaum_roth(Family family, int p, int k, int gamma, int delta,
                                bool lambda_is_zero) {
  check_range(p, k, gamma, delta);
  return blaum_roth_formula(family, p, k, gamma, delta, lambda_is_zero);
}

std::vector<ComparisonRow> comparison_report(Family family, int r, int p_min, int p_max) {
  std::vector<ComparisonRow> rows;
  for (int p = p_min; p <= p_max; ++p) {
    if (p < 3 || p % 2 == 0) continue;
    ComparisonRow row;
    row.family = family;
    row.r = r;
    row.p = p;
    row.k = family == Family::Evenodd ? p : p - 1;
    row.realizable = r <= row.k;
    row.lu_xors = decode_formula(family, p, row.k, r, 0, true);
    row.blaum_roth_xors = blaum_roth_formula(family, p, row.k, r, 0, true);
    const double bits = static_cast<double>(row.k) * (p - 1);
    row.lu_normalized = row.lu_xors / bits;
    row.blaum_roth_normalized = row.blaum_roth_xors / bits;
    row.reduction_percent =
        100.0 * static_cast<double>(row.blaum_roth_xors - row.lu_xors) / row.blaum_roth_xors;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace arraycode
