#include "arraycode/decoder.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "arraycode/errors.hpp"

namespace arraycode {

namespace {

void check_spec(const CodeParams& params, const ErasureSpec& erasures) {
  auto sorted_unique = [](const std::vector<int>& v) {
    return std::is_sorted(v.begin(), v.end()) && std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (!sorted_unique(erasures.info_erased) || !sorted_unique(erasures.parity_erased)) {
    throw ParameterError("erased column lists must be sorted and free of duplicates");
  }
  for (int c : erasures.info_erased) {
    if (c < 0 || c >= params.k) throw ParameterError("information column out of range");
  }
  for (int c : erasures.parity_erased) {
    if (c < params.k || c >= params.columns()) throw ParameterError("parity column out of range");
  }
  if (erasures.gamma() + erasures.delta() > params.r) {
    throw UnrecoverableError(std::to_string(erasures.gamma() + erasures.delta()) +
                             " columns erased but the code tolerates at most " +
                             std::to_string(params.r));
  }
}

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

RingPoly add_all_ones(const RingPoly& column, bool top) {
  RingPoly out = column;
  if (top) {
    for (int i = 0; i < column.p() - 1; ++i) out.flip(i);
    out.set_coeff(column.p() - 1, true);
  }
  return out;
}

QuotientPoly equation_coefficient(const CodeParams& params, int ell, int j) {
  const int p = params.p;
  if (ell == 0) return QuotientPoly::one(p);
  RingPoly c = RingPoly::monomial(p, static_cast<long long>(ell) * params.g[j]);
  if (params.family == Family::Rdp) c.flip(mod_p(static_cast<long long>(ell) * params.g[params.k], p));
  return QuotientPoly::from_ring(c);
}

}  // namespace

ErasureSpec ErasureSpec::from_columns(const CodeParams& params, std::vector<int> columns) {
  std::sort(columns.begin(), columns.end());
  if (std::adjacent_find(columns.begin(), columns.end()) != columns.end()) {
    throw ParameterError("duplicate erased column");
  }
  ErasureSpec spec;
  for (int c : columns) {
    if (c < 0 || c >= params.columns()) {
      throw ParameterError("column " + std::to_string(c) + " out of range 0.." +
                           std::to_string(params.columns() - 1));
    }
    (c < params.k ? spec.info_erased : spec.parity_erased).push_back(c);
  }
  return spec;
}

std::vector<int> ErasureSpec::all_columns() const {
  std::vector<int> out = info_erased;
  out.insert(out.end(), parity_erased.begin(), parity_erased.end());
  return out;
}

DecodePlan plan(const CodeParams& params, const ErasureSpec& erasures,
                std::optional<int> forced_lambda) {
  check_spec(params, erasures);
  const int gamma = erasures.gamma();
  const int delta = erasures.delta();
  if (forced_lambda && (*forced_lambda < 0 || *forced_lambda > delta)) {
    throw ParameterError("forced lambda outside 0..delta");
  }
  DecodePlan out;
  for (int j = 0; j < params.k; ++j) {
    if (!contains(erasures.info_erased, j)) out.survivors.push_back(j);
  }
  if (contains(erasures.parity_erased, params.k)) {
    out.needs_fallback = true;
    return out;
  }
  std::vector<int> f{params.k - 1};
  f.insert(f.end(), erasures.parity_erased.begin(), erasures.parity_erased.end());
  f.push_back(params.k + params.r);
  for (int lambda = 0; lambda <= delta; ++lambda) {
    if (forced_lambda && lambda != *forced_lambda) continue;
    if (f[lambda + 1] - f[lambda] < gamma + 1) continue;
    out.lambda = lambda;
    for (int h = 1; h <= gamma; ++h) out.window.push_back(f[lambda] + h);
    if (gamma > 1) {
      std::vector<long long> a;
      for (int e : erasures.info_erased) a.push_back(params.g[e]);
      try {
        ExponentTuple check(params.p, a);
      } catch (const ParameterError&) {
        out.needs_fallback = true;
        out.window.clear();
      }
    }
    return out;
  }
  out.needs_fallback = true;
  return out;
}

std::vector<RingPoly> syndromes_evenodd(const CodeParams& params, const DecodePlan& plan,
                                        const ErasureSpec& erasures, const CodewordArray& stripe,
                                        CostBreakdown& cost) {
  const int p = params.p;
  const int k = params.k;
  std::vector<RingPoly> out;
  if (erasures.gamma() == 0) return out;
  XorTally aug;
  XorTally syn;
  const bool row_parity_sum = parity_at_one(stripe.cols[k]);
  aug.charge(p - 2);
  for (int c : plan.window) {
    const int ell = c - k;
    RingPoly s;
    if (ell == 0) {
      s = stripe.cols[k];
    } else {
      const bool adjuster = row_parity_sum ^ parity_at_one(stripe.cols[c]);
      aug.charge(p - 1);
      s = add_all_ones(stripe.cols[c], adjuster);
      aug.charge(p - 1);
    }
    for (int i : plan.survivors) {
      s = add_shifted_column(s, stripe.cols[i], static_cast<long long>(params.g[i]) * ell, syn);
    }
    out.push_back(std::move(s));
  }
  cost.augment_cost += aug.count;
  cost.syndrome_cost += syn.count;
  return out;
}

std::vector<RingPoly> syndromes_rdp(const CodeParams& params, const DecodePlan& plan,
                                    const ErasureSpec& erasures, const CodewordArray& stripe,
                                    CostBreakdown& cost) {
  const int p = params.p;
  const int k = params.k;
  std::vector<RingPoly> out;
  if (erasures.gamma() == 0) return out;
  XorTally aug;
  XorTally syn;
  for (int c : plan.window) {
    const int ell = c - k;
    RingPoly s = stripe.cols[c];
    if (ell > 0) {
      s.set_coeff(p - 1, parity_at_one(stripe.cols[c]));
      aug.charge(p - 2);
      s = add_shifted_column(s, stripe.cols[k], static_cast<long long>(params.g[k]) * ell, syn);
    }
    for (int i : plan.survivors) {
      s = add_shifted_column(s, stripe.cols[i], static_cast<long long>(params.g[i]) * ell, syn);
    }
    out.push_back(std::move(s));
  }
  cost.augment_cost += aug.count;
  cost.syndrome_cost += syn.count;
  return out;
}

void reencode_parity(CodewordArray& stripe, const std::vector<int>& which, XorTally& t) {
  const CodeParams& params = stripe.params;
  const std::span<const RingPoly> info(stripe.cols.data(), params.k);
  for (int c : which) {
    if (c < params.k || c >= params.columns()) throw ParameterError("not a parity column");
    stripe.cols[c] = encode_parity_column(params, info, c - params.k, t);
  }
}

std::optional<FallbackPlan> plan_fallback(const CodeParams& params, const ErasureSpec& erasures) {
  check_spec(params, erasures);
  const int gamma = erasures.gamma();
  if (gamma == 0) return FallbackPlan{};
  std::vector<int> surviving;
  for (int c = params.k; c < params.columns(); ++c) {
    if (!contains(erasures.parity_erased, c)) surviving.push_back(c);
  }
  if (static_cast<int>(surviving.size()) < gamma) return std::nullopt;
  // Lexicographic walk over gamma-subsets of the surviving parity columns.
  std::vector<int> idx(gamma);
  for (int i = 0; i < gamma; ++i) idx[i] = i;
  const int n = static_cast<int>(surviving.size());
  while (true) {
    QuotientMatrix m(gamma, params.p);
    for (int i = 0; i < gamma; ++i) {
      for (int eq = 0; eq < gamma; ++eq) {
        m.at(i, eq) = equation_coefficient(params, surviving[idx[eq]] - params.k,
                                           erasures.info_erased[i]);
      }
    }
    if (auto inv = invert(m)) {
      FallbackPlan out;
      for (int i : idx) out.equations.push_back(surviving[i]);
      out.inverse = std::move(inv);
      return out;
    }
    int pos = gamma - 1;
    while (pos >= 0 && idx[pos] == n - gamma + pos) --pos;
    if (pos < 0) return std::nullopt;
    ++idx[pos];
    for (int i = pos + 1; i < gamma; ++i) idx[i] = idx[i - 1] + 1;
  }
}

StripeDecoder::StripeDecoder(const CodeParams& params, const ErasureSpec& erasures,
                             std::optional<int> forced_lambda, bool force_fallback)
    : params_(params), erasures_(erasures), plan_(plan(params, erasures, forced_lambda)) {
  use_fallback_ = force_fallback || plan_.needs_fallback;
  if (use_fallback_) {
    fallback_ = plan_fallback(params_, erasures_);
    if (!fallback_) {
      throw UnrecoverableError("no surviving parity columns give an invertible system for this pattern");
    }
    return;
  }
  if (erasures_.gamma() > 1) {
    std::vector<long long> a;
    const int s = plan_.window.front() - params_.k;
    for (int e : erasures_.info_erased) {
      a.push_back(params_.g[e]);
      pins_.push_back(mod_p(params_.p - 1 + static_cast<long long>(params_.g[e]) * s, params_.p));
    }
    exponents_.emplace(params_.p, a);
  }
}

CodewordArray StripeDecoder::decode(const CodewordArray& damaged, XorTally& t,
                                    CostBreakdown* cost) const {
  if (!(damaged.params == params_) || static_cast<int>(damaged.cols.size()) != params_.columns()) {
    throw ParameterError("stripe does not match the decoder's parameters");
  }
  CostBreakdown local;
  CodewordArray out = use_fallback_ ? decode_generic(damaged) : decode_lu(damaged, local);
  t.charge(local.total());
  if (cost != nullptr) *cost = local;
  return out;
}

CodewordArray StripeDecoder::decode_lu(const CodewordArray& damaged, CostBreakdown& cost) const {
  CodewordArray out = damaged;
  const int gamma = erasures_.gamma();
  if (gamma > 0) {
    const std::vector<RingPoly> v =
        params_.family == Family::Evenodd
            ? syndromes_evenodd(params_, plan_, erasures_, damaged, cost)
            : syndromes_rdp(params_, plan_, erasures_, damaged, cost);
    XorTally solve;
    const std::vector<RingPoly> u = gamma == 1 ? v : solve_lu_pinned(*exponents_, v, pins_, solve);
    cost.solve_cost += solve.count;
    const int s = plan_.window.front() - params_.k;
    XorTally reduce;
    for (int i = 0; i < gamma; ++i) {
      const int e = erasures_.info_erased[i];
      RingPoly column = shift(u[i], -static_cast<long long>(params_.g[e]) * s);
      if (i == gamma - 1) {
        column = reduce_mod_mp(column, reduce);
      } else if (column.top()) {
        throw std::logic_error("recovered column has a nonzero imaginary row");
      }
      out.cols[e] = std::move(column);
    }
    cost.reduce_cost += reduce.count;
  }
  XorTally reencode;
  reencode_parity(out, erasures_.parity_erased, reencode);
  cost.reencode_cost += reencode.count;
  return out;
}

CodewordArray StripeDecoder::decode_generic(const CodewordArray& damaged) const {
  const int p = params_.p;
  const int k = params_.k;
  CodewordArray out = damaged;
  const int gamma = erasures_.gamma();
  if (gamma > 0) {
    std::vector<QuotientPoly> rhs;
    for (int c : fallback_->equations) {
      const int ell = c - k;
      RingPoly acc = damaged.cols[c];
      if (params_.family == Family::Rdp && ell > 0) acc.set_coeff(p - 1, parity_at_one(acc));
      for (int j : plan_.survivors) {
        const QuotientPoly coeff = equation_coefficient(params_, ell, j);
        acc ^= mul(coeff.as_ring(), damaged.cols[j]);
      }
      rhs.push_back(QuotientPoly::from_ring(acc));
    }
    const QuotientMatrix& inv = *fallback_->inverse;
    for (int i = 0; i < gamma; ++i) {
      QuotientPoly u(p);
      for (int eq = 0; eq < gamma; ++eq) {
        if (!rhs[eq].is_zero()) u = u + rhs[eq] * inv.at(eq, i);
      }
      out.cols[erasures_.info_erased[i]] = u.as_ring();
    }
  }
  XorTally ignored;
  reencode_parity(out, erasures_.parity_erased, ignored);
  return out;
}

CodewordArray decode_fallback(const CodeParams& params, const CodewordArray& damaged,
                              const ErasureSpec& erasures) {
  XorTally ignored;
  return StripeDecoder(params, erasures, std::nullopt, true).decode(damaged, ignored);
}

CodewordArray decode_evenodd(const CodeParams& params, const CodewordArray& damaged,
                             const ErasureSpec& erasures, XorTally& t, CostBreakdown* cost) {
  if (params.family != Family::Evenodd) throw ParameterError("decode_evenodd needs EVENODD params");
  return StripeDecoder(params, erasures).decode(damaged, t, cost);
}

CodewordArray decode_rdp(const CodeParams& params, const CodewordArray& damaged,
                         const ErasureSpec& erasures, XorTally& t, CostBreakdown* cost) {
  if (params.family != Family::Rdp) throw ParameterError("decode_rdp needs RDP params");
  return StripeDecoder(params, erasures).decode(damaged, t, cost);
}

CodewordArray decode(const CodeParams& params, const CodewordArray& damaged,
                     const ErasureSpec& erasures, XorTally& t, CostBreakdown* cost) {
  return StripeDecoder(params, erasures).decode(damaged, t, cost);
}

}  // namespace arraycode
