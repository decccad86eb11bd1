#include "arraycode/codes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "arraycode/errors.hpp"

namespace arraycode {

namespace {

void check_info(const CodeParams& params, std::span<const RingPoly> info) {
  if (static_cast<int>(info.size()) != params.k) {
    throw InputError("expected " + std::to_string(params.k) + " information columns, got " +
                     std::to_string(info.size()));
  }
  for (const RingPoly& c : info) {
    if (c.p() != params.p) throw InputError("information column has the wrong length");
    if (c.top()) throw InputError("information column has a nonzero imaginary-row bit");
  }
}

// Columns 0..k-1 for EVENODD, 0..k for RDP, each with its own weight g(j).
RingPoly diagonal_sum(const CodeParams& params, std::span<const RingPoly> sources, int ell) {
  RingPoly acc(params.p);
  for (std::size_t j = 0; j < sources.size(); ++j) {
    acc ^= shift(sources[j], static_cast<long long>(ell) * params.g[j]);
  }
  return acc;
}

RingPoly row_sum(int p, std::span<const RingPoly> info) {
  RingPoly acc(p);
  for (const RingPoly& c : info) acc ^= c;
  return acc;
}

std::vector<int> parity_selection(const CodeParams& params, std::span<const int> parity_cols) {
  std::vector<int> out;
  if (parity_cols.empty()) {
    for (int c = params.k + 1; c < params.columns(); ++c) out.push_back(c);
    return out;
  }
  for (int c : parity_cols) {
    if (c < params.k || c >= params.columns()) {
      throw ParameterError("column " + std::to_string(c) + " is not a parity column");
    }
    if (c > params.k) out.push_back(c);
  }
  return out;
}

}  // namespace

std::string family_name(Family f) { return f == Family::Evenodd ? "evenodd" : "rdp"; }

Family parse_family(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "evenodd") return Family::Evenodd;
  if (lower == "rdp") return Family::Rdp;
  throw ParameterError("unknown code family '" + name + "' (expected evenodd or rdp)");
}

std::vector<int> default_g(Family family, int k) {
  std::vector<int> g(family == Family::Rdp ? k + 1 : k);
  std::iota(g.begin(), g.end(), 0);
  return g;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool two_is_primitive(int p) {
  if (!is_prime(p) || p == 2) return false;
  int x = 1;
  for (int order = 1; order < p; ++order) {
    x = (x * 2) % p;
    if (x == 1) return order == p - 1;
  }
  return false;
}

void validate(const CodeParams& params) {
  const int p = params.p;
  if (p < 3 || p % 2 == 0) throw ParameterError("p must be odd and >= 3, got " + std::to_string(p));
  if (p > 65535) throw ParameterError("p must fit in 16 bits");
  if (params.k < 1) throw ParameterError("k must be >= 1");
  if (params.r < 1) throw ParameterError("r must be >= 1");
  if (params.family == Family::Evenodd) {
    if (p < std::max(params.k, params.r)) {
      throw ParameterError("EVENODD requires p >= max(k, r)");
    }
  } else if (p < std::max(params.k + 1, params.r)) {
    throw ParameterError("RDP requires p >= max(k+1, r)");
  }
  if (static_cast<int>(params.g.size()) != params.g_len()) {
    throw ParameterError("g must have " + std::to_string(params.g_len()) + " entries, got " +
                         std::to_string(params.g.size()));
  }
  std::set<int> seen;
  for (int v : params.g) {
    if (v < 0 || v >= p) throw ParameterError("g entry " + std::to_string(v) + " outside 0..p-1");
    if (!seen.insert(v).second) throw ParameterError("g entries must be distinct");
  }
  if (!params.mds_mode) return;
  if (!is_prime(p)) throw ParameterError("mds_mode requires prime p");
  const int bound = params.family == Family::Evenodd ? params.k - 1 : params.k;
  for (int v : params.g) {
    if (v > bound) {
      throw ParameterError("mds_mode requires g entries <= " + std::to_string(bound));
    }
  }
  if (params.r >= 4 && !two_is_primitive(p)) {
    throw ParameterError("mds_mode with r >= 4 requires 2 to be primitive mod p");
  }
}

CodeParams make_params(Family family, int p, int k, int r, std::optional<std::vector<int>> g,
                       bool mds_mode) {
  CodeParams params{family, p, k, r, g ? *g : default_g(family, k), mds_mode};
  validate(params);
  return params;
}

std::vector<RingPoly> random_info(const CodeParams& params, std::mt19937_64& rng) {
  std::vector<RingPoly> info;
  info.reserve(params.k);
  std::bernoulli_distribution coin(0.5);
  for (int j = 0; j < params.k; ++j) {
    RingPoly c(params.p);
    for (int i = 0; i < params.p - 1; ++i) c.set_coeff(i, coin(rng));
    info.push_back(std::move(c));
  }
  return info;
}

std::uint64_t parity_column_cost(const CodeParams& params, int ell) {
  const int p = params.p;
  if (ell == 0) return static_cast<std::uint64_t>(params.k - 1) * (p - 1);
  const int sources = params.family == Family::Rdp ? params.k + 1 : params.k;
  auto imaginary = [&](int row, int j) {
    return mod_p(row - static_cast<long long>(ell) * params.g[j], p) == p - 1;
  };
  std::uint64_t cost = 0;
  int adjuster_terms = 0;
  if (params.family == Family::Evenodd) {
    for (int j = 0; j < sources; ++j) adjuster_terms += imaginary(p - 1, j) ? 0 : 1;
    cost += std::max(0, adjuster_terms - 1);
  }
  for (int i = 0; i < p - 1; ++i) {
    int terms = adjuster_terms > 0 ? 1 : 0;
    for (int j = 0; j < sources; ++j) terms += imaginary(i, j) ? 0 : 1;
    cost += std::max(0, terms - 1);
  }
  return cost;
}

RingPoly encode_parity_column(const CodeParams& params, std::span<const RingPoly> info, int ell,
                              XorTally& t) {
  check_info(params, info);
  if (ell < 0 || ell >= params.r) throw ParameterError("parity index out of range");
  const RingPoly rows = row_sum(params.p, info);
  RingPoly out(params.p);
  if (ell == 0) {
    out = rows;
  } else if (params.family == Family::Evenodd) {
    XorTally untallied;
    out = reduce_mod_mp(diagonal_sum(params, info, ell), untallied);
  } else {
    std::vector<RingPoly> sources(info.begin(), info.end());
    sources.push_back(rows);
    out = diagonal_sum(params, sources, ell);
    out.set_coeff(params.p - 1, false);
  }
  t.charge(parity_column_cost(params, ell));
  return out;
}

CodewordArray encode_evenodd(const CodeParams& params, std::span<const RingPoly> info,
                             XorTally& t) {
  if (params.family != Family::Evenodd) throw ParameterError("encode_evenodd needs EVENODD params");
  return encode(params, info, t);
}

CodewordArray encode_rdp(const CodeParams& params, std::span<const RingPoly> info, XorTally& t) {
  if (params.family != Family::Rdp) throw ParameterError("encode_rdp needs RDP params");
  return encode(params, info, t);
}

CodewordArray encode(const CodeParams& params, std::span<const RingPoly> info, XorTally& t) {
  check_info(params, info);
  CodewordArray out{params, std::vector<RingPoly>(info.begin(), info.end())};
  for (int ell = 0; ell < params.r; ++ell) out.cols.push_back(encode_parity_column(params, info, ell, t));
  return out;
}

AugmentedArray augment_evenodd(const CodewordArray& c, XorTally& t,
                               std::span<const int> parity_cols) {
  const CodeParams& params = c.params;
  if (params.family != Family::Evenodd) throw ParameterError("augment_evenodd needs EVENODD params");
  const int p = params.p;
  AugmentedArray out{params, c.cols};
  const std::vector<int> targets = parity_selection(params, parity_cols);
  if (targets.empty()) return out;
  const bool row_parity_sum = parity_at_one(c.cols[params.k]);
  t.charge(p - 2);
  for (int col : targets) {
    const bool adjuster = row_parity_sum ^ parity_at_one(c.cols[col]);
    t.charge(p - 1);
    if (adjuster) {
      for (int i = 0; i < p - 1; ++i) out.cols[col].flip(i);
      out.cols[col].set_coeff(p - 1, true);
    }
    t.charge(p - 1);
  }
  return out;
}

AugmentedArray augment_rdp(const CodewordArray& c, XorTally& t, std::span<const int> parity_cols) {
  const CodeParams& params = c.params;
  if (params.family != Family::Rdp) throw ParameterError("augment_rdp needs RDP params");
  AugmentedArray out{params, c.cols};
  for (int col : parity_selection(params, parity_cols)) {
    out.cols[col].set_coeff(params.p - 1, parity_at_one(c.cols[col]));
    t.charge(params.p - 2);
  }
  return out;
}

AugmentedArray augment(const CodewordArray& c, XorTally& t, std::span<const int> parity_cols) {
  return c.params.family == Family::Evenodd ? augment_evenodd(c, t, parity_cols)
                                            : augment_rdp(c, t, parity_cols);
}

CodewordArray deaugment(const AugmentedArray& a, XorTally& t) {
  const CodeParams& params = a.params;
  CodewordArray out{params, a.cols};
  for (int col = params.k + 1; col < params.columns(); ++col) {
    if (params.family == Family::Evenodd) {
      out.cols[col] = reduce_mod_mp(a.cols[col], t);
    } else {
      out.cols[col].set_coeff(params.p - 1, false);
    }
  }
  return out;
}

AugmentedArray algebraic_encode(const CodeParams& params, std::span<const RingPoly> info) {
  check_info(params, info);
  const int p = params.p;
  AugmentedArray out{params, std::vector<RingPoly>(info.begin(), info.end())};
  std::vector<RingPoly> sources(info.begin(), info.end());
  RingPoly rows(p);
  for (const RingPoly& c : info) rows ^= mul(RingPoly::monomial(p, 0), c);
  out.cols.push_back(rows);
  if (params.family == Family::Rdp) sources.push_back(rows);
  for (int ell = 1; ell < params.r; ++ell) {
    RingPoly acc(p);
    for (std::size_t j = 0; j < sources.size(); ++j) {
      acc ^= mul(RingPoly::monomial(p, static_cast<long long>(ell) * params.g[j]), sources[j]);
    }
    out.cols.push_back(acc);
  }
  return out;
}

AugmentedArray shortened_evenodd(const CodeParams& evenodd_params, std::span<const RingPoly> info) {
  const int k = evenodd_params.k - 1;
  if (static_cast<int>(info.size()) != k) {
    throw InputError("shortening needs k = " + std::to_string(k) + " information columns");
  }
  std::vector<RingPoly> extended(info.begin(), info.end());
  extended.push_back(row_sum(evenodd_params.p, info));
  XorTally ignored;
  const CodewordArray code = encode_evenodd(evenodd_params, extended, ignored);
  AugmentedArray aug = augment_evenodd(code, ignored);
  aug.cols.erase(aug.cols.begin() + k + 1);
  aug.params = CodeParams{Family::Rdp, evenodd_params.p, k, evenodd_params.r, evenodd_params.g, false};
  return aug;
}

bool shorten_matches(const CodeParams& evenodd_params, std::span<const RingPoly> info,
                     const AugmentedArray& rdp_augmented) {
  return shortened_evenodd(evenodd_params, info).cols == rdp_augmented.cols;
}

bool shorten_check(const CodeParams& evenodd_params, const CodeParams& rdp_params,
                   std::span<const RingPoly> info) {
  if (evenodd_params.family != Family::Evenodd || rdp_params.family != Family::Rdp ||
      evenodd_params.p != rdp_params.p || evenodd_params.r != rdp_params.r ||
      evenodd_params.k != rdp_params.k + 1 || evenodd_params.g != rdp_params.g) {
    throw ParameterError("shortening needs EVENODD(p,k+1,r;g) and RDP(p,k,r;g) with shared g");
  }
  XorTally ignored;
  const AugmentedArray rdp = augment_rdp(encode_rdp(rdp_params, info, ignored), ignored);
  return shorten_matches(evenodd_params, info, rdp);
}

}  // namespace arraycode
