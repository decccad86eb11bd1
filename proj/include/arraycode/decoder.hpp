#pragma once

// Erasure recovery for EVENODD and RDP stripes: window planning, syndromes,
// the LU path and a generic fallback over F2[x]/M_p(x).

#include <optional>
#include <vector>

#include "arraycode/codes.hpp"
#include "arraycode/costmodel.hpp"
#include "arraycode/vandermonde.hpp"

namespace arraycode {

struct ErasureSpec {
  std::vector<int> info_erased;    // e_1 < ... < e_gamma, in 0..k-1
  std::vector<int> parity_erased;  // f_1 < ... < f_delta, in k..k+r-1

  int gamma() const noexcept { return static_cast<int>(info_erased.size()); }
  int delta() const noexcept { return static_cast<int>(parity_erased.size()); }

  // Splits and sorts an arbitrary list of erased column indices.
  static ErasureSpec from_columns(const CodeParams& params, std::vector<int> columns);
  std::vector<int> all_columns() const;
};

struct DecodePlan {
  int lambda = 0;
  // Parity columns f_lambda+1 .. f_lambda+gamma.
  std::vector<int> window;
  // Surviving information columns (the set A).
  std::vector<int> survivors;
  bool needs_fallback = false;

  friend bool operator==(const DecodePlan&, const DecodePlan&) = default;
};

// Throws UnrecoverableError when gamma + delta > r. With forced_lambda the
// window after f_lambda is used if admissible, otherwise the plan falls back.
DecodePlan plan(const CodeParams& params, const ErasureSpec& erasures,
                std::optional<int> forced_lambda = std::nullopt);

std::vector<RingPoly> syndromes_evenodd(const CodeParams& params, const DecodePlan& plan,
                                        const ErasureSpec& erasures, const CodewordArray& stripe,
                                        CostBreakdown& cost);
std::vector<RingPoly> syndromes_rdp(const CodeParams& params, const DecodePlan& plan,
                                    const ErasureSpec& erasures, const CodewordArray& stripe,
                                    CostBreakdown& cost);

// Recomputes the listed parity columns in place from complete information.
void reencode_parity(CodewordArray& stripe, const std::vector<int>& which, XorTally& t);

// Chosen parity equations and the inverse of their coefficient matrix.
struct FallbackPlan {
  std::vector<int> equations;
  std::optional<QuotientMatrix> inverse;
};

// nullopt when no gamma surviving parity columns give an invertible system.
std::optional<FallbackPlan> plan_fallback(const CodeParams& params, const ErasureSpec& erasures);

CodewordArray decode_fallback(const CodeParams& params, const CodewordArray& damaged,
                              const ErasureSpec& erasures);

// Caches the plan for one erasure pattern and decodes many stripes with it.
class StripeDecoder {
 public:
  StripeDecoder(const CodeParams& params, const ErasureSpec& erasures,
                std::optional<int> forced_lambda = std::nullopt, bool force_fallback = false);

  const DecodePlan& decode_plan() const noexcept { return plan_; }
  bool uses_fallback() const noexcept { return use_fallback_; }

  // Contents of erased columns in damaged are ignored.
  CodewordArray decode(const CodewordArray& damaged, XorTally& t,
                       CostBreakdown* cost = nullptr) const;

 private:
  CodewordArray decode_lu(const CodewordArray& damaged, CostBreakdown& cost) const;
  CodewordArray decode_generic(const CodewordArray& damaged) const;

  CodeParams params_;
  ErasureSpec erasures_;
  DecodePlan plan_;
  bool use_fallback_ = false;
  std::optional<ExponentTuple> exponents_;
  std::vector<int> pins_;
  std::optional<FallbackPlan> fallback_;
};

CodewordArray decode_evenodd(const CodeParams& params, const CodewordArray& damaged,
                             const ErasureSpec& erasures, XorTally& t,
                             CostBreakdown* cost = nullptr);
CodewordArray decode_rdp(const CodeParams& params, const CodewordArray& damaged,
                         const ErasureSpec& erasures, XorTally& t, CostBreakdown* cost = nullptr);
CodewordArray decode(const CodeParams& params, const CodewordArray& damaged,
                     const ErasureSpec& erasures, XorTally& t, CostBreakdown* cost = nullptr);

}  // namespace arraycode
