#include <random>

#include "arraycode/codes.hpp"
#include "arraycode/decoder.hpp"
#include "arraycode/errors.hpp"

namespace arraycode {

MdsReport mds_check(const CodeParams& params, std::size_t max_patterns, int stripes_per_pattern,
                    std::uint64_t seed) {
  validate(params);
  MdsReport report;
  std::mt19937_64 rng(seed);
  const int n = params.columns();
  const int r = params.r;
  std::vector<int> erased(r);
  for (int i = 0; i < r; ++i) erased[i] = i;
  while (true) {
    if (max_patterns != 0 && report.patterns_checked >= max_patterns) break;
    ++report.patterns_checked;
    const ErasureSpec spec = ErasureSpec::from_columns(params, erased);
    bool ok = plan_fallback(params, spec).has_value();
    if (ok) {
      const StripeDecoder decoder(params, spec, std::nullopt, true);
      for (int s = 0; s < stripes_per_pattern && ok; ++s) {
        XorTally t;
        const CodewordArray original = encode(params, random_info(params, rng), t);
        CodewordArray damaged = original;
        for (int c : erased) damaged.cols[c] = RingPoly(params.p);
        ok = decoder.decode(damaged, t) == original;
      }
    }
    if (!ok) {
      report.mds = false;
      report.witness_erased = erased;
      break;
    }
    int pos = r - 1;
    while (pos >= 0 && erased[pos] == n - r + pos) --pos;
    if (pos < 0) break;
    ++erased[pos];
    for (int i = pos + 1; i < r; ++i) erased[i] = erased[i - 1] + 1;
  }
  return report;
}

}  // namespace arraycode
