#pragma once

// EVENODD(p,k,r;g) and RDP(p,k,r;g) array codes. A stripe is stored as k+r
// columns of p-1 bits; each column is held as a RingPoly whose coefficient
// of x^{p-1} (the imaginary row) is zero. Augmented arrays use the full p
// rows.

#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "arraycode/ring.hpp"

namespace arraycode {

enum class Family { Evenodd, Rdp };

std::string family_name(Family f);
Family parse_family(const std::string& name);

struct CodeParams {
  Family family = Family::Evenodd;
  int p = 0;
  int k = 0;
  int r = 0;
  // k entries for EVENODD, k+1 for RDP (the last one weights the row-parity
  // column).
  std::vector<int> g;
  bool mds_mode = false;

  int columns() const noexcept { return k + r; }
  int g_len() const noexcept { return family == Family::Rdp ? k + 1 : k; }

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

std::vector<int> default_g(Family family, int k);

bool is_prime(int n);
// True when 2 generates the multiplicative group mod p.
bool two_is_primitive(int p);

// Throws ParameterError naming the first violated constraint.
void validate(const CodeParams& params);

// Builds and validates parameters; g defaults to 0, 1, 2, ...
CodeParams make_params(Family family, int p, int k, int r,
                       std::optional<std::vector<int>> g = std::nullopt, bool mds_mode = false);

struct CodewordArray {
  CodeParams params;
  std::vector<RingPoly> cols;

  bool bit(int row, int col) const { return cols[col].coeff(row); }
  void set_bit(int row, int col, bool v) { cols[col].set_coeff(row, v); }

  friend bool operator==(const CodewordArray&, const CodewordArray&) = default;
};

struct AugmentedArray {
  CodeParams params;
  std::vector<RingPoly> cols;

  bool bit(int row, int col) const { return cols[col].coeff(row); }

  friend bool operator==(const AugmentedArray&, const AugmentedArray&) = default;
};

// k information columns drawn uniformly, imaginary row zero.
std::vector<RingPoly> random_info(const CodeParams& params, std::mt19937_64& rng);

// XORs charged for computing parity column k+ell by its defining equations:
// one less than the number of non-imaginary terms per output bit, the
// EVENODD adjuster counted as one term of every diagonal bit.
std::uint64_t parity_column_cost(const CodeParams& params, int ell);

// Parity column k+ell of the stored array (p-1 rows).
RingPoly encode_parity_column(const CodeParams& params, std::span<const RingPoly> info, int ell,
                              XorTally& t);

CodewordArray encode_evenodd(const CodeParams& params, std::span<const RingPoly> info,
                             XorTally& t);
CodewordArray encode_rdp(const CodeParams& params, std::span<const RingPoly> info, XorTally& t);
CodewordArray encode(const CodeParams& params, std::span<const RingPoly> info, XorTally& t);

// EVENODD: adds the adjuster back into every bit of the listed diagonal
// parity columns (all of k+1..k+r-1 when empty). Column k must be present.
AugmentedArray augment_evenodd(const CodewordArray& c, XorTally& t,
                               std::span<const int> parity_cols = {});
// RDP: sets row p-1 of the listed parity columns to the column sum.
AugmentedArray augment_rdp(const CodewordArray& c, XorTally& t,
                           std::span<const int> parity_cols = {});
AugmentedArray augment(const CodewordArray& c, XorTally& t, std::span<const int> parity_cols = {});

CodewordArray deaugment(const AugmentedArray& a, XorTally& t);

// Parity polynomials as sums of x^{ell g(j)} * column_j over R_p.
AugmentedArray algebraic_encode(const CodeParams& params, std::span<const RingPoly> info);

// Augmented EVENODD(p,k+1,r) array of info extended by its row sum, with
// column k+1 deleted.
AugmentedArray shortened_evenodd(const CodeParams& evenodd_params, std::span<const RingPoly> info);
bool shorten_matches(const CodeParams& evenodd_params, std::span<const RingPoly> info,
                     const AugmentedArray& rdp_augmented);
bool shorten_check(const CodeParams& evenodd_params, const CodeParams& rdp_params,
                   std::span<const RingPoly> info);

struct MdsReport {
  bool mds = true;
  // First surviving-column set (columns erased) that failed, if any.
  std::vector<int> witness_erased;
  std::size_t patterns_checked = 0;
};

// Brute force: every pattern of r erased columns must have an invertible
// sub-system and must round-trip random stripes through the generic decoder.
MdsReport mds_check(const CodeParams& params, std::size_t max_patterns = 0,
                    int stripes_per_pattern = 4, std::uint64_t seed = 1);

}  // namespace arraycode
