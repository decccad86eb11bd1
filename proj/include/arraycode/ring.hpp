#pragma once

// Arithmetic in R_p = F2[x]/(1+x^p) and its quotient F2[x]/M_p(x),
// M_p(x) = 1 + x + ... + x^{p-1}.
//
// XOR accounting: every tallied operation charges the number of bit-level
// XORs it performs. Adding two length-L sequences costs L; copies and cyclic
// shifts are free.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>

#include <boost/container/small_vector.hpp>

namespace arraycode {

struct XorTally {
  std::uint64_t count = 0;

  void charge(std::uint64_t n) noexcept { count += n; }
};

// Reduces an arbitrary integer into [0, p).
int mod_p(long long value, int p) noexcept;

// An element of R_p, stored as p packed coefficient bits (bit i is the
// coefficient of x^i). p must be odd and at least 3.
class RingPoly {
 public:
  RingPoly() = default;
  explicit RingPoly(int p);

  static RingPoly monomial(int p, long long exponent);
  static RingPoly from_exponents(int p, std::initializer_list<long long> exponents);
  // M_p(x), the all-ones polynomial.
  static RingPoly all_ones(int p);

  int p() const noexcept { return p_; }
  bool coeff(int i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set_coeff(int i, bool value) noexcept;
  void flip(int i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  bool top() const noexcept { return coeff(p_ - 1); }

  // Raw packed storage, 64 coefficients per word.
  std::uint64_t word(int w) const noexcept { return words_[w]; }
  void set_word(int w, std::uint64_t value) noexcept { words_[w] = value; }

  bool is_zero() const noexcept;
  int weight() const noexcept;

  // Untallied in-place XOR; for oracles and bookkeeping outside the counted paths.
  RingPoly& operator^=(const RingPoly& other);

  std::string to_string() const;

  friend bool operator==(const RingPoly& a, const RingPoly& b) {
    return a.p_ == b.p_ && a.words_ == b.words_;
  }

 private:
  int p_ = 0;
  boost::container::small_vector<std::uint64_t, 2> words_;
};

// Residue modulo M_p(x): p-1 coefficients, always canonical.
class QuotientPoly {
 public:
  QuotientPoly() = default;
  explicit QuotientPoly(int p) : poly_(p) {}

  // Canonical residue of a ring element (untallied).
  static QuotientPoly from_ring(const RingPoly& a);
  static QuotientPoly one(int p) { return from_ring(RingPoly::monomial(p, 0)); }

  int p() const noexcept { return poly_.p(); }
  bool coeff(int i) const noexcept { return poly_.coeff(i); }
  bool is_zero() const noexcept { return poly_.is_zero(); }
  // Embedding into R_p with a zero coefficient of x^{p-1}.
  const RingPoly& as_ring() const noexcept { return poly_; }
  std::string to_string() const { return poly_.to_string(); }

  friend bool operator==(const QuotientPoly&, const QuotientPoly&) = default;

 private:
  explicit QuotientPoly(RingPoly canonical) : poly_(std::move(canonical)) {}
  RingPoly poly_;
};

QuotientPoly operator+(const QuotientPoly& a, const QuotientPoly& b);
QuotientPoly operator*(const QuotientPoly& a, const QuotientPoly& b);
// Multiplicative inverse modulo M_p(x) via extended Euclid; nullopt when
// gcd(a, M_p) != 1.
std::optional<QuotientPoly> inverse(const QuotientPoly& a);

RingPoly add(const RingPoly& a, const RingPoly& b, XorTally& t);

// acc + x^d * column where column is a stored (p-1)-row column (zero
// coefficient of x^{p-1}); costs p-1.
RingPoly add_shifted_column(const RingPoly& acc, const RingPoly& column, long long d,
                            XorTally& t);

// Multiplication by x^d; free.
RingPoly shift(const RingPoly& a, long long d);

// Schoolbook product; not tallied, never on a decode path.
RingPoly mul(const RingPoly& a, const RingPoly& b);

// a(1): parity of the number of nonzero terms.
bool parity_at_one(const RingPoly& a) noexcept;

// c_i <- c_i + c_{p-1} for i < p-1, then c_{p-1} <- 0. Costs p-1 when the
// top coefficient is set, nothing otherwise.
RingPoly reduce_mod_mp(const RingPoly& a, XorTally& t);

// Solves (1 + x^d) g = f with g_{p-1} = 0. Costs p-3.
RingPoly div_one_plus_xd_any(const RingPoly& f, long long d, XorTally& t);

// Same recurrence started from g_{pinned_at} = pinned_value instead of
// g_{p-1} = 0. Costs p-3.
RingPoly div_one_plus_xd_pinned(const RingPoly& f, long long d, int pinned_at, XorTally& t,
                                bool pinned_value = false);

// Solves (1 + x^d) g = f with g(1) = 0. Costs (3p-5)/2.
RingPoly div_one_plus_xd_even(const RingPoly& f, long long d, XorTally& t);

// Solves (x^a + x^b) g = f by shifting f by -b and dividing by 1 + x^{a-b}.
RingPoly div_binomial(const RingPoly& f, long long a, long long b, bool even_required,
                      XorTally& t);

}  // namespace arraycode
