#include "arraycode/ring.hpp"

#include <bit>
#include <numeric>
#include <vector>

#include "arraycode/errors.hpp"

namespace arraycode {

namespace {

void require_odd_p(int p) {
  if (p < 3 || p % 2 == 0) {
    throw ParameterError("p must be an odd integer >= 3, got " + std::to_string(p));
  }
}

void require_same_p(const RingPoly& a, const RingPoly& b) {
  if (a.p() != b.p()) {
    throw ParameterError("ring elements over different p (" + std::to_string(a.p()) +
                         " vs " + std::to_string(b.p()) + ")");
  }
}

// Returns d reduced into [1, p) after checking gcd(d, p) = 1.
int checked_divisor_exponent(long long d, int p) {
  const int dm = mod_p(d, p);
  if (dm == 0) throw ParameterError("division by 1 + x^d with d = 0 mod p");
  if (std::gcd(dm, p) != 1) {
    throw ParameterError("division by 1 + x^d with gcd(d, p) = " +
                         std::to_string(std::gcd(dm, p)));
  }
  return dm;
}

void require_even(const RingPoly& f) {
  if (parity_at_one(f)) {
    throw InputError("dividend has an odd number of terms; (1 + x^d) g = f has no solution");
  }
}

// Polynomials over F2 with unbounded degree; only used for extended Euclid.
using Gf2x = std::vector<std::uint8_t>;

void trim(Gf2x& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Gf2x& a) { return static_cast<int>(a.size()) - 1; }

Gf2x gx_add(const Gf2x& a, const Gf2x& b) {
  Gf2x out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] ^= a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] ^= b[i];
  trim(out);
  return out;
}

Gf2x gx_mul(const Gf2x& a, const Gf2x& b) {
  if (a.empty() || b.empty()) return {};
  Gf2x out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= b[j];
  }
  trim(out);
  return out;
}

void gx_divmod(Gf2x a, const Gf2x& b, Gf2x& quotient, Gf2x& remainder) {
  const int db = degree(b);
  quotient.assign(std::max(0, degree(a) - db + 1), 0);
  while (degree(a) >= db) {
    const int shift_by = degree(a) - db;
    quotient[shift_by] = 1;
    for (int j = 0; j <= db; ++j) a[shift_by + j] ^= b[j];
    trim(a);
  }
  trim(quotient);
  remainder = std::move(a);
}

Gf2x to_gx(const RingPoly& a) {
  Gf2x out(a.p(), 0);
  for (int i = 0; i < a.p(); ++i) out[i] = a.coeff(i);
  trim(out);
  return out;
}

}  // namespace

int mod_p(long long value, int p) noexcept {
  const long long m = value % p;
  return static_cast<int>(m < 0 ? m + p : m);
}

RingPoly::RingPoly(int p) : p_(p) {
  require_odd_p(p);
  words_.assign((p + 63) / 64, 0);
}

RingPoly RingPoly::monomial(int p, long long exponent) {
  RingPoly out(p);
  out.set_coeff(mod_p(exponent, p), true);
  return out;
}

RingPoly RingPoly::from_exponents(int p, std::initializer_list<long long> exponents) {
  RingPoly out(p);
  for (long long e : exponents) out.flip(mod_p(e, p));
  return out;
}

RingPoly RingPoly::all_ones(int p) {
  RingPoly out(p);
  for (int i = 0; i < p; ++i) out.set_coeff(i, true);
  return out;
}

void RingPoly::set_coeff(int i, bool value) noexcept {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

bool RingPoly::is_zero() const noexcept {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

int RingPoly::weight() const noexcept {
  int n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

RingPoly& RingPoly::operator^=(const RingPoly& other) {
  require_same_p(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::string RingPoly::to_string() const {
  std::string out;
  for (int i = 0; i < p_; ++i) {
    if (!coeff(i)) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else if (i == 1) {
      out += 'x';
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

QuotientPoly QuotientPoly::from_ring(const RingPoly& a) {
  XorTally ignored;
  return QuotientPoly(reduce_mod_mp(a, ignored));
}

QuotientPoly operator+(const QuotientPoly& a, const QuotientPoly& b) {
  RingPoly sum = a.as_ring();
  sum ^= b.as_ring();
  return QuotientPoly::from_ring(sum);
}

QuotientPoly operator*(const QuotientPoly& a, const QuotientPoly& b) {
  // M_p divides 1 + x^p, so reducing the cyclic product is exact.
  return QuotientPoly::from_ring(mul(a.as_ring(), b.as_ring()));
}

std::optional<QuotientPoly> inverse(const QuotientPoly& a) {
  const int p = a.p();
  const Gf2x modulus(p, 1);
  Gf2x r0 = modulus;
  Gf2x r1 = to_gx(a.as_ring());
  Gf2x s0;
  Gf2x s1{1};
  while (!r1.empty()) {
    Gf2x q;
    Gf2x rem;
    gx_divmod(r0, r1, q, rem);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Gf2x s_next = gx_add(s0, gx_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s_next);
  }
  if (r0 != Gf2x{1}) return std::nullopt;
  Gf2x q;
  Gf2x rem;
  gx_divmod(s0, modulus, q, rem);
  RingPoly out(p);
  for (std::size_t i = 0; i < rem.size(); ++i) out.set_coeff(static_cast<int>(i), rem[i]);
  return QuotientPoly::from_ring(out);
}

RingPoly add(const RingPoly& a, const RingPoly& b, XorTally& t) {
  RingPoly out = a;
  out ^= b;
  t.charge(a.p());
  return out;
}

RingPoly add_shifted_column(const RingPoly& acc, const RingPoly& column, long long d,
                            XorTally& t) {
  RingPoly out = acc;
  out ^= shift(column, d);
  t.charge(acc.p() - 1);
  return out;
}

RingPoly shift(const RingPoly& a, long long d) {
  const int p = a.p();
  const int s = mod_p(d, p);
  if (s == 0) return a;
  if (p <= 64) {
    const std::uint64_t mask = p == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p) - 1;
    const std::uint64_t w = a.word(0);
    RingPoly out(p);
    out.set_word(0, ((w << s) | (w >> (p - s))) & mask);
    return out;
  }
  RingPoly out(p);
  for (int i = 0; i < p; ++i) {
    if (a.coeff(i)) out.set_coeff(i + s < p ? i + s : i + s - p, true);
  }
  return out;
}

RingPoly mul(const RingPoly& a, const RingPoly& b) {
  require_same_p(a, b);
  const int p = a.p();
  RingPoly out(p);
  for (int i = 0; i < p; ++i) {
    if (!a.coeff(i)) continue;
    for (int j = 0; j < p; ++j) {
      if (b.coeff(j)) out.flip((i + j) % p);
    }
  }
  return out;
}

bool parity_at_one(const RingPoly& a) noexcept { return a.weight() & 1; }

RingPoly reduce_mod_mp(const RingPoly& a, XorTally& t) {
  const int p = a.p();
  if (!a.top()) return a;
  RingPoly out = a;
  for (int i = 0; i < p - 1; ++i) out.flip(i);
  out.set_coeff(p - 1, false);
  t.charge(p - 1);
  return out;
}

RingPoly div_one_plus_xd_pinned(const RingPoly& f, long long d, int pinned_at, XorTally& t,
                                bool pinned_value) {
  const int p = f.p();
  const int dm = checked_divisor_exponent(d, p);
  require_even(f);
  // Walk the chain q, q - d, q - 2d, ... from the pinned coefficient; each
  // step follows from f_i = g_i + g_{i-d}. The first and last links involve
  // the constant pinned value and are copies (complemented when it is 1).
  const int q = mod_p(pinned_at, p);
  RingPoly g(p);
  g.set_coeff(q, pinned_value);
  int prev = q;
  int cur = mod_p(prev - dm, p);
  g.set_coeff(cur, f.coeff(prev) ^ pinned_value);
  for (int step = 1; step <= p - 3; ++step) {
    prev = cur;
    cur = mod_p(prev - dm, p);
    g.set_coeff(cur, f.coeff(prev) ^ g.coeff(prev));
  }
  t.charge(p - 3);
  g.set_coeff(mod_p(q + dm, p), f.coeff(mod_p(q + dm, p)) ^ pinned_value);
  return g;
}

RingPoly div_one_plus_xd_any(const RingPoly& f, long long d, XorTally& t) {
  return div_one_plus_xd_pinned(f, d, f.p() - 1, t);
}

RingPoly div_one_plus_xd_even(const RingPoly& f, long long d, XorTally& t) {
  const int p = f.p();
  const int dm = checked_divisor_exponent(d, p);
  require_even(f);
  RingPoly g(p);
  bool g0 = false;
  for (int l = 1; l <= (p - 1) / 2; ++l) g0 ^= f.coeff(mod_p(2LL * l * dm, p));
  g.set_coeff(0, g0);
  for (int l = 1; l <= p - 1; ++l) {
    const int idx = mod_p(static_cast<long long>(dm) * l, p);
    const int prev = mod_p(static_cast<long long>(dm) * (l - 1), p);
    g.set_coeff(idx, f.coeff(idx) ^ g.coeff(prev));
  }
  t.charge((p - 1) / 2 - 1 + (p - 1));
  return g;
}

RingPoly div_binomial(const RingPoly& f, long long a, long long b, bool even_required,
                      XorTally& t) {
  const RingPoly h = shift(f, -b);
  return even_required ? div_one_plus_xd_even(h, a - b, t) : div_one_plus_xd_any(h, a - b, t);
}

}  // namespace arraycode
