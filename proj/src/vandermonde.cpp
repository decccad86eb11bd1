#include "arraycode/vandermonde.hpp"

#include <numeric>
#include <string>

#include "arraycode/errors.hpp"

namespace arraycode {

namespace {

RingPoly binomial(int p, long long a, long long b) {
  return RingPoly::from_exponents(p, {a, b});
}

// (x^a + x^b) g = f, choosing among the two solutions the one with
// g_q = bit.
RingPoly div_binomial_pinned(const RingPoly& f, int a, int b, int q, bool bit, XorTally& t) {
  return div_one_plus_xd_pinned(shift(f, -b), a - b, q, t, bit);
}

std::vector<RingPoly> solve_impl(const ExponentTuple& e, const std::vector<RingPoly>& v,
                                 const std::vector<int>* zero_at, XorTally& t) {
  const int r = e.r();
  const int p = e.p();
  if (static_cast<int>(v.size()) != r) {
    throw ParameterError("right-hand side has " + std::to_string(v.size()) +
                         " components, expected " + std::to_string(r));
  }
  for (const RingPoly& c : v) {
    if (c.p() != p) throw ParameterError("right-hand side over the wrong ring");
  }
  const bool parity = parity_at_one(v.front());
  for (const RingPoly& c : v) {
    if (parity_at_one(c) != parity) {
      throw InputError("right-hand side components differ in parity; not in the image of V");
    }
  }
  if (r == 1) return v;

  // One-based views to mirror the recurrences.
  std::vector<RingPoly> u(r + 1);
  for (int i = 1; i <= r; ++i) u[i] = v[i - 1];
  auto a = [&e](int i) { return e[i - 1]; };

  for (int i = 1; i <= r - 1; ++i) {
    for (int j = r - i + 1; j <= r; ++j) {
      u[j] = add(u[j], shift(u[j - 1], a(i + j - r)), t);
    }
  }

  auto any_form = [&](const RingPoly& f, int num, int den, int target) {
    if (zero_at == nullptr) return div_binomial(f, num, den, false, t);
    const int q = (*zero_at)[target - 1];
    return div_binomial_pinned(f, num, den, q, u[target].coeff(q), t);
  };

  for (int i = r - 1; i >= 1; --i) {
    u[r] = i == 1 ? any_form(u[r], a(r), a(r - i), r - i)
                  : div_binomial(u[r], a(r), a(r - i), true, t);
    for (int j = r - 1; j >= r - i + 1; --j) {
      const RingPoly f = add(u[j], u[j + 1], t);
      u[j] = i + j == r + 1 ? any_form(f, a(j), a(r - i), r - i)
                            : div_binomial(f, a(j), a(r - i), true, t);
    }
    u[r - i] = add(u[r - i], u[r - i + 1], t);
  }
  return {u.begin() + 1, u.end()};
}

}  // namespace

ExponentTuple::ExponentTuple(int p, const std::vector<long long>& exponents) : p_(p) {
  if (p < 3 || p % 2 == 0) throw ParameterError("p must be odd and >= 3");
  if (exponents.empty()) throw ParameterError("exponent tuple must be nonempty");
  for (long long x : exponents) a_.push_back(mod_p(x, p));
  for (std::size_t i = 0; i < a_.size(); ++i) {
    for (std::size_t j = i + 1; j < a_.size(); ++j) {
      const int diff = mod_p(a_[i] - a_[j], p);
      if (diff == 0 || std::gcd(diff, p) != 1) {
        throw ParameterError("exponents " + std::to_string(a_[i]) + " and " +
                             std::to_string(a_[j]) + " differ by a value not coprime to p=" +
                             std::to_string(p));
      }
    }
  }
}

RingMatrix::RingMatrix(int rows, int cols, int p)
    : rows_(rows), cols_(cols), p_(p), entries_(static_cast<std::size_t>(rows) * cols, RingPoly(p)) {}

RingMatrix RingMatrix::identity(int n, int p) {
  RingMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = RingPoly::monomial(p, 0);
  return m;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
  if (a.cols() != b.rows() || a.p() != b.p()) throw ParameterError("matrix shape mismatch");
  RingMatrix out(a.rows(), b.cols(), a.p());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      for (int l = 0; l < a.cols(); ++l) out.at(i, j) ^= mul(a.at(i, l), b.at(l, j));
    }
  }
  return out;
}

RingMatrix build_vandermonde(const ExponentTuple& e) {
  const int r = e.r();
  RingMatrix m(r, r, e.p());
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      m.at(i, j) = RingPoly::monomial(e.p(), static_cast<long long>(j) * e[i]);
    }
  }
  return m;
}

LuFactors lu_factors(const ExponentTuple& e) {
  const int r = e.r();
  const int p = e.p();
  auto a = [&e](int i) { return e[i - 1]; };
  LuFactors out;
  for (int l = 1; l <= r - 1; ++l) {
    RingMatrix m = RingMatrix::identity(r, p);
    const int off = r - l - 1;
    for (int s = 1; s <= l; ++s) {
      m.at(off + s, off + s) = binomial(p, a(r - l + s), a(r - l));
      m.at(off + s, off + s - 1) = RingPoly::monomial(p, 0);
    }
    out.lower.push_back(std::move(m));
  }
  for (int l = r - 1; l >= 1; --l) {
    RingMatrix m = RingMatrix::identity(r, p);
    const int off = r - l - 1;
    for (int s = 1; s <= l; ++s) m.at(off + s - 1, off + s) = RingPoly::monomial(p, a(s));
    out.upper.push_back(std::move(m));
  }
  return out;
}

RingMatrix multiply_factors(const LuFactors& f, int r, int p) {
  RingMatrix prod = RingMatrix::identity(r, p);
  for (const RingMatrix& m : f.lower) prod = prod * m;
  for (const RingMatrix& m : f.upper) prod = prod * m;
  return prod;
}

std::vector<RingPoly> solve_lu(const ExponentTuple& e, const std::vector<RingPoly>& v,
                               XorTally& t) {
  return solve_impl(e, v, nullptr, t);
}

std::vector<RingPoly> solve_lu_pinned(const ExponentTuple& e, const std::vector<RingPoly>& v,
                                      const std::vector<int>& zero_at, XorTally& t) {
  if (static_cast<int>(zero_at.size()) < e.r() - 1) {
    throw ParameterError("one pin position is required per component except the last");
  }
  std::vector<int> pins(zero_at.begin(), zero_at.end());
  for (int& q : pins) q = mod_p(q, e.p());
  return solve_impl(e, v, &pins, t);
}

QuotientMatrix::QuotientMatrix(int n, int p)
    : n_(n), p_(p), entries_(static_cast<std::size_t>(n) * n, QuotientPoly(p)) {}

QuotientMatrix QuotientMatrix::minor_matrix(int row, int col) const {
  QuotientMatrix m(n_ - 1, p_);
  for (int i = 0, mi = 0; i < n_; ++i) {
    if (i == row) continue;
    for (int j = 0, mj = 0; j < n_; ++j) {
      if (j == col) continue;
      m.at(mi, mj++) = at(i, j);
    }
    ++mi;
  }
  return m;
}

QuotientPoly determinant(const QuotientMatrix& m) {
  const int n = m.size();
  if (n == 0) return QuotientPoly::one(m.p());
  if (n == 1) return m.at(0, 0);
  // Characteristic 2: cofactor signs vanish.
  QuotientPoly det(m.p());
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    det = det + m.at(0, j) * determinant(m.minor_matrix(0, j));
  }
  return det;
}

std::optional<QuotientMatrix> invert(const QuotientMatrix& m) {
  const int n = m.size();
  const auto det_inv = inverse(determinant(m));
  if (!det_inv) return std::nullopt;
  QuotientMatrix out(n, m.p());
  if (n == 1) {
    out.at(0, 0) = *det_inv;
    return out;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.at(i, j) = determinant(m.minor_matrix(j, i)) * *det_inv;
  }
  return out;
}

std::optional<std::vector<QuotientPoly>> solve_row_system(const QuotientMatrix& m,
                                                          const std::vector<QuotientPoly>& v) {
  const int n = m.size();
  if (static_cast<int>(v.size()) != n) throw ParameterError("system size mismatch");
  const auto inv = invert(m);
  if (!inv) return std::nullopt;
  std::vector<QuotientPoly> u(n, QuotientPoly(m.p()));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (!v[i].is_zero()) u[j] = u[j] + v[i] * inv->at(i, j);
    }
  }
  return u;
}

std::vector<QuotientPoly> solve_cramer(const ExponentTuple& e, const std::vector<QuotientPoly>& v) {
  const int r = e.r();
  QuotientMatrix m(r, e.p());
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      m.at(i, j) = QuotientPoly::from_ring(RingPoly::monomial(e.p(), static_cast<long long>(j) * e[i]));
    }
  }
  auto u = solve_row_system(m, v);
  if (!u) throw ParameterError("Vandermonde determinant is not invertible modulo M_p(x)");
  return *u;
}

}  // namespace arraycode
