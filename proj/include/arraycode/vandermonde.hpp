#pragma once

// Square Vandermonde systems u * V(a) = v over R_p, where V has entry
// (i, j) = x^{j * a_i}: the bidiagonal LU factorization, the fast solver and
// a Cramer's-rule solver over F2[x]/M_p(x).

#include <optional>
#include <vector>

#include "arraycode/ring.hpp"

namespace arraycode {

// Exponents a_1..a_r reduced into [0, p). Pairwise differences must be
// nonzero and coprime to p.
class ExponentTuple {
 public:
  ExponentTuple(int p, const std::vector<long long>& exponents);

  int p() const noexcept { return p_; }
  int r() const noexcept { return static_cast<int>(a_.size()); }
  // Zero-based: operator[](0) is a_1.
  int operator[](int i) const noexcept { return a_[i]; }
  const std::vector<int>& values() const noexcept { return a_; }

 private:
  int p_;
  std::vector<int> a_;
};

class RingMatrix {
 public:
  RingMatrix(int rows, int cols, int p);

  static RingMatrix identity(int n, int p);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int p() const noexcept { return p_; }
  RingPoly& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const RingPoly& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  friend bool operator==(const RingMatrix&, const RingMatrix&) = default;

 private:
  int rows_;
  int cols_;
  int p_;
  std::vector<RingPoly> entries_;
};

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);

RingMatrix build_vandermonde(const ExponentTuple& e);

struct LuFactors {
  // L^(1), ..., L^(r-1)
  std::vector<RingMatrix> lower;
  // U^(r-1), ..., U^(1)
  std::vector<RingMatrix> upper;
};

// V = L^(1) ... L^(r-1) U^(r-1) ... U^(1).
LuFactors lu_factors(const ExponentTuple& e);

// Product of all factors in the order above; identity when r = 1.
RingMatrix multiply_factors(const LuFactors& f, int r, int p);

// Solves u * V(e) = v with the LU recurrences. Components u_2..u_r come out
// with a zero coefficient of x^{p-1} whenever a solution exists.
std::vector<RingPoly> solve_lu(const ExponentTuple& e, const std::vector<RingPoly>& v,
                               XorTally& t);

// Same loops and cost, but each any-form division keeps the solution that
// makes u_i vanish at zero_at[i] for i < r-1 (zero-based). The last
// component is left unpinned. With every pin at p-1 this is solve_lu.
std::vector<RingPoly> solve_lu_pinned(const ExponentTuple& e, const std::vector<RingPoly>& v,
                                      const std::vector<int>& zero_at, XorTally& t);

class QuotientMatrix {
 public:
  QuotientMatrix(int n, int p);

  int size() const noexcept { return n_; }
  int p() const noexcept { return p_; }
  QuotientPoly& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  const QuotientPoly& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * n_ + j];
  }

  QuotientMatrix minor_matrix(int row, int col) const;

 private:
  int n_;
  int p_;
  std::vector<QuotientPoly> entries_;
};

QuotientPoly determinant(const QuotientMatrix& m);

// Adjugate divided by the determinant; nullopt when det(M) is not a unit.
std::optional<QuotientMatrix> invert(const QuotientMatrix& m);

// Solves u * M = v over F2[x]/M_p(x) via the adjugate; nullopt when det(M)
// is not a unit.
std::optional<std::vector<QuotientPoly>> solve_row_system(const QuotientMatrix& m,
                                                          const std::vector<QuotientPoly>& v);

std::vector<QuotientPoly> solve_cramer(const ExponentTuple& e, const std::vector<QuotientPoly>& v);

}  // namespace arraycode
