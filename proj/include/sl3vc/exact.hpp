#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sl3vc/matrix.hpp"

namespace sl3vc {

// Monic polynomial with integer coefficients, constant term first:
// c[0] + c[1] x + ... + c[deg] x^deg, c[deg] = 1.
struct CharPoly {
  std::vector<Int> c;

  std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
  Rat eval(const Rat& x) const;
  Int eval(const Int& x) const;

  bool operator==(const CharPoly& o) const { return c == o.c; }
  std::string str() const;
};

// Characteristic polynomial det(xI - A).  Cofactor expansion (sums of
// principal minors) for n <= 4, division-free Samuelson-Berkowitz beyond.
CharPoly charpoly(const IntMat& A);

// Determinant of an integer matrix, fraction-free (Bareiss).
Int det(const IntMat& A);

// Determinant and inverse over Q.  The inverse is nullopt iff det = 0.
std::pair<Rat, std::optional<RatMat>> det_inv(const RatMat& A);

// P A P^-1 for P in GL(n,Z).  Throws NotSpecialLinear when det(P) != +-1.
IntMat conjugate(const IntMat& A, const IntMat& P);

// A^k with binary exponentiation; k < 0 requires det(A) = +-1.
IntMat matrix_pow(const IntMat& A, long long k);

// Inverse of a matrix with det +-1 (integral by Cramer).
IntMat inverse_unimodular(const IntMat& A);

// Smith normal form U*A*V = D with U, V unimodular and D diagonal with
// nonnegative entries d1 | d2 | ... | dr.  A may be rectangular.
struct SmithResult {
  IntMat U, D, V;
  std::vector<Int> divisors() const;
};
SmithResult smith_normal_form(const IntMat& A);

// Rank over Q.
std::size_t rank(const IntMat& A);
std::size_t rank(const RatMat& A);

// Unique solution x of A x = b when it exists (A square, b a column).
std::optional<RatMat> solve(const RatMat& A, const RatMat& b);

// --- lattice utilities -----------------------------------------------------

// Divides out the gcd of the entries; the zero vector is returned unchanged.
std::vector<Int> primitive(const std::vector<Int>& v);

// Basis (as columns) of the saturated kernel lattice ker(A) cap Z^n.
IntMat kernel_saturated(const IntMat& A);

// Given an n x k matrix B whose columns are a basis of a saturated rank-k
// sublattice of Z^n, returns a unimodular n x n matrix whose first k columns
// are exactly the columns of B.  Throws InvalidInput otherwise.
IntMat complete_to_unimodular(const IntMat& B);

// --- polynomial utilities ---------------------------------------------------

// Exact division over Z: returns q with a = q*b when it exists.
// Coefficient vectors are constant-first; b must be nonzero.
std::optional<std::vector<Int>> poly_try_divide(const std::vector<Int>& a,
                                                const std::vector<Int>& b);

namespace detail {

// Samuelson-Berkowitz characteristic polynomial, division-free, valid over
// any commutative ring.  Coefficients returned highest-degree first.
template <typename T>
std::vector<T> berkowitz(const Mat<T>& A) {
  const std::size_t n = A.rows();
  std::vector<T> p{T(1)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<T> t(i + 2);
    t[0] = T(1);
    t[1] = -A(i, i);
    std::vector<T> v(i);
    for (std::size_t r = 0; r < i; ++r) v[r] = A(r, i);
    for (std::size_t k = 2; k < i + 2; ++k) {
      T s(0);
      for (std::size_t r = 0; r < i; ++r) s += A(i, r) * v[r];
      t[k] = -s;
      if (k < i + 1) {
        std::vector<T> w(i);
        for (std::size_t r = 0; r < i; ++r) {
          T acc(0);
          for (std::size_t c2 = 0; c2 < i; ++c2) acc += A(r, c2) * v[c2];
          w[r] = acc;
        }
        v.swap(w);
      }
    }
    std::vector<T> q(i + 2, T(0));
    for (std::size_t j = 0; j < q.size(); ++j)
      for (std::size_t k = 0; k <= j && k < t.size(); ++k)
        if (j - k < p.size()) q[j] += t[k] * p[j - k];
    p.swap(q);
  }
  return p;
}

} // namespace detail

} // namespace sl3vc
