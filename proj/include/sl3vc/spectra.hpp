#pragma once

#include <vector>

#include "sl3vc/exact.hpp"
#include "sl3vc/matrix.hpp"

namespace sl3vc {

// Eigenvalue structure of an element of SL(3,Z), computed exactly from the
// characteristic polynomial.  Every root of unity that can occur as an
// eigenvalue of a 3 x 3 integer matrix has order in {1,2,3,4,6}, so stripping
// the cyclotomic factors Phi_1, Phi_2, Phi_3, Phi_4, Phi_6 accounts for all
// of them.
struct SpectralType {
  CharPoly poly;                      // det(xI - A)
  std::vector<int> cyclotomic_orders; // orders of cyclotomic factors, with multiplicity
  std::vector<Int> noncyclotomic;     // residual monic factor, constant term first
  int unit_root_count = 0;            // eigenvalues that are roots of unity (0, 1 or 3)
  Int discriminant = 0;               // discriminant of the cubic
};

SpectralType spectral_type(const IntMat& A);

// Order of A in SL(3,Z) if finite (a divisor of 12), 0 otherwise.
int finite_order(const IntMat& A);
inline bool is_finite_order(const IntMat& A) { return finite_order(A) != 0; }

// Smallest k >= 1 such that every root-of-unity eigenvalue of A^k equals 1.
// For infinite-order elements of SL(3,Z) this is 1 or 2.
struct PowerNormalized {
  int k;
  IntMat power; // A^k
};
PowerNormalized power_normalize(const IntMat& A);

// Constant-first coefficients of the cyclotomic polynomial Phi_k for the
// orders that matter here (k in {1,2,3,4,6}).
const std::vector<Int>& cyclotomic(int k);

} // namespace sl3vc
