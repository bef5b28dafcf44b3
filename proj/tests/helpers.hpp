#pragma once

#include <random>
#include <vector>

#include "sl3vc/exact.hpp"
#include "sl3vc/matrix.hpp"

namespace testutil {

using sl3vc::Int;
using sl3vc::IntMat;
using sl3vc::Rat;
using sl3vc::RatMat;

inline IntMat eij(std::size_t i, std::size_t j, const Int& c,
                  std::size_t n = 3) {
  IntMat m = IntMat::identity(n);
  m(i, j) = c;
  return m;
}

// Companion matrix of x^3 + c2 x^2 + c1 x + c0.
inline IntMat companion3(const Int& c0, const Int& c1, const Int& c2) {
  IntMat m(3, 3);
  m(1, 0) = 1;
  m(2, 1) = 1;
  m(0, 2) = -c0;
  m(1, 2) = -c1;
  m(2, 2) = -c2;
  return m;
}

// Random element of SL(n,Z) as a product of elementary transvections.
inline IntMat random_unimodular(std::mt19937_64& rng, int factors = 6,
                                int amp = 2, std::size_t n = 3) {
  IntMat m = IntMat::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> val(-amp, amp);
  int used = 0;
  while (used < factors) {
    std::size_t i = idx(rng), j = idx(rng);
    int c = val(rng);
    if (i == j || c == 0) continue;
    m = m * eij(i, j, c, n);
    ++used;
  }
  return m;
}

inline IntMat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c,
                            int amp = 5) {
  IntMat m(r, c);
  std::uniform_int_distribution<int> val(-amp, amp);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = val(rng);
  return m;
}

// Determinant by the 6-term permutation formula, independent of the library
// elimination code.
inline Int det3_perm(const IntMat& a) {
  return a(0, 0) * a(1, 1) * a(2, 2) + a(0, 1) * a(1, 2) * a(2, 0) +
         a(0, 2) * a(1, 0) * a(2, 1) - a(0, 2) * a(1, 1) * a(2, 0) -
         a(0, 0) * a(1, 2) * a(2, 1) - a(0, 1) * a(1, 0) * a(2, 2);
}

} // namespace testutil
