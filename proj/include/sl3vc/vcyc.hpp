#pragma once

#include <cstddef>
#include <vector>

#include "sl3vc/spectra.hpp"

namespace sl3vc {

// Commensurability classes of infinite cyclic subgroups of SL(3,Z).
//   I1  : no unit-root eigenvalue, one real eigenvalue and a complex pair
//   I1t : exactly one unit-root eigenvalue (+1 or -1)
//   I2  : no unit-root eigenvalue, three distinct real eigenvalues
//   I2t : quasi-unipotent, normalized power regular unipotent ((B-I)^2 != 0)
//   I3  : quasi-unipotent, normalized power of rank one ((B-I)^2 = 0)
enum class ClassTag { I1, I1t, I2, I2t, I3 };

const char* to_string(ClassTag t);

struct Classification {
  ClassTag tag;
  int normalization_power; // k from power_normalize (1 or 2)
  SpectralType spectral;
};

// Classifies an infinite-order element of SL(3,Z).  Throws FiniteOrder /
// NotSpecialLinear on inadmissible input.
Classification classify(const IntMat& A);

// Infinite cyclic subgroup of SL(3,Z), represented by a generator.
// Construction validates det = 1 and infinite order.
struct CyclicSubgroup {
  IntMat gen;
  explicit CyclicSubgroup(IntMat g);
};

// --- unipotent machinery ----------------------------------------------------

// log B = N - N^2/2 for unipotent B = I + N; exp(log B) = B exactly.
RatMat nilpotent_log(const IntMat& B);

// True iff B is unipotent, B != I and (B - I)^2 = 0, i.e. B is conjugate to
// a power of the elementary matrix E13.
bool is_center_conjugable(const IntMat& B);

// Conjugates a nontrivial unipotent B to upper unitriangular form:
// T = P^-1 B P with P in SL(3,Z).  When (B-I)^2 = 0, T is exactly E13(c)
// with c > 0 the content of B - I.
struct UnipotentConjugation {
  IntMat P;
  IntMat T;
};
UnipotentConjugation conjugate_unipotent(const IntMat& B);

// Hirsch length of the group generated by unipotent matrices, via the
// bracket closure of their logarithms.  Throws NotUnipotent when either a
// generator is not unipotent or the generated group is not unipotent.
std::size_t hirsch_length_unipotent(const std::vector<IntMat>& gens);

} // namespace sl3vc
