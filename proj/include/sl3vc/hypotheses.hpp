#pragma once

#include <cstddef>
#include <vector>

#include "sl3vc/matrix.hpp"
#include "sl3vc/parallel.hpp"

namespace sl3vc {

// Rational characteristic polynomial, constant term first (division-free,
// any commutative coefficient ring would do).
std::vector<Rat> charpoly_rat(const RatMat& A);

// Checks the integrality hypothesis: every element of the group generated
// by `gens` inside GL(3,Q) should have an integer characteristic
// polynomial.  Walks all reduced words up to `length`, deduplicating by
// matrix value, and reports the shortlex-first violation if one exists.
// Generators must be invertible (SingularGenerator otherwise).
struct IntegralCharReport {
  bool pass = true;
  std::vector<int> violation_word; // signed 1-based generator indices
  std::vector<Rat> violation_poly; // charpoly of the offending element
  std::size_t distinct_elements = 0;
  std::size_t length_reached = 0;
  bool saturated = false; // ball closed before the length bound
};
IntegralCharReport integral_char_check(const std::vector<RatMat>& gens,
                                       std::size_t length,
                                       Parallelism par = Parallelism::parallel);

// Hirsch-length hypothesis data for a unipotent generator set.
struct HirschReport {
  std::size_t hirsch_length = 0;
  std::size_t generator_count = 0;
  std::size_t ambient_ceiling = 3; // dim of the full unitriangular group
};
HirschReport unipotent_hirsch_report(const std::vector<IntMat>& gens);

} // namespace sl3vc
