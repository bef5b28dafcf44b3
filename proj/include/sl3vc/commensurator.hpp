#pragma once

#include <string>
#include <vector>

#include "sl3vc/parallel.hpp"
#include "sl3vc/vcyc.hpp"

namespace sl3vc {

struct SearchBound {
  int power_bound = 12; // exponent window for bounded relation searches
  int entry_bound = 3;  // sup-norm box for matrix enumeration
};

enum class Verdict { yes, no, unknown };

const char* to_string(Verdict v);

// Result of a commensurability question.  For `commensurable`, a yes comes
// with exponents a^n = b^m (n, m nonzero); for `in_commensurator` the
// witness relation is g^-1 a^n g = a^m.  `no` answers are certified (they
// come from a class invariant or an exact filter), `unknown` means the
// bounded search was exhausted without a decision.
struct CommResult {
  Verdict verdict = Verdict::unknown;
  long long n = 0, m = 0;
  std::string method;
};

CommResult commensurable(const CyclicSubgroup& a, const CyclicSubgroup& b,
                         const SearchBound& sb = {});

CommResult in_commensurator(const IntMat& g, const CyclicSubgroup& h,
                            const SearchBound& sb = {});

// All g in SL(3,Z) with sup-norm <= entry_bound satisfying g X = Y g.
// Sorted; serial and parallel variants agree.
std::vector<IntMat> intertwiner_enum(const IntMat& X, const IntMat& Y,
                                     int entry_bound,
                                     Parallelism par = Parallelism::parallel);

// Brute-force centralizer of A in SL(3,Z) within the entry box.
std::vector<IntMat> centralizer_enum(const IntMat& A, const SearchBound& sb,
                                     Parallelism par = Parallelism::parallel);

// Structure evidence for the centralizer of an element of class I1, I2 or
// I1t (for quasi-unipotent classes see normalizer_descriptor; calling this
// on them throws WrongClass).
//
// For I1/I2 the centralizer sits inside the commutative algebra spanned by
// {I, A, A^2}; the search runs over integer coefficient triples in the box.
// For I1t the element is conjugated to a block form [[u, a^T], [0, M]] and
// centralizer elements are lifted from 2 x 2 matrices commuting with M by
// solving (u I - M^T) x = (eps I - N^T) a with eps = det N.
// Throws BoundExhausted when not even one nontrivial element is found.
struct CentralizerEvidence {
  ClassTag tag;
  std::vector<IntMat> torsion;     // nontrivial finite-order elements found
  std::vector<IntMat> independent; // multiplicatively independent infinite-order units
  std::size_t free_rank_evidence = 0;
  SearchBound bounds;
  std::string completeness; // always "bounded" for this search
};
CentralizerEvidence structured_centralizer(const IntMat& A,
                                           const SearchBound& sb = {});

// Description of the commensurator N(<A>) = { g : g^-1 A^n g = A^m }.
// iso_type is the structural label claimed for the class:
//   I1  -> Z2xZ                   I1t -> Z2xZ-index2
//   I2  -> Z2xZ2free              I2t -> Z2-index2-over-Z2free
//   I3  -> TrSemidirect
// Witnesses are concrete elements (verified members of the commensurator);
// relations record identities among named witnesses, each re-verified on the
// matrices.  observed_torsion / flip_found hold what the bounded searches
// actually produced, and torsion_matches_claim flags whether that matches
// the structural label; discrepancies are explained in `note`.
struct NormalizerDescriptor {
  ClassTag tag;
  std::string iso_type;
  struct Witness {
    std::string name;
    IntMat mat;
  };
  std::vector<Witness> witnesses;
  struct Relation {
    std::string lhs, rhs;
    bool verified;
  };
  std::vector<Relation> relations;
  std::vector<IntMat> observed_torsion;
  bool flip_found = false;
  bool torsion_matches_claim = false;
  std::string note;
  SearchBound bounds;
  std::string completeness; // "certified" for I3, "bounded" otherwise
};
NormalizerDescriptor normalizer_descriptor(const IntMat& A,
                                           const SearchBound& sb = {});

// Classification of a whole corpus (parallel kernel with serial reference).
std::vector<ClassTag> classify_corpus(const std::vector<IntMat>& corpus,
                                      Parallelism par = Parallelism::parallel);

} // namespace sl3vc
