#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "sl3vc/cohomology.hpp"
#include "sl3vc/commensurator.hpp"
#include "sl3vc/hypotheses.hpp"

namespace sl3vc {

using Json = nlohmann::json;

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; non-integral rationals as "p/q" strings.
Json encode(const Int& v);
Json encode(const Rat& v);
Json encode_matrix(const IntMat& m);
Json encode_matrix(const RatMat& m);
IntMat decode_int_matrix(const Json& j);
RatMat decode_rat_matrix(const Json& j);

// Per-subcommand report builders (schemas/ describes the shapes).
Json classify_report(const IntMat& A);
Json comm_report(const IntMat& A, const IntMat& B, const SearchBound& sb);
Json centralizer_report(const IntMat& A, const SearchBound& sb,
                        Parallelism par = Parallelism::parallel);
Json normalizer_report(const IntMat& A, const SearchBound& sb);
Json hirsch_report_json(const std::vector<IntMat>& gens);
Json intchar_report(const std::vector<RatMat>& gens, std::size_t length,
                    Parallelism par = Parallelism::parallel);
Json ktheory_report(const std::vector<IntMat>& gens, const SearchBound& sb);
Json dim4_report();

// Equivariant-homology bookkeeping: one entry per commensurability class of
// the sampled cyclic subgroups, labeled with the model dimension pair of
// the associated classifying spaces.
struct KTheorySkeleton {
  struct Group {
    std::vector<std::size_t> members; // indices into the input list
    ClassTag tag;
    std::pair<int, int> model_pair;
  };
  std::vector<Group> groups;
  struct Failure {
    std::size_t index;
    std::string error;
  };
  std::vector<Failure> failures;
  SearchBound bounds;
};
KTheorySkeleton ktheory_skeleton(const std::vector<IntMat>& gens,
                                 const SearchBound& sb);

std::pair<int, int> model_pair(ClassTag t);

// Certificate that the minimal dimension of the classifying space is 4:
// per-class dimension data, the ambient dimension, and the degree-4
// invariant computed from the Heisenberg involutions.
struct DimensionCertificate {
  std::vector<int> scalars;
  std::size_t invariant_dim = 0;
  std::vector<std::pair<std::string, std::pair<int, int>>> class_dims;
  int ambient = 3;
  int lower_bound = 0;
  int upper_bound = 0;
  std::string upper_bound_source;
  int conclusion = 0;
};
DimensionCertificate dimension_certificate();

} // namespace sl3vc
