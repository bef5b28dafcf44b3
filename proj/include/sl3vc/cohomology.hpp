#pragma once

#include <cstddef>
#include <vector>

#include "sl3vc/matrix.hpp"

namespace sl3vc {

// Integral Heisenberg group H = <x, y, z | [x,y] = z, z central> with the
// commutator convention [g,h] = g^-1 h^-1 g h.  Elements are kept in the
// normal form x^a y^b z^c.
struct HeisTriple {
  Int a, b, c;
  bool operator==(const HeisTriple& o) const {
    return a == o.a && b == o.b && c == o.c;
  }
};

HeisTriple heis_mul(const HeisTriple& g, const HeisTriple& h);
HeisTriple heis_inv(const HeisTriple& g);
HeisTriple heis_pow(const HeisTriple& g, const Int& n);
HeisTriple heis_commutator(const HeisTriple& g, const HeisTriple& h);

// Letters: +-1 -> x^+-1, +-2 -> y^+-1, +-3 -> z^+-1.
HeisTriple heis_reduce(const std::vector<int>& letters);

// Faithful matrix model x = E12(1), y = E23(1), z = E13(1).
IntMat heis_matrix(const HeisTriple& g);

// Endomorphism given on the generators; validity as an automorphism forces
// phi(z) = z^det(M) where M is the induced map on H/<z> = Z^2.
struct HeisAut {
  HeisTriple fx, fy, fz;
};

// Throws InvalidInput unless phi is an automorphism: phi(z) central,
// the abelianized map unimodular, and phi([x,y]) = [phi x, phi y].
void validate(const HeisAut& phi);

HeisTriple apply(const HeisAut& phi, const HeisTriple& g);

// Induced action on H_1(H) = Z^2 (columns are the images of x, y).
IntMat induced_h1_action(const HeisAut& phi);

// Action on the top cohomology H^3 of the Heisenberg manifold; equals
// det(M) * eps with eps the exponent in phi(z) = z^eps.  Since eps is
// forced to det(M), the result is +1 for every valid automorphism.
int top_class_action(const HeisAut& phi);

// Certificate for the rational invariant in degree 4: the scalars by which
// the generating automorphisms act on the top class, and the dimension of
// the invariant subspace (1 iff all scalars are +1).
struct H4Certificate {
  std::vector<int> scalars;
  std::size_t invariant_dim;
};
H4Certificate h4_certificate(const std::vector<HeisAut>& gens);

// --- chain complexes over Q -------------------------------------------------

// dims[k] = rank of C_k; boundary[k] : C_{k+1} -> C_k as a dims[k] x
// dims[k+1] matrix.  verify() checks shapes and d o d = 0.
struct ChainComplexQ {
  std::vector<std::size_t> dims;
  std::vector<RatMat> boundary;

  void verify() const;
  std::vector<std::size_t> betti() const;
};

// CW chain complex of the mapping torus of the torus automorphism M in
// GL(2,Z) (one 0-cell, two 1-cells, one 2-cell on the fiber).
ChainComplexQ mapping_torus_complex(const IntMat& M);
std::vector<std::size_t> mapping_torus_betti(const IntMat& M);

} // namespace sl3vc
