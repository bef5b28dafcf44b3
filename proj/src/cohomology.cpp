#include "sl3vc/cohomology.hpp"

#include "sl3vc/exact.hpp"

namespace sl3vc {

HeisTriple heis_mul(const HeisTriple& g, const HeisTriple& h) {
  // x^a y^b z^c * x^a' y^b' z^c' = x^(a+a') y^(b+b') z^(c+c'-a'b)
  return {g.a + h.a, g.b + h.b, g.c + h.c - h.a * g.b};
}

HeisTriple heis_inv(const HeisTriple& g) {
  return {-g.a, -g.b, -g.c - g.a * g.b};
}

HeisTriple heis_pow(const HeisTriple& g, const Int& n) {
  HeisTriple base = n < 0 ? heis_inv(g) : g;
  Int e = abs(n);
  HeisTriple acc{0, 0, 0};
  while (e > 0) {
    if ((e & 1) != 0) acc = heis_mul(acc, base);
    base = heis_mul(base, base);
    e >>= 1;
  }
  return acc;
}

HeisTriple heis_commutator(const HeisTriple& g, const HeisTriple& h) {
  return heis_mul(heis_mul(heis_inv(g), heis_inv(h)), heis_mul(g, h));
}

HeisTriple heis_reduce(const std::vector<int>& letters) {
  HeisTriple w{0, 0, 0};
  for (int l : letters) {
    switch (l) {
      case 1: w = heis_mul(w, {1, 0, 0}); break;
      case -1: w = heis_mul(w, {-1, 0, 0}); break;
      case 2: w = heis_mul(w, {0, 1, 0}); break;
      case -2: w = heis_mul(w, {0, -1, 0}); break;
      case 3: w = heis_mul(w, {0, 0, 1}); break;
      case -3: w = heis_mul(w, {0, 0, -1}); break;
      default:
        throw Error(ErrorKind::InvalidInput, "letter out of range");
    }
  }
  return w;
}

IntMat heis_matrix(const HeisTriple& g) {
  IntMat m = IntMat::identity(3);
  m(0, 1) = g.a;
  m(1, 2) = g.b;
  m(0, 2) = g.a * g.b + g.c;
  return m;
}

IntMat induced_h1_action(const HeisAut& phi) {
  IntMat m(2, 2);
  m(0, 0) = phi.fx.a;
  m(1, 0) = phi.fx.b;
  m(0, 1) = phi.fy.a;
  m(1, 1) = phi.fy.b;
  return m;
}

void validate(const HeisAut& phi) {
  if (phi.fz.a != 0 || phi.fz.b != 0)
    throw Error(ErrorKind::InvalidInput,
                "image of the central generator is not central");
  IntMat m = induced_h1_action(phi);
  Int d = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (d != 1 && d != -1)
    throw Error(ErrorKind::InvalidInput,
                "abelianized action is not invertible over Z");
  // the defining relation [x,y] = z pins phi(z) = z^det(m)
  HeisTriple comm = heis_commutator(phi.fx, phi.fy);
  if (!(comm == phi.fz))
    throw Error(ErrorKind::InvalidInput,
                "phi([x,y]) differs from phi(z); not a homomorphism");
  if (phi.fz.c != d)
    throw Error(ErrorKind::InvalidInput,
                "central exponent contradicts the abelianized determinant");
}

HeisTriple apply(const HeisAut& phi, const HeisTriple& g) {
  HeisTriple out = heis_pow(phi.fx, g.a);
  out = heis_mul(out, heis_pow(phi.fy, g.b));
  out = heis_mul(out, heis_pow(phi.fz, g.c));
  return out;
}

int top_class_action(const HeisAut& phi) {
  validate(phi);
  IntMat m = induced_h1_action(phi);
  Int d = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Int eps = phi.fz.c;
  Int t = d * eps;
  return t.convert_to<int>();
}

H4Certificate h4_certificate(const std::vector<HeisAut>& gens) {
  H4Certificate cert;
  bool all_one = true;
  for (const HeisAut& phi : gens) {
    int s = top_class_action(phi);
    cert.scalars.push_back(s);
    if (s != 1) all_one = false;
  }
  cert.invariant_dim = all_one ? 1 : 0;
  return cert;
}

void ChainComplexQ::verify() const {
  if (boundary.size() + 1 != dims.size())
    throw Error(ErrorKind::InvalidInput, "boundary count mismatch");
  for (std::size_t k = 0; k < boundary.size(); ++k) {
    if (boundary[k].rows() != dims[k] || boundary[k].cols() != dims[k + 1])
      throw Error(ErrorKind::InvalidInput, "boundary shape mismatch");
    if (k + 1 < boundary.size() && !(boundary[k] * boundary[k + 1]).is_zero())
      throw Error(ErrorKind::InvalidInput, "d o d != 0");
  }
}

std::vector<std::size_t> ChainComplexQ::betti() const {
  verify();
  std::vector<std::size_t> b(dims.size());
  std::vector<std::size_t> ranks(dims.size() + 1, 0);
  for (std::size_t k = 0; k < boundary.size(); ++k)
    ranks[k + 1] = rank(boundary[k]); // rank of d : C_{k+1} -> C_k
  for (std::size_t k = 0; k < dims.size(); ++k) {
    // dim ker(d_k: C_k -> C_{k-1}) - rank(d_{k+1})
    std::size_t kerdim = dims[k] - ranks[k];
    b[k] = kerdim - ranks[k + 1];
  }
  return b;
}

ChainComplexQ mapping_torus_complex(const IntMat& M) {
  if (!M.square() || M.rows() != 2)
    throw Error(ErrorKind::InvalidInput, "expected a 2 x 2 matrix");
  Int d = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
  if (d != 1 && d != -1)
    throw Error(ErrorKind::NotSpecialLinear, "monodromy must be in GL(2,Z)");

  // Fiber T^2 has one 0-cell, two 1-cells, one 2-cell and zero boundary
  // maps, so every mapping-torus boundary reduces to an (id - f) block.
  ChainComplexQ cx;
  cx.dims = {1, 3, 3, 1};
  RatMat d1(1, 3), d2(3, 3), d3(3, 1);
  // d2 on the C_1 x I part is id - M (columns 1,2 land on the 1-cells)
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      d2(i, j + 1) = Rat((i == j ? Int(1) : Int(0)) - M(i, j));
  // d3: F x I maps to (1 - deg f) F with deg f = det M
  d3(0, 0) = Rat(Int(1) - d);
  cx.boundary = {d1, d2, d3};
  cx.verify();
  return cx;
}

std::vector<std::size_t> mapping_torus_betti(const IntMat& M) {
  return mapping_torus_complex(M).betti();
}

} // namespace sl3vc
