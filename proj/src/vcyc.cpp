#include "sl3vc/vcyc.hpp"

#include <utility>

namespace sl3vc {

const char* to_string(ClassTag t) {
  switch (t) {
    case ClassTag::I1: return "I1";
    case ClassTag::I1t: return "I1t";
    case ClassTag::I2: return "I2";
    case ClassTag::I2t: return "I2t";
    case ClassTag::I3: return "I3";
  }
  return "?";
}

CyclicSubgroup::CyclicSubgroup(IntMat g) : gen(std::move(g)) {
  if (!gen.square() || gen.rows() != 3)
    throw Error(ErrorKind::InvalidInput, "expected a 3 x 3 matrix");
  if (det(gen) != 1)
    throw Error(ErrorKind::NotSpecialLinear, "determinant is not 1");
  if (is_finite_order(gen))
    throw Error(ErrorKind::FiniteOrder, "generator has finite order");
}

Classification classify(const IntMat& A) {
  CyclicSubgroup validated(A); // det and order checks
  SpectralType st = spectral_type(A);
  Classification out;
  out.spectral = st;

  if (st.unit_root_count == 0) {
    out.normalization_power = 1;
    // disc = 0 would need a repeated eigenvalue, which for an integer cubic
    // with no unit roots cannot happen
    out.tag = st.discriminant < 0 ? ClassTag::I1 : ClassTag::I2;
    return out;
  }
  if (st.unit_root_count == 1) {
    out.normalization_power = st.cyclotomic_orders[0] == 2 ? 2 : 1;
    out.tag = ClassTag::I1t;
    return out;
  }
  // quasi-unipotent: normalize, then split on the nilpotency degree
  PowerNormalized pn = power_normalize(A);
  out.normalization_power = pn.k;
  IntMat N = pn.power - IntMat::identity(3);
  out.tag = (N * N).is_zero() ? ClassTag::I3 : ClassTag::I2t;
  return out;
}

namespace {

bool is_unipotent3(const IntMat& B) {
  if (!B.square() || B.rows() != 3) return false;
  static const std::vector<Int> u{Int(-1), Int(3), Int(-3), Int(1)};
  return charpoly(B).c == u;
}

void egcd(Int a, Int b, Int& g, Int& x, Int& y) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = b;
    b = r;
    Int nx = x0 - q * x1, ny = y0 - q * y1;
    x0 = x1;
    y0 = y1;
    x1 = nx;
    y1 = ny;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  g = a;
  x = x0;
  y = y0;
}

IntMat column(const IntMat& m, std::size_t j) {
  IntMat c(m.rows(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) c(i, 0) = m(i, j);
  return c;
}

// Integer coordinates of v in the column lattice of the saturated basis K.
// Completes K to a unimodular matrix and reads coordinates off its inverse.
std::vector<Int> lattice_coords(const IntMat& K, const IntMat& v) {
  IntMat Q = complete_to_unimodular(K);
  IntMat c = inverse_unimodular(Q) * v;
  for (std::size_t i = K.cols(); i < c.rows(); ++i)
    if (c(i, 0) != 0)
      throw Error(ErrorKind::InvalidInput, "vector is not in the sublattice");
  std::vector<Int> out(K.cols());
  for (std::size_t i = 0; i < K.cols(); ++i) out[i] = c(i, 0);
  return out;
}

// Given a saturated rank-2 lattice basis K (3 x 2) and a primitive vector q1
// of that lattice, produces q2 with {q1, q2} again a basis.
IntMat extend_in_lattice(const IntMat& K, const IntMat& q1) {
  std::vector<Int> co = lattice_coords(K, q1);
  Int g, x, y;
  egcd(co[0], co[1], g, x, y);
  if (g != 1)
    throw Error(ErrorKind::InvalidInput, "vector is not primitive in lattice");
  // second column of the unimodular [[a, -y], [b, x]]
  IntMat q2(3, 1);
  for (std::size_t i = 0; i < 3; ++i)
    q2(i, 0) = -y * K(i, 0) + x * K(i, 1);
  return q2;
}

IntMat assemble3(const IntMat& q1, const IntMat& q2) {
  IntMat B(3, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    B(i, 0) = q1(i, 0);
    B(i, 1) = q2(i, 0);
  }
  return B;
}

void negate_column(IntMat& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
}

bool is_unitriangular(const IntMat& t) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j && t(i, j) != 1) return false;
      if (i > j && t(i, j) != 0) return false;
    }
  return true;
}

} // namespace

RatMat nilpotent_log(const IntMat& B) {
  if (!is_unipotent3(B))
    throw Error(ErrorKind::NotUnipotent, "matrix is not unipotent");
  RatMat N = to_rat(B - IntMat::identity(3));
  RatMat N2 = N * N;
  return N - N2 * Rat(1, 2);
}

bool is_center_conjugable(const IntMat& B) {
  if (!is_unipotent3(B)) return false;
  IntMat N = B - IntMat::identity(3);
  return !N.is_zero() && (N * N).is_zero();
}

UnipotentConjugation conjugate_unipotent(const IntMat& B) {
  if (!is_unipotent3(B))
    throw Error(ErrorKind::NotUnipotent, "matrix is not unipotent");
  IntMat N = B - IntMat::identity(3);
  if (N.is_zero())
    throw Error(ErrorKind::InvalidInput, "identity has no adapted flag");

  IntMat P(3, 3);
  const bool rank_one = (N * N).is_zero();
  if (rank_one) {
    // N = c * v0 * w0^T with v0, w0 primitive and w0^T v0 = 0
    std::size_t j0 = 0;
    while (column(N, j0).is_zero()) ++j0;
    IntMat v0col = column(N, j0);
    std::vector<Int> v0{v0col(0, 0), v0col(1, 0), v0col(2, 0)};
    v0 = primitive(v0);
    std::size_t i0 = 0;
    while (v0[i0] == 0) ++i0;
    std::vector<Int> u(3);
    for (std::size_t j = 0; j < 3; ++j) u[j] = N(i0, j) / v0[i0];
    Int c = 0;
    for (const Int& x : u) c = gcd(c, x);
    std::vector<Int> w0(3);
    for (std::size_t j = 0; j < 3; ++j) w0[j] = u[j] / c;

    IntMat wrow(1, 3);
    for (std::size_t j = 0; j < 3; ++j) wrow(0, j) = w0[j];
    IntMat K = kernel_saturated(wrow);
    IntMat q1(3, 1);
    for (std::size_t i = 0; i < 3; ++i) q1(i, 0) = v0[i];
    IntMat q2 = extend_in_lattice(K, q1);
    P = complete_to_unimodular(assemble3(q1, q2));
  } else {
    IntMat q1 = kernel_saturated(N); // 3 x 1, primitive
    IntMat M = kernel_saturated(N * N);
    IntMat q2 = extend_in_lattice(M, q1);
    P = complete_to_unimodular(assemble3(q1, q2));
  }

  if (det(P) == -1) negate_column(P, 1);
  IntMat T = inverse_unimodular(P) * B * P;
  if (rank_one && T(0, 2) < 0) {
    negate_column(P, 0);
    negate_column(P, 1);
    T = inverse_unimodular(P) * B * P;
  }
  if (!is_unitriangular(T))
    throw Error(ErrorKind::InvalidInput, "flag construction failed");
  return UnipotentConjugation{P, T};
}

namespace {

// Q-span of 3 x 3 rational matrices with incremental membership, kept in
// echelon form over the 9 coordinates.
class MatSpan {
public:
  bool add(const RatMat& m) {
    std::vector<Rat> v(9);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) v[3 * i + j] = m(i, j);
    for (const auto& row : ech_) {
      std::size_t p = pivot_of(row);
      if (v[p] != 0) {
        Rat f = v[p] / row[p];
        for (std::size_t k = 0; k < 9; ++k) v[k] -= f * row[k];
      }
    }
    for (const Rat& x : v)
      if (x != 0) {
        ech_.push_back(v);
        basis_.push_back(m);
        return true;
      }
    return false;
  }

  const std::vector<RatMat>& basis() const { return basis_; }

private:
  static std::size_t pivot_of(const std::vector<Rat>& row) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    return p;
  }
  std::vector<std::vector<Rat>> ech_;
  std::vector<RatMat> basis_;
};

} // namespace

std::size_t hirsch_length_unipotent(const std::vector<IntMat>& gens) {
  MatSpan span;
  for (const IntMat& g : gens) {
    RatMat L = nilpotent_log(g); // throws NotUnipotent on bad input
    span.add(L);
  }
  // bracket closure
  for (bool grew = true; grew;) {
    grew = false;
    auto basis = span.basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        RatMat br = basis[i] * basis[j] - basis[j] * basis[i];
        if (span.add(br)) grew = true;
      }
  }
  // the group generated is unipotent iff every triple product of the span
  // vanishes (all elements then cube to zero, forcing a common flag)
  const auto& b = span.basis();
  for (const auto& x : b)
    for (const auto& y : b)
      for (const auto& z : b)
        if (!(x * y * z).is_zero())
          throw Error(ErrorKind::NotUnipotent,
                      "generators do not generate a unipotent group");
  return b.size();
}

} // namespace sl3vc
