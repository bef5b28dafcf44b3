#include "sl3vc/spectra.hpp"

#include <map>
#include <numeric>

namespace sl3vc {

const std::vector<Int>& cyclotomic(int k) {
  static const std::map<int, std::vector<Int>> table = {
      {1, {Int(-1), Int(1)}},
      {2, {Int(1), Int(1)}},
      {3, {Int(1), Int(1), Int(1)}},
      {4, {Int(1), Int(0), Int(1)}},
      {6, {Int(1), Int(-1), Int(1)}},
  };
  auto it = table.find(k);
  if (it == table.end())
    throw Error(ErrorKind::InvalidInput, "unsupported cyclotomic order");
  return it->second;
}

namespace {

void require_sl3(const IntMat& A) {
  if (!A.square() || A.rows() != 3)
    throw Error(ErrorKind::InvalidInput, "expected a 3 x 3 matrix");
  if (det(A) != 1)
    throw Error(ErrorKind::NotSpecialLinear, "determinant is not 1");
}

Int cubic_discriminant(const CharPoly& p) {
  // monic x^3 + b x^2 + c x + d
  const Int& d = p.c[0];
  const Int& c = p.c[1];
  const Int& b = p.c[2];
  return 18 * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * c * c * c -
         27 * d * d;
}

} // namespace

SpectralType spectral_type(const IntMat& A) {
  require_sl3(A);
  SpectralType st;
  st.poly = charpoly(A);
  st.discriminant = cubic_discriminant(st.poly);

  std::vector<Int> rem = st.poly.c;
  for (int k : {1, 2, 3, 4, 6}) {
    for (;;) {
      auto q = poly_try_divide(rem, cyclotomic(k));
      if (!q) break;
      st.cyclotomic_orders.push_back(k);
      st.unit_root_count += static_cast<int>(cyclotomic(k).size()) - 1;
      rem = *q;
    }
  }
  st.noncyclotomic = rem;

  // A unit-root count of 2 cannot occur in SL(3,Z): the remaining eigenvalue
  // would be the reciprocal of a product of roots of unity, hence itself a
  // root of unity.
  if (st.unit_root_count == 2)
    throw Error(ErrorKind::InvalidInput, "impossible eigenvalue structure");
  return st;
}

int finite_order(const IntMat& A) {
  require_sl3(A);
  // Torsion in SL(3,Z) has order dividing 12.
  for (int k : {1, 2, 3, 4, 6, 12})
    if (matrix_pow(A, k).is_identity()) return k;
  return 0;
}

PowerNormalized power_normalize(const IntMat& A) {
  if (is_finite_order(A))
    throw Error(ErrorKind::FiniteOrder, "element has finite order");
  SpectralType st = spectral_type(A);
  long long k = 1;
  for (int o : st.cyclotomic_orders) k = std::lcm(k, static_cast<long long>(o));
  return PowerNormalized{static_cast<int>(k), matrix_pow(A, k)};
}

} // namespace sl3vc
