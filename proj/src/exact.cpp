#include "sl3vc/exact.hpp"

#include <algorithm>
#include <cstdlib>

namespace sl3vc {

Rat CharPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + Rat(c[i]);
  return acc;
}

Int CharPoly::eval(const Int& x) const {
  Int acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

std::string CharPoly::str() const {
  if (c.empty()) return "0";
  std::string s;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0 && c.size() > 1) continue;
    std::string term;
    Int a = c[i];
    bool neg = a < 0;
    Int mag = neg ? Int(-a) : a;
    if (i == 0 || mag != 1) term += mag.str();
    if (i >= 1) term += "x";
    if (i >= 2) term += "^" + std::to_string(i);
    if (s.empty())
      s = (neg ? "-" : "") + term;
    else
      s += (neg ? " - " : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

namespace {

// Laplace expansion along the first row; fine for the n <= 4 sizes it serves.
Int cofactor_det(const IntMat& m, const std::vector<std::size_t>& idx) {
  const std::size_t k = idx.size();
  if (k == 0) return 1;
  if (k == 1) return m(idx[0], idx[0]);
  if (k == 2)
    return m(idx[0], idx[0]) * m(idx[1], idx[1]) -
           m(idx[0], idx[1]) * m(idx[1], idx[0]);
  Int acc = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (m(idx[0], idx[j]) == 0) continue;
    std::vector<std::size_t> rows(idx.begin() + 1, idx.end());
    std::vector<std::size_t> cols;
    for (std::size_t t = 0; t < k; ++t)
      if (t != j) cols.push_back(idx[t]);
    // minor with row set `rows`, column set `cols`
    IntMat sub(k - 1, k - 1);
    for (std::size_t r = 0; r < k - 1; ++r)
      for (std::size_t cc = 0; cc < k - 1; ++cc) sub(r, cc) = m(rows[r], cols[cc]);
    std::vector<std::size_t> all(k - 1);
    for (std::size_t t = 0; t < k - 1; ++t) all[t] = t;
    Int d = cofactor_det(sub, all);
    if (j % 2 == 0)
      acc += m(idx[0], idx[j]) * d;
    else
      acc -= m(idx[0], idx[j]) * d;
  }
  return acc;
}

// Sum of all k x k principal minors.
Int principal_minor_sum(const IntMat& A, std::size_t k) {
  const std::size_t n = A.rows();
  if (k == 0) return 1;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  Int acc = 0;
  for (;;) {
    acc += cofactor_det(A, idx);
    std::size_t i = k;
    bool advanced = false;
    while (i-- > 0) {
      if (idx[i] != i + n - k) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return acc;
  }
}

std::vector<Int> charpoly_cofactor(const IntMat& A) {
  const std::size_t n = A.rows();
  // coefficient of x^(n-k) is (-1)^k * (sum of principal k x k minors)
  std::vector<Int> c(n + 1);
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Int e = principal_minor_sum(A, k);
    c[n - k] = (k % 2 == 0) ? e : Int(-e);
  }
  return c;
}

} // namespace

CharPoly charpoly(const IntMat& A) {
  if (!A.square())
    throw Error(ErrorKind::InvalidInput, "charpoly needs a square matrix");
  const std::size_t n = A.rows();
  std::vector<Int> hi;
  if (n <= 4) {
    hi = charpoly_cofactor(A);
    std::reverse(hi.begin(), hi.end());
  } else {
    hi = detail::berkowitz(A);
  }
  CharPoly p;
  p.c.assign(hi.rbegin(), hi.rend());
  return p;
}

Int det(const IntMat& A) {
  if (!A.square())
    throw Error(ErrorKind::InvalidInput, "det needs a square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  IntMat m = A;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Int d = m(n - 1, n - 1);
  return sign > 0 ? d : Int(-d);
}

std::pair<Rat, std::optional<RatMat>> det_inv(const RatMat& A) {
  if (!A.square())
    throw Error(ErrorKind::InvalidInput, "det_inv needs a square matrix");
  const std::size_t n = A.rows();
  RatMat m = A;
  RatMat inv = RatMat::identity(n);
  Rat d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return {Rat(0), std::nullopt};
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
      d = -d;
    }
    Rat pv = m(k, k);
    d *= pv;
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= pv;
      inv(k, j) /= pv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      Rat f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return {d, inv};
}

IntMat inverse_unimodular(const IntMat& A) {
  Int d = det(A);
  if (d != 1 && d != -1)
    throw Error(ErrorKind::NotSpecialLinear, "matrix is not in GL(n,Z)");
  auto [dr, inv] = det_inv(to_rat(A));
  return to_int(*inv);
}

IntMat conjugate(const IntMat& A, const IntMat& P) {
  if (!A.square() || !P.square() || A.rows() != P.rows())
    throw Error(ErrorKind::InvalidInput, "conjugate needs same-size square matrices");
  IntMat pinv = inverse_unimodular(P);
  return P * A * pinv;
}

IntMat matrix_pow(const IntMat& A, long long k) {
  if (!A.square())
    throw Error(ErrorKind::InvalidInput, "matrix_pow needs a square matrix");
  IntMat base = A;
  unsigned long long e;
  if (k < 0) {
    base = inverse_unimodular(A);
    e = static_cast<unsigned long long>(-(k + 1)) + 1;
  } else {
    e = static_cast<unsigned long long>(k);
  }
  IntMat acc = IntMat::identity(A.rows());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::vector<Int> SmithResult::divisors() const {
  std::vector<Int> out;
  std::size_t k = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < k; ++i)
    if (D(i, i) != 0) out.push_back(D(i, i));
  return out;
}

SmithResult smith_normal_form(const IntMat& A) {
  const std::size_t m = A.rows(), n = A.cols();
  IntMat M = A;
  IntMat U = IntMat::identity(m);
  IntMat V = IntMat::identity(n);

  auto row_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) std::swap(M(a, j), M(b, j));
    for (std::size_t j = 0; j < m; ++j) std::swap(U(a, j), U(b, j));
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m; ++i) std::swap(M(i, a), M(i, b));
    for (std::size_t i = 0; i < n; ++i) std::swap(V(i, a), V(i, b));
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t j = 0; j < n; ++j) M(dst, j) += f * M(src, j);
    for (std::size_t j = 0; j < m; ++j) U(dst, j) += f * U(src, j);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < m; ++i) M(i, dst) += f * M(i, src);
    for (std::size_t i = 0; i < n; ++i) V(i, dst) += f * V(i, src);
  };
  auto row_neg = [&](std::size_t r) {
    for (std::size_t j = 0; j < n; ++j) M(r, j) = -M(r, j);
    for (std::size_t j = 0; j < m; ++j) U(r, j) = -U(r, j);
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    // locate a smallest nonzero pivot in the trailing block
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (M(i, j) == 0) continue;
        if (!found || abs(M(i, j)) < abs(M(pi, pj))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    if (pi != t) row_swap(pi, t);
    if (pj != t) col_swap(pj, t);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (M(i, t) == 0) continue;
        Int q = M(i, t) / M(t, t);
        row_add(i, t, -q);
        if (M(i, t) != 0) {
          row_swap(i, t);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (M(t, j) == 0) continue;
        Int q = M(t, j) / M(t, t);
        col_add(j, t, -q);
        if (M(t, j) != 0) {
          col_swap(j, t);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide every remaining entry
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n && divides; ++j)
          if (M(i, j) % M(t, t) != 0) {
            row_add(t, i, Int(1));
            divides = false;
          }
      if (divides) break;
    }
    if (M(t, t) < 0) row_neg(t);
  }

  return SmithResult{U, M, V};
}

std::size_t rank(const RatMat& A) {
  RatMat m = A;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(piv, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t rank(const IntMat& A) { return rank(to_rat(A)); }

std::optional<RatMat> solve(const RatMat& A, const RatMat& b) {
  if (!A.square() || b.rows() != A.rows() || b.cols() != 1)
    throw Error(ErrorKind::InvalidInput, "solve needs square A and column b");
  auto [d, inv] = det_inv(A);
  if (!inv) return std::nullopt;
  return *inv * b;
}

std::vector<Int> primitive(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return v;
  std::vector<Int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntMat kernel_saturated(const IntMat& A) {
  SmithResult s = smith_normal_form(A);
  const std::size_t n = A.cols();
  std::size_t r = 0;
  const std::size_t k = std::min(A.rows(), n);
  while (r < k && s.D(r, r) != 0) ++r;
  IntMat K(n, n - r);
  for (std::size_t j = r; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) K(i, j - r) = s.V(i, j);
  return K;
}

IntMat complete_to_unimodular(const IntMat& B) {
  const std::size_t n = B.rows(), k = B.cols();
  if (k > n)
    throw Error(ErrorKind::InvalidInput, "more columns than ambient rank");
  SmithResult s = smith_normal_form(B);
  for (std::size_t i = 0; i < k; ++i)
    if (s.D(i, i) != 1)
      throw Error(ErrorKind::InvalidInput,
                  "columns are not a basis of a saturated sublattice");
  IntMat uinv = inverse_unimodular(s.U);
  IntMat vinv = inverse_unimodular(s.V);
  IntMat P = IntMat::identity(n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) P(i, j) = vinv(i, j);
  return uinv * P;
}

std::optional<std::vector<Int>> poly_try_divide(const std::vector<Int>& a,
                                                const std::vector<Int>& b) {
  auto trim = [](std::vector<Int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  std::vector<Int> r = trim(a), d = trim(b);
  if (d.empty())
    throw Error(ErrorKind::InvalidInput, "division by the zero polynomial");
  if (r.empty()) return std::vector<Int>{};
  if (r.size() < d.size()) return std::nullopt;
  std::vector<Int> q(r.size() - d.size() + 1, Int(0));
  for (std::size_t i = q.size(); i-- > 0;) {
    Int lead = r[i + d.size() - 1];
    if (lead % d.back() != 0) return std::nullopt;
    Int f = lead / d.back();
    q[i] = f;
    for (std::size_t j = 0; j < d.size(); ++j) r[i + j] -= f * d[j];
  }
  for (const Int& x : r)
    if (x != 0) return std::nullopt;
  return q;
}

} // namespace sl3vc
