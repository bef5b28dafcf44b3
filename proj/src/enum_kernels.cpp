#include <algorithm>
#include <array>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sl3vc/commensurator.hpp"

namespace sl3vc {

namespace {

template <typename S>
S to_scalar(const Int& v) {
  return v.convert_to<S>();
}
template <>
Int to_scalar<Int>(const Int& v) {
  return v;
}

// g X = Y g is linear in the nine entries of g.  Row (i,j) of the system is
// sum_l g_il X_lj - sum_k Y_ik g_kj = 0; the enumeration walks the entries
// in flat order and prunes through partially assembled rows.
template <typename S>
struct IntertwinerSearch {
  std::array<std::array<S, 9>, 9> coef{};
  std::array<int, 9> max_var{};
  int bound;
  std::vector<std::array<S, 9>> out;

  IntertwinerSearch(const IntMat& X, const IntMat& Y, int E) : bound(E) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        auto& row = coef[3 * i + j];
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) {
            S c = 0;
            if (k == i) c += to_scalar<S>(X(l, j));
            if (l == j) c -= to_scalar<S>(Y(i, k));
            row[3 * k + l] = c;
          }
      }
    for (int r = 0; r < 9; ++r) {
      max_var[r] = -1;
      for (int v = 0; v < 9; ++v)
        if (coef[r][v] != 0) max_var[r] = v;
    }
  }

  static S det3(const std::array<S, 9>& g) {
    return g[0] * (g[4] * g[8] - g[5] * g[7]) -
           g[1] * (g[3] * g[8] - g[5] * g[6]) +
           g[2] * (g[3] * g[7] - g[4] * g[6]);
  }

  // reference path: plain backtracking, prune on completed rows only
  void run_serial(std::array<S, 9>& g, std::array<S, 9>& partial, int d) {
    if (d == 9) {
      if (det3(g) == 1) out.push_back(g);
      return;
    }
    for (long long x = -bound; x <= bound; ++x) {
      g[d] = S(x);
      bool ok = true;
      for (int r = 0; r < 9; ++r)
        if (coef[r][d] != 0) partial[r] += coef[r][d] * g[d];
      for (int r = 0; r < 9 && ok; ++r)
        if (max_var[r] == d && partial[r] != 0) ok = false;
      if (ok) run_serial(g, partial, d + 1);
      for (int r = 0; r < 9; ++r)
        if (coef[r][d] != 0) partial[r] -= coef[r][d] * g[d];
    }
  }

  // production path: rows whose last free entry is the current one force its
  // value, collapsing the loop to at most one candidate
  void run_forced(std::array<S, 9>& g, std::array<S, 9>& partial, int d) {
    if (d == 9) {
      if (det3(g) == 1) out.push_back(g);
      return;
    }
    bool forced = false;
    S fval = 0;
    for (int r = 0; r < 9; ++r) {
      if (max_var[r] != d) continue;
      const S& c = coef[r][d];
      // c * x + partial[r] = 0
      if (partial[r] % c != 0) return;
      S x = -partial[r] / c;
      if (forced && x != fval) return;
      forced = true;
      fval = x;
    }
    auto step = [&](const S& x) {
      g[d] = x;
      for (int r = 0; r < 9; ++r)
        if (coef[r][d] != 0) partial[r] += coef[r][d] * x;
      run_forced(g, partial, d + 1);
      for (int r = 0; r < 9; ++r)
        if (coef[r][d] != 0) partial[r] -= coef[r][d] * x;
    };
    if (forced) {
      if (fval >= S(-bound) && fval <= S(bound)) step(fval);
      return;
    }
    for (long long x = -bound; x <= bound; ++x) step(S(x));
  }
};

template <typename S>
std::vector<IntMat> collect(IntertwinerSearch<S>& s) {
  std::vector<IntMat> res;
  res.reserve(s.out.size());
  for (const auto& g : s.out) {
    IntMat m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = Int(g[3 * i + j]);
    res.push_back(m);
  }
  std::sort(res.begin(), res.end());
  return res;
}

template <typename S>
std::vector<IntMat> enum_with(const IntMat& X, const IntMat& Y, int E,
                              Parallelism par) {
  if (par == Parallelism::serial) {
    IntertwinerSearch<S> s(X, Y, E);
    std::array<S, 9> g{}, partial{};
    s.run_serial(g, partial, 0);
    return collect(s);
  }
  // parallel: split on the first entry
  std::vector<std::vector<IntMat>> buckets(2 * E + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int t = 0; t < 2 * E + 1; ++t) {
    IntertwinerSearch<S> s(X, Y, E);
    std::array<S, 9> g{}, partial{};
    S x = S(t - E);
    bool ok = true;
    for (int r = 0; r < 9; ++r) {
      if (s.coef[r][0] == 0) continue;
      if (s.max_var[r] == 0) {
        if (s.coef[r][0] * x != 0) ok = false;
      }
      partial[r] += s.coef[r][0] * x;
    }
    if (ok) {
      g[0] = x;
      s.run_forced(g, partial, 1);
    }
    buckets[t] = collect(s);
  }
  std::vector<IntMat> res;
  for (auto& b : buckets) res.insert(res.end(), b.begin(), b.end());
  std::sort(res.begin(), res.end());
  return res;
}

Int max_abs_entry(const IntMat& m) {
  Int best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int a = abs(m(i, j));
      if (a > best) best = a;
    }
  return best;
}

} // namespace

std::vector<IntMat> intertwiner_enum(const IntMat& X, const IntMat& Y,
                                     int entry_bound, Parallelism par) {
  if (!X.square() || X.rows() != 3 || !Y.square() || Y.rows() != 3)
    throw Error(ErrorKind::InvalidInput, "expected 3 x 3 matrices");
  if (entry_bound < 0)
    throw Error(ErrorKind::InvalidInput, "entry bound must be nonnegative");
  // int64 is safe while row sums and 3 x 3 determinants cannot overflow
  Int M = max_abs_entry(X);
  Int my = max_abs_entry(Y);
  if (my > M) M = my;
  if (M <= 1000000 && entry_bound <= 10000)
    return enum_with<std::int64_t>(X, Y, entry_bound, par);
  return enum_with<Int>(X, Y, entry_bound, par);
}

std::vector<IntMat> centralizer_enum(const IntMat& A, const SearchBound& sb,
                                     Parallelism par) {
  if (!A.square() || A.rows() != 3)
    throw Error(ErrorKind::InvalidInput, "expected a 3 x 3 matrix");
  if (det(A) != 1)
    throw Error(ErrorKind::NotSpecialLinear, "determinant is not 1");
  return intertwiner_enum(A, A, sb.entry_bound, par);
}

std::vector<ClassTag> classify_corpus(const std::vector<IntMat>& corpus,
                                      Parallelism par) {
  std::vector<ClassTag> tags(corpus.size());
  if (par == Parallelism::serial) {
    for (std::size_t i = 0; i < corpus.size(); ++i)
      tags[i] = classify(corpus[i]).tag;
    return tags;
  }
  std::exception_ptr err = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < static_cast<long long>(corpus.size()); ++i) {
    try {
      tags[i] = classify(corpus[i]).tag;
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return tags;
}

} // namespace sl3vc
