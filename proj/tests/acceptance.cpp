// Acceptance suite: one line per criterion, PASS or FAIL, exit status 0 only
// when everything passes.  Each criterion is checked against data produced
// independently of the code under test (hand-built sets, closed-form counts,
// cross multiplication oracles), not against cached library output.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sl3vc/cohomology.hpp"
#include "sl3vc/commensurator.hpp"
#include "sl3vc/report.hpp"

using namespace sl3vc;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& what) {
  std::printf("%s  %2d  %s\n", ok ? "PASS" : "FAIL", idx, what.c_str());
  if (!ok) ++failures;
}

IntMat eij(std::size_t i, std::size_t j, const Int& c) {
  IntMat m = IntMat::identity(3);
  m(i, j) = c;
  return m;
}

IntMat companion3(const Int& c0, const Int& c1, const Int& c2) {
  IntMat m(3, 3);
  m(1, 0) = 1;
  m(2, 1) = 1;
  m(0, 2) = -c0;
  m(1, 2) = -c1;
  m(2, 2) = -c2;
  return m;
}

IntMat random_unimodular(std::mt19937_64& rng, int factors = 8) {
  IntMat m = IntMat::identity(3);
  std::uniform_int_distribution<std::size_t> idx(0, 2);
  std::uniform_int_distribution<int> val(-2, 2);
  int used = 0;
  while (used < factors) {
    std::size_t i = idx(rng), j = idx(rng);
    int c = val(rng);
    if (i == j || c == 0) continue;
    m = m * eij(i, j, c);
    ++used;
  }
  return m;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

IntMat exemplar(ClassTag t) {
  switch (t) {
    case ClassTag::I1: return companion3(-1, -1, 0);
    case ClassTag::I1t: return IntMat(3, 3, {1, 0, 0, 0, 2, 1, 0, 1, 1});
    case ClassTag::I2: return companion3(-1, -3, 0);
    case ClassTag::I2t: return eij(0, 1, 1) * eij(1, 2, 1);
    case ClassTag::I3: return eij(0, 2, 1);
  }
  return IntMat::identity(3);
}

const ClassTag kTags[5] = {ClassTag::I1, ClassTag::I1t, ClassTag::I2,
                           ClassTag::I2t, ClassTag::I3};

// --- criterion 1 ------------------------------------------------------------

void criterion_corpus() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20260814);

  std::vector<IntMat> corpus;
  std::vector<ClassTag> expected;
  for (ClassTag t : kTags) {
    IntMat base = exemplar(t);
    for (int p = 1; p <= 5; ++p) {
      IntMat power = matrix_pow(base, p);
      for (int c = 0; c < 20; ++c) {
        corpus.push_back(conjugate(power, random_unimodular(rng)));
        expected.push_back(t);
      }
    }
  }

  bool ok = corpus.size() >= 500;
  std::vector<ClassTag> got = classify_corpus(corpus);
  ok = ok && got == expected;

  std::size_t per_class[5] = {0, 0, 0, 0, 0};
  for (ClassTag t : got) per_class[static_cast<int>(t)]++;
  for (std::size_t n : per_class) ok = ok && n > 0;

  // invariance spot checks: squares, inverses, fresh conjugates
  for (std::size_t i = 0; i < corpus.size(); i += 25) {
    const IntMat& a = corpus[i];
    ClassTag t = got[i];
    ok = ok && classify(a * a).tag == t;
    ok = ok && classify(inverse_unimodular(a)).tag == t;
    ok = ok && classify(conjugate(a, random_unimodular(rng))).tag == t;
  }

  double dt = seconds_since(t0);
  ok = ok && dt < 60.0;
  std::ostringstream os;
  os << "corpus of " << corpus.size()
     << " elements partitions into the five classes, invariant under powers, "
        "inverses and conjugation ("
     << dt << "s)";
  report(1, ok, os.str());
}

// --- criterion 2 ------------------------------------------------------------

void criterion_involutions() {
  const HeisTriple x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
  HeisAut phi10{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}};
  HeisAut phi01{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}};
  bool ok = true;
  try {
    validate(phi10);
    validate(phi01);
  } catch (const Error&) {
    ok = false;
  }
  ok = ok && apply(phi10, x) == heis_inv(x);
  ok = ok && apply(phi10, y) == heis_inv(y);
  ok = ok && apply(phi10, z) == z;
  ok = ok && apply(phi01, x) == heis_inv(x);
  ok = ok && apply(phi01, y) == y;
  ok = ok && apply(phi01, z) == heis_inv(z);
  report(2, ok, "the two involutions act on (x, y, z) by the six expected "
                "identities");
}

// --- criterion 3 ------------------------------------------------------------

void criterion_unipotent_centralizer() {
  // centralizer of E13(1) in the box: [[u,a,b],[0,1,d],[0,0,u]], u = +-1
  std::vector<IntMat> expect;
  for (int u : {-1, 1})
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b)
        for (int d = -3; d <= 3; ++d) {
          IntMat g(3, 3);
          g(0, 0) = u;
          g(0, 1) = a;
          g(0, 2) = b;
          g(1, 1) = 1;
          g(1, 2) = d;
          g(2, 2) = u;
          expect.push_back(g);
        }
  std::sort(expect.begin(), expect.end());

  SearchBound sb{12, 3};
  bool ok = centralizer_enum(eij(0, 2, 1), sb, Parallelism::serial) == expect;
  ok = ok && centralizer_enum(eij(0, 2, 1), sb, Parallelism::parallel) == expect;
  std::ostringstream os;
  os << "centralizer of E13(1) within entry bound 3 is exactly the expected "
     << expect.size() << "-element set (serial and parallel)";
  report(3, ok, os.str());
}

// --- criterion 4 ------------------------------------------------------------

void criterion_block_centralizer() {
  IntMat a = exemplar(ClassTag::I1t);
  IntMat m2(2, 2, {2, 1, 1, 1});
  std::vector<IntMat> got = centralizer_enum(a, SearchBound{12, 3});

  // independent side: 2 x 2 integer matrices commuting with M2, det = +-1,
  // lifted as blockdiag(det N, N)
  std::vector<IntMat> expect;
  for (int p = -3; p <= 3; ++p)
    for (int q = -3; q <= 3; ++q)
      for (int r = -3; r <= 3; ++r)
        for (int s = -3; s <= 3; ++s) {
          IntMat n(2, 2, {p, q, r, s});
          Int dn = Int(p) * s - Int(q) * r;
          if (dn != 1 && dn != -1) continue;
          if (n * m2 != m2 * n) continue;
          IntMat g(3, 3);
          g(0, 0) = dn;
          for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) g(i + 1, j + 1) = n(i, j);
          expect.push_back(g);
        }
  std::sort(expect.begin(), expect.end());

  bool ok = !got.empty() && got == expect;
  std::ostringstream os;
  os << "centralizer elements of the block form biject with the " << expect.size()
     << " commuting 2x2 lifts";
  report(4, ok, os.str());
}

// --- criterion 5 ------------------------------------------------------------

void criterion_h4() {
  auto t0 = std::chrono::steady_clock::now();
  HeisAut phi10{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}};
  HeisAut phi01{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}};
  H4Certificate cert = h4_certificate({phi10, phi01});
  bool ok = cert.invariant_dim == 1;
  ok = ok && cert.scalars == std::vector<int>{1, 1};

  IntMat shear(2, 2, {1, 1, 0, 1});
  ok = ok && mapping_torus_betti(shear) == std::vector<std::size_t>{1, 2, 2, 1};
  double dt = seconds_since(t0);
  ok = ok && dt < 1.0;
  std::ostringstream os;
  os << "degree-4 invariant has dimension 1 and the fiber betti numbers are "
        "(1,2,2,1) ("
     << dt << "s)";
  report(5, ok, os.str());
}

// --- criterion 6 ------------------------------------------------------------

void criterion_dimension() {
  DimensionCertificate c = dimension_certificate();
  bool ok = c.conclusion == 4 && c.lower_bound == 4 && c.upper_bound == 4 &&
            c.invariant_dim == 1;
  report(6, ok, "minimal model dimension certificate concludes 4");
}

// --- criterion 7 ------------------------------------------------------------

void criterion_unipotent_pairs() {
  std::mt19937_64 rng(7070);
  std::vector<IntMat> pool;
  for (int i = 0; i < 10; ++i) pool.push_back(random_unimodular(rng));

  bool ok = true;
  int yes = 0, no = 0;
  for (int t = 0; t < 100; ++t) {
    Int ca = 1 + t % 5, cb = 1 + (t / 5) % 5;
    const IntMat& p = pool[t % 10];
    const IntMat& q = pool[(t % 20 < 10) ? t % 10 : (t + 3) % 10];
    IntMat u = conjugate(eij(0, 2, ca), p);
    IntMat v = conjugate(eij(0, 2, cb), q);

    // oracle: <u> and <v> are commensurable iff the nilpotent directions
    // are proportional, checked by cross multiplication
    IntMat nu = u - IntMat::identity(3), nv = v - IntMat::identity(3);
    bool proportional = true;
    for (std::size_t i = 0; i < 3 && proportional; ++i)
      for (std::size_t j = 0; j < 3 && proportional; ++j)
        for (std::size_t k = 0; k < 3 && proportional; ++k)
          for (std::size_t l = 0; l < 3; ++l)
            if (nu(i, j) * nv(k, l) != nv(i, j) * nu(k, l)) {
              proportional = false;
              break;
            }

    CommResult r = commensurable(CyclicSubgroup(u), CyclicSubgroup(v));
    if (r.verdict == Verdict::unknown) ok = false;
    if ((r.verdict == Verdict::yes) != proportional) ok = false;
    if (r.verdict == Verdict::yes) {
      ++yes;
      if (matrix_pow(u, r.n) != matrix_pow(v, r.m)) ok = false;
    } else {
      ++no;
    }
  }
  ok = ok && yes > 0 && no > 0;
  std::ostringstream os;
  os << "100 unipotent pairs decided exactly and in agreement with the log "
        "proportionality oracle ("
     << yes << " yes, " << no << " no)";
  report(7, ok, os.str());
}

// --- criterion 8 ------------------------------------------------------------

void criterion_hirsch() {
  bool ok =
      hirsch_length_unipotent({eij(0, 1, 1), eij(1, 2, 1), eij(0, 2, 1)}) == 3;
  ok = ok && hirsch_length_unipotent({eij(0, 2, 1)}) == 1;
  ok = ok && hirsch_length_unipotent({eij(0, 1, 1), eij(0, 2, 1)}) == 2;
  report(8, ok, "Hirsch lengths of the reference unipotent groups are 3, 1, 2");
}

// --- criterion 9 ------------------------------------------------------------

void criterion_class_dims() {
  DimensionCertificate c = dimension_certificate();
  using P = std::pair<int, int>;
  bool ok = c.class_dims.size() == 5 && c.ambient == 3;
  int max_n = 0;
  for (const auto& [name, dims] : c.class_dims) {
    P want = (name == "I1" || name == "I1t")  ? P{1, 0}
             : (name == "I2" || name == "I2t") ? P{2, 1}
                                               : P{3, 2};
    if (dims != want) ok = false;
    max_n = std::max(max_n, dims.first);
  }
  ok = ok && max_n + 1 == c.conclusion;
  report(9, ok,
         "per-class dimension table is {(1,0),(1,0),(2,1),(2,1),(3,2)} with "
         "ambient 3 and conclusion 4");
}

// --- criterion 10 -----------------------------------------------------------

void criterion_free_rank() {
  CentralizerEvidence e1 = structured_centralizer(exemplar(ClassTag::I1));
  CentralizerEvidence e2 = structured_centralizer(exemplar(ClassTag::I2));
  bool ok = e1.free_rank_evidence == 1 && e2.free_rank_evidence == 2;
  ok = ok && e1.torsion.empty() && e2.torsion.empty();

  NormalizerDescriptor d1 = normalizer_descriptor(exemplar(ClassTag::I1));
  NormalizerDescriptor d2 = normalizer_descriptor(exemplar(ClassTag::I2));
  ok = ok && !d1.torsion_matches_claim && !d1.note.empty();
  ok = ok && !d2.torsion_matches_claim && !d2.note.empty();
  report(10, ok,
         "unit-group evidence has free rank 1 (complex pair) and 2 (totally "
         "real), and the unrealized order-2 claim is flagged");
}

} // namespace

int main() {
  std::printf("acceptance criteria\n");
  criterion_corpus();
  criterion_involutions();
  criterion_unipotent_centralizer();
  criterion_block_centralizer();
  criterion_h4();
  criterion_dimension();
  criterion_unipotent_pairs();
  criterion_hirsch();
  criterion_class_dims();
  criterion_free_rank();
  if (failures) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
