// Compares the serial reference kernels against the parallel production
// kernels on identical inputs, checking that the results agree and printing
// wall-clock timings.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "sl3vc/commensurator.hpp"
#include "sl3vc/hypotheses.hpp"

using namespace sl3vc;

namespace {

IntMat eij(std::size_t i, std::size_t j, int c) {
  IntMat m = IntMat::identity(3);
  m(i, j) = c;
  return m;
}

IntMat random_unimodular(std::mt19937_64& rng, int factors) {
  IntMat m = IntMat::identity(3);
  std::uniform_int_distribution<int> idx(0, 2), val(-2, 2);
  int used = 0;
  while (used < factors) {
    int i = idx(rng), j = idx(rng), c = val(rng);
    if (i == j || c == 0) continue;
    m = m * eij(i, j, c);
    ++used;
  }
  return m;
}

template <typename F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void row(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-28s %10.3fs %10.3fs %8.2fx   %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0,
              agree ? "results agree" : "RESULTS DIFFER");
}

} // namespace

int main() {
  std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    IntMat A(3, 3, {0, 0, 1, 1, 0, 1, 0, 1, 0}); // companion of x^3 - x - 1
    SearchBound sb{12, 3};
    std::vector<IntMat> s, p;
    double ts = timed([&] { s = centralizer_enum(A, sb, Parallelism::serial); });
    double tp = timed([&] { p = centralizer_enum(A, sb, Parallelism::parallel); });
    row("centralizer_enum b=3", ts, tp, s == p);
  }

  {
    IntMat T = eij(0, 2, 1);
    SearchBound sb{12, 4};
    std::vector<IntMat> s, p;
    double ts = timed([&] { s = centralizer_enum(T, sb, Parallelism::serial); });
    double tp = timed([&] { p = centralizer_enum(T, sb, Parallelism::parallel); });
    row("centralizer_enum unip b=4", ts, tp, s == p);
  }

  {
    IntMat A(3, 3, {0, 0, 1, 1, 0, 3, 0, 1, 0}); // companion of x^3 - 3x - 1
    IntMat B = inverse_unimodular(A);
    std::vector<IntMat> s, p;
    double ts = timed(
        [&] { s = intertwiner_enum(A, B, 5, Parallelism::serial); });
    double tp = timed(
        [&] { p = intertwiner_enum(A, B, 5, Parallelism::parallel); });
    row("intertwiner_enum flip b=5", ts, tp, s == p);
  }

  {
    std::mt19937_64 rng(20260814);
    std::vector<IntMat> corpus;
    IntMat base(3, 3, {0, 0, 1, 1, 0, 1, 0, 1, 0});
    for (int i = 0; i < 400; ++i) {
      IntMat P = random_unimodular(rng, 8);
      corpus.push_back(conjugate(matrix_pow(base, 1 + i % 4), P));
    }
    std::vector<ClassTag> s, p;
    double ts = timed([&] { s = classify_corpus(corpus, Parallelism::serial); });
    double tp =
        timed([&] { p = classify_corpus(corpus, Parallelism::parallel); });
    row("classify_corpus n=400", ts, tp, s == p);
  }

  {
    std::vector<RatMat> gens = {to_rat(eij(0, 1, 1)), to_rat(eij(1, 2, 1)),
                                to_rat(IntMat(3, 3, {0, 0, 1, 1, 0, 1, 0, 1, 0}))};
    IntegralCharReport s, p;
    double ts =
        timed([&] { s = integral_char_check(gens, 6, Parallelism::serial); });
    double tp =
        timed([&] { p = integral_char_check(gens, 6, Parallelism::parallel); });
    bool agree = s.pass == p.pass && s.violation_word == p.violation_word &&
                 s.distinct_elements == p.distinct_elements;
    row("integral_char_check L=6", ts, tp, agree);
  }

  return 0;
}
