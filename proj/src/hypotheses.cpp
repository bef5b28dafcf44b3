#include "sl3vc/hypotheses.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "sl3vc/exact.hpp"
#include "sl3vc/vcyc.hpp"

namespace sl3vc {

std::vector<Rat> charpoly_rat(const RatMat& A) {
  if (!A.square())
    throw Error(ErrorKind::InvalidInput, "charpoly needs a square matrix");
  std::vector<Rat> hi = detail::berkowitz(A);
  return std::vector<Rat>(hi.rbegin(), hi.rend());
}

namespace {

bool integral_poly(const std::vector<Rat>& p) {
  for (const Rat& c : p)
    if (denominator(c) != 1) return false;
  return true;
}

struct Node {
  RatMat m;
  std::vector<int> word;
};

} // namespace

IntegralCharReport integral_char_check(const std::vector<RatMat>& gens,
                                       std::size_t length, Parallelism par) {
  if (gens.empty())
    throw Error(ErrorKind::InvalidInput, "empty generator set");
  std::vector<RatMat> alphabet; // even index: generator, odd: inverse
  std::vector<int> letter_ids;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const RatMat& g = gens[i];
    if (!g.square() || g.rows() != 3)
      throw Error(ErrorKind::InvalidInput, "expected 3 x 3 generators");
    auto [d, inv] = det_inv(g);
    if (!inv)
      throw Error(ErrorKind::SingularGenerator,
                  "generator " + std::to_string(i + 1) + " is singular");
    alphabet.push_back(g);
    letter_ids.push_back(static_cast<int>(i) + 1);
    alphabet.push_back(*inv);
    letter_ids.push_back(-(static_cast<int>(i) + 1));
  }

  IntegralCharReport rep;
  std::set<RatMat> seen;
  seen.insert(RatMat::identity(3));
  std::vector<Node> frontier{{RatMat::identity(3), {}}};

  for (std::size_t lvl = 1; lvl <= length; ++lvl) {
    rep.length_reached = lvl;
    // successors are computed per frontier slot so the merge order (and
    // hence the shortlex-first violation) is independent of threading
    std::vector<std::vector<Node>> produced(frontier.size());
    auto expand = [&](std::size_t idx) {
      const Node& nd = frontier[idx];
      int last = nd.word.empty() ? 0 : nd.word.back();
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        if (letter_ids[a] == -last) continue; // keep words reduced
        Node nx;
        nx.m = nd.m * alphabet[a];
        nx.word = nd.word;
        nx.word.push_back(letter_ids[a]);
        produced[idx].push_back(std::move(nx));
      }
    };
    if (par == Parallelism::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (long long i = 0; i < static_cast<long long>(frontier.size()); ++i)
        expand(static_cast<std::size_t>(i));
    } else {
      for (std::size_t i = 0; i < frontier.size(); ++i) expand(i);
    }

    std::vector<Node> next;
    for (auto& bucket : produced)
      for (Node& nd : bucket) {
        if (!seen.insert(nd.m).second) continue;
        std::vector<Rat> p = charpoly_rat(nd.m);
        if (!integral_poly(p) && rep.pass) {
          rep.pass = false;
          rep.violation_word = nd.word;
          rep.violation_poly = p;
        }
        next.push_back(std::move(nd));
      }
    if (!rep.pass) break;
    if (next.empty()) {
      rep.saturated = true;
      break;
    }
    frontier = std::move(next);
  }
  rep.distinct_elements = seen.size();
  return rep;
}

HirschReport unipotent_hirsch_report(const std::vector<IntMat>& gens) {
  HirschReport r;
  r.generator_count = gens.size();
  r.hirsch_length = hirsch_length_unipotent(gens);
  return r;
}

} // namespace sl3vc
