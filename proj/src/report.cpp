#include "sl3vc/report.hpp"

#include <algorithm>
#include <numeric>

namespace sl3vc {

namespace {

const long long kJsonIntMax = 9007199254740992LL; // 2^53, exact in JSON

bool fits_json(const Int& v) {
  return v <= kJsonIntMax && v >= -kJsonIntMax;
}

} // namespace

Json encode(const Int& v) {
  if (fits_json(v)) return Json(v.convert_to<long long>());
  return Json(v.str());
}

Json encode(const Rat& v) {
  if (denominator(v) == 1) return encode(numerator(v));
  return Json(numerator(v).str() + "/" + denominator(v).str());
}

Json encode_matrix(const IntMat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(encode(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json encode_matrix(const RatMat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(encode(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

namespace {

Rat parse_rat(const Json& v) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      auto slash = s.find('/');
      if (slash == std::string::npos) return Rat(Int(s));
      Int num(s.substr(0, slash)), den(s.substr(slash + 1));
      if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
      return Rat(num, den);
    } catch (const Error&) {
      throw;
    } catch (...) {
      throw Error(ErrorKind::InvalidInput, "cannot parse entry '" + s + "'");
    }
  }
  throw Error(ErrorKind::InvalidInput, "matrix entries must be integers or 'p/q' strings");
}

template <typename T, typename F>
Mat<T> decode_matrix_with(const Json& j, F entry) {
  if (!j.is_array() || j.empty())
    throw Error(ErrorKind::InvalidInput, "matrix must be an array of rows");
  const std::size_t r = j.size();
  const std::size_t c = j[0].is_array() ? j[0].size() : 0;
  if (c == 0) throw Error(ErrorKind::InvalidInput, "matrix rows must be arrays");
  Mat<T> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c)
      throw Error(ErrorKind::InvalidInput, "ragged matrix rows");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = entry(j[i][k]);
  }
  return m;
}

} // namespace

RatMat decode_rat_matrix(const Json& j) {
  return decode_matrix_with<Rat>(j, parse_rat);
}

IntMat decode_int_matrix(const Json& j) {
  return decode_matrix_with<Int>(j, [](const Json& v) {
    Rat r = parse_rat(v);
    if (denominator(r) != 1)
      throw Error(ErrorKind::InvalidInput, "expected an integer matrix");
    return numerator(r);
  });
}

namespace {

Json encode_poly(const std::vector<Int>& c) {
  Json a = Json::array();
  for (const Int& x : c) a.push_back(encode(x));
  return a;
}

Json encode_bounds(const SearchBound& sb) {
  return Json{{"power_bound", sb.power_bound}, {"entry_bound", sb.entry_bound}};
}

} // namespace

Json classify_report(const IntMat& A) {
  Classification c = classify(A);
  Json spectral{
      {"charpoly", encode_poly(c.spectral.poly.c)},
      {"unit_root_count", c.spectral.unit_root_count},
      {"cyclotomic_orders", c.spectral.cyclotomic_orders},
      {"noncyclotomic", encode_poly(c.spectral.noncyclotomic)},
      {"discriminant", encode(c.spectral.discriminant)},
  };
  return Json{
      {"schema_version", 1},
      {"class", to_string(c.tag)},
      {"normalization_power", c.normalization_power},
      {"spectral", spectral},
  };
}

Json comm_report(const IntMat& A, const IntMat& B, const SearchBound& sb) {
  CommResult r = commensurable(CyclicSubgroup(A), CyclicSubgroup(B), sb);
  Json out{
      {"schema_version", 1},
      {"result", to_string(r.verdict)},
      {"method", r.method},
      {"bounds_used", encode_bounds(sb)},
  };
  if (r.verdict == Verdict::yes)
    out["witness"] = Json{{"n", r.n}, {"m", r.m}};
  return out;
}

Json centralizer_report(const IntMat& A, const SearchBound& sb,
                        Parallelism par) {
  std::vector<IntMat> elems = centralizer_enum(A, sb, par);
  Json list = Json::array();
  for (const IntMat& m : elems) list.push_back(encode_matrix(m));
  return Json{
      {"schema_version", 1},
      {"count", elems.size()},
      {"elements", list},
      {"bounds_used", Json{{"entry_bound", sb.entry_bound}}},
      {"complete_within_bound", true},
  };
}

Json normalizer_report(const IntMat& A, const SearchBound& sb) {
  NormalizerDescriptor d = normalizer_descriptor(A, sb);
  Json wit = Json::array();
  for (const auto& w : d.witnesses)
    wit.push_back(Json{{"name", w.name}, {"matrix", encode_matrix(w.mat)}});
  Json rel = Json::array();
  for (const auto& r : d.relations)
    rel.push_back(Json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"verified", r.verified}});
  Json tor = Json::array();
  for (const IntMat& t : d.observed_torsion) tor.push_back(encode_matrix(t));
  return Json{
      {"schema_version", 1},
      {"class", to_string(d.tag)},
      {"iso_type", d.iso_type},
      {"witnesses", wit},
      {"relations", rel},
      {"observed_torsion", tor},
      {"flip_found", d.flip_found},
      {"torsion_matches_claim", d.torsion_matches_claim},
      {"note", d.note},
      {"bounds_used", encode_bounds(sb)},
      {"completeness", d.completeness},
  };
}

Json hirsch_report_json(const std::vector<IntMat>& gens) {
  HirschReport r = unipotent_hirsch_report(gens);
  return Json{
      {"schema_version", 1},
      {"hirsch_length", r.hirsch_length},
      {"generator_count", r.generator_count},
      {"ambient_ceiling", r.ambient_ceiling},
  };
}

Json intchar_report(const std::vector<RatMat>& gens, std::size_t length,
                    Parallelism par) {
  IntegralCharReport r = integral_char_check(gens, length, par);
  Json out{
      {"schema_version", 1},
      {"verdict", r.pass ? "pass" : "violation"},
      {"length_bound", length},
      {"length_reached", r.length_reached},
      {"distinct_elements", r.distinct_elements},
      {"saturated", r.saturated},
  };
  if (!r.pass) {
    out["word"] = r.violation_word;
    Json poly = Json::array();
    for (const Rat& c : r.violation_poly) poly.push_back(encode(c));
    out["charpoly"] = poly;
  }
  return out;
}

std::pair<int, int> model_pair(ClassTag t) {
  switch (t) {
    case ClassTag::I1:
    case ClassTag::I1t: return {0, 1};
    case ClassTag::I2:
    case ClassTag::I2t: return {1, 2};
    case ClassTag::I3: return {2, 3};
  }
  return {-1, -1};
}

KTheorySkeleton ktheory_skeleton(const std::vector<IntMat>& gens,
                                 const SearchBound& sb) {
  KTheorySkeleton sk;
  sk.bounds = sb;
  std::vector<std::size_t> ok;
  std::vector<ClassTag> tags(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    try {
      tags[i] = classify(gens[i]).tag;
      ok.push_back(i);
    } catch (const Error& e) {
      sk.failures.push_back({i, to_string(e.kind())});
    }
  }
  // union-find over witnessed commensurabilities
  std::vector<std::size_t> parent(gens.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < ok.size(); ++a)
    for (std::size_t b = a + 1; b < ok.size(); ++b) {
      std::size_t i = ok[a], j = ok[b];
      if (tags[i] != tags[j]) continue;
      if (find(i) == find(j)) continue;
      CommResult r = commensurable(CyclicSubgroup(gens[i]),
                                   CyclicSubgroup(gens[j]), sb);
      if (r.verdict == Verdict::yes) parent[find(j)] = find(i);
    }
  std::vector<std::size_t> roots;
  for (std::size_t i : ok)
    if (find(i) == i) roots.push_back(i);
  for (std::size_t r : roots) {
    KTheorySkeleton::Group g;
    g.tag = tags[r];
    g.model_pair = model_pair(g.tag);
    for (std::size_t i : ok)
      if (find(i) == r) g.members.push_back(i);
    sk.groups.push_back(std::move(g));
  }
  return sk;
}

Json ktheory_report(const std::vector<IntMat>& gens, const SearchBound& sb) {
  KTheorySkeleton sk = ktheory_skeleton(gens, sb);
  Json groups = Json::array();
  for (const auto& g : sk.groups)
    groups.push_back(Json{
        {"members", g.members},
        {"class", to_string(g.tag)},
        {"model_pair", Json::array({g.model_pair.first, g.model_pair.second})},
    });
  Json failures = Json::array();
  for (const auto& f : sk.failures)
    failures.push_back(Json{{"index", f.index}, {"error", f.error}});
  return Json{
      {"schema_version", 1},
      {"groups", groups},
      {"failures", failures},
      {"bounds_used", encode_bounds(sb)},
  };
}

namespace {

IntMat companion3(long long c0, long long c1, long long c2) {
  // companion of x^3 + c2 x^2 + c1 x + c0
  IntMat m(3, 3);
  m(1, 0) = 1;
  m(2, 1) = 1;
  m(0, 2) = -c0;
  m(1, 2) = -c1;
  m(2, 2) = -c2;
  return m;
}

} // namespace

DimensionCertificate dimension_certificate() {
  DimensionCertificate cert;

  // the two involutions acting on the Heisenberg lattice
  HeisAut phi10{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}};
  HeisAut phi01{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}};
  H4Certificate h4 = h4_certificate({phi10, phi01});
  cert.scalars = h4.scalars;
  cert.invariant_dim = h4.invariant_dim;

  // representatives of the five classes
  IntMat repI1 = companion3(-1, -1, 0);  // x^3 - x - 1
  IntMat repI2 = companion3(-1, -3, 0);  // x^3 - 3x - 1
  IntMat repI1t(3, 3);
  repI1t(0, 0) = 1;
  repI1t(1, 1) = 2;
  repI1t(1, 2) = 1;
  repI1t(2, 1) = 1;
  repI1t(2, 2) = 1;
  IntMat repI2t = IntMat::identity(3);
  repI2t(0, 1) = 1;
  repI2t(0, 2) = 1;
  repI2t(1, 2) = 1;
  IntMat repI3 = IntMat::identity(3);
  repI3(0, 2) = 1;

  struct Rep {
    ClassTag tag;
    IntMat m;
  };
  const Rep reps[5] = {{ClassTag::I1, repI1},
                       {ClassTag::I1t, repI1t},
                       {ClassTag::I2, repI2},
                       {ClassTag::I2t, repI2t},
                       {ClassTag::I3, repI3}};

  int max_n = 0;
  for (const Rep& rep : reps) {
    Classification c = classify(rep.m);
    if (c.tag != rep.tag)
      throw Error(ErrorKind::InvalidInput, "representative misclassified");
    int n = 0;
    switch (rep.tag) {
      case ClassTag::I1:
      case ClassTag::I1t:
      case ClassTag::I2:
        n = static_cast<int>(
            structured_centralizer(rep.m).free_rank_evidence);
        break;
      case ClassTag::I2t: {
        IntMat N = rep.m - IntMat::identity(3);
        IntMat central = IntMat::identity(3) + N * N;
        n = static_cast<int>(hirsch_length_unipotent({rep.m, central}));
        break;
      }
      case ClassTag::I3: {
        // full Heisenberg sits in the commensurator
        IntMat x = IntMat::identity(3);
        x(0, 1) = 1;
        IntMat y = IntMat::identity(3);
        y(1, 2) = 1;
        n = static_cast<int>(hirsch_length_unipotent({x, y}));
        break;
      }
    }
    cert.class_dims.push_back({to_string(rep.tag), {n, n - 1}});
    max_n = std::max(max_n, n);
  }

  cert.ambient = 3;
  cert.lower_bound = cert.invariant_dim == 1 ? max_n + 1 : cert.ambient;
  cert.upper_bound = max_n + 1;
  cert.upper_bound_source = "mapping cylinder construction";
  cert.conclusion = std::max(cert.lower_bound, cert.ambient);
  return cert;
}

Json dim4_report() {
  DimensionCertificate c = dimension_certificate();
  Json dims = Json::object();
  for (const auto& [name, nf] : c.class_dims)
    dims[name] = Json::array({nf.first, nf.second});
  Json betti = Json::array();
  IntMat shear(2, 2);
  shear(0, 0) = 1;
  shear(0, 1) = 1;
  shear(1, 1) = 1;
  for (std::size_t b : mapping_torus_betti(shear)) betti.push_back(b);
  return Json{
      {"schema_version", 1},
      {"invariant_dim", c.invariant_dim},
      {"scalars", c.scalars},
      {"class_dims", dims},
      {"ambient", c.ambient},
      {"lower_bound", c.lower_bound},
      {"upper_bound", c.upper_bound},
      {"upper_bound_source", c.upper_bound_source},
      {"conclusion", c.conclusion},
      {"betti_cross_check",
       Json{{"monodromy", encode_matrix(shear)}, {"betti", betti}}},
  };
}

} // namespace sl3vc
