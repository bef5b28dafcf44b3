#include <doctest.h>

#include <fstream>

#include "helpers.hpp"
#include "sl3vc/report.hpp"

using namespace sl3vc;
using namespace testutil;

namespace {

Json load_schema(const std::string& name) {
  std::ifstream in(std::string(SL3VC_SCHEMA_DIR) + "/" + name);
  REQUIRE(in.good());
  return Json::parse(in);
}

// Minimal structural validation: every key listed as required in the schema
// (including one level of nesting) must be present with a compatible kind.
void check_required(const Json& report, const Json& schema) {
  for (const auto& key : schema.at("required")) {
    const std::string k = key.get<std::string>();
    REQUIRE_MESSAGE(report.contains(k), "missing key: " << k);
    if (!schema.contains("properties")) continue;
    const Json& props = schema["properties"];
    if (props.contains(k) && props[k].contains("required") &&
        report[k].is_object())
      check_required(report[k], props[k]);
  }
}

} // namespace

TEST_CASE("integer encoding switches to strings beyond 2^53") {
  Int big = Int(1) << 53;
  CHECK(encode(Int(big - 1)).is_number_integer());
  CHECK(encode(big).is_number_integer());
  CHECK(encode(Int(big + 1)).is_string());
  CHECK(encode(Int(-big - 1)).is_string());
  CHECK(encode(Int(5)) == Json(5));
  CHECK(encode(Rat(3, 4)) == Json("3/4"));
  CHECK(encode(Rat(8, 4)) == Json(2));
}

TEST_CASE("matrix decode round trip with huge entries") {
  IntMat m(2, 2);
  m(0, 0) = Int("123456789012345678901234567890");
  m(0, 1) = -m(0, 0);
  m(1, 0) = 7;
  m(1, 1) = (Int(1) << 53) + 1;
  CHECK(decode_int_matrix(encode_matrix(m)) == m);

  RatMat r(1, 2, {Rat(1, 3), Rat(-22, 7)});
  CHECK(decode_rat_matrix(encode_matrix(r)) == r);
}

TEST_CASE("matrix decode rejects malformed input") {
  CHECK_THROWS_AS(decode_int_matrix(Json::parse("[[1,2],[3]]")), Error);
  CHECK_THROWS_AS(decode_int_matrix(Json::parse("[1,2,3]")), Error);
  CHECK_THROWS_AS(decode_int_matrix(Json::parse("[[\"1/2\"]]")), Error);
  CHECK_THROWS_AS(decode_int_matrix(Json::parse("[[\"2/0\"]]")), Error);
  CHECK_THROWS_AS(decode_rat_matrix(Json::parse("[[{}]]")), Error);
  CHECK_NOTHROW((void)decode_rat_matrix(Json::parse("[[\"1/2\"]]")));
}

TEST_CASE("reports conform to their schemas") {
  IntMat a = companion3(-1, -1, 0);
  check_required(classify_report(a), load_schema("classify.json"));
  check_required(comm_report(a, matrix_pow(a, 2), SearchBound{}),
                 load_schema("comm.json"));
  check_required(centralizer_report(eij(0, 2, 1), SearchBound{12, 1}),
                 load_schema("centralizer.json"));
  check_required(normalizer_report(eij(0, 2, 1), SearchBound{}),
                 load_schema("normalizer.json"));
  check_required(hirsch_report_json({eij(0, 2, 1)}),
                 load_schema("hirsch.json"));
  check_required(intchar_report({to_rat(eij(0, 1, 1))}, 3),
                 load_schema("intchar.json"));
  check_required(ktheory_report({a, eij(0, 2, 1)}, SearchBound{}),
                 load_schema("ktheory.json"));
  check_required(dim4_report(), load_schema("cert-dim4.json"));
}

TEST_CASE("classify report content") {
  Json r = classify_report(companion3(-1, -1, 0));
  CHECK(r["schema_version"] == 1);
  CHECK(r["class"] == "I1");
  CHECK(r["spectral"]["discriminant"] == -23);
}

TEST_CASE("comm report carries a witness only on yes") {
  IntMat a = companion3(-1, -1, 0);
  Json yes = comm_report(a, matrix_pow(a, 3), SearchBound{});
  CHECK(yes["result"] == "yes");
  REQUIRE(yes.contains("witness"));
  CHECK(yes["witness"]["n"] == 3);
  CHECK(yes["witness"]["m"] == 1);

  Json no = comm_report(a, eij(0, 2, 1), SearchBound{});
  CHECK(no["result"] == "no");
  CHECK(!no.contains("witness"));
}

TEST_CASE("model pairs per class") {
  CHECK(model_pair(ClassTag::I1) == std::pair<int, int>{0, 1});
  CHECK(model_pair(ClassTag::I1t) == std::pair<int, int>{0, 1});
  CHECK(model_pair(ClassTag::I2) == std::pair<int, int>{1, 2});
  CHECK(model_pair(ClassTag::I2t) == std::pair<int, int>{1, 2});
  CHECK(model_pair(ClassTag::I3) == std::pair<int, int>{2, 3});
}

TEST_CASE("ktheory skeleton groups commensurable subgroups") {
  IntMat a = companion3(-1, -1, 0);
  IntMat r4(3, 3, {0, -1, 0, 1, 0, 0, 0, 0, 1});
  std::vector<IntMat> gens = {a,          matrix_pow(a, 3), eij(0, 2, 2),
                              eij(0, 2, 6), eij(0, 1, 1) * eij(1, 2, 1),
                              r4};
  KTheorySkeleton sk = ktheory_skeleton(gens, SearchBound{});
  REQUIRE(sk.failures.size() == 1);
  CHECK(sk.failures[0].index == 5);
  CHECK(sk.failures[0].error == "FiniteOrder");
  REQUIRE(sk.groups.size() == 3);
  for (const auto& g : sk.groups) {
    if (g.tag == ClassTag::I1) {
      CHECK(g.members == std::vector<std::size_t>{0, 1});
      CHECK(g.model_pair == std::pair<int, int>{0, 1});
    } else if (g.tag == ClassTag::I3) {
      CHECK(g.members == std::vector<std::size_t>{2, 3});
      CHECK(g.model_pair == std::pair<int, int>{2, 3});
    } else {
      CHECK(g.tag == ClassTag::I2t);
      CHECK(g.members == std::vector<std::size_t>{4});
    }
  }
}

TEST_CASE("dimension certificate") {
  DimensionCertificate c = dimension_certificate();
  CHECK(c.scalars == std::vector<int>{1, 1});
  CHECK(c.invariant_dim == 1);
  CHECK(c.ambient == 3);
  CHECK(c.lower_bound == 4);
  CHECK(c.upper_bound == 4);
  CHECK(c.conclusion == 4);
  CHECK(!c.upper_bound_source.empty());

  REQUIRE(c.class_dims.size() == 5);
  using P = std::pair<int, int>;
  for (const auto& [name, dims] : c.class_dims) {
    if (name == "I1" || name == "I1t") CHECK(dims == P{1, 0});
    if (name == "I2" || name == "I2t") CHECK(dims == P{2, 1});
    if (name == "I3") CHECK(dims == P{3, 2});
  }
}

TEST_CASE("dim4 report cross-checks the fiber betti numbers") {
  Json r = dim4_report();
  CHECK(r["conclusion"] == 4);
  CHECK(r["betti_cross_check"]["betti"] ==
        Json::parse("[1, 2, 2, 1]"));
}
