// Command line front end. Every subcommand prints a single JSON document on
// stdout. Exit codes: 0 success, 1 bad input or internal error, 2 when the
// answer is Unknown or a search bound was exhausted.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sl3vc/report.hpp"

namespace {

using sl3vc::Json;

Json parse_arg(const std::string& arg) {
  std::string s = arg;
  auto first = s.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (s[first] == '[' || s[first] == '{'))
    return Json::parse(s);
  std::ifstream in(arg);
  if (!in)
    throw sl3vc::Error(sl3vc::ErrorKind::InvalidInput,
                       "cannot open file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return Json::parse(buf.str());
}

sl3vc::IntMat matrix_arg(const std::string& arg) {
  return sl3vc::decode_int_matrix(parse_arg(arg));
}

Json generator_list(const Json& j) {
  if (j.is_object() && j.contains("generators")) return j.at("generators");
  return j;
}

std::vector<sl3vc::IntMat> int_generators(const std::string& arg) {
  Json j = generator_list(parse_arg(arg));
  if (!j.is_array() || j.empty())
    throw sl3vc::Error(sl3vc::ErrorKind::InvalidInput,
                       "expected a non-empty array of matrices");
  std::vector<sl3vc::IntMat> out;
  for (const auto& e : j) out.push_back(sl3vc::decode_int_matrix(e));
  return out;
}

std::vector<sl3vc::RatMat> rat_generators(const std::string& arg) {
  Json j = generator_list(parse_arg(arg));
  if (!j.is_array() || j.empty())
    throw sl3vc::Error(sl3vc::ErrorKind::InvalidInput,
                       "expected a non-empty array of matrices");
  std::vector<sl3vc::RatMat> out;
  for (const auto& e : j) out.push_back(sl3vc::decode_rat_matrix(e));
  return out;
}

int emit(const Json& report) {
  std::cout << report.dump(2) << "\n";
  if (report.contains("result") && report["result"] == "unknown") return 2;
  if (report.contains("completeness") &&
      report["completeness"] == "bound_exhausted")
    return 2;
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"infinite cyclic subgroups of SL(3,Z): classification, "
               "commensurability, commensurators, dimension certificates"};
  app.require_subcommand(1);

  std::string mat_a, mat_b, file;
  int power_bound = 12;
  int entry_bound = 3;
  std::size_t word_length = 4;
  bool serial = false;

  auto add_bounds = [&](CLI::App* cmd, bool powers, bool entries) {
    if (powers)
      cmd->add_option("--power-bound", power_bound,
                      "largest |exponent| tried in power searches");
    if (entries)
      cmd->add_option("--entry-bound", entry_bound,
                      "largest |entry| in enumerated matrices");
  };

  auto* classify = app.add_subcommand(
      "classify", "commensurability class of the cyclic subgroup <A>");
  classify->add_option("-m,--matrix", mat_a, "matrix (inline JSON or file)")
      ->required();

  auto* comm = app.add_subcommand(
      "comm", "decide whether <A> and <B> are commensurable");
  comm->add_option("-a", mat_a, "first matrix")->required();
  comm->add_option("-b", mat_b, "second matrix")->required();
  add_bounds(comm, true, false);

  auto* centralizer = app.add_subcommand(
      "centralizer", "enumerate the centralizer of A up to an entry bound");
  centralizer->add_option("-m,--matrix", mat_a, "matrix")->required();
  add_bounds(centralizer, true, true);
  centralizer->add_flag("--serial", serial, "disable the parallel kernel");

  auto* normalizer = app.add_subcommand(
      "normalizer", "structure of the commensurator of <A> in SL(3,Z)");
  normalizer->add_option("-m,--matrix", mat_a, "matrix")->required();
  add_bounds(normalizer, true, true);

  auto* hirsch = app.add_subcommand(
      "hirsch", "Hirsch length of a unipotent subgroup");
  hirsch->add_option("-f,--file", file, "generators (JSON array or file)")
      ->required();

  auto* intchar = app.add_subcommand(
      "intchar", "search short words for non-integral characteristic "
                 "polynomials");
  intchar->add_option("-f,--file", file, "generators (JSON array or file)")
      ->required();
  intchar->add_option("-L,--length", word_length, "maximum word length");
  intchar->add_flag("--serial", serial, "disable the parallel kernel");

  auto* cert = app.add_subcommand(
      "cert-dim4", "certificate that the minimal model dimension is 4");
  (void)cert;

  auto* ktheory = app.add_subcommand(
      "ktheory", "group sample subgroups by commensurability class");
  ktheory->add_option("-f,--file", file, "generators (JSON array or file)")
      ->required();
  add_bounds(ktheory, true, false);

  CLI11_PARSE(app, argc, argv);

  sl3vc::SearchBound sb{power_bound, entry_bound};
  sl3vc::Parallelism par =
      serial ? sl3vc::Parallelism::serial : sl3vc::Parallelism::parallel;

  try {
    if (classify->parsed()) return emit(sl3vc::classify_report(matrix_arg(mat_a)));
    if (comm->parsed())
      return emit(
          sl3vc::comm_report(matrix_arg(mat_a), matrix_arg(mat_b), sb));
    if (centralizer->parsed())
      return emit(sl3vc::centralizer_report(matrix_arg(mat_a), sb, par));
    if (normalizer->parsed())
      return emit(sl3vc::normalizer_report(matrix_arg(mat_a), sb));
    if (hirsch->parsed())
      return emit(sl3vc::hirsch_report_json(int_generators(file)));
    if (intchar->parsed())
      return emit(sl3vc::intchar_report(rat_generators(file), word_length, par));
    if (cert->parsed()) return emit(sl3vc::dim4_report());
    if (ktheory->parsed())
      return emit(sl3vc::ktheory_report(int_generators(file), sb));
  } catch (const sl3vc::Error& e) {
    Json err{{"error", sl3vc::to_string(e.kind())}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    return e.kind() == sl3vc::ErrorKind::BoundExhausted ? 2 : 1;
  } catch (const Json::exception& e) {
    Json err{{"error", "InvalidInput"}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json err{{"error", "Internal"}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
  return 1;
}
