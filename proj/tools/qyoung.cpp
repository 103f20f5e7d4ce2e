// qyoung: exact verification and exploration of the q-Young operator algebra.
//
//   qyoung verify --suite all --mode exact --format json
//   qyoung expand "rev(Y3) - Y111" --n 4
//   qyoung matrix b1 --basis young --format pretty

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qyoung/hecke.hpp"
#include "qyoung/parser.hpp"
#include "qyoung/suites.hpp"
#include "qyoung/young_basis.hpp"

namespace {

int cmd_verify(const std::string& suite, const qyoung::suites::Options& opt,
               const std::string& format) {
  std::vector<qyoung::suites::SuiteReport> reports;
  if (suite == "all")
    reports = qyoung::suites::run_all(opt);
  else
    reports.push_back(qyoung::suites::run_suite(suite, opt));

  if (format == "json") {
    if (suite == "all")
      std::cout << qyoung::suites::to_json(reports);
    else
      std::cout << qyoung::suites::to_json(reports.front());
  } else {
    for (const auto& r : reports) std::cout << qyoung::suites::to_text(r) << "\n";
  }
  for (const auto& r : reports)
    if (!r.all_pass()) return 1;
  return 0;
}

int cmd_expand(const std::string& expr, int n) {
  if (n != 4) {
    std::cerr << "error: only the dimension-8 embedding (--n 4) is supported\n";
    return 2;
  }
  std::cout << qyoung::parse_expression(expr).str() << "\n";
  return 0;
}

nlohmann::ordered_json matrix_json(const qyoung::FieldMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

int cmd_matrix(const std::string& name, const std::string& basis, const std::string& format) {
  qyoung::HeckeAlgebra h(3);
  qyoung::Multivector mv = qyoung::parse_expression(name);
  qyoung::HeckeElement x = h.to_coords(mv);

  qyoung::FieldMatrix m =
      basis == "young" ? qyoung::YoungBasis(h).left_regular_matrix(x) : h.left_mult_matrix(x);

  if (format == "json")
    std::cout << matrix_json(m).dump(2) << "\n";
  else
    std::cout << m.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic engine for q-Young operators in Clifford algebras"};
  app.require_subcommand(1);

  std::string suite = "all", mode = "exact", vformat = "text";
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite name or 'all'")
      ->check(CLI::IsMember({"hecke", "n2", "n3", "garnir", "intertwine", "repmat", "appendix",
                             "all"}));
  verify->add_option("--mode", mode, "exact or sampled")
      ->check(CLI::IsMember({"exact", "sampled"}));
  verify->add_option("--seed", seed, "seed for sampled mode");
  verify->add_option("--format", vformat, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string expr;
  int n = 4;
  auto* expand = app.add_subcommand("expand", "expand an expression into Grassmann form");
  expand->add_option("expr", expr, "expression to expand")->required();
  expand->add_option("--n", n, "number of Hecke generator slots (fixed at 4)");

  std::string name, basis = "young", mformat = "pretty";
  auto* matrix = app.add_subcommand("matrix", "left-regular matrix of a named operator");
  matrix->add_option("name", name, "operator name or expression")->required();
  matrix->add_option("--basis", basis, "young or hecke")
      ->check(CLI::IsMember({"young", "hecke"}));
  matrix->add_option("--format", mformat, "json or pretty")
      ->check(CLI::IsMember({"json", "pretty"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(suite, {mode, seed}, vformat);
    if (expand->parsed()) return cmd_expand(expr, n);
    if (matrix->parsed()) return cmd_matrix(name, basis, mformat);
  } catch (const qyoung::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
