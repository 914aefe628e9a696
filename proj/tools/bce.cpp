// bce: command-line calculator and test runner for the integral Bost-Connes algebra.

#include <CLI11.hpp>
#include <iostream>
#include <iterator>
#include <sstream>

#include "bce/eval.hpp"
#include "bce/suites.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kEvalError = 1;
constexpr int kParseError = 2;
constexpr int kSuiteFailure = 3;

std::string read_stdin() {
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

void report_parse_error(const std::string& text, const bce::ParseError& e) {
  std::cerr << "parse error: " << e.what() << "\n";
  // echo the offending line with a caret under the column
  std::istringstream lines(text);
  std::string line;
  for (std::size_t i = 0; i < e.line() && std::getline(lines, line); ++i) {
  }
  std::cerr << "  " << line << "\n  " << std::string(e.column() - 1, ' ') << "^\n";
}

int eval_command(const std::string& ring_tag, bool json, const std::string& text) {
  const bce::Ring ring = bce::Ring::parse(ring_tag);
  const bce::Expr expr = bce::parse_expr(text);
  const bce::Value v = bce::evaluate(expr, ring);
  if (json) {
    std::cout << bce::value_to_json(v).dump() << "\n";
  } else {
    std::cout << bce::format(v) << "\n";
  }
  return kOk;
}

int suite_command(const std::vector<std::string>& names, std::uint64_t seed) {
  bool ok = true;
  for (const auto& name : names) {
    const bce::SuiteReport report = bce::run_suite(name, seed);
    std::cout << report.str();
    ok = ok && report.ok();
  }
  return ok ? kOk : kSuiteFailure;
}

int matrix_command(unsigned long p, unsigned long level, bool json, const std::string& text) {
  if (!bce::is_prime(p)) throw bce::DomainError(std::to_string(p) + " is not prime");
  const bce::Ring ring = bce::Ring::prime_field(p);
  const bce::CpElem x = bce::as_cp(bce::evaluate(bce::parse_expr(text), ring));
  const bce::TriangularMatrix m = bce::cp_matrix(x, level);
  if (json) {
    std::cout << bce::to_json(m).dump() << "\n";
  } else {
    std::cout << m.grid();
  }
  return kOk;
}

int json_command(const std::string& direction, const std::string& ring_tag) {
  const std::string input = read_stdin();
  if (direction == "encode") {
    return eval_command(ring_tag, true, input);
  }
  bce::Json j;
  try {
    j = bce::Json::parse(input);
  } catch (const bce::Json::parse_error& e) {
    throw bce::ParseError(1, e.byte == 0 ? 1 : e.byte, std::string("invalid JSON: ") + e.what());
  }
  std::cout << bce::format(bce::from_json(j)) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic in the integral Bost-Connes algebra"};
  app.require_subcommand(1);

  std::string ring_tag = "z";
  bool json = false;
  std::string text;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression and print its normal form");
  eval->add_option("--ring", ring_tag, "z | q | fp:<p> | fq:<p>,<k>[,<poly>] | qsqrt");
  eval->add_flag("--json", json, "Print the JSON encoding instead of text");
  eval->add_option("expr", text, "Expression")->required();

  std::vector<std::string> suite_list;
  std::uint64_t seed = 0;
  auto* suite = app.add_subcommand("suite", "Run property suites");
  suite->add_option("names", suite_list, "relations | associativity | rep-oracle | charp | frobenius | hecke")
      ->required();
  suite->add_option("--seed", seed, "Random seed");

  unsigned long p = 2, level = 2;
  auto* matrix = app.add_subcommand("matrix", "Dump the truncated triangular matrix of a C_p element");
  matrix->add_option("--p", p, "Prime")->required();
  matrix->add_option("--level", level, "Truncation level")->required();
  matrix->add_flag("--json", json, "Print the JSON encoding instead of a grid");
  matrix->add_option("expr", text, "Expression")->required();

  std::string direction;
  auto* json_cmd = app.add_subcommand("json", "Convert between expressions and JSON on stdin/stdout");
  json_cmd->add_option("direction", direction, "encode | decode")
      ->required()
      ->check(CLI::IsMember({"encode", "decode"}));
  json_cmd->add_option("--ring", ring_tag, "Ring for encode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  const std::string source = json_cmd->parsed() ? std::string() : text;
  try {
    if (eval->parsed()) return eval_command(ring_tag, json, text);
    if (suite->parsed()) return suite_command(suite_list, seed);
    if (matrix->parsed()) return matrix_command(p, level, json, text);
    return json_command(direction, ring_tag);
  } catch (const bce::ParseError& e) {
    report_parse_error(source, e);
    return kParseError;
  } catch (const bce::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kEvalError;
  }
}
