// galoiskit: Galois correspondence of the splitting field of a rational polynomial.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 theorem check failure, 3 degree/group cap exceeded.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "galoiskit/analysis.hpp"
#include "galoiskit/tower.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTheorem = 2;
constexpr int kExitCap = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Galois correspondence for the splitting field of a polynomial over Q"};
  std::string input;
  std::string format_name = "text";
  std::size_t max_degree = 24;
  bool verify = false;
  bool quiet = false;

  app.add_option("polynomial", input, "polynomial in x, e.g. \"x^3 - 2\"")->required();
  app.add_option("--format", format_name, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--max-degree", max_degree, "largest splitting-field degree to attempt")
      ->envname("GALOISKIT_MAX_DEGREE")
      ->check(CLI::PositiveNumber);
  app.add_flag("--verify", verify, "also check inequalities, hom-extension counts and insertion laws");
  app.add_flag("-q,--quiet", quiet, "print nothing on success; errors still go to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::map<std::string, galoiskit::OutputFormat> formats{
      {"text", galoiskit::OutputFormat::text},
      {"json", galoiskit::OutputFormat::json},
      {"dot", galoiskit::OutputFormat::dot},
  };
  const galoiskit::OutputFormat format = formats.at(format_name);

  galoiskit::Poly p;
  try {
    p = galoiskit::parse_polynomial(input);
  } catch (const galoiskit::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n  " << input << "\n  " << std::string(e.position(), ' ') << "^\n";
    return kExitUsage;
  }

  galoiskit::AnalysisOptions options;
  options.max_degree = max_degree;
  options.verify = verify;
  galoiskit::AnalysisReport report;
  try {
    report = galoiskit::analyze(p, options);
  } catch (const galoiskit::DegreeCapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --max-degree, currently " << max_degree << ")\n";
    return kExitCap;
  } catch (const galoiskit::GroupCapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --max-degree, currently " << max_degree << ")\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (!report.theorem_failures.empty()) {
    std::cout << galoiskit::emit(report, format);
    std::cerr << "error: " << report.theorem_failures.size() << " theorem check(s) failed\n";
    for (const auto& f : report.theorem_failures) std::cerr << "  " << f << '\n';
    return kExitTheorem;
  }
  if (!quiet) std::cout << galoiskit::emit(report, format);
  return kExitOk;
}
