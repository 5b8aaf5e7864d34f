#include <CLI11.hpp>
#include <iostream>

#include "galois/acceptance.hpp"
#include "galois/cli.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 2;
constexpr int kCertification = 3;
constexpr int kTheorem = 4;

int run_analyze(const std::string& poly, const galois::AnalysisConfig& cfg, const std::string& format) {
  galois::AnalysisReport report = galois::analyze(poly, cfg);
  std::cout << (format == "json" ? galois::render_json(report) : galois::render_text(report));
  return report.all_pass() ? kOk : kTheorem;
}

int run_selftest() {
  galois::AcceptanceSuite suite;
  bool all = true;
  suite.run([&](const galois::CriterionResult& r) {
    std::cout << galois::format_result(r) << std::endl;
    all = all && r.pass;
  });
  std::cout << (all ? "all criteria pass" : "some criteria FAIL") << '\n';
  return all ? kOk : kTheorem;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splitting fields and the subgroup-subfield correspondence for degree 2-4 polynomials"};
  app.require_subcommand(1);

  std::string poly, format = "text", spec;
  galois::AnalysisConfig cfg;
  auto* analyze = app.add_subcommand("analyze", "analyze one polynomial");
  analyze->add_option("poly", poly, "polynomial, e.g. \"x^3 - 2\"")->required();
  analyze->add_option("--precision", cfg.precision_bits, "root enclosure precision in bits")->capture_default_str();
  analyze->add_option("--norm-bound", cfg.norm_bound, "largest weight searched for the resolvent")
      ->capture_default_str();
  analyze->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  analyze->add_flag("--array", cfg.emit_array, "print the arrangement array of each subgroup");
  analyze->add_option("--spec", spec, "resolvent weights a1,a2,... instead of searching");
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kDomain;
  }

  try {
    if (selftest->parsed()) return run_selftest();
    if (!spec.empty()) cfg.spec = galois::parse_weights(spec);
    return run_analyze(poly, cfg, format);
  } catch (const galois::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const galois::CertificationError& e) {
    std::cerr << "certification failure: " << e.what() << '\n';
    return kCertification;
  } catch (const galois::TheoremError& e) {
    std::cerr << "theorem check failed: " << e.what() << '\n';
    return kTheorem;
  }
}
