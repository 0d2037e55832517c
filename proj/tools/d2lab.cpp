// d2lab <command> [--side L|R|both] [--carrier T|S|Top] [--format json|text] [--max-dim N] <input.json>

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "d2lab/io.hpp"
#include "d2lab/pipeline.hpp"

int main(int argc, char** argv) {
  using namespace d2lab;

  CLI::App app{"Depth two extensions, their bialgebroids and Galois theory over exact fields"};
  std::string command;
  std::string input;
  std::string side = "both";
  std::string carrier;
  std::string format = "json";
  std::size_t max_dim = 8;

  app.add_option("command", command, "check-d2, bialgebroid, galois, duality, endo-tower or all")
      ->required()
      ->check(CLI::IsMember({"check-d2", "bialgebroid", "galois", "duality", "endo-tower", "all"}));
  app.add_option("input", input, "extension document (JSON)")->required();
  app.add_option("--side", side, "L, R or both")
      ->check(CLI::IsMember({"L", "R", "both", "left", "right"}));
  app.add_option("--carrier", carrier, "T, S or Top (default: all three)")
      ->check(CLI::IsMember({"T", "S", "Top"}));
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-dim", max_dim, "largest dim A; endomorphism algebras up to its square")
      ->envname("D2LAB_MAX_DIM")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    PipelineOptions opt;
    opt.command = parse_command(command);
    opt.sides = parse_sides(side);
    if (!carrier.empty()) opt.carriers = {parse_carrier(carrier)};
    opt.limits = limits_for(max_dim);

    const ExtensionDocument doc = load_extension(input);
    const Report report = run_pipeline(doc.ext, opt);
    ReportHeader header{command, doc.name, doc.ext.field(), doc.ext.dim(), doc.ext.sub.dim(),
                        doc.ext.centralizer.dim()};
    std::cout << (format == "json" ? report_to_json(header, report) : report_to_text(header, report));
    return exit_code(report);
  } catch (const DimensionGuard& e) {
    std::cerr << "d2lab: dimension guard: " << e.what() << "\n";
    return 2;
  } catch (const InternalInconsistency& e) {
    std::cerr << "d2lab: internal inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "d2lab: input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "d2lab: " << e.what() << "\n";
    return 1;
  }
}
