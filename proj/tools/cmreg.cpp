#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cmreg/cli.hpp"

namespace {

std::string read_all(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cmreg::cli;
  CLI::App app{"Castelnuovo-Mumford regularity from revlex initial ideals"};
  app.require_subcommand(1);

  Flags flags;
  std::string path = "-";
  std::uint32_t characteristic = 0;
  std::size_t partial = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", path, "ideal file, or - for stdin");
    sub->add_option("--char", characteristic, "prime modulus, overriding the ring line");
    sub->add_flag("--monomial", flags.monomial, "treat the generators as monomials");
    sub->add_flag("--json", flags.json, "JSON output");
    sub->add_flag("--verbose", flags.verbose, "print intermediate data");
  };

  auto* compute = app.add_subcommand("compute", "level values c_i, r and reg");
  add_common(compute);
  compute->add_option("--seed", flags.regularity.seed, "seed for coordinate changes");
  compute->add_option("--max-retries", flags.regularity.max_retries,
                      "coordinate changes allowed per level")
      ->check(CLI::NonNegativeNumber);
  auto* partial_opt = compute->add_option("--partial", partial, "stop after level t");
  compute->add_flag("--chain-criterion", flags.regularity.groebner.chain_criterion,
                    "skip pairs by the chain criterion");

  auto* curve = app.add_subcommand(
      "curve", "projective curve invariants; the input must be the saturated ideal of the curve");
  add_common(curve);
  auto* oracle = app.add_subcommand("oracle", "compare staircase values with graded counting");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (compute->parsed()) flags.command = Command::compute;
  if (curve->parsed()) flags.command = Command::curve;
  if (oracle->parsed()) flags.command = Command::oracle;
  if (characteristic != 0) flags.characteristic = characteristic;
  if (partial_opt->count() > 0) flags.partial = partial;

  std::string text;
  try {
    text = read_all(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return run_text(text, flags, std::cout, std::cerr);
}
