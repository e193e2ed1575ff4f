// capwit: construct the witness groups, verify every structural claim
// about them, and emit human- or machine-readable reports.
#include <cstdint>
#include <iostream>

#include <CLI11.hpp>

#include "capwit/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact verification of capable p-group witnesses"};
  app.require_subcommand(1);

  capwit::Int p = 0, r = 0, c = 0, r_max = 0;
  bool json = false, int_strings = false;
  std::uint64_t cap = capwit::kDefaultEnumerationCap;

  auto add_common = [&](CLI::App* sub, bool with_cap = true) {
    sub->add_flag("--json", json, "emit a JSON report instead of text");
    if (with_cap)
      sub->add_option("--cap", cap,
                      "enumeration cap on the group order (default 5e6)");
  };

  CLI::App* witness =
      app.add_subcommand("witness", "verify the split metabelian witness K(p, r)");
  witness->add_option("--p", p, "prime p")->required();
  witness->add_option("--r", r, "positive integer r")->required();
  add_common(witness);
  witness->add_flag("--json-int-strings", int_strings,
                    "emit every JSON integer as a decimal string");

  CLI::App* dih = app.add_subcommand(
      "dihedral", "verify the dihedral witness of order 2^(c+2)");
  dih->add_option("--c", c, "target class c of the capable quotient")
      ->required();
  add_common(dih);
  dih->add_flag("--json-int-strings", int_strings,
                "emit every JSON integer as a decimal string");

  CLI::App* sc = app.add_subcommand("scan", "verify K(p, r) for r = 1..r-max");
  sc->add_option("--p", p, "prime p")->required();
  sc->add_option("--r-max", r_max, "largest r to verify")->required();
  add_common(sc);
  sc->add_flag("--json-int-strings", int_strings,
               "emit every JSON integer as a decimal string");

  CLI::App* lem = app.add_subcommand(
      "lemma", "check that x0^(p^(r-1)) does not commute with y in K(p, r)");
  lem->add_option("--p", p, "prime p")->required();
  lem->add_option("--r", r, "positive integer r")->required();
  add_common(lem);

  CLI::App* pres = app.add_subcommand(
      "presentation", "print the deterministic presentation of K(p, r)");
  pres->add_option("--p", p, "prime p")->required();
  pres->add_option("--r", r, "positive integer r")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  auto format =
      json ? capwit::OutputFormat::json : capwit::OutputFormat::text;
  if (witness->parsed())
    return capwit::run_witness(p, r, format, int_strings, cap, std::cout,
                               std::cerr);
  if (dih->parsed())
    return capwit::run_dihedral(c, format, int_strings, cap, std::cout,
                                std::cerr);
  if (sc->parsed())
    return capwit::run_scan(p, r_max, format, int_strings, cap, std::cout,
                            std::cerr);
  if (lem->parsed())
    return capwit::run_lemma(p, r, format, cap, std::cout, std::cerr);
  if (pres->parsed())
    return capwit::run_presentation(p, r, std::cout, std::cerr);
  return 2;
}
