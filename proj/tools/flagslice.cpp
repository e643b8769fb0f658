#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "flagslice/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Schubert varieties meeting base cycles of flag domains"};
  app.require_subcommand(1, 1);

  flagslice::RunConfig cfg;
  std::string form = "slnr", format = "json", out;
  int n = 0, p = 0, q = 0;
  std::string dims, orbit;

  for (const char* name : {"enumerate", "points", "count", "homology", "verify"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--form", form, "slnr, slmh or supq")->check(CLI::IsMember({"slnr", "slmh", "supq"}));
    sub->add_option("--n", n, "dimension (slnr, slmh)");
    sub->add_option("--p", p, "positive directions (supq)");
    sub->add_option("--q", q, "negative directions (supq)");
    sub->add_option("--dims", dims, "block sizes, e.g. 2,1,2");
    sub->add_option("--orbit", orbit, "sign sequence like (-+)(++) or counts a:b like 1,1:1,1");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", cfg.seed, "sampling seed (verify)");
    sub->add_option("--out", out, "write output to FILE");
    sub->add_option("--inject-fault", cfg.inject_fault, "corrupt a predicate: spacing, spacing_h or pairing");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto* sub = app.get_subcommands().front();
  cfg.command = flagslice::parse_command(sub->get_name());
  cfg.form = flagslice::parse_real_form(form);
  cfg.format = format == "csv" ? flagslice::OutputFormat::csv : flagslice::OutputFormat::json;
  if (sub->count("--n")) cfg.n = n;
  if (sub->count("--p")) cfg.p = p;
  if (sub->count("--q")) cfg.q = q;
  if (sub->count("--dims")) cfg.dims = dims;
  if (sub->count("--orbit")) cfg.orbit = orbit;

  const auto result = flagslice::run(cfg);
  if (result.exit_code == 2) {
    std::cerr << result.output;
    return 2;
  }
  if (out.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << out << "\n";
      return 2;
    }
    file << result.output;
  }
  return result.exit_code;
}
