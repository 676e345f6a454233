// Command-line certifier: runs the claim catalog (or a selection, or the
// odd-degree cover checks) and emits a machine-readable certificate.
//
// Exit codes: 0 all selected claims pass, 1 at least one fails,
// 2 usage error, 3 resource exhaustion during enumeration.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bq/claims.hpp"
#include "bq/paper_data.hpp"
#include "bq/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certify — exact certificates for a one-cusped ball-quotient construction"};
  app.require_subcommand(0, 1);

  std::vector<std::string> selection;
  int cover_degree = 0;
  std::string emit_format;
  std::string out_path;
  std::size_t max_cosets = 100000;
  bool timestamps = false;

  app.add_option("selection", selection,
                 "claims to run: 'all', claim ids (C01..C18, L01..L08), or 'covers'");
  app.add_option("--d", cover_degree, "odd cover degree for the 'covers' selection");
  app.add_option("--emit", emit_format, "emit format: json or md")
      ->check(CLI::IsMember({"json", "md"}));
  app.add_option("--out", out_path, "write the emitted certificate to this path");
  app.add_option("--max-cosets", max_cosets, "coset enumeration cap");
  app.add_flag("--timestamps", timestamps, "include elapsed time in the output");

  // exploratory access to the presentation text format
  auto* enumerate = app.add_subcommand(
      "enumerate", "run a coset enumeration over a presentation file and print the table");
  std::string pres_path, builtin_name, strategy_name = "hlt";
  std::vector<std::string> subgroup_words;
  enumerate->add_option("--file", pres_path, "presentation file");
  enumerate->add_option("--builtin", builtin_name,
                        "built-in presentation name (Gamma0..Gamma4)");
  enumerate->add_option("--sub", subgroup_words, "subgroup generator words");
  enumerate->add_option("--strategy", strategy_name, "hlt or felsch")
      ->check(CLI::IsMember({"hlt", "felsch"}));
  enumerate->add_option("--max-cosets", max_cosets, "coset enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (enumerate->parsed()) {
      if (pres_path.empty() == builtin_name.empty()) {
        std::cerr << "enumerate: need exactly one of --file or --builtin\n";
        return kExitUsage;
      }
      bq::Presentation pres = pres_path.empty()
                                  ? bq::parse_presentation(bq::builtin_presentation_text(builtin_name))
                                  : bq::parse_presentation(read_file(pres_path));
      std::vector<bq::Word> subgens;
      for (const std::string& ws : subgroup_words)
        subgens.push_back(bq::parse_word(ws, pres.generator_names()));
      bq::Strategy strat =
          strategy_name == "felsch" ? bq::Strategy::Felsch : bq::Strategy::Hlt;
      bq::CosetTable table = bq::todd_coxeter(pres, subgens, max_cosets, strat);
      std::cout << "group " << pres.name() << ": index " << table.size() << "\n";
      std::cout << table.tsv();
      return kExitPass;
    }

    if (selection.empty()) {
      std::cerr << "nothing selected; try 'certify all' (see --help)\n";
      return kExitUsage;
    }

    bq::Pipeline pipeline(bq::PaperData::standard(), max_cosets);
    bq::Certificate cert;

    if (selection.size() == 1 && selection[0] == "all") {
      if (cover_degree != 0) {
        std::cerr << "--d only applies to the 'covers' selection\n";
        return kExitUsage;
      }
      cert = bq::run_all(pipeline);
    } else if (selection.size() == 1 && selection[0] == "covers") {
      if (cover_degree < 1 || cover_degree % 2 == 0) {
        std::cerr << "covers: --d must be an odd integer >= 1\n";
        return kExitUsage;
      }
      cert.header = bq::standard_header();
      for (bq::ClaimResult& r : bq::run_cover_claims(pipeline, cover_degree)) {
        if (r.pass)
          ++cert.passed;
        else
          ++cert.failed;
        cert.claims.push_back(std::move(r));
      }
    } else {
      for (const std::string& id : selection)
        if (!bq::is_claim_id(id)) {
          std::cerr << "unknown claim id '" << id << "'\n";
          return kExitUsage;
        }
      cert = bq::run_claims(pipeline, selection);
    }

    std::string emitted;
    if (emit_format == "json")
      emitted = bq::certificate_json(cert, timestamps);
    else if (emit_format == "md")
      emitted = bq::certificate_markdown(cert, timestamps);

    if (!emit_format.empty() && out_path.empty()) {
      std::cout << emitted;
    } else {
      if (!emit_format.empty()) bq::write_file(out_path, emitted);
      std::cout << bq::certificate_text(cert, timestamps);
      if (!out_path.empty()) std::cout << "wrote " << out_path << "\n";
    }
    return cert.all_pass() ? kExitPass : kExitClaimFailure;
  } catch (const bq::resource_exhausted& e) {
    std::cerr << "resource exhausted: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
