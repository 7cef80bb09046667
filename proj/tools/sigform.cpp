#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include <CLI11.hpp>

#include "sigform/cli.hpp"
#include "sigform/error.hpp"

namespace sc = sigform::cli;

int main(int argc, char** argv) {
  CLI::App app{"Signatures of invariant hermitian forms on finite-dimensional representations of real reductive groups"};
  app.require_subcommand(1);

  const std::map<std::string, sc::Format> formats{{"human", sc::Format::Human}, {"machine", sc::Format::Machine}};
  sc::Format format = sc::Format::Human;

  auto* sig = app.add_subcommand("sig", "Signature of one representation");
  sc::CaseSpec spec;
  std::string spec_file;
  std::string basis = "fundamental";
  bool oracles = true;
  sig->add_option("--spec", spec_file, "JSON case specification; flags override its values")->check(CLI::ExistingFile);
  auto* group_opt = sig->add_option("--group", spec.group, "Preset name, compact(<type>), or \"A3 [1,2,3] {3}\"");
  auto* weight_opt = sig->add_option("--weight", spec.weight, "adjoint, zero, or comma-separated coordinates (Dynkin labels by default)");
  auto* basis_opt = sig->add_option("--basis", basis, "Coordinates of --weight")->check(CLI::IsMember({"fundamental", "simple"}));
  auto* oracle_opt = sig->add_flag("--oracle,!--no-oracle", oracles, "Run the brute-force oracles (default on)");
  auto* cap_opt = sig->add_option("--dim-cap", spec.dim_cap, "Largest dim V for the explicit matrix oracle");
  auto* timing_opt = sig->add_flag("--timing", spec.timing, "Include wall-clock timings in the report");
  sig->add_option("--format", format, "human (default) or machine")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))->type_name("FORMAT");

  auto* corpus = app.add_subcommand("corpus", "Compare the formula with the oracles over preset forms");
  sc::CorpusFilter filter;
  std::string family;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool corpus_oracles = true;
  corpus->add_option("--family", family, "Restrict to one family (A..G)")->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
  corpus->add_option("--max-rank", filter.max_rank, "Largest rank")->capture_default_str();
  corpus->add_option("--dim-cap", filter.dim_cap, "Largest dim V")->capture_default_str();
  corpus->add_flag("--equal-rank-only", filter.equal_rank_only, "Skip forms with dim a > 0");
  corpus->add_flag("--oracle,!--no-oracle", corpus_oracles, "Run the oracles (default on)");
  corpus->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  corpus->add_option("--format", format, "human (default) or machine")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))->type_name("FORMAT");

  auto* forms = app.add_subcommand("forms", "List the preset real forms");
  forms->add_option("--format", format, "human (default) or machine")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))->type_name("FORMAT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : sc::kExitParse;
  }

  if (*sig) {
    if (!spec_file.empty()) {
      sc::CaseSpec from_file;
      try {
        std::ifstream in(spec_file);
        from_file = sc::parse_case_json(sc::Json::parse(in));
      } catch (const sigform::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return sc::kExitParse;
      } catch (const std::exception& e) {
        std::cerr << "error: " << spec_file << ": " << e.what() << "\n";
        return sc::kExitParse;
      }
      if (!group_opt->count()) spec.group = from_file.group;
      if (!weight_opt->count()) spec.weight = from_file.weight;
      if (!basis_opt->count()) basis = from_file.basis == sc::Basis::Simple ? "simple" : "fundamental";
      if (!oracle_opt->count()) oracles = from_file.run_oracles;
      if (!cap_opt->count()) spec.dim_cap = from_file.dim_cap;
      if (!timing_opt->count()) spec.timing = from_file.timing;
    }
    spec.basis = basis == "simple" ? sc::Basis::Simple : sc::Basis::Fundamental;
    spec.run_oracles = oracles;
    return sc::run_sig(spec, format, std::cout, std::cerr);
  }
  if (*corpus) {
    if (!family.empty()) filter.family = static_cast<sigform::Family>(family[0] - 'A');
    filter.run_oracles = corpus_oracles;
    try {
      return sc::run_corpus(filter, format, jobs, std::cout);
    } catch (const sigform::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return sc::exit_code(e.code());
    }
  }
  return sc::run_forms(format, std::cout);
}
