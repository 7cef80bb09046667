#pragma once

// Case specification, reports and the verification corpus behind the
// `sigform` command line tool.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sigform/error.hpp"
#include "sigform/oracle.hpp"
#include "sigform/realform.hpp"
#include "sigform/rootsys.hpp"

namespace sigform::cli {

using Json = nlohmann::ordered_json;

enum class Basis { Fundamental, Simple };
enum class Format { Human, Machine };

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitUnsupported = 3,
  kExitInternal = 4,
  kExitDisagreement = 5,
};

int exit_code(Errc c);

/// Tri-state comparison of an oracle against the formula.
enum class Agreement { Agree, Disagree, NotApplicable };

std::string_view agreement_name(Agreement a);

struct CaseSpec {
  /// Preset name, "compact(<type>)", or an explicit diagram "A3 [1,2,3] {3}"
  /// (1-based involution images and painted nodes).
  std::string group;
  /// "adjoint", "zero", or comma-separated integers in `basis`.
  std::string weight = "zero";
  Basis basis = Basis::Fundamental;
  bool run_oracles = true;
  std::int64_t dim_cap = kDefaultExplicitDimCap;
  /// Adds wall-clock timings to the report (makes it nondeterministic).
  bool timing = false;
};

/// Reads a CaseSpec from a JSON document.  "group" may also be an object
/// {"cartan_type": "A3", "involution": [1,2,3], "painted": [3]}.
/// Throws Error(ParseError).
CaseSpec parse_case_json(const Json& doc);

Json case_to_json(const CaseSpec& spec);

/// Throws Error(ParseError) for unknown names or malformed diagrams.
VoganDiagram resolve_group(std::string_view group);

/// Highest weight in simple-root coordinates.  Throws Error(ParseError) for
/// malformed text and Error(NonDominant)/Error(NonIntegral) for weights that
/// are not dominant integral.
Weight resolve_weight(const CaseSpec& spec, const RootSystem& rs);

struct CaseResult {
  Json report;
  /// Disagree if any oracle disagrees, Agree if at least one agrees.
  Agreement overall = Agreement::NotApplicable;
};

/// Runs the formula and, if requested, every applicable oracle.  Errors are
/// rethrown as Error with the case label prepended.
CaseResult run_case(const CaseSpec& spec);

std::string render_human(const Json& report);
/// Two-space indented JSON followed by a newline.
std::string render_machine(const Json& report);

// ------------------------------------------------------------------ corpus

struct CorpusFilter {
  std::optional<Family> family;  // every simple component in this family
  int max_rank = 3;
  std::int64_t dim_cap = 50;
  bool equal_rank_only = false;
  bool run_oracles = true;
};

/// Cases in deterministic order: presets in table order, then dominant
/// weights with weyl_dim <= dim_cap in lexicographic order of their
/// fundamental coordinates.
std::vector<CaseSpec> corpus_cases(const CorpusFilter& filter);

struct CorpusSummary {
  std::size_t cases = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t not_applicable = 0;
  std::size_t skipped = 0;  // unsupported input, e.g. RepTooLarge
  std::size_t errors = 0;   // internal consistency failures
};

/// Runs the corpus on `jobs` worker threads and writes one line per case in
/// case order, then the summary.  Returns the process exit code.
int run_corpus(const CorpusFilter& filter, Format format, unsigned jobs, std::ostream& out,
               CorpusSummary* summary = nullptr);

int run_sig(const CaseSpec& spec, Format format, std::ostream& out, std::ostream& err);

int run_forms(Format format, std::ostream& out);

}  // namespace sigform::cli
