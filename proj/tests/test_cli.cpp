#include <doctest.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "sigform/cli.hpp"
#include "sigform/error.hpp"

using namespace sigform;
using namespace sigform::cli;

namespace {

CaseSpec make(std::string group, std::string weight) {
  CaseSpec s;
  s.group = std::move(group);
  s.weight = std::move(weight);
  return s;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("group resolution") {
  CHECK(resolve_group("su(3,1)").str() == "A3 [1,2,3] {3}");
  CHECK(resolve_group("compact(G2)").str() == "G2 [1,2] {}");
  CHECK(resolve_group(" A3 [3,2,1] {2} ").str() == "A3 [3,2,1] {2}");
  CHECK(resolve_group("B2 [1,2]").painted.empty());
  CHECK(code_of([] { resolve_group("su(8,8)"); }) == Errc::ParseError);
  CHECK(code_of([] { resolve_group("A3 [1,x,3] {}"); }) == Errc::ParseError);
  CHECK(code_of([] { resolve_group("A3 [1,2,3] 3"); }) == Errc::ParseError);
  CHECK(code_of([] { resolve_group("Q3 [1,2,3] {}"); }) == Errc::InvalidType);
}

TEST_CASE("weight resolution") {
  const RootSystem rs = build_root_system(CartanType::parse("A3"));
  CHECK(resolve_weight(make("", "adjoint"), rs) == Weight::from_ints({1, 1, 1}));
  CHECK(resolve_weight(make("", "zero"), rs) == Weight(3));
  CHECK(resolve_weight(make("", "1, 0, 1"), rs) == Weight::from_ints({1, 1, 1}));
  CaseSpec simple = make("", "1,1,1");
  simple.basis = Basis::Simple;
  CHECK(resolve_weight(simple, rs) == Weight::from_ints({1, 1, 1}));
  simple.weight = "1,0,0";
  CHECK(code_of([&] { resolve_weight(simple, rs); }) == Errc::NonDominant);
  CHECK(code_of([&] { resolve_weight(make("", "1,2"), rs); }) == Errc::ParseError);
  CHECK(code_of([&] { resolve_weight(make("", "1,a,2"), rs); }) == Errc::ParseError);
  CHECK(code_of([&] { resolve_weight(make("", "-1,0,0"), rs); }) == Errc::NonDominant);
  CHECK(code_of([&] { resolve_weight(make("", "1/2,0,0"), rs); }) == Errc::NonIntegral);
  simple.weight = "3/4, 1/2, 1/4";
  CHECK(resolve_weight(simple, rs) == rs.from_fundamental(std::vector<Rational>{1, 0, 0}));
  simple.weight = "1/2,0,0";
  CHECK(code_of([&] { resolve_weight(simple, rs); }) == Errc::NonIntegral);
  const RootSystem a1a1 = build_root_system(CartanType::parse("A1xA1"));
  CHECK(code_of([&] { resolve_weight(make("", "adjoint"), a1a1); }) == Errc::ParseError);
}

TEST_CASE("case specification documents") {
  const Json doc = Json::parse(R"({"group": {"cartan_type": "A3", "involution": [1,2,3], "painted": [3]},
                                   "weight": [1,"1",1], "basis": "simple", "run_oracles": false, "dim_cap": 40})");
  const CaseSpec s = parse_case_json(doc);
  CHECK(s.group == "A3 [1,2,3] {3}");
  CHECK(s.weight == "1,1,1");
  CHECK(s.basis == Basis::Simple);
  CHECK_FALSE(s.run_oracles);
  CHECK(s.dim_cap == 40);
  CHECK(parse_case_json(case_to_json(s)).group == s.group);
  CHECK(code_of([] { parse_case_json(Json::parse(R"({"basis": "weird"})")); }) == Errc::ParseError);
  CHECK(code_of([] { parse_case_json(Json::parse(R"({"dim_cap": "many"})")); }) == Errc::ParseError);
  CHECK(code_of([] { parse_case_json(Json::parse("[1]")); }) == Errc::ParseError);
}

TEST_CASE("su(3,1) adjoint report") {
  const CaseResult r = run_case(make("su(3,1)", "adjoint"));
  const Json& j = r.report;
  CHECK(j["sig"] == 3);
  CHECK(j["p"] == 9);
  CHECK(j["q"] == 6);
  CHECK(j["W1"].size() == 4);
  CHECK(j["W1"][3]["word"] == Json::array({3, 2, 1}));
  CHECK(j["agreement"]["trace_theta_inner"] == "agree");
  CHECK(j["agreement"]["bruteforce"] == "agree");
  CHECK(j["agreement"]["existence"] == "agree");
  CHECK(j["agreement"]["trace_form"] == "not-applicable");
  CHECK(r.overall == Agreement::Agree);
  CHECK(render_human(j).find("(p,q) = (9,6)") != std::string::npos);
}

TEST_CASE("reports are deterministic and round-trip") {
  for (const auto& spec : {make("su(3,1)", "adjoint"), make("sl(3,R)", "1,1"), make("g2(2)", "1,0"),
                           make("sl(3,R)", "1,0"), make("compact(A1)", "zero")}) {
    CAPTURE(spec.group);
    const std::string a = render_machine(run_case(spec).report);
    const std::string b = render_machine(run_case(spec).report);
    CHECK(a == b);
    CHECK(render_machine(Json::parse(a)) == a);
  }
}

TEST_CASE("small reference cases") {
  const Json compact = run_case(make("compact(A1)", "zero")).report;
  CHECK(compact["sig"] == 1);
  CHECK(compact["dimV"] == 1);
  const Json none = run_case(make("sl(3,R)", "1,0")).report;
  CHECK(none["exists_form"] == false);
  CHECK(none["sig"].is_null());
  CHECK(none["agreement"]["bruteforce"] == "not-applicable");
  const Json split = run_case(make("sl(3,R)", "adjoint")).report;
  CHECK(split["sig"] == 2);
  CHECK(split["oracles"]["trace_form"]["value"] == 2);
  CHECK(split["agreement"]["trace_form"] == "agree");
  CaseSpec off = make("su(2,1)", "adjoint");
  off.run_oracles = false;
  CHECK(run_case(off).report["agreement"]["bruteforce"] == "not-applicable");
  CaseSpec capped = make("su(2,1)", "3,3");
  capped.dim_cap = 10;
  const Json c = run_case(capped).report;
  CHECK(c["oracles"]["bruteforce"]["status"] == "not-applicable");
  CHECK(c["agreement"]["trace_theta_inner"] == "agree");
}

TEST_CASE("errors carry the case") {
  try {
    run_case(make("su(3,1)", "1,2"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("su(3,1)") != std::string::npos);
  }
  CHECK(exit_code(Errc::ParseError) == 2);
  CHECK(exit_code(Errc::InvalidInvolution) == 2);
  CHECK(exit_code(Errc::GroupTooLarge) == 3);
  CHECK(exit_code(Errc::InexactDivision) == 4);
}

TEST_CASE("corpus") {
  CorpusFilter f;
  f.family = Family::A;
  f.dim_cap = 15;
  const auto cases = corpus_cases(f);
  CHECK(std::any_of(cases.begin(), cases.end(),
                    [](const CaseSpec& s) { return s.group == "su(3,1)" && s.weight == "1,0,1"; }));
  for (const auto& s : cases) {
    const std::string type = resolve_group(s.group).type.str();
    CHECK(type.find_first_of("BCDEFG") == std::string::npos);
  }

  CorpusFilter empty;
  empty.family = Family::G;
  empty.max_rank = 1;
  CHECK(corpus_cases(empty).empty());
  std::ostringstream none;
  CorpusSummary s0;
  CHECK(run_corpus(empty, Format::Human, 1, none, &s0) == kExitOk);
  CHECK(s0.cases == 0);

  CorpusFilter small;
  small.max_rank = 2;
  small.dim_cap = 50;
  std::ostringstream one, three;
  CorpusSummary s1;
  CHECK(run_corpus(small, Format::Machine, 1, one, &s1) == kExitOk);
  CHECK(run_corpus(small, Format::Machine, 3, three) == kExitOk);
  CHECK(one.str() == three.str());
  CHECK(s1.disagree == 0);
  CHECK(s1.errors == 0);
  CHECK(s1.agree > 0);
}
