#include "sigform/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <regex>
#include <sstream>
#include <thread>

#include "sigform/error.hpp"
#include "sigform/sigformula.hpp"

namespace sigform::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::int64_t> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<std::int64_t> out;
  const std::string t = trim(text);
  if (t.empty()) return out;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    const auto comma = t.find(',', pos);
    const std::string item = trim(std::string_view(t).substr(pos, comma == std::string::npos ? t.size() - pos : comma - pos));
    std::int64_t v = 0;
    const char* first = item.data();
    if (!item.empty() && item[0] == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(Errc::ParseError, std::string(what) + ": '" + item + "' is not an integer");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s;
}

std::vector<Rational> parse_rational_list(std::string_view text, std::string_view what) {
  std::vector<Rational> out;
  const std::string t = trim(text);
  if (t.empty()) return out;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    const auto comma = t.find(',', pos);
    const std::string item = trim(std::string_view(t).substr(pos, comma == std::string::npos ? t.size() - pos : comma - pos));
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::invalid_argument&) {
      throw Error(Errc::ParseError, std::string(what) + ": '" + item + "' is not a rational number");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Json jint(const Integer& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return Json(z.get_si());
  return Json(z.get_str());
}

std::string basis_name(Basis b) { return b == Basis::Fundamental ? "fundamental" : "simple"; }

Json not_applicable(const std::string& reason) { return Json{{"status", "not-applicable"}, {"reason", reason}}; }

Agreement compare(const std::optional<Integer>& sig, const Json& oracle) {
  if (!sig || oracle.at("status") == "not-applicable") return Agreement::NotApplicable;
  if (oracle.at("status") != "ok") return Agreement::Disagree;
  return jint(*sig) == oracle.at("value") ? Agreement::Agree : Agreement::Disagree;
}

// Runs an oracle; unsupported inputs become not-applicable, internal
// failures become status "failed".
Json guarded(const std::function<Json()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (classify(e.code()) == ErrorClass::Internal) {
      return Json{{"status", "failed"}, {"reason", e.what()}};
    }
    return not_applicable(e.what());
  }
}

std::optional<std::pair<std::string, std::vector<int>>> matrix_model(std::string_view name) {
  static const std::regex sl(R"(sl\((\d+),R\))");
  static const std::regex so(R"(so\((\d+),(\d+)\))");
  std::cmatch m;
  if (std::regex_match(name.begin(), name.end(), m, sl)) return std::make_pair("sl", std::vector<int>{std::stoi(m[1])});
  if (std::regex_match(name.begin(), name.end(), m, so))
    return std::make_pair("so", std::vector<int>{std::stoi(m[1]), std::stoi(m[2])});
  return std::nullopt;
}

Json trace_form_oracle(const CaseSpec& spec, const VoganDiagram& vd, const RootSystem& rs, const Weight& lambda) {
  const auto model = matrix_model(spec.group);
  if (!model || !find_preset(spec.group)) return not_applicable("no matrix model for " + spec.group);
  if (!vd.type.is_simple() || lambda != rs.highest_root()) return not_applicable("weight is not the adjoint");
  const auto basis = model->first == "sl" ? split_sl_basis(model->second[0])
                                          : so_pq_basis(model->second[0], model->second[1]);
  if (static_cast<std::int64_t>(basis.size()) != static_cast<std::int64_t>(rs.roots().size() + rs.rank())) {
    return Json{{"status", "failed"}, {"reason", "matrix model dimension does not match " + vd.type.str()}};
  }
  const auto in = trace_form_inertia(basis);
  const auto diff = static_cast<std::int64_t>(in.positive) - static_cast<std::int64_t>(in.negative);
  return Json{{"status", "ok"},
              {"value", diff < 0 ? -diff : diff},
              {"inertia", Json::array({in.positive, in.negative, in.zero})}};
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int exit_code(Errc c) {
  switch (classify(c)) {
    case ErrorClass::Parse: return kExitParse;
    case ErrorClass::Unsupported: return kExitUnsupported;
    case ErrorClass::Internal: return kExitInternal;
  }
  return kExitInternal;
}

std::string_view agreement_name(Agreement a) {
  switch (a) {
    case Agreement::Agree: return "agree";
    case Agreement::Disagree: return "disagree";
    case Agreement::NotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

CaseSpec parse_case_json(const Json& doc) {
  if (!doc.is_object()) throw Error(Errc::ParseError, "case specification must be an object");
  CaseSpec spec;
  try {
    if (doc.contains("group")) {
      const auto& g = doc.at("group");
      if (g.is_string()) {
        spec.group = g.get<std::string>();
      } else if (g.is_object()) {
        std::string s = g.at("cartan_type").get<std::string>() + " [";
        const auto inv = g.at("involution").get<std::vector<int>>();
        for (std::size_t i = 0; i < inv.size(); ++i) s += (i ? "," : "") + std::to_string(inv[i]);
        s += "] {";
        const auto painted = g.value("painted", std::vector<int>{});
        for (std::size_t i = 0; i < painted.size(); ++i) s += (i ? "," : "") + std::to_string(painted[i]);
        spec.group = s + "}";
      } else {
        throw Error(Errc::ParseError, "group must be a string or an object");
      }
    }
    if (doc.contains("weight")) {
      const auto& w = doc.at("weight");
      if (w.is_array()) {
        std::vector<Rational> coords;
        for (const auto& x : w) coords.push_back(x.is_string() ? Rational::parse(x.get<std::string>()) : Rational(x.get<long>()));
        spec.weight = join(coords);
      } else {
        spec.weight = w.get<std::string>();
      }
    }
    if (doc.contains("basis")) {
      const auto b = doc.at("basis").get<std::string>();
      if (b == "fundamental") {
        spec.basis = Basis::Fundamental;
      } else if (b == "simple") {
        spec.basis = Basis::Simple;
      } else {
        throw Error(Errc::ParseError, "basis must be 'fundamental' or 'simple'");
      }
    }
    if (doc.contains("run_oracles")) spec.run_oracles = doc.at("run_oracles").get<bool>();
    if (doc.contains("dim_cap")) spec.dim_cap = doc.at("dim_cap").get<std::int64_t>();
    if (doc.contains("timing")) spec.timing = doc.at("timing").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("case specification: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(Errc::ParseError, std::string("case specification: ") + e.what());
  }
  return spec;
}

Json case_to_json(const CaseSpec& spec) {
  Json j;
  j["group"] = spec.group;
  j["weight"] = spec.weight;
  j["basis"] = basis_name(spec.basis);
  j["run_oracles"] = spec.run_oracles;
  j["dim_cap"] = spec.dim_cap;
  return j;
}

VoganDiagram resolve_group(std::string_view group) {
  const std::string g = trim(group);
  if (g.empty()) throw Error(Errc::ParseError, "no group given");
  if (auto p = find_preset(g)) return *p;
  const auto lb = g.find('[');
  const auto rb = g.find(']');
  if (lb == std::string::npos || rb == std::string::npos || rb < lb) {
    throw Error(Errc::ParseError, "unknown real form '" + g + "'");
  }
  VoganDiagram vd;
  vd.type = CartanType::parse(trim(std::string_view(g).substr(0, lb)));
  for (auto v : parse_int_list(std::string_view(g).substr(lb + 1, rb - lb - 1), "involution")) {
    vd.involution.push_back(static_cast<int>(v - 1));
  }
  const std::string rest = trim(std::string_view(g).substr(rb + 1));
  if (!rest.empty()) {
    if (rest.front() != '{' || rest.back() != '}') throw Error(Errc::ParseError, "painting must be written {i,j,...}");
    for (auto v : parse_int_list(std::string_view(rest).substr(1, rest.size() - 2), "painting")) {
      vd.painted.push_back(static_cast<int>(v - 1));
    }
  }
  return vd;
}

Weight resolve_weight(const CaseSpec& spec, const RootSystem& rs) {
  const std::string w = trim(spec.weight);
  if (w == "zero") return Weight(rs.rank());
  if (w == "adjoint") {
    if (!rs.type().is_simple()) {
      throw Error(Errc::ParseError, "'adjoint' needs a simple type; " + rs.type().str() + " has a reducible adjoint");
    }
    return rs.highest_root();
  }
  const auto v = parse_rational_list(w, "weight");
  if (v.size() != rs.rank()) {
    throw Error(Errc::ParseError, "weight has " + std::to_string(v.size()) + " coordinates, rank is " +
                                      std::to_string(rs.rank()));
  }
  if (spec.basis == Basis::Fundamental) {
    for (const auto& x : v) {
      if (!x.is_integer()) throw Error(Errc::NonIntegral, "Dynkin labels (" + join(v) + ")");
    }
    const Weight lambda = rs.from_fundamental(v);
    if (!rs.is_dominant(lambda)) throw Error(Errc::NonDominant, "Dynkin labels (" + join(v) + ")");
    return lambda;
  }
  const Weight lambda(v);
  if (!rs.is_integral(lambda)) throw Error(Errc::NonIntegral, "weight (" + lambda.str() + ")");
  if (!rs.is_dominant(lambda)) throw Error(Errc::NonDominant, "weight (" + lambda.str() + ")");
  return lambda;
}

CaseResult run_case(const CaseSpec& spec) {
  const std::string label = spec.group + " weight " + spec.weight;
  try {
    const auto t0 = std::chrono::steady_clock::now();
    const VoganDiagram vd = resolve_group(spec.group);
    const RootSystem rs = build_root_system(vd.type);
    const RealFormData rf = make_real_form(vd, rs);
    const Weight lambda = resolve_weight(spec, rs);
    const SignatureReport sr = signature(rf, rs, lambda);
    const double formula_ms = ms_since(t0);

    Json report;
    report["case"] = case_to_json(spec);

    Json form;
    form["diagram"] = vd.str();
    form["dims"] = {{"g", rf.dims.g}, {"k", rf.dims.k}, {"s", rf.dims.s}, {"t", rf.dims.t}, {"a", rf.dims.a}};
    form["r"] = rf.r;
    form["m"] = jint(rf.spin_mult_m);
    form["dim_S"] = jint(rf.dim_S);
    form["equal_rank"] = rf.equal_rank();
    Json counts;
    for (auto k : {RootKind::ImaginaryCompact, RootKind::ImaginaryNoncompact, RootKind::Complex, RootKind::Real}) {
      counts[std::string(root_kind_name(k))] = rf.classification.count(k);
    }
    form["roots"] = counts;
    Json kpos = Json::array();
    for (const auto& d : rf.k_roots.positive_roots) kpos.push_back(d.str());
    form["compact_positive_roots"] = kpos;
    form["rho_K"] = rf.k_roots.rho.str();
    report["real_form"] = form;

    report["lambda"] = {{"simple", lambda.str()}, {"fundamental", join(rs.to_fundamental(lambda))}};
    report["dimV"] = jint(sr.dimV);
    report["exists_form"] = sr.exists_form;

    Json rows = Json::array();
    for (const auto& row : sr.rows) {
      Json word = Json::array();
      for (int i : row.w.word) word.push_back(i + 1);
      rows.push_back({{"word", word},
                      {"mu_simple", row.mu.str()},
                      {"mu_fundamental", join(rs.to_fundamental(row.mu))},
                      {"n_beta", row.n_beta},
                      {"epsilon", row.epsilon},
                      {"dimE", jint(row.dimE)}});
    }
    report["W1"] = rows;
    report["divisor"] = jint(sr.divisor);
    report["signed_sum"] = jint(sr.signed_sum);
    report["sig"] = sr.sig ? jint(*sr.sig) : Json(nullptr);
    report["p"] = sr.p_q ? jint(sr.p_q->first) : Json(nullptr);
    report["q"] = sr.p_q ? jint(sr.p_q->second) : Json(nullptr);

    const auto t1 = std::chrono::steady_clock::now();
    Json oracles;
    Json agreement;
    if (!spec.run_oracles) {
      for (const char* name : {"trace_theta_inner", "bruteforce", "trace_form"}) oracles[name] = not_applicable("oracles disabled");
      for (const char* name : {"trace_theta_inner", "bruteforce", "trace_form", "existence"}) {
        agreement[name] = agreement_name(Agreement::NotApplicable);
      }
    } else {
      oracles["trace_theta_inner"] = guarded([&] {
        return Json{{"status", "ok"}, {"value", jint(trace_theta_inner(rf, rs, lambda))}};
      });

      const bool theta_fixes = rf.theta.fixes(lambda);
      bool constructed = false;
      oracles["bruteforce"] = guarded([&]() -> Json {
        if (!theta_fixes) return not_applicable("theta moves lambda; no matrix-level oracle for this case");
        const ExplicitRep rep = build_explicit_rep(rs, lambda, spec.dim_cap);
        const IntertwinerT t = build_intertwiner(rep, rf);
        constructed = true;
        const bool serre = satisfies_chevalley_serre(rep, rs);
        const bool contra = contravariant_form_ok(rep);
        const bool adj = is_self_adjoint(t, rep);
        if (!serre || !contra || !adj) {
          return Json{{"status", "failed"},
                      {"reason", "structural check failed"},
                      {"chevalley_serre", serre},
                      {"contravariant_form", contra},
                      {"self_adjoint", adj}};
        }
        return Json{{"status", "ok"},
                    {"value", jint(signature_bruteforce(rep, t))},
                    {"dimension", rep.dimension},
                    {"chevalley_serre", serre},
                    {"contravariant_form", contra},
                    {"T_squared_identity", true},
                    {"self_adjoint", adj}};
      });
      oracles["trace_form"] = guarded([&] { return trace_form_oracle(spec, vd, rs, lambda); });

      agreement["trace_theta_inner"] = agreement_name(compare(sr.sig, oracles["trace_theta_inner"]));
      agreement["bruteforce"] = agreement_name(compare(sr.sig, oracles["bruteforce"]));
      agreement["trace_form"] = agreement_name(compare(sr.sig, oracles["trace_form"]));
      Agreement existence = Agreement::NotApplicable;
      if (theta_fixes) {
        if (oracles["bruteforce"]["status"] == "failed") {
          existence = Agreement::Disagree;
        } else if (constructed) {
          existence = sr.exists_form ? Agreement::Agree : Agreement::Disagree;
        }
      }
      agreement["existence"] = agreement_name(existence);
    }
    report["oracles"] = oracles;
    report["agreement"] = agreement;
    if (spec.timing) report["timing_ms"] = {{"formula", formula_ms}, {"oracles", ms_since(t1)}};

    CaseResult result;
    for (const auto& [name, value] : agreement.items()) {
      if (value == "disagree") {
        result.overall = Agreement::Disagree;
      } else if (value == "agree" && result.overall == Agreement::NotApplicable) {
        result.overall = Agreement::Agree;
      }
    }
    result.report = std::move(report);
    return result;
  } catch (const Error& e) {
    throw Error(e.code(), label + ": " + e.detail());
  }
}

std::string render_machine(const Json& report) { return report.dump(2) + "\n"; }

std::string render_human(const Json& report) {
  std::ostringstream os;
  os << std::left;
  auto str = [](const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); };
  const auto& c = report.at("case");
  const auto& f = report.at("real_form");
  const auto& d = f.at("dims");
  os << "real form   " << str(c.at("group")) << "   " << str(f.at("diagram")) << "\n";
  os << "dimensions  g=" << d.at("g") << " k=" << d.at("k") << " s=" << d.at("s") << " t=" << d.at("t")
     << " a=" << d.at("a") << "   r=" << f.at("r") << "  dim S=" << str(f.at("dim_S")) << "  m=" << str(f.at("m"))
     << "\n";
  os << "roots      ";
  for (const auto& [k, v] : f.at("roots").items()) os << " " << k << "=" << v;
  os << "\n";
  os << "lambda      simple (" << str(report.at("lambda").at("simple")) << ")  fundamental ("
     << str(report.at("lambda").at("fundamental")) << ")\n";
  os << "dim V       " << str(report.at("dimV")) << "\n";
  if (!report.at("exists_form").get<bool>()) {
    os << "invariant hermitian form: none (theta(lambda) is not W-conjugate to lambda)\n";
  } else {
    os << "W^1         " << std::setw(14) << "word" << std::setw(22) << "mu (simple)" << std::setw(12)
       << "n_beta" << std::setw(5) << "eps" << "dim E\n";
    for (const auto& row : report.at("W1")) {
      std::string word;
      for (const auto& i : row.at("word")) word += (word.empty() ? "s" : " s") + i.dump();
      if (word.empty()) word = "id";
      std::string n;
      for (const auto& x : row.at("n_beta")) n += (n.empty() ? "" : ",") + x.dump();
      os << "            " << std::setw(14) << word << std::setw(22) << str(row.at("mu_simple")) << std::setw(12) << n
         << std::setw(5) << (row.at("epsilon").get<int>() > 0 ? "+" : "-") << str(row.at("dimE")) << "\n";
    }
    os << "signed sum  " << str(report.at("signed_sum")) << " / " << str(report.at("divisor")) << "\n";
    os << "sig         " << str(report.at("sig")) << "   (p,q) = (" << str(report.at("p")) << "," << str(report.at("q"))
       << ")\n";
  }
  os << "oracles\n";
  for (const auto& [name, o] : report.at("oracles").items()) {
    os << "  " << std::setw(18) << name;
    if (o.at("status") == "ok") {
      os << str(o.at("value"));
    } else {
      os << str(o.at("status")) << ": " << str(o.at("reason"));
    }
    os << "\n";
  }
  os << "agreement  ";
  for (const auto& [name, a] : report.at("agreement").items()) os << " " << name << "=" << str(a);
  os << "\n";
  if (report.contains("timing_ms")) {
    os << "timing ms   formula " << report["timing_ms"]["formula"] << "  oracles " << report["timing_ms"]["oracles"]
       << "\n";
  }
  return os.str();
}

// ------------------------------------------------------------------ corpus

std::vector<CaseSpec> corpus_cases(const CorpusFilter& filter) {
  std::vector<CaseSpec> out;
  for (const auto& p : presets()) {
    const auto& t = p.diagram.type;
    if (t.rank() > filter.max_rank) continue;
    if (filter.family &&
        !std::all_of(t.components().begin(), t.components().end(),
                     [&](const SimpleComponent& c) { return c.family == *filter.family; })) {
      continue;
    }
    if (filter.equal_rank_only && !p.diagram.is_inner()) continue;
    const RootSystem rs = build_root_system(t);
    const std::size_t n = rs.rank();
    std::vector<std::int64_t> a(n, 0);
    auto dim_of = [&] {
      std::vector<Rational> labels(a.begin(), a.end());
      return weyl_dim(rs, rs.from_fundamental(labels));
    };
    // weyl_dim is increasing in every Dynkin label, so each coordinate can be
    // raised until the cap is exceeded with the later ones still zero.
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == n) {
        CaseSpec spec;
        spec.group = p.name;
        spec.weight = join(a);
        spec.run_oracles = filter.run_oracles;
        spec.dim_cap = filter.dim_cap;
        out.push_back(std::move(spec));
        return;
      }
      for (std::int64_t v = 0;; ++v) {
        a[i] = v;
        if (dim_of() > filter.dim_cap) break;
        rec(i + 1);
      }
      a[i] = 0;
    };
    rec(0);
  }
  return out;
}

int run_corpus(const CorpusFilter& filter, Format format, unsigned jobs, std::ostream& out,
               CorpusSummary* summary_out) {
  const auto cases = corpus_cases(filter);

  enum class Outcome { Ok, Skipped, Error };
  struct Line {
    Outcome outcome = Outcome::Ok;
    Agreement overall = Agreement::NotApplicable;
    Json row;
  };
  std::vector<Line> lines(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      Line& line = lines[i];
      line.row["group"] = cases[i].group;
      line.row["weight"] = cases[i].weight;
      try {
        const CaseResult r = run_case(cases[i]);
        line.overall = r.overall;
        line.row["dimV"] = r.report["dimV"];
        line.row["exists_form"] = r.report["exists_form"];
        line.row["sig"] = r.report["sig"];
        for (const auto& [name, a] : r.report["agreement"].items()) line.row[name] = a;
        line.row["status"] = std::string(agreement_name(r.overall));
      } catch (const Error& e) {
        line.outcome = classify(e.code()) == ErrorClass::Internal ? Outcome::Error : Outcome::Skipped;
        line.row["status"] = line.outcome == Outcome::Error ? "error" : "skipped";
        line.row["error"] = e.what();
      }
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cases.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  CorpusSummary s;
  s.cases = cases.size();
  for (const auto& line : lines) {
    switch (line.outcome) {
      case Outcome::Skipped: ++s.skipped; break;
      case Outcome::Error: ++s.errors; break;
      case Outcome::Ok:
        if (line.overall == Agreement::Agree) ++s.agree;
        if (line.overall == Agreement::Disagree) ++s.disagree;
        if (line.overall == Agreement::NotApplicable) ++s.not_applicable;
        break;
    }
    if (format == Format::Machine) {
      out << line.row.dump() << "\n";
    } else {
      const auto& r = line.row;
      out << std::left << std::setw(12) << r["group"].get<std::string>() << std::setw(12)
          << r["weight"].get<std::string>();
      if (line.outcome == Outcome::Ok) {
        out << "dimV=" << std::setw(6) << (r["dimV"].is_string() ? r["dimV"].get<std::string>() : r["dimV"].dump())
            << " sig=" << std::setw(6) << (r["sig"].is_null() ? "-" : r["sig"].dump())
            << " A=" << std::setw(15) << r["trace_theta_inner"].get<std::string>() << " B=" << std::setw(15)
            << r["bruteforce"].get<std::string>() << " exists=" << r["existence"].get<std::string>();
      } else {
        out << r["status"].get<std::string>() << ": " << r["error"].get<std::string>();
      }
      out << "\n";
    }
  }
  if (format == Format::Machine) {
    out << Json{{"summary",
                 {{"cases", s.cases},
                  {"agree", s.agree},
                  {"disagree", s.disagree},
                  {"not_applicable", s.not_applicable},
                  {"skipped", s.skipped},
                  {"errors", s.errors}}}}
               .dump()
        << "\n";
  } else {
    out << "cases " << s.cases << "  agree " << s.agree << "  disagree " << s.disagree << "  not-applicable "
        << s.not_applicable << "  skipped " << s.skipped << "  errors " << s.errors << "\n";
  }
  if (summary_out) *summary_out = s;
  if (s.disagree > 0) return kExitDisagreement;
  if (s.errors > 0) return kExitInternal;
  return kExitOk;
}

int run_sig(const CaseSpec& spec, Format format, std::ostream& out, std::ostream& err) {
  try {
    const CaseResult r = run_case(spec);
    out << (format == Format::Machine ? render_machine(r.report) : render_human(r.report));
    if (r.overall == Agreement::Disagree) {
      err << "error: an oracle disagrees with the signature formula\n";
      return kExitInternal;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
}

int run_forms(Format format, std::ostream& out) {
  Json list = Json::array();
  for (const auto& p : presets()) {
    const RootSystem rs = build_root_system(p.diagram.type);
    const RealFormData rf = make_real_form(p.diagram, rs);
    list.push_back({{"name", p.name},
                    {"diagram", p.diagram.str()},
                    {"dims", {{"g", rf.dims.g}, {"k", rf.dims.k}, {"s", rf.dims.s}, {"t", rf.dims.t}, {"a", rf.dims.a}}},
                    {"r", rf.r},
                    {"equal_rank", rf.equal_rank()}});
  }
  if (format == Format::Machine) {
    out << list.dump(2) << "\n";
    return kExitOk;
  }
  out << std::left << std::setw(12) << "name" << std::setw(22) << "diagram" << std::setw(6) << "dim g" << std::setw(6)
      << "dim k" << std::setw(6) << "dim s" << std::setw(4) << "r"
      << "rank\n";
  for (const auto& e : list) {
    out << std::setw(12) << e["name"].get<std::string>() << std::setw(22) << e["diagram"].get<std::string>()
        << std::setw(6) << e["dims"]["g"].dump() << std::setw(6) << e["dims"]["k"].dump() << std::setw(6)
        << e["dims"]["s"].dump() << std::setw(4) << e["r"].dump() << (e["equal_rank"].get<bool>() ? "equal" : "unequal")
        << "\n";
  }
  return kExitOk;
}

}  // namespace sigform::cli
