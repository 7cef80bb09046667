#include <doctest.h>

#include <functional>
#include <map>
#include <random>

#include "sigform/error.hpp"
#include "sigform/oracle.hpp"
#include "sigform/sigformula.hpp"

using namespace sigform;

namespace {

Weight fund(const RootSystem& rs, std::vector<long> labels) {
  std::vector<Rational> l(labels.begin(), labels.end());
  return rs.from_fundamental(l);
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

TEST_CASE("sl2 modules match the textbook matrices") {
  const RootSystem rs = build_root_system(CartanType::parse("A1"));
  for (long n = 0; n <= 6; ++n) {
    CAPTURE(n);
    const ExplicitRep rep = build_explicit_rep(rs, fund(rs, {n}));
    REQUIRE(rep.dimension == static_cast<std::size_t>(n + 1));
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
      CHECK(rep.h[0](k, k) == Rational(n - 2 * static_cast<long>(k)));
    }
    // Casimir ef + fe + h^2/2 acts by n(n+2)/2
    const RatMatrix cas = rep.e[0] * rep.f[0] + rep.f[0] * rep.e[0] + rep.h[0] * rep.h[0] * Rational(1, 2);
    CHECK(cas == RatMatrix::identity(n + 1) * Rational(n * (n + 2), 2));
  }
}

TEST_CASE("explicit modules: weights, relations, contravariant form") {
  std::mt19937 rng(31);
  for (const char* t : {"A2", "A3", "B2", "B3", "C3", "G2", "A1xA1"}) {
    CAPTURE(t);
    const RootSystem rs = build_root_system(CartanType::parse(t));
    std::uniform_int_distribution<int> d(0, rs.rank() == 2 ? 2 : 1);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<long> labels;
      for (std::size_t i = 0; i < rs.rank(); ++i) labels.push_back(d(rng));
      const Weight lambda = fund(rs, labels);
      if (weyl_dim(rs, lambda) > 120) continue;
      CAPTURE(lambda.str());
      const ExplicitRep rep = build_explicit_rep(rs, lambda);
      CHECK(Integer(static_cast<unsigned long>(rep.dimension)) == weyl_dim(rs, lambda));
      std::map<Weight, std::int64_t> counted;
      for (const auto& w : rep.weights) ++counted[w];
      CHECK(counted == freudenthal_multiplicities(rs, lambda));
      CHECK(satisfies_chevalley_serre(rep, rs));
      CHECK(contravariant_form_ok(rep));
    }
  }
}

TEST_CASE("intertwiner") {
  std::mt19937 rng(41);
  for (const auto& p : presets()) {
    if (p.diagram.type.rank() > 3) continue;
    CAPTURE(p.name);
    const RootSystem rs = build_root_system(p.diagram.type);
    const RealFormData rf = make_real_form(p.diagram, rs);
    std::uniform_int_distribution<int> d(0, 2);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<long> labels;
      for (std::size_t i = 0; i < rs.rank(); ++i) labels.push_back(d(rng));
      const Weight lambda = fund(rs, labels);
      if (weyl_dim(rs, lambda) > 100 || !rf.theta.fixes(lambda)) continue;
      CAPTURE(lambda.str());
      const ExplicitRep rep = build_explicit_rep(rs, lambda);
      const IntertwinerT t = build_intertwiner(rep, rf);
      CHECK(t.matrix * t.matrix == RatMatrix::identity(rep.dimension));
      CHECK(is_self_adjoint(t, rep));
      const Integer b = signature_bruteforce(rep, t);
      if (rf.equal_rank()) CHECK(b == trace_theta_inner(rf, rs, lambda));
      CHECK(b == *signature(rf, rs, lambda).sig);
    }
  }
}

TEST_CASE("small cases by hand") {
  auto load = [](const char* name) {
    const auto vd = *find_preset(name);
    const RootSystem rs = build_root_system(vd.type);
    return std::make_pair(rs, make_real_form(vd, rs));
  };
  SUBCASE("su(2,1) adjoint has signature 0") {
    const auto [rs, rf] = load("su(2,1)");
    CHECK(trace_theta_inner(rf, rs, rs.highest_root()) == 0);
  }
  SUBCASE("su(3,1) adjoint") {
    const auto [rs, rf] = load("su(3,1)");
    CHECK(trace_theta_inner(rf, rs, rs.highest_root()) == 3);
    const ExplicitRep rep = build_explicit_rep(rs, rs.highest_root());
    CHECK(signature_bruteforce(rep, build_intertwiner(rep, rf)) == 3);
  }
  SUBCASE("sl(3,R) along the diagonal") {
    const auto [rs, rf] = load("sl(3,R)");
    for (long a = 0; a <= 3; ++a) {
      const Weight lambda = fund(rs, {a, a});
      const ExplicitRep rep = build_explicit_rep(rs, lambda);
      CHECK(signature_bruteforce(rep, build_intertwiner(rep, rf)) == a + 1);
    }
  }
  SUBCASE("errors") {
    const auto [rs, rf] = load("sl(3,R)");
    CHECK(code_of([&] { trace_theta_inner(rf, rs, rs.highest_root()); }) == Errc::NotEqualRank);
    const ExplicitRep rep = build_explicit_rep(rs, fund(rs, {1, 0}));
    CHECK(code_of([&] { build_intertwiner(rep, rf); }) == Errc::ThetaMovesHighestWeight);
    CHECK(code_of([&] { build_explicit_rep(rs, fund(rs, {4, 4}), 50); }) == Errc::RepTooLarge);
    CHECK(code_of([&] { build_explicit_rep(rs, Weight::from_ints({-1, 0})); }) == Errc::NonDominant);
  }
}

TEST_CASE("trace form of matrix Lie algebras") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    const auto in = trace_form_inertia(split_sl_basis(n));
    CHECK(in.positive == static_cast<std::size_t>(n * (n + 1) / 2 - 1));
    CHECK(in.negative == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(in.zero == 0);
  }
  for (auto [p, q] : {std::pair{4, 1}, {3, 2}, {6, 1}, {5, 2}, {4, 3}, {6, 2}, {4, 4}}) {
    CAPTURE(p);
    CAPTURE(q);
    const auto in = trace_form_inertia(so_pq_basis(p, q));
    CHECK(in.positive == static_cast<std::size_t>(p * q));
    CHECK(in.negative == static_cast<std::size_t>(p * (p - 1) / 2 + q * (q - 1) / 2));
  }
}

TEST_CASE("adjoint signatures agree with the trace form") {
  const std::map<std::string, std::vector<RatMatrix>> models{
      {"sl(2,R)", split_sl_basis(2)}, {"sl(3,R)", split_sl_basis(3)}, {"sl(4,R)", split_sl_basis(4)},
      {"sl(5,R)", split_sl_basis(5)}, {"so(4,1)", so_pq_basis(4, 1)}, {"so(3,2)", so_pq_basis(3, 2)},
      {"so(6,1)", so_pq_basis(6, 1)}, {"so(5,2)", so_pq_basis(5, 2)}, {"so(4,3)", so_pq_basis(4, 3)},
      {"so(6,2)", so_pq_basis(6, 2)}, {"so(4,4)", so_pq_basis(4, 4)}, {"so(7,1)", so_pq_basis(7, 1)},
      {"so(5,3)", so_pq_basis(5, 3)}};
  for (const auto& [name, basis] : models) {
    CAPTURE(name);
    const auto vd = *find_preset(name);
    const RootSystem rs = build_root_system(vd.type);
    const RealFormData rf = make_real_form(vd, rs);
    const auto in = trace_form_inertia(basis);
    const auto rep = signature(rf, rs, rs.highest_root());
    CHECK(rep.p_q->first == static_cast<unsigned long>(std::max(in.positive, in.negative)));
    CHECK(rep.p_q->second == static_cast<unsigned long>(std::min(in.positive, in.negative)));
  }
}
