#include <doctest.h>

#include <random>
#include <set>

#include "sigform/error.hpp"
#include "sigform/sigformula.hpp"

using namespace sigform;

namespace {

struct Case {
  VoganDiagram vd;
  RootSystem rs;
  RealFormData rf;
};

Case load(const std::string& name) {
  const auto vd = find_preset(name);
  REQUIRE(vd.has_value());
  RootSystem rs = build_root_system(vd->type);
  RealFormData rf = make_real_form(*vd, rs);
  return {*vd, std::move(rs), std::move(rf)};
}

Weight fund(const RootSystem& rs, std::vector<long> labels) {
  std::vector<Rational> l(labels.begin(), labels.end());
  return rs.from_fundamental(l);
}

Weight halves(std::initializer_list<long> twice) {
  std::vector<Rational> c;
  for (long x : twice) c.emplace_back(x, 2);
  return Weight(c);
}

}  // namespace

TEST_CASE("su(3,1) adjoint, row by row") {
  const Case c = load("su(3,1)");
  const SignatureReport rep = signature(c.rf, c.rs, Weight::from_ints({1, 1, 1}));
  REQUIRE(rep.rows.size() == 4);
  const std::vector<std::vector<int>> words{{}, {2}, {2, 1}, {2, 1, 0}};
  const std::vector<Weight> mus{halves({3, 4, 5}), halves({3, 4, 1}), halves({3, 2, -1}), halves({-1, -2, -5})};
  const std::vector<int> eps{1, -1, -1, 1};
  const std::vector<long> dims{3, 15, 15, 3};
  for (std::size_t k = 0; k < 4; ++k) {
    CAPTURE(k);
    CHECK(rep.rows[k].w.word == words[k]);
    CHECK(rep.rows[k].mu == mus[k]);
    CHECK(rep.rows[k].epsilon == eps[k]);
    CHECK(rep.rows[k].dimE == dims[k]);
  }
  CHECK(rep.rows[3].n_beta == std::vector<std::int64_t>{1, 1, 2});
  CHECK(rep.divisor == 8);
  CHECK(rep.signed_sum == -24);
  CHECK(rep.dimV == 15);
  CHECK(*rep.sig == 3);
  CHECK(rep.p_q->first == 9);
  CHECK(rep.p_q->second == 6);
}

TEST_CASE("split forms of small rank") {
  SUBCASE("sl(2,R) adjoint") {
    const Case c = load("sl(2,R)");
    CHECK(*signature(c.rf, c.rs, c.rs.highest_root()).sig == 1);
  }
  SUBCASE("sl(3,R) adjoint") {
    const Case c = load("sl(3,R)");
    const auto rep = signature(c.rf, c.rs, c.rs.highest_root());
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].w.word.empty());
    CHECK(rep.rows[0].dimE == 8);
    CHECK(rep.divisor == 4);
    CHECK(*rep.sig == 2);
    CHECK(*rep.p_q == std::make_pair(Integer(5), Integer(3)));
  }
  SUBCASE("sl(3,R) without a form") {
    const Case c = load("sl(3,R)");
    const Weight w1 = fund(c.rs, {1, 0});
    CHECK_FALSE(exists_invariant_form(c.rf, c.rs, w1));
    const auto rep = signature(c.rf, c.rs, w1);
    CHECK_FALSE(rep.exists_form);
    CHECK_FALSE(rep.sig.has_value());
    CHECK(rep.rows.empty());
    CHECK(exists_invariant_form(c.rf, c.rs, fund(c.rs, {2, 2})));
  }
}

TEST_CASE("compact forms: the form is definite") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(0, 3);
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "F4"}) {
    CAPTURE(t);
    const RootSystem rs = build_root_system(CartanType::parse(t));
    const RealFormData rf = make_real_form(VoganDiagram::compact(rs.type()), rs);
    CHECK(rf.r == 0);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<long> labels;
      for (std::size_t i = 0; i < rs.rank(); ++i) labels.push_back(d(rng));
      const auto rep = signature(rf, rs, fund(rs, labels));
      CHECK(rep.rows.size() == 1);
      CHECK(*rep.sig == rep.dimV);
    }
  }
}

TEST_CASE("structural properties on presets of rank at most 3") {
  std::mt19937 rng(23);
  for (const auto& p : presets()) {
    if (p.diagram.type.rank() > 3) continue;
    CAPTURE(p.name);
    const RootSystem rs = build_root_system(p.diagram.type);
    const RealFormData rf = make_real_form(p.diagram, rs);
    const Integer w_order = weyl_group_order(rs.type());
    std::uniform_int_distribution<int> d(0, 3);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<long> labels;
      for (std::size_t i = 0; i < rs.rank(); ++i) labels.push_back(d(rng));
      const Weight lambda = fund(rs, labels);
      const auto rep = signature(rf, rs, lambda);
      CHECK(rep.exists_form == rf.theta.fixes(lambda));
      if (!rep.exists_form) continue;
      CHECK(rep.signed_sum % rep.divisor == 0);
      CHECK(*rep.sig <= rep.dimV);
      CHECK((rep.dimV - *rep.sig) % 2 == 0);
      CHECK(rep.p_q->first + rep.p_q->second == rep.dimV);
      for (const auto& row : rep.rows) {
        CHECK(row.w.matrix * rf.theta.matrix == rf.theta.matrix * row.w.matrix);
        for (auto n : row.n_beta) CHECK(n >= 0);
        CHECK(row.dimE == weyl_dim(rf.k_roots.positive_roots, rs.form(), row.mu));
      }
      // W^1 is a set of coset representatives for W_K in W when ranks agree.
      if (rf.equal_rank()) {
        // |W_K| from the orbit of rho_K under compact simple reflections.
        std::set<Weight> orbit{rf.k_roots.rho};
        std::vector<Weight> frontier{rf.k_roots.rho};
        while (!frontier.empty()) {
          std::vector<Weight> next;
          for (const auto& v : frontier)
            for (const auto& delta : rf.k_roots.simple_roots) {
              Weight x = v - delta * rs.coroot_pairing(v, delta);
              if (orbit.insert(x).second) next.push_back(x);
            }
          frontier = std::move(next);
        }
        CHECK(Integer(static_cast<unsigned long>(rep.rows.size() * orbit.size())) == w_order);
      }
    }
  }
}

TEST_CASE("invalid highest weights") {
  const Case c = load("su(2,1)");
  CHECK_THROWS_AS(signature(c.rf, c.rs, Weight::from_ints({-1, 0})), Error);
  CHECK_THROWS_AS(signature(c.rf, c.rs, halves({1, 0})), Error);
  try {
    signature(c.rf, c.rs, halves({1, 0}));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonIntegral);
  }
  try {
    signature(c.rf, c.rs, Weight::from_ints({-1, -1}));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonDominant);
  }
}
