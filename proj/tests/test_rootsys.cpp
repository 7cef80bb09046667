#include <doctest.h>

#include <deque>
#include <random>
#include <set>

#include "sigform/error.hpp"
#include "sigform/rootsys.hpp"

using namespace sigform;

namespace {

const char* const kTypes[] = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "G2", "F4", "E6", "A1xA1", "A2xB2"};

// Reflection written out from the Cartan matrix, bypassing RootSystem::reflect.
Weight reflect_by_cartan(const IntMatrix& a, std::size_t i, Weight v) {
  Rational pairing;
  for (std::size_t j = 0; j < a.cols(); ++j) pairing += Rational(a(i, j)) * v[j];
  v[i] -= pairing;
  return v;
}

std::set<Weight> closure_of_simple_roots(const IntMatrix& a) {
  std::set<Weight> seen;
  std::deque<Weight> queue;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Weight e(a.rows());
    e[i] = 1;
    if (seen.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    const Weight v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Weight w = reflect_by_cartan(a, i, v);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen;
}

std::size_t orbit_size(const IntMatrix& a, const Weight& v) {
  std::set<Weight> seen{v};
  std::deque<Weight> queue{v};
  while (!queue.empty()) {
    const Weight x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Weight w = reflect_by_cartan(a, i, x);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen.size();
}

Weight fund(const RootSystem& rs, std::initializer_list<long> labels) {
  std::vector<Rational> l;
  for (long x : labels) l.emplace_back(x);
  return rs.from_fundamental(l);
}

// Gelfand-Tsetlin patterns for gl(3) with top row (l1, l2, 0); counts the
// patterns of each weight.  Used as an independent source of A2
// multiplicities.
std::map<std::pair<long, long>, std::int64_t> gt_multiplicities_a2(long a, long b) {
  const long l1 = a + b, l2 = b, l3 = 0;
  std::map<std::pair<long, long>, std::int64_t> out;
  for (long m1 = l2; m1 <= l1; ++m1)
    for (long m2 = l3; m2 <= l2; ++m2)
      for (long k = m2; k <= m1; ++k) {
        // weight (k, m1 + m2 - k, rest) in the e-basis; lambda - mu has
        // simple-root coordinates (l1 - e1, e3 - l3)
        const long e1 = k, e3 = l1 + l2 + l3 - m1 - m2;
        out[{l1 - e1, e3 - l3}] += 1;
      }
  return out;
}

}  // namespace

TEST_CASE("Cartan type parsing and validation") {
  CHECK(CartanType::parse("b3").str() == "B3");
  CHECK(CartanType::parse("A1xA1").components().size() == 2);
  CHECK(CartanType::parse("A2+G2").rank() == 4);
  for (const char* bad : {"", "A0", "B1", "C2", "D3", "E5", "E9", "F3", "G3", "H3", "Ax", "A1x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(CartanType::parse(bad), Error);
  }
  CHECK_THROWS_AS(build_root_system(CartanType::parse("A9")), Error);
  CHECK_NOTHROW(build_root_system(CartanType::parse("A9"), 9));
}

TEST_CASE("positive root counts") {
  const std::map<std::string, std::size_t> expected{
      {"A1", 1}, {"A2", 3},  {"A3", 6},  {"A4", 10}, {"B2", 4},  {"B3", 9},  {"B4", 16},    {"C3", 9},
      {"C4", 16}, {"D4", 12}, {"D5", 20}, {"G2", 6}, {"F4", 24}, {"E6", 36}, {"A1xA1", 2}, {"A2xB2", 7}};
  for (const char* t : kTypes) {
    CAPTURE(t);
    CHECK(build_root_system(CartanType::parse(t)).positive_roots().size() == expected.at(t));
  }
  CHECK(build_root_system(CartanType::parse("E7")).positive_roots().size() == 63);
  CHECK(build_root_system(CartanType::parse("E8")).positive_roots().size() == 120);
}

TEST_CASE("roots are the closure of the simple roots under reflections") {
  for (const char* t : kTypes) {
    CAPTURE(t);
    const RootSystem rs = build_root_system(CartanType::parse(t));
    const auto closure = closure_of_simple_roots(rs.cartan_matrix());
    const std::set<Weight> roots(rs.roots().begin(), rs.roots().end());
    CHECK(closure == roots);
  }
}

TEST_CASE("G2 conventions") {
  const RootSystem rs = build_root_system(CartanType::parse("G2"));
  // alpha_1 short, alpha_2 long
  CHECK(rs.inner(rs.simple_root(0), rs.simple_root(0)) == Rational(2, 3));
  CHECK(rs.inner(rs.simple_root(1), rs.simple_root(1)) == Rational(2));
  CHECK(rs.highest_root() == Weight::from_ints({3, 2}));
  CHECK(weyl_dim(rs, fund(rs, {1, 0})) == 7);
  CHECK(weyl_dim(rs, fund(rs, {0, 1})) == 14);
}

TEST_CASE("rho pairs to one with every simple coroot") {
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "G2", "F4", "E6", "E7", "E8", "A1xA1", "A2xB2"}) {
    CAPTURE(t);
    const RootSystem rs = build_root_system(CartanType::parse(t));
    for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(rs.coroot_pairing(rs.rho(), i) == Rational(1));
  }
}

TEST_CASE("Weyl group order from the orbit of a regular weight") {
  for (const char* t : kTypes) {
    CAPTURE(t);
    const CartanType ct = CartanType::parse(t);
    const RootSystem rs = build_root_system(ct);
    CHECK(Integer(static_cast<unsigned long>(orbit_size(rs.cartan_matrix(), rs.rho()))) == weyl_group_order(ct));
  }
  CHECK(weyl_group_order(CartanType::parse("E8")) == Integer("696729600"));
}

TEST_CASE("enumerated Weyl elements carry reduced words") {
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "D4"}) {
    CAPTURE(t);
    const CartanType ct = CartanType::parse(t);
    const RootSystem rs = build_root_system(ct);
    const auto elems = enumerate_weyl(rs);
    CHECK(Integer(static_cast<unsigned long>(elems.size())) == weyl_group_order(ct));
    CHECK(elems.front().word.empty());
    std::set<Weight> images;
    std::size_t longest = 0;
    for (const auto& w : elems) {
      // matrix agrees with the word
      IntMatrix m = IntMatrix::identity(rs.rank());
      for (int i : w.word) m = m * rs.simple_reflection_matrix(i);
      CHECK(m == w.matrix);
      // length = number of positive roots sent to negative roots
      std::size_t inversions = 0;
      for (const auto& a : rs.positive_roots()) inversions += w.apply(a).height() < 0;
      CHECK(inversions == w.length());
      images.insert(w.apply(rs.rho()));
      longest = std::max(longest, w.length());
    }
    CHECK(images.size() == elems.size());
    CHECK(longest == rs.positive_roots().size());
  }
  CHECK_THROWS_AS(enumerate_weyl(build_root_system(CartanType::parse("E8"))), Error);
}

TEST_CASE("dominant representatives and orbits") {
  const RootSystem rs = build_root_system(CartanType::parse("B3"));
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const Weight v = Weight::from_ints({d(rng), d(rng), d(rng)});
    const auto [dom, w] = dominant_representative(rs, v);
    CHECK(rs.is_dominant(dom));
    CHECK(w.apply(v) == dom);
    const auto orbit = weyl_orbit(rs, v);
    CHECK(std::count_if(orbit.begin(), orbit.end(), [&](const Weight& x) { return rs.is_dominant(x); }) == 1);
    CHECK(std::find(orbit.begin(), orbit.end(), dom) != orbit.end());
  }
  const RootSystem a2 = build_root_system(CartanType::parse("A2"));
  CHECK(weyl_orbit(a2, fund(a2, {1, 0})).size() == 3);
  CHECK(weyl_orbit(a2, a2.rho()).size() == 6);
}

TEST_CASE("Weyl dimensions of familiar modules") {
  auto dim = [](const char* t, std::initializer_list<long> labels) {
    const RootSystem rs = build_root_system(CartanType::parse(t));
    return weyl_dim(rs, fund(rs, labels));
  };
  CHECK(dim("A1", {4}) == 5);
  CHECK(dim("A2", {1, 0}) == 3);
  CHECK(dim("A2", {1, 1}) == 8);
  CHECK(dim("A2", {2, 0}) == 6);
  CHECK(dim("A3", {0, 1, 0}) == 6);
  CHECK(dim("B2", {1, 0}) == 5);
  CHECK(dim("B2", {0, 1}) == 4);
  CHECK(dim("B3", {0, 0, 1}) == 8);
  CHECK(dim("C3", {1, 0, 0}) == 6);
  CHECK(dim("C3", {0, 0, 1}) == 14);
  CHECK(dim("D4", {0, 0, 1, 0}) == 8);
  CHECK(dim("F4", {0, 0, 0, 1}) == 26);
  CHECK(dim("F4", {1, 0, 0, 0}) == 52);
  CHECK(dim("E6", {1, 0, 0, 0, 0, 0}) == 27);
  CHECK(dim("E6", {0, 1, 0, 0, 0, 0}) == 78);
  CHECK(dim("E7", {0, 0, 0, 0, 0, 0, 1}) == 56);
  CHECK(dim("E8", {0, 0, 0, 0, 0, 0, 0, 1}) == 248);
  CHECK(dim("A1xA1", {1, 2}) == 6);

  const RootSystem a2 = build_root_system(CartanType::parse("A2"));
  CHECK_THROWS_AS(weyl_dim(a2, Weight::from_ints({-1, 0})), Error);
  CHECK_THROWS_AS(weyl_dim(a2, Weight(std::vector<Rational>{Rational(1, 2), Rational(1)})), Error);
}

TEST_CASE("Freudenthal multiplicities") {
  SUBCASE("A2 against Gelfand-Tsetlin patterns") {
    const RootSystem rs = build_root_system(CartanType::parse("A2"));
    for (long a = 0; a <= 4; ++a)
      for (long b = 0; b <= 4; ++b) {
        CAPTURE(a);
        CAPTURE(b);
        const Weight lambda = fund(rs, {a, b});
        const auto mult = freudenthal_multiplicities(rs, lambda);
        const auto gt = gt_multiplicities_a2(a, b);
        CHECK(mult.size() == gt.size());
        for (const auto& [depth, m] : gt) {
          const Weight mu = lambda - Weight::from_ints({depth.first, depth.second});
          CHECK(mult.count(mu) == 1);
          if (mult.count(mu)) CHECK(mult.at(mu) == m);
        }
      }
  }
  SUBCASE("sum equals the Weyl dimension and multiplicities are W-invariant") {
    std::mt19937 rng(11);
    for (const char* t : {"A3", "B2", "B3", "C3", "G2", "D4", "A1xA1"}) {
      CAPTURE(t);
      const RootSystem rs = build_root_system(CartanType::parse(t));
      std::uniform_int_distribution<int> d(0, rs.rank() > 2 ? 1 : 3);
      for (int trial = 0; trial < 6; ++trial) {
        std::vector<Rational> labels;
        for (std::size_t i = 0; i < rs.rank(); ++i) labels.emplace_back(d(rng));
        const Weight lambda = rs.from_fundamental(labels);
        const auto mult = freudenthal_multiplicities(rs, lambda);
        std::int64_t total = 0;
        for (const auto& [mu, m] : mult) {
          total += m;
          for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(mult.at(rs.reflect(i, mu)) == m);
        }
        CHECK(Integer(static_cast<long>(total)) == weyl_dim(rs, lambda));
      }
    }
  }
  SUBCASE("zero weight of the adjoint has multiplicity rank") {
    for (const char* t : {"A3", "B3", "C3", "G2", "F4"}) {
      const RootSystem rs = build_root_system(CartanType::parse(t));
      CHECK(freudenthal_multiplicities(rs, rs.highest_root()).at(Weight(rs.rank())) ==
            static_cast<std::int64_t>(rs.rank()));
    }
  }
  SUBCASE("cap") {
    const RootSystem rs = build_root_system(CartanType::parse("A2"));
    CHECK_THROWS_AS(freudenthal_multiplicities(rs, fund(rs, {5, 5}), 100), Error);
  }
}
