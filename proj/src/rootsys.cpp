#include "sigform/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

#include "sigform/error.hpp"
#include "sigform/linalg.hpp"

namespace sigform {

// ---------------------------------------------------------------- CartanType

namespace {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

void check_component(const SimpleComponent& c) {
  const int n = c.rank;
  bool ok = false;
  switch (c.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 3; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok) {
    throw Error(Errc::InvalidType,
                std::string("no simple type ") + family_letter(c.family) + std::to_string(n));
  }
}

}  // namespace

CartanType::CartanType(std::vector<SimpleComponent> components) : components_(std::move(components)) {
  if (components_.empty()) throw Error(Errc::InvalidType, "empty Cartan type");
  for (const auto& c : components_) check_component(c);
}

CartanType CartanType::parse(std::string_view text) {
  std::vector<SimpleComponent> comps;
  std::string cur;
  auto flush = [&]() {
    if (cur.size() < 2) throw Error(Errc::InvalidType, "malformed Cartan type '" + std::string(text) + "'");
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(cur[0])));
    if (f < 'A' || f > 'G') throw Error(Errc::InvalidType, "unknown family in '" + std::string(text) + "'");
    for (std::size_t i = 1; i < cur.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(cur[i]))) {
        throw Error(Errc::InvalidType, "malformed rank in '" + std::string(text) + "'");
      }
    }
    if (cur.size() > 4) throw Error(Errc::InvalidType, "rank too long in '" + std::string(text) + "'");
    comps.push_back({static_cast<Family>(f - 'A'), std::stoi(cur.substr(1))});
    cur.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == 'x' || ch == '+' || ch == '*') {
      flush();
    } else {
      cur.push_back(ch);
    }
  }
  flush();
  return CartanType(std::move(comps));
}

int CartanType::rank() const {
  int r = 0;
  for (const auto& c : components_) r += c.rank;
  return r;
}

std::string CartanType::str() const {
  std::string s;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k) s += "x";
    s += family_letter(components_[k].family);
    s += std::to_string(components_[k].rank);
  }
  return s;
}

Integer weyl_group_order(const CartanType& t) {
  Integer total = 1;
  for (const auto& c : t.components()) {
    Integer fact = 1;
    for (int k = 2; k <= c.rank; ++k) fact *= k;
    switch (c.family) {
      case Family::A: total *= fact * (c.rank + 1); break;
      case Family::B:
      case Family::C: total *= fact * pow2(static_cast<unsigned>(c.rank)); break;
      case Family::D: total *= fact * pow2(static_cast<unsigned>(c.rank - 1)); break;
      case Family::E:
        total *= (c.rank == 6 ? Integer(51840) : (c.rank == 7 ? Integer(2903040) : Integer(696729600)));
        break;
      case Family::F: total *= 1152; break;
      case Family::G: total *= 12; break;
    }
  }
  return total;
}

// -------------------------------------------------------------------- Weight

Weight Weight::from_ints(std::span<const std::int64_t> coords) {
  Weight w(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) w.c_[i] = Rational(coords[i]);
  return w;
}

Weight Weight::from_ints(std::initializer_list<std::int64_t> coords) {
  return from_ints(std::span<const std::int64_t>(coords.begin(), coords.size()));
}

bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool Weight::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_integer(); });
}

Rational Weight::height() const {
  Rational h;
  for (const auto& x : c_) h += x;
  return h;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.size() != size()) throw std::invalid_argument("Weight: size mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.size() != size()) throw std::invalid_argument("Weight: size mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::string Weight::str() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += c_[i].str();
  }
  return s;
}

Weight apply(const IntMatrix& m, const Weight& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("apply: size mismatch");
  Weight out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0 && !v[j].is_zero()) s += Rational(m(i, j)) * v[j];
    }
    out[i] = s;
  }
  return out;
}

// ---------------------------------------------------------------- RootSystem

namespace {

struct ComponentData {
  IntMatrix cartan;
  std::vector<Rational> sq_length;  // (alpha_i, alpha_i)
};

ComponentData component_data(const SimpleComponent& c) {
  const auto n = static_cast<std::size_t>(c.rank);
  ComponentData d{IntMatrix(n, n), std::vector<Rational>(n, Rational(2))};
  auto& a = d.cartan;
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) {
    a(i, j) = -1;
    a(j, i) = -1;
  };
  switch (c.family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;
      d.sq_length[n - 1] = 1;
      break;
    case Family::C:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;
      for (std::size_t i = 0; i + 1 < n; ++i) d.sq_length[i] = 1;
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: 1-3-4-5-6(-7-8), 2 attached to 4
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a(2, 1) = -2;
      d.sq_length[2] = 1;
      d.sq_length[3] = 1;
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long
      a(0, 1) = -3;
      a(1, 0) = -1;
      d.sq_length[0] = Rational(2, 3);
      break;
  }
  return d;
}

// Lexicographic on coefficients with larger leading coefficients first, so
// that the simple roots appear in index order within height 1.
bool coefficient_order(const Weight& a, const Weight& b) { return a > b; }

}  // namespace

RootSystem build_root_system(const CartanType& t, int rank_cap) {
  if (t.rank() > rank_cap) {
    throw Error(Errc::UnsupportedRank,
                "rank " + std::to_string(t.rank()) + " exceeds cap " + std::to_string(rank_cap));
  }
  RootSystem rs;
  rs.type_ = t;
  const auto n = static_cast<std::size_t>(t.rank());
  rs.cartan_ = IntMatrix(n, n);
  rs.form_ = RatMatrix(n, n);
  std::size_t offset = 0;
  for (std::size_t k = 0; k < t.components().size(); ++k) {
    const auto d = component_data(t.components()[k]);
    const std::size_t m = d.cartan.rows();
    for (std::size_t i = 0; i < m; ++i) {
      rs.component_of_.push_back(k);
      for (std::size_t j = 0; j < m; ++j) {
        rs.cartan_(offset + i, offset + j) = d.cartan(i, j);
        // (alpha_i, alpha_j) = (alpha_i, alpha_i)/2 * A(i,j)
        rs.form_(offset + i, offset + j) = d.sq_length[i] * Rational(d.cartan(i, j), 2);
      }
    }
    offset += m;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (rs.form_(i, j) != rs.form_(j, i)) throw Error(Errc::NotARootSystem, "asymmetric form");

  RatMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rs.cartan_(i, j);
  rs.inverse_cartan_ = linalg::inverse(a);

  // Positive roots by root strings: beta + alpha_i is a root iff
  // q - <beta, alpha_i^vee> > 0, where q is the length of the downward string.
  std::set<Weight> found;
  std::vector<Weight> level;
  for (std::size_t i = 0; i < n; ++i) {
    Weight s(n);
    s[i] = 1;
    level.push_back(s);
    found.insert(s);
  }
  std::vector<Weight> positive = level;
  while (!level.empty()) {
    std::vector<Weight> next;
    for (const auto& beta : level) {
      for (std::size_t i = 0; i < n; ++i) {
        Weight ai(n);
        ai[i] = 1;
        if (beta == ai) continue;
        int q = 0;
        Weight down = beta - ai;
        while (found.count(down)) {
          ++q;
          down -= ai;
        }
        Rational pair;
        for (std::size_t j = 0; j < n; ++j) pair += Rational(rs.cartan_(i, j)) * beta[j];
        if (Rational(q) - pair > 0) {
          Weight up = beta + ai;
          if (found.insert(up).second) next.push_back(up);
        }
      }
    }
    std::sort(next.begin(), next.end(), coefficient_order);
    positive.insert(positive.end(), next.begin(), next.end());
    level = std::move(next);
  }
  rs.positive_ = positive;
  rs.all_ = positive;
  for (const auto& p : positive) rs.all_.push_back(-p);
  for (std::size_t k = 0; k < rs.all_.size(); ++k) rs.index_.emplace(rs.all_[k], k);

  rs.rho_ = Weight(n);
  for (const auto& p : positive) rs.rho_ += p;
  rs.rho_ *= Rational(1, 2);
  return rs;
}

Weight RootSystem::simple_root(std::size_t i) const {
  Weight s(rank());
  s[i] = 1;
  return s;
}

std::optional<std::size_t> RootSystem::root_index(const Weight& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rational RootSystem::inner(const Weight& u, const Weight& v) const {
  Rational s;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (v[j].is_zero() || form_(i, j).is_zero()) continue;
      s += u[i] * form_(i, j) * v[j];
    }
  }
  return s;
}

Rational RootSystem::coroot_pairing(const Weight& v, std::size_t i) const {
  Rational s;
  for (std::size_t j = 0; j < rank(); ++j)
    if (cartan_(i, j) != 0) s += Rational(cartan_(i, j)) * v[j];
  return s;
}

Rational RootSystem::coroot_pairing(const Weight& v, const Weight& delta) const {
  return Rational(2) * inner(v, delta) / inner(delta, delta);
}

Weight RootSystem::reflect(std::size_t i, const Weight& v) const {
  Weight out = v;
  out[i] -= coroot_pairing(v, i);
  return out;
}

IntMatrix RootSystem::simple_reflection_matrix(std::size_t i) const {
  IntMatrix s = IntMatrix::identity(rank());
  for (std::size_t j = 0; j < rank(); ++j) s(i, j) -= cartan_(i, j);
  return s;
}

std::vector<Rational> RootSystem::to_fundamental(const Weight& v) const {
  std::vector<Rational> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = coroot_pairing(v, i);
  return out;
}

Weight RootSystem::from_fundamental(std::span<const Rational> labels) const {
  if (labels.size() != rank()) throw std::invalid_argument("from_fundamental: size mismatch");
  Weight out(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      if (!labels[j].is_zero()) out[i] += inverse_cartan_(i, j) * labels[j];
  return out;
}

bool RootSystem::is_dominant(const Weight& v) const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (coroot_pairing(v, i).sign() < 0) return false;
  return true;
}

bool RootSystem::is_integral(const Weight& v) const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (!coroot_pairing(v, i).is_integer()) return false;
  return true;
}

Weight RootSystem::highest_root() const {
  if (!type_.is_simple()) {
    throw Error(Errc::InvalidType, "highest root requested for non-simple type " + type_.str());
  }
  return positive_.back();
}

// ------------------------------------------------------------- Weyl groups

namespace {

std::vector<std::int64_t> orbit_key(const IntMatrix& m, const std::vector<std::int64_t>& regular) {
  std::vector<std::int64_t> key(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) key[i] += m(i, j) * regular[j];
  return key;
}

}  // namespace

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::uint64_t cap) {
  const Integer order = weyl_group_order(rs.type());
  if (order > Integer(static_cast<unsigned long>(cap))) {
    throw Error(Errc::GroupTooLarge,
                "|W(" + rs.type().str() + ")| = " + order.get_str() + " exceeds cap " + std::to_string(cap));
  }
  const std::size_t n = rs.rank();
  // w -> w(2 rho) is injective on W
  std::vector<std::int64_t> two_rho(n);
  for (std::size_t i = 0; i < n; ++i) two_rho[i] = (rs.rho()[i] * Rational(2)).to_int64();

  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(rs.simple_reflection_matrix(i));

  std::vector<WeylElement> out;
  std::set<std::vector<std::int64_t>> seen;
  WeylElement e{{}, IntMatrix::identity(n)};
  seen.insert(two_rho);
  out.push_back(e);
  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  while (level_begin < level_end) {
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        IntMatrix m = out[k].matrix * gens[i];
        if (!seen.insert(orbit_key(m, two_rho)).second) continue;
        std::vector<int> word = out[k].word;
        word.push_back(static_cast<int>(i));
        out.push_back({std::move(word), std::move(m)});
      }
    }
    level_begin = level_end;
    level_end = out.size();
  }
  if (Integer(static_cast<unsigned long>(out.size())) != order) {
    throw Error(Errc::NotARootSystem, "Weyl group enumeration produced " + std::to_string(out.size()) +
                                          " elements, expected " + order.get_str());
  }
  return out;
}

std::pair<Weight, WeylElement> dominant_representative(const RootSystem& rs, const Weight& v) {
  const std::size_t n = rs.rank();
  Weight cur = v;
  WeylElement w{{}, IntMatrix::identity(n)};
  std::vector<int> reversed;
  for (;;) {
    std::size_t i = 0;
    while (i < n && rs.coroot_pairing(cur, i).sign() >= 0) ++i;
    if (i == n) break;
    cur = rs.reflect(i, cur);
    w.matrix = rs.simple_reflection_matrix(i) * w.matrix;
    reversed.push_back(static_cast<int>(i));
  }
  w.word.assign(reversed.rbegin(), reversed.rend());
  return {cur, w};
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& v) {
  std::set<Weight> seen{v};
  std::vector<Weight> out{v};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      Weight u = rs.reflect(i, out[k]);
      if (seen.insert(u).second) out.push_back(u);
    }
  }
  return out;
}

// -------------------------------------------------------- dimension formulas

namespace {

Rational inner_with(const RatMatrix& form, const Weight& u, const Weight& v) {
  Rational s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero() || form(i, j).is_zero()) continue;
      s += u[i] * form(i, j) * v[j];
    }
  }
  return s;
}

}  // namespace

Integer weyl_dim(std::span<const Weight> positive_roots, const RatMatrix& form, const Weight& mu) {
  if (positive_roots.empty()) return 1;
  Weight rho(mu.size());
  for (const auto& a : positive_roots) rho += a;
  rho *= Rational(1, 2);
  Rational num = 1;
  Rational den = 1;
  for (const auto& a : positive_roots) {
    const Rational mu_a = inner_with(form, mu, a);
    if (mu_a.sign() < 0) {
      throw Error(Errc::NonDominant, "weight (" + mu.str() + ") pairs negatively with root (" + a.str() + ")");
    }
    const Rational rho_a = inner_with(form, rho, a);
    if (rho_a.sign() <= 0) {
      throw Error(Errc::NotARootSystem, "root (" + a.str() + ") is not positive for the given system");
    }
    num *= mu_a + rho_a;
    den *= rho_a;
  }
  const Rational d = num / den;
  if (!d.is_integer()) {
    throw Error(Errc::NonIntegral, "dimension formula gives " + d.str() + " for (" + mu.str() + ")");
  }
  return d.to_integer();
}

std::map<Weight, std::int64_t> freudenthal_multiplicities(const RootSystem& rs, const Weight& lambda,
                                                          std::int64_t dim_cap) {
  if (!rs.is_dominant(lambda)) throw Error(Errc::NonDominant, "highest weight (" + lambda.str() + ")");
  if (!rs.is_integral(lambda)) throw Error(Errc::NonIntegral, "highest weight (" + lambda.str() + ")");
  const Integer dim = weyl_dim(rs, lambda);
  if (dim > Integer(static_cast<long>(dim_cap))) {
    throw Error(Errc::RepTooLarge, "dimension " + dim.get_str() + " exceeds cap " + std::to_string(dim_cap));
  }

  // Dominant weights below lambda: closed under subtracting positive roots
  // while staying dominant.
  std::set<Weight> dominant{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    const Weight mu = queue.front();
    queue.pop_front();
    for (const auto& a : rs.positive_roots()) {
      Weight nu = mu - a;
      if (rs.is_dominant(nu) && dominant.insert(nu).second) queue.push_back(nu);
    }
  }
  std::vector<Weight> order(dominant.begin(), dominant.end());
  // Decreasing height: every weight mu + k alpha is processed before mu.
  std::sort(order.begin(), order.end(), [&](const Weight& x, const Weight& y) {
    const Rational hx = x.height();
    const Rational hy = y.height();
    if (hx != hy) return hx > hy;
    return x < y;
  });

  const Weight lr = lambda + rs.rho();
  const Rational lr_norm = rs.inner(lr, lr);
  std::map<Weight, std::int64_t> dominant_mult;
  dominant_mult[lambda] = 1;
  auto mult_of = [&](const Weight& v) -> std::int64_t {
    const Weight d = dominant_representative(rs, v).first;
    auto it = dominant_mult.find(d);
    return it == dominant_mult.end() ? 0 : it->second;
  };
  for (const auto& mu : order) {
    if (mu == lambda) continue;
    Rational sum;
    for (const auto& a : rs.positive_roots()) {
      for (std::int64_t k = 1;; ++k) {
        const Weight up = mu + a * Rational(k);
        const std::int64_t m = mult_of(up);
        if (m == 0) break;
        sum += Rational(m) * rs.inner(up, a);
      }
    }
    const Weight mr = mu + rs.rho();
    const Rational denom = lr_norm - rs.inner(mr, mr);
    const Rational value = Rational(2) * sum / denom;
    if (!value.is_integer()) {
      throw Error(Errc::NonIntegral, "Freudenthal recursion gave " + value.str() + " at (" + mu.str() + ")");
    }
    if (value.sign() > 0) dominant_mult[mu] = value.to_int64();
  }

  std::map<Weight, std::int64_t> out;
  std::int64_t total = 0;
  for (const auto& [mu, m] : dominant_mult) {
    for (const auto& v : weyl_orbit(rs, mu)) {
      out[v] = m;
      total += m;
    }
  }
  if (Integer(static_cast<long>(total)) != dim) {
    throw Error(Errc::NotARootSystem,
                "multiplicities sum to " + std::to_string(total) + ", Weyl dimension is " + dim.get_str());
  }
  return out;
}

}  // namespace sigform
