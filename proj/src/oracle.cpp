#include "sigform/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "sigform/error.hpp"

namespace sigform {

namespace {

using Key = std::vector<std::int64_t>;  // lambda - mu in simple-root coordinates

std::int64_t painted_parity_sum(const VoganDiagram& vd, const Weight& depth) {
  std::int64_t n = 0;
  for (int i : vd.painted) n += depth[i].to_int64();
  return n;
}

void require_highest_weight(const RootSystem& rs, const Weight& lambda) {
  if (lambda.size() != rs.rank()) throw Error(Errc::InvalidType, "weight has wrong length");
  if (!rs.is_integral(lambda)) throw Error(Errc::NonIntegral, "highest weight (" + lambda.str() + ")");
  if (!rs.is_dominant(lambda)) throw Error(Errc::NonDominant, "highest weight (" + lambda.str() + ")");
}

struct Space {
  Weight mu;
  std::size_t offset = 0;  // global index of the first basis vector
  std::size_t dim = 0;
  RatMatrix gram;
  // Candidate (i, local index in mu + alpha_i) chosen for each basis vector.
  std::vector<std::pair<int, std::size_t>> chosen;
};

// Sparse bookkeeping for the generator actions between weight spaces.
// e_blocks[j][s] : space s -> space s + alpha_j, f_blocks[i][s] : s -> s - alpha_i.
struct Blocks {
  std::vector<std::map<std::size_t, RatMatrix>> e;
  std::vector<std::map<std::size_t, RatMatrix>> f;
};

std::vector<Rational> column(const RatMatrix& m, std::size_t c) {
  std::vector<Rational> v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
  return v;
}

// Row-sparse matrix for the exact identity checks; the generator matrices
// have a handful of nonzeros per column, so dense products waste most work.
class Sparse {
 public:
  explicit Sparse(std::size_t n) : rows_(n) {}
  explicit Sparse(const RatMatrix& m) : rows_(m.rows()) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_zero()) rows_[r].emplace(c, m(r, c));
  }
  static Sparse identity(std::size_t n) {
    Sparse s(n);
    for (std::size_t i = 0; i < n; ++i) s.rows_[i].emplace(i, Rational(1));
    return s;
  }

  Sparse operator*(const Sparse& b) const {
    Sparse c(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto& out = c.rows_[r];
      for (const auto& [k, x] : rows_[r])
        for (const auto& [j, y] : b.rows_[k]) out[j] += x * y;
      std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
    }
    return c;
  }
  Sparse operator-(const Sparse& b) const { return axpy(b, Rational(-1)); }
  Sparse scaled(const Rational& s) const {
    Sparse c(rows_.size());
    if (s.is_zero()) return c;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [j, x] : rows_[r]) c.rows_[r].emplace(j, x * s);
    return c;
  }
  Sparse transpose() const {
    Sparse t(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [j, x] : rows_[r]) t.rows_[j].emplace(r, x);
    return t;
  }
  bool is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const auto& row) { return row.empty(); });
  }
  friend bool operator==(const Sparse& a, const Sparse& b) { return a.rows_ == b.rows_; }

 private:
  Sparse axpy(const Sparse& b, const Rational& s) const {
    Sparse c = *this;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& [j, x] : b.rows_[r]) c.rows_[r][j] += x * s;
      std::erase_if(c.rows_[r], [](const auto& e) { return e.second.is_zero(); });
    }
    return c;
  }

  std::vector<std::map<std::size_t, Rational>> rows_;
};

Sparse bracket(const Sparse& a, const Sparse& b) { return a * b - b * a; }

std::vector<Sparse> sparse_all(const std::vector<RatMatrix>& ms) {
  std::vector<Sparse> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.emplace_back(m);
  return out;
}

// Maximal runs of basis vectors sharing a weight.
std::vector<std::pair<std::size_t, std::size_t>> weight_blocks(const ExplicitRep& rep) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t b = 0; b < rep.dimension;) {
    std::size_t e = b + 1;
    while (e < rep.dimension && rep.weights[e] == rep.weights[b]) ++e;
    out.emplace_back(b, e);
    b = e;
  }
  return out;
}

}  // namespace

Integer trace_theta_inner(const RealFormData& rf, const RootSystem& rs, const Weight& lambda,
                          std::int64_t dim_cap) {
  if (!rf.equal_rank()) {
    throw Error(Errc::NotEqualRank, "theta is not inner for " + rf.diagram.str());
  }
  require_highest_weight(rs, lambda);
  Integer sum = 0;
  for (const auto& [mu, mult] : freudenthal_multiplicities(rs, lambda, dim_cap)) {
    if (painted_parity_sum(rf.diagram, lambda - mu) % 2 == 0) {
      sum += mult;
    } else {
      sum -= mult;
    }
  }
  return abs(sum);
}

ExplicitRep build_explicit_rep(const RootSystem& rs, const Weight& lambda, std::int64_t dim_cap) {
  require_highest_weight(rs, lambda);
  const Integer expected = weyl_dim(rs, lambda);
  if (expected > dim_cap) {
    throw Error(Errc::RepTooLarge, "dim V = " + expected.get_str() + " exceeds " + std::to_string(dim_cap));
  }
  const std::size_t n = rs.rank();

  std::vector<Space> spaces;
  std::map<Key, std::size_t> index;
  Blocks blocks{std::vector<std::map<std::size_t, RatMatrix>>(n), std::vector<std::map<std::size_t, RatMatrix>>(n)};
  std::size_t total = 0;

  {
    Space top;
    top.mu = lambda;
    top.dim = 1;
    top.gram = RatMatrix::identity(1);
    top.chosen.emplace_back(-1, 0);
    index.emplace(Key(n, 0), 0);
    spaces.push_back(std::move(top));
    total = 1;
  }

  auto find = [&](const Key& k) -> std::optional<std::size_t> {
    auto it = index.find(k);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  auto shifted = [](Key k, std::size_t i, std::int64_t by) {
    k[i] += by;
    return k;
  };

  std::vector<Key> level{Key(n, 0)};
  while (!level.empty()) {
    std::set<Key> next;
    for (const auto& k : level)
      for (std::size_t i = 0; i < n; ++i) next.insert(shifted(k, i, 1));

    std::vector<Key> built;
    for (const auto& key : next) {
      Weight mu = lambda;
      for (std::size_t i = 0; i < n; ++i) mu -= rs.simple_root(i) * Rational(key[i]);

      // Candidates f_i b for b in the basis of mu + alpha_i.
      std::vector<std::pair<int, std::size_t>> cand;
      std::vector<std::size_t> cand_space;
      for (std::size_t i = 0; i < n; ++i) {
        if (key[i] == 0) continue;
        auto p = find(shifted(key, i, -1));
        if (!p) continue;
        for (std::size_t b = 0; b < spaces[*p].dim; ++b) {
          cand.emplace_back(static_cast<int>(i), b);
          cand_space.push_back(*p);
        }
      }
      if (cand.empty()) continue;

      // e_j (f_i b) = f_i (e_j b) + delta_ij <mu + alpha_i, alpha_i^vee> b,
      // stored per j as a vector in mu + alpha_j (empty if that space is 0).
      std::vector<std::optional<std::size_t>> up(n);
      for (std::size_t j = 0; j < n; ++j)
        if (key[j] > 0) up[j] = find(shifted(key, j, -1));

      std::vector<std::vector<std::vector<Rational>>> eimg(cand.size(), std::vector<std::vector<Rational>>(n));
      for (std::size_t c = 0; c < cand.size(); ++c) {
        const auto [i, b] = cand[c];
        const std::size_t p = cand_space[c];
        for (std::size_t j = 0; j < n; ++j) {
          if (!up[j]) continue;
          std::vector<Rational> v(spaces[*up[j]].dim);
          auto eb = blocks.e[j].find(p);
          if (eb != blocks.e[j].end()) {
            // e_j b lies in q = p + alpha_j; f_i maps q back to mu + alpha_j.
            const std::size_t q = *find(shifted(shifted(key, i, -1), j, -1));
            const RatMatrix& fq = blocks.f[i].at(q);
            const std::vector<Rational> ejb = column(eb->second, b);
            v = fq * ejb;
          }
          if (static_cast<std::size_t>(i) == j) v[b] += rs.coroot_pairing(spaces[p].mu, j);
          eimg[c][j] = std::move(v);
        }
      }

      // <f_i b, f_j b'> = <b, e_i f_j b'>.
      RatMatrix G(cand.size(), cand.size());
      for (std::size_t c = 0; c < cand.size(); ++c) {
        const auto [i, b] = cand[c];
        const Space& p = spaces[cand_space[c]];
        for (std::size_t d = 0; d < cand.size(); ++d) {
          const auto& x = eimg[d][i];
          Rational s;
          for (std::size_t k = 0; k < p.dim; ++k)
            if (!p.gram(b, k).is_zero() && !x[k].is_zero()) s += p.gram(b, k) * x[k];
          G(c, d) = s;
        }
      }

      const auto red = linalg::bareiss_reduce(G);
      if (red.rank == 0) continue;
      const auto& sel = red.pivot_columns;

      Space sp;
      sp.mu = mu;
      sp.offset = total;
      sp.dim = red.rank;
      sp.gram = RatMatrix(sp.dim, sp.dim);
      RatMatrix gsel_all(sp.dim, cand.size());
      for (std::size_t a = 0; a < sp.dim; ++a) {
        for (std::size_t b = 0; b < sp.dim; ++b) sp.gram(a, b) = G(sel[a], sel[b]);
        for (std::size_t c = 0; c < cand.size(); ++c) gsel_all(a, c) = G(sel[a], c);
      }
      // Coordinates of every candidate in the selected basis; exact because
      // the candidates differ from their projections only by radical vectors.
      RatMatrix coords;
      try {
        coords = linalg::solve(sp.gram, gsel_all);
      } catch (const std::domain_error&) {
        throw Error(Errc::NotARootSystem, "contravariant form singular on selected basis at (" + mu.str() + ")");
      }

      const std::size_t self = spaces.size();
      for (std::size_t i = 0; i < n; ++i) {
        auto p = up[i];
        if (!p) continue;
        RatMatrix fb(sp.dim, spaces[*p].dim);
        for (std::size_t c = 0; c < cand.size(); ++c) {
          if (cand[c].first != static_cast<int>(i)) continue;
          for (std::size_t a = 0; a < sp.dim; ++a) fb(a, cand[c].second) = coords(a, c);
        }
        blocks.f[i].emplace(*p, std::move(fb));
        RatMatrix eb(spaces[*p].dim, sp.dim);
        for (std::size_t a = 0; a < sp.dim; ++a) {
          const auto& v = eimg[sel[a]][i];
          for (std::size_t k = 0; k < v.size(); ++k) eb(k, a) = v[k];
        }
        blocks.e[i].emplace(self, std::move(eb));
      }
      for (std::size_t a = 0; a < sp.dim; ++a) sp.chosen.push_back(cand[sel[a]]);

      total += sp.dim;
      if (total > static_cast<std::size_t>(dim_cap)) {
        throw Error(Errc::RepTooLarge, "explicit construction exceeded " + std::to_string(dim_cap));
      }
      index.emplace(key, self);
      spaces.push_back(std::move(sp));
      built.push_back(key);
    }
    level = std::move(built);
  }

  if (Integer(static_cast<unsigned long>(total)) != expected) {
    throw Error(Errc::NotARootSystem, "explicit construction has dimension " + std::to_string(total) +
                                          ", Weyl dimension formula gives " + expected.get_str());
  }

  ExplicitRep rep;
  rep.dimension = total;
  rep.highest_weight = lambda;
  rep.gram = RatMatrix(total, total);
  rep.e.assign(n, RatMatrix(total, total));
  rep.f.assign(n, RatMatrix(total, total));
  rep.h.assign(n, RatMatrix(total, total));
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    const Space& sp = spaces[s];
    for (std::size_t a = 0; a < sp.dim; ++a) {
      rep.weights.push_back(sp.mu);
      const auto [i, b] = sp.chosen[a];
      if (i < 0) {
        rep.lowering.emplace_back(-1, 0);
      } else {
        const Key parent_key = [&] {
          Key k(n);
          const Weight d = lambda - sp.mu;
          for (std::size_t t = 0; t < n; ++t) k[t] = d[t].to_int64();
          k[i] -= 1;
          return k;
        }();
        rep.lowering.emplace_back(i, spaces[index.at(parent_key)].offset + b);
      }
      for (std::size_t c = 0; c < sp.dim; ++c) rep.gram(sp.offset + a, sp.offset + c) = sp.gram(a, c);
      for (std::size_t i2 = 0; i2 < n; ++i2) rep.h[i2](sp.offset + a, sp.offset + a) = rs.coroot_pairing(sp.mu, i2);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [src, m] : blocks.f[i]) {
      const Space& from = spaces[src];
      // Destination is the unique space whose key is src's key + e_i.
      Key k(n);
      const Weight d = lambda - from.mu;
      for (std::size_t t = 0; t < n; ++t) k[t] = d[t].to_int64();
      k[i] += 1;
      const Space& to = spaces[index.at(k)];
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) rep.f[i](to.offset + r, from.offset + c) = m(r, c);
    }
    for (const auto& [src, m] : blocks.e[i]) {
      const Space& from = spaces[src];
      Key k(n);
      const Weight d = lambda - from.mu;
      for (std::size_t t = 0; t < n; ++t) k[t] = d[t].to_int64();
      k[i] -= 1;
      const Space& to = spaces[index.at(k)];
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) rep.e[i](to.offset + r, from.offset + c) = m(r, c);
    }
  }
  return rep;
}

bool satisfies_chevalley_serre(const ExplicitRep& rep, const RootSystem& rs) {
  const std::size_t n = rs.rank();
  const IntMatrix& A = rs.cartan_matrix();
  const auto e = sparse_all(rep.e);
  const auto f = sparse_all(rep.f);
  const auto h = sparse_all(rep.h);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational aij(A(i, j));
      if (!bracket(h[i], h[j]).is_zero()) return false;
      if (!(bracket(h[i], e[j]) == e[j].scaled(aij))) return false;
      if (!(bracket(h[i], f[j]) == f[j].scaled(-aij))) return false;
      const Sparse ef = bracket(e[i], f[j]);
      if (i == j ? !(ef == h[i]) : !ef.is_zero()) return false;
      if (i == j) continue;
      Sparse xe = e[j];
      Sparse xf = f[j];
      for (std::int64_t k = 0; k < 1 - A(i, j); ++k) {
        xe = bracket(e[i], xe);
        xf = bracket(f[i], xf);
      }
      if (!xe.is_zero() || !xf.is_zero()) return false;
    }
  }
  return true;
}

bool contravariant_form_ok(const ExplicitRep& rep) {
  // The form must vanish between different weight spaces; positivity is then
  // checked one weight space at a time.
  const auto blocks = weight_blocks(rep);
  for (const auto& [b, e] : blocks) {
    for (std::size_t r = 0; r < rep.dimension; ++r)
      for (std::size_t c = b; c < e; ++c)
        if ((r < b || r >= e) && !rep.gram(r, c).is_zero()) return false;
    RatMatrix g(e - b, e - b);
    for (std::size_t r = b; r < e; ++r)
      for (std::size_t c = b; c < e; ++c) g(r - b, c - b) = rep.gram(r, c);
    if (!linalg::is_positive_definite(g)) return false;
  }
  const Sparse G(rep.gram);
  for (std::size_t i = 0; i < rep.e.size(); ++i) {
    const Sparse e(rep.e[i]);
    if (!(e.transpose() * G == G * Sparse(rep.f[i]))) return false;
  }
  return true;
}

IntertwinerT build_intertwiner(const ExplicitRep& rep, const RealFormData& rf) {
  const auto& p = rf.theta.permutation;
  if (!rf.theta.fixes(rep.highest_weight)) {
    throw Error(Errc::ThetaMovesHighestWeight,
                "theta(lambda) = (" + rf.theta.apply(rep.highest_weight).str() + ") differs from lambda");
  }
  const std::size_t dim = rep.dimension;
  const std::size_t n = p.size();
  auto sign = [&](std::size_t i) { return Rational(rf.diagram.is_painted(i) ? -1 : 1); };

  // Columns in construction order; every parent precedes its children.
  const auto f = sparse_all(rep.f);
  IntertwinerT t{RatMatrix(dim, dim)};
  t.matrix(0, 0) = 1;
  for (std::size_t k = 1; k < dim; ++k) {
    const auto [i, parent] = rep.lowering[k];
    const RatMatrix& F = rep.f[p[i]];
    const Rational s = sign(i);
    for (std::size_t m = 0; m < dim; ++m) {
      const Rational& x = t.matrix(m, parent);
      if (x.is_zero()) continue;
      for (std::size_t r = 0; r < dim; ++r)
        if (!F(r, m).is_zero()) t.matrix(r, k) += s * F(r, m) * x;
    }
  }

  const Sparse T(t.matrix);
  const auto e = sparse_all(rep.e);
  const auto h = sparse_all(rep.h);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational s = sign(i);
    const bool ok = T * e[i] == (e[p[i]] * T).scaled(s) && T * f[i] == (f[p[i]] * T).scaled(s) &&
                    T * h[i] == h[p[i]] * T;
    if (!ok) {
      throw Error(Errc::IntertwinerInconsistent,
                  "T does not intertwine the generators for simple root " + std::to_string(i + 1));
    }
  }
  if (!(T * T == Sparse::identity(dim))) throw Error(Errc::IntertwinerInconsistent, "T^2 != 1");
  return t;
}

bool is_self_adjoint(const IntertwinerT& t, const ExplicitRep& rep) {
  const Sparse T(t.matrix);
  const Sparse G(rep.gram);
  return T.transpose() * G == G * T;
}

Integer signature_bruteforce(const ExplicitRep& rep, const IntertwinerT& t) {
  (void)rep;
  const Rational tr = t.matrix.trace();
  if (!tr.is_integer()) throw Error(Errc::IntertwinerInconsistent, "tr T = " + tr.str() + " is not an integer");
  return abs(tr.to_integer());
}

linalg::Inertia trace_form_inertia(std::span<const RatMatrix> basis) {
  RatMatrix b(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) b(i, j) = b(j, i) = (basis[i] * basis[j]).trace();
  return linalg::inertia(b);
}

std::vector<RatMatrix> split_sl_basis(int n) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<RatMatrix> out;
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) {
      if (i == j) continue;
      RatMatrix m(un, un);
      m(i, j) = 1;
      out.push_back(std::move(m));
    }
  for (std::size_t i = 0; i + 1 < un; ++i) {
    RatMatrix m(un, un);
    m(i, i) = 1;
    m(i + 1, i + 1) = -1;
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<RatMatrix> so_pq_basis(int p, int q) {
  const auto n = static_cast<std::size_t>(p + q);
  const auto up = static_cast<std::size_t>(p);
  std::vector<RatMatrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RatMatrix m(n, n);
      const bool mixed = i < up && j >= up;
      m(i, j) = 1;
      m(j, i) = mixed ? 1 : -1;
      out.push_back(std::move(m));
    }
  return out;
}

}  // namespace sigform
