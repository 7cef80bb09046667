#include "sigform/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace sigform::linalg {

namespace {

using IntegerMatrix = std::vector<std::vector<Integer>>;

Integer lcm_of_denominators(const RatMatrix& m, std::size_t row) {
  Integer l = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Integer d = m(row, c).denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

// Each row scaled independently; rank and pivot columns are unaffected.
IntegerMatrix scale_rows(const RatMatrix& m) {
  IntegerMatrix out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Integer l = lcm_of_denominators(m, r);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out[r][c] = (m(r, c) * Rational(l)).to_integer();
    }
  }
  return out;
}

// Whole matrix scaled by one positive integer; preserves the sign of every minor.
IntegerMatrix scale_uniform(const RatMatrix& m) {
  Integer l = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Integer lr = lcm_of_denominators(m, r);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), lr.get_mpz_t());
  }
  IntegerMatrix out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = (m(r, c) * Rational(l)).to_integer();
  return out;
}

void bareiss_step(IntegerMatrix& a, std::size_t pr, std::size_t pc, const Integer& prev) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t i = pr + 1; i < rows; ++i) {
    for (std::size_t j = pc + 1; j < cols; ++j) {
      Integer t = a[pr][pc] * a[i][j] - a[i][pc] * a[pr][j];
      mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      a[i][j] = std::move(t);
    }
    a[i][pc] = 0;
  }
}

}  // namespace

BareissResult bareiss_reduce(const RatMatrix& m) {
  IntegerMatrix a = scale_rows(m);
  BareissResult res;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    bareiss_step(a, r, c, prev);
    prev = a[r][c];
    res.pivot_columns.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

bool is_positive_definite(const RatMatrix& sym) {
  if (sym.rows() != sym.cols()) throw std::invalid_argument("is_positive_definite: not square");
  IntegerMatrix a = scale_uniform(sym);
  Integer prev = 1;
  for (std::size_t k = 0; k < sym.rows(); ++k) {
    if (a[k][k] <= 0) return false;
    bareiss_step(a, k, k, prev);
    prev = a[k][k];
  }
  return true;
}

std::vector<Rational> leading_principal_minors(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("leading_principal_minors: not square");
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    RatMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
    Rational det = 1;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (p < k && sub(p, c).is_zero()) ++p;
      if (p == k) {
        det = 0;
        break;
      }
      if (p != c) {
        for (std::size_t j = 0; j < k; ++j) std::swap(sub(p, j), sub(c, j));
        det = -det;
      }
      det *= sub(c, c);
      for (std::size_t i = c + 1; i < k; ++i) {
        if (sub(i, c).is_zero()) continue;
        const Rational f = sub(i, c) / sub(c, c);
        for (std::size_t j = c; j < k; ++j) sub(i, j) -= f * sub(c, j);
      }
    }
    out.push_back(det);
  }
  return out;
}

RatMatrix solve(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve: shape mismatch");
  RatMatrix m = a;
  RatMatrix x = b;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) throw std::domain_error("solve: singular matrix");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(p, j), x(c, j));
    }
    const Rational inv = Rational(1) / m(c, c);
    for (std::size_t j = 0; j < n; ++j) m(c, j) *= inv;
    for (std::size_t j = 0; j < x.cols(); ++j) x(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j)
        if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
      for (std::size_t j = 0; j < x.cols(); ++j)
        if (!x(c, j).is_zero()) x(i, j) -= f * x(c, j);
    }
  }
  return x;
}

RatMatrix inverse(const RatMatrix& a) { return solve(a, RatMatrix::identity(a.rows())); }

RatMatrix null_space(const RatMatrix& a) {
  RatMatrix m = a;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = 0; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RatMatrix basis(cols, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -m(i, f);
  }
  return basis;
}

Inertia inertia(const RatMatrix& sym) {
  const std::size_t n = sym.rows();
  if (sym.cols() != n) throw std::invalid_argument("inertia: not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (sym(i, j) != sym(j, i)) throw std::invalid_argument("inertia: matrix not symmetric");

  RatMatrix a = sym;
  auto sym_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  };
  // row_i += row_j, col_i += col_j
  auto sym_add = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) a(i, k) += a(j, k);
    for (std::size_t k = 0; k < n; ++k) a(k, i) += a(k, j);
  };

  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t d = k;
    while (d < n && a(d, d).is_zero()) ++d;
    if (d == n) {
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i) {
        for (std::size_t j = i + 1; j < n && !found; ++j) {
          if (!a(i, j).is_zero()) {
            sym_add(i, j);
            if (a(i, i).is_zero()) {
              // a(i,i) = 2 a(i,j) + a(j,j) with a(j,j) = 0 here, so never zero
              throw std::logic_error("inertia: congruence step failed");
            }
            d = i;
            found = true;
          }
        }
      }
      if (!found) {
        out.zero += n - k;
        return out;
      }
    }
    sym_swap(d, k);
    const Rational pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rational f = a(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      for (std::size_t j = k; j < n; ++j) a(j, i) -= f * a(j, k);
    }
    if (pivot.sign() > 0) {
      ++out.positive;
    } else {
      ++out.negative;
    }
  }
  return out;
}

}  // namespace sigform::linalg
