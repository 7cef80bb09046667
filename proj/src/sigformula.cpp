#include "sigform/sigformula.hpp"

#include "sigform/error.hpp"

namespace sigform {

namespace {

void require_dominant_integral(const RootSystem& rs, const Weight& lambda) {
  if (lambda.size() != rs.rank()) throw Error(Errc::InvalidType, "weight has wrong length");
  if (!rs.is_integral(lambda)) throw Error(Errc::NonIntegral, "highest weight (" + lambda.str() + ")");
  if (!rs.is_dominant(lambda)) throw Error(Errc::NonDominant, "highest weight (" + lambda.str() + ")");
}

bool commutes(const IntMatrix& a, const IntMatrix& b) { return a * b == b * a; }

}  // namespace

bool exists_invariant_form(const RealFormData& rf, const RootSystem& rs, const Weight& lambda) {
  return dominant_representative(rs, rf.theta.apply(lambda)).first == lambda;
}

std::vector<WeylElement> enumerate_W1(const RealFormData& rf, const RootSystem& rs, const Weight& lambda,
                                      std::uint64_t weyl_cap) {
  const Weight shifted = lambda + rs.rho();
  std::vector<WeylElement> out;
  for (auto& w : enumerate_weyl(rs, weyl_cap)) {
    if (!commutes(w.matrix, rf.theta.matrix)) continue;
    const Weight image = restricted_root(rf.theta, w.apply(shifted));
    bool dominant = true;
    for (const auto& delta : rf.k_roots.simple_roots) {
      const int s = rs.coroot_pairing(image, delta).sign();
      if (s == 0) {
        throw Error(Errc::NotARootSystem, "w(lambda+rho_G) restricted to t is singular for the compact root (" +
                                              delta.str() + ")");
      }
      if (s < 0) {
        dominant = false;
        break;
      }
    }
    if (dominant) out.push_back(std::move(w));
  }
  return out;
}

std::vector<std::int64_t> n_beta(const RootSystem& rs, const Weight& lambda, const WeylElement& w) {
  const Weight diff = lambda - w.apply(lambda);
  std::vector<std::int64_t> n(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    if (!diff[i].is_integer() || diff[i].sign() < 0) {
      throw Error(Errc::NonIntegralDecomposition,
                  "lambda - w lambda = (" + diff.str() + ") is not a nonnegative integral root combination");
    }
    n[i] = diff[i].to_int64();
  }
  return n;
}

int epsilon(const RealFormData& rf, const RootSystem& rs, const Weight& lambda, const WeylElement& w) {
  const auto n = n_beta(rs, lambda, w);
  std::int64_t total = 0;
  for (int i : rf.diagram.painted) total += n[i];
  return total % 2 == 0 ? 1 : -1;
}

Weight ktype_highest_weight(const RealFormData& rf, const RootSystem& rs, const Weight& lambda,
                            const WeylElement& w) {
  return restricted_root(rf.theta, w.apply(lambda + rs.rho())) - rf.k_roots.rho;
}

Integer ktype_dimension(const RealFormData& rf, const RootSystem& rs, const Weight& lambda, const WeylElement& w) {
  return weyl_dim(rf.k_roots.positive_roots, rs.form(), ktype_highest_weight(rf, rs, lambda, w));
}

SignatureReport signature(const RealFormData& rf, const RootSystem& rs, const Weight& lambda,
                          std::uint64_t weyl_cap) {
  require_dominant_integral(rs, lambda);
  SignatureReport rep;
  rep.dimV = weyl_dim(rs, lambda);
  rep.divisor = pow2(static_cast<unsigned>(rf.r));
  rep.exists_form = exists_invariant_form(rf, rs, lambda);
  if (!rep.exists_form) return rep;

  for (auto& w : enumerate_W1(rf, rs, lambda, weyl_cap)) {
    W1Row row;
    row.mu = ktype_highest_weight(rf, rs, lambda, w);
    row.n_beta = n_beta(rs, lambda, w);
    row.epsilon = epsilon(rf, rs, lambda, w);
    row.dimE = weyl_dim(rf.k_roots.positive_roots, rs.form(), row.mu);
    row.w = std::move(w);
    if (row.epsilon > 0) {
      rep.signed_sum += row.dimE;
    } else {
      rep.signed_sum -= row.dimE;
    }
    rep.rows.push_back(std::move(row));
  }

  Integer magnitude = abs(rep.signed_sum);
  if (magnitude % rep.divisor != 0) {
    throw Error(Errc::InexactDivision,
                "signed sum " + rep.signed_sum.get_str() + " is not divisible by 2^" + std::to_string(rf.r));
  }
  const Integer sig = magnitude / rep.divisor;
  if (sig > rep.dimV || (rep.dimV - sig) % 2 != 0) {
    throw Error(Errc::InconsistentSignature,
                "signature " + sig.get_str() + " is incompatible with dim V = " + rep.dimV.get_str());
  }
  rep.sig = sig;
  rep.p_q = std::make_pair(Integer((rep.dimV + sig) / 2), Integer((rep.dimV - sig) / 2));
  return rep;
}

}  // namespace sigform
