#pragma once

// Signature of the invariant hermitian form on a finite-dimensional
// irreducible representation, computed from the K~-types of its Dirac
// cohomology:
//
//   sig(V) = | sum_{w in W^1} eps(w) dim E(w(lambda + rho_G) - rho_K) | / 2^r
//
// where W^1 = { w in W : w theta = theta w, w(lambda + rho_G)|_t is
// Delta+(k,t)-dominant } and 2r = dim s - dim a.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sigform/realform.hpp"
#include "sigform/rootsys.hpp"

namespace sigform {

struct W1Row {
  WeylElement w;
  Weight mu;                        // (w(lambda + rho_G))|_t - rho_K
  std::vector<std::int64_t> n_beta;  // lambda - w lambda = sum_i n_beta[i] alpha_i
  int epsilon = 1;
  Integer dimE;
};

struct SignatureReport {
  bool exists_form = false;
  std::vector<W1Row> rows;
  Integer divisor;     // 2^r
  Integer signed_sum;  // sum of epsilon * dimE
  std::optional<Integer> sig;
  Integer dimV;
  std::optional<std::pair<Integer, Integer>> p_q;  // p >= q
};

/// V(lambda) carries a G-invariant hermitian form iff theta(lambda) is
/// W-conjugate to lambda.
bool exists_invariant_form(const RealFormData& rf, const RootSystem& rs, const Weight& lambda);

/// Sorted by word length, then lexicographically by word.  A zero pairing
/// with a compact simple root is reported as Error(NotARootSystem).
std::vector<WeylElement> enumerate_W1(const RealFormData& rf, const RootSystem& rs, const Weight& lambda,
                                      std::uint64_t weyl_cap = kDefaultWeylCap);

/// Coefficients of lambda - w lambda in the simple-root basis.
/// Throws Error(NonIntegralDecomposition) unless they are nonnegative integers.
std::vector<std::int64_t> n_beta(const RootSystem& rs, const Weight& lambda, const WeylElement& w);

/// (-1)^(sum of n_beta over noncompact imaginary simple roots).
int epsilon(const RealFormData& rf, const RootSystem& rs, const Weight& lambda, const WeylElement& w);

/// The highest weight (w(lambda + rho_G))|_t - rho_K of the K~-type indexed by w.
Weight ktype_highest_weight(const RealFormData& rf, const RootSystem& rs, const Weight& lambda,
                            const WeylElement& w);

Integer ktype_dimension(const RealFormData& rf, const RootSystem& rs, const Weight& lambda, const WeylElement& w);

/// Throws Error(NonDominant)/Error(NonIntegral) for an invalid highest
/// weight and Error(InexactDivision) if 2^r does not divide the signed sum.
SignatureReport signature(const RealFormData& rf, const RootSystem& rs, const Weight& lambda,
                          std::uint64_t weyl_cap = kDefaultWeylCap);

}  // namespace sigform
