#pragma once

// Brute-force computations of sig(V) = |tr(theta; V)| that do not use W^1,
// epsilon or the Dirac-cohomology formula.
//
//  A. trace_theta_inner: for equal-rank forms theta acts on the weight-mu
//     space by (-1)^{N(lambda - mu)}, N = sum of the painted coefficients,
//     so the trace is a signed sum of weight multiplicities.
//  B. build_explicit_rep + build_intertwiner: V(lambda) is built as matrices
//     from the Chevalley generators, and the intertwiner T with
//     T pi(X) = pi(theta X) T is constructed on the lowering monomials.
//
// A third path, trace_form_inertia, measures the signature of the trace form
// of explicit real matrix Lie algebras (sl(n,R), so(p,q)); for the adjoint
// representation it must agree with A and B.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sigform/linalg.hpp"
#include "sigform/matrix.hpp"
#include "sigform/realform.hpp"
#include "sigform/rootsys.hpp"

namespace sigform {

inline constexpr std::int64_t kDefaultExplicitDimCap = 200;

/// |sum_mu mult(mu) (-1)^{N(lambda - mu)}|.  Throws Error(NotEqualRank) when
/// dim a > 0 and Error(RepTooLarge) above dim_cap.
Integer trace_theta_inner(const RealFormData& rf, const RootSystem& rs, const Weight& lambda,
                          std::int64_t dim_cap = kDefaultMultiplicityDimCap);

/// V(lambda) with generator matrices.  Basis vectors are lowering monomials
/// f_{i_1} ... f_{i_k} v_lambda, selected weight space by weight space as a
/// maximal set independent modulo the radical of the contravariant form.
struct ExplicitRep {
  std::size_t dimension = 0;
  Weight highest_weight;
  std::vector<Weight> weights;  // weight of each basis vector
  /// lowering[k] = (i, parent): basis vector k is f_i applied to basis vector
  /// parent.  The highest weight vector (index 0) has i = -1.
  std::vector<std::pair<int, std::size_t>> lowering;
  std::vector<RatMatrix> e;
  std::vector<RatMatrix> f;
  std::vector<RatMatrix> h;
  /// Contravariant form: <e_i v, w> = <v, f_i w>, <v_lambda, v_lambda> = 1.
  /// Block diagonal over weight spaces.
  RatMatrix gram;
};

/// Throws Error(RepTooLarge) if dim V(lambda) exceeds dim_cap.
ExplicitRep build_explicit_rep(const RootSystem& rs, const Weight& lambda,
                               std::int64_t dim_cap = kDefaultExplicitDimCap);

/// Checks [h_i, e_j] = A(i,j) e_j, [h_i, f_j] = -A(i,j) f_j, [e_i, f_j] =
/// delta_ij h_i, [h_i, h_j] = 0 and the Serre relations
/// ad(e_i)^{1 - A(i,j)} e_j = ad(f_i)^{1 - A(i,j)} f_j = 0 as exact matrix
/// identities.
bool satisfies_chevalley_serre(const ExplicitRep& rep, const RootSystem& rs);

/// Gram matrix positive definite and e_i^T G = G f_i for all i.
bool contravariant_form_ok(const ExplicitRep& rep);

struct IntertwinerT {
  RatMatrix matrix;
};

/// theta(e_i) = s_i e_{p(i)}, theta(f_i) = s_i f_{p(i)} with p the diagram
/// involution and s_i = -1 exactly on painted nodes.  T is defined by
/// T(f_{i_1} ... f_{i_k} v_lambda) = s_{i_1} ... s_{i_k} f_{p(i_1)} ... f_{p(i_k)} v_lambda.
/// Throws Error(ThetaMovesHighestWeight) if theta(lambda) != lambda and
/// Error(IntertwinerInconsistent) if the result fails T pi(X) = pi(theta X) T
/// or T^2 = 1.
IntertwinerT build_intertwiner(const ExplicitRep& rep, const RealFormData& rf);

/// T is self-adjoint for the contravariant form: T^t G = G T.
bool is_self_adjoint(const IntertwinerT& t, const ExplicitRep& rep);

/// |tr T|.
Integer signature_bruteforce(const ExplicitRep& rep, const IntertwinerT& t);

/// Inertia of the Gram matrix tr(X_i X_j) of a basis of a real matrix Lie
/// algebra.
linalg::Inertia trace_form_inertia(std::span<const RatMatrix> basis);

/// Basis of sl(n, R): E_ij (i != j) and E_ii - E_{i+1,i+1}.
std::vector<RatMatrix> split_sl_basis(int n);

/// Basis of so(p, q) = { X : X^t J + J X = 0 }, J = diag(1^p, (-1)^q).
std::vector<RatMatrix> so_pq_basis(int p, int q);

}  // namespace sigform
