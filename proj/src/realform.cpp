#include "sigform/realform.hpp"

#include <algorithm>
#include <set>

#include "sigform/error.hpp"

namespace sigform {

VoganDiagram VoganDiagram::compact(const CartanType& t) {
  VoganDiagram vd{t, {}, {}};
  for (int i = 0; i < t.rank(); ++i) vd.involution.push_back(i);
  return vd;
}

bool VoganDiagram::is_painted(std::size_t i) const {
  return std::find(painted.begin(), painted.end(), static_cast<int>(i)) != painted.end();
}

bool VoganDiagram::is_inner() const {
  for (std::size_t i = 0; i < involution.size(); ++i)
    if (involution[i] != static_cast<int>(i)) return false;
  return true;
}

std::string VoganDiagram::str() const {
  std::string s = type.str() + " [";
  for (std::size_t i = 0; i < involution.size(); ++i) s += (i ? "," : "") + std::to_string(involution[i] + 1);
  s += "] {";
  for (std::size_t i = 0; i < painted.size(); ++i) s += (i ? "," : "") + std::to_string(painted[i] + 1);
  return s + "}";
}

void validate(const VoganDiagram& vd, const RootSystem& rs) {
  const std::size_t n = rs.rank();
  if (!(vd.type == rs.type())) {
    throw Error(Errc::InvalidInvolution, "diagram type " + vd.type.str() + " does not match " + rs.type().str());
  }
  if (vd.involution.size() != n) throw Error(Errc::InvalidInvolution, "involution has wrong length");
  std::vector<bool> hit(n, false);
  for (int p : vd.involution) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || hit[p]) {
      throw Error(Errc::InvalidInvolution, "involution is not a permutation");
    }
    hit[p] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (vd.involution[vd.involution[i]] != static_cast<int>(i)) {
      throw Error(Errc::InvalidInvolution, "involution does not square to the identity");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (rs.cartan_matrix()(vd.involution[i], vd.involution[j]) != rs.cartan_matrix()(i, j)) {
        throw Error(Errc::InvalidInvolution, "permutation is not a Dynkin diagram automorphism");
      }
    }
  }
  for (std::size_t k = 0; k < vd.painted.size(); ++k) {
    const int i = vd.painted[k];
    if (i < 0 || static_cast<std::size_t>(i) >= n) throw Error(Errc::InvalidInvolution, "painted index out of range");
    if (vd.involution[i] != i) {
      throw Error(Errc::InvalidInvolution, "painted node " + std::to_string(i + 1) + " is not fixed by the involution");
    }
    if (k > 0 && vd.painted[k - 1] >= i) throw Error(Errc::InvalidInvolution, "painting not sorted/unique");
  }
}

ThetaAction derive_theta(const VoganDiagram& vd, const RootSystem& rs) {
  validate(vd, rs);
  const std::size_t n = rs.rank();
  ThetaAction th{IntMatrix(n, n), vd.involution};
  for (std::size_t i = 0; i < n; ++i) th.matrix(vd.involution[i], i) = 1;
  return th;
}

std::string_view root_kind_name(RootKind k) {
  switch (k) {
    case RootKind::ImaginaryCompact: return "imaginary-compact";
    case RootKind::ImaginaryNoncompact: return "imaginary-noncompact";
    case RootKind::Complex: return "complex";
    case RootKind::Real: return "real";
  }
  return "?";
}

std::size_t RootClassification::count(RootKind k) const {
  return static_cast<std::size_t>(std::count(kinds.begin(), kinds.end(), k));
}

RootClassification classify_roots(const VoganDiagram& vd, const ThetaAction& theta, const RootSystem& rs) {
  const auto& roots = rs.roots();
  RootClassification cls;
  cls.kinds.reserve(roots.size());
  for (const auto& alpha : roots) {
    const Weight image = theta.apply(alpha);
    if (image == -alpha) {
      throw Error(Errc::RealRootFound,
                  "root (" + alpha.str() + ") is real; the diagram does not describe a maximally compact Cartan");
    }
    if (image != alpha) {
      cls.kinds.push_back(RootKind::Complex);
      continue;
    }
    Integer painted_sum = 0;
    for (int i : vd.painted) painted_sum += alpha[i].to_integer();
    bool noncompact = mpz_odd_p(painted_sum.get_mpz_t()) != 0;
    // folding sign: [X_beta, X_{theta beta}] -> [X_{theta beta}, X_beta]
    for (const auto& beta : roots) {
      const Weight tb = theta.apply(beta);
      if (tb != beta && beta + tb == alpha) {
        noncompact = !noncompact;
        break;
      }
    }
    cls.kinds.push_back(noncompact ? RootKind::ImaginaryNoncompact : RootKind::ImaginaryCompact);
  }
  return cls;
}

Weight restricted_root(const ThetaAction& theta, const Weight& alpha) {
  return (alpha + theta.apply(alpha)) * Rational(1, 2);
}

KRootSystem k_root_system(const RootSystem& rs, const ThetaAction& theta, const RootClassification& cls) {
  const auto& roots = rs.roots();
  const std::size_t npos = rs.positive_roots().size();
  std::set<Weight> seen;
  KRootSystem k;
  for (std::size_t idx = 0; idx < npos; ++idx) {
    const RootKind kind = cls.kinds[idx];
    if (kind != RootKind::ImaginaryCompact && kind != RootKind::Complex) continue;
    Weight res = restricted_root(theta, roots[idx]);
    if (res.is_zero()) continue;
    if (seen.insert(res).second) k.positive_roots.push_back(res);
  }

  std::set<Weight> all(seen);
  for (const auto& d : k.positive_roots) all.insert(-d);
  for (const auto& d : all) {
    for (const auto& e : all) {
      const Rational c = rs.coroot_pairing(e, d);
      if (!c.is_integer() || !all.count(e - d * c)) {
        throw Error(Errc::NotARootSystem,
                    "restricted compact roots are not closed under reflection (" + d.str() + ", " + e.str() + ")");
      }
    }
  }

  for (const auto& d : k.positive_roots) {
    bool decomposable = false;
    for (const auto& e : k.positive_roots) {
      if (e != d && seen.count(d - e)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) k.simple_roots.push_back(d);
  }
  k.rho = Weight(rs.rank());
  for (const auto& d : k.positive_roots) k.rho += d;
  k.rho *= Rational(1, 2);
  return k;
}

RealFormData make_real_form(const VoganDiagram& vd, const RootSystem& rs) {
  RealFormData rf;
  rf.diagram = vd;
  rf.theta = derive_theta(vd, rs);
  rf.classification = classify_roots(vd, rf.theta, rs);
  rf.k_roots = k_root_system(rs, rf.theta, rf.classification);

  const auto n = static_cast<std::int64_t>(rs.rank());
  std::int64_t swapped = 0;
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (vd.involution[i] != static_cast<int>(i)) ++swapped;
  auto& d = rf.dims;
  d.a = swapped / 2;
  d.t = n - d.a;
  d.g = n + static_cast<std::int64_t>(rs.roots().size());
  const auto ic = static_cast<std::int64_t>(rf.classification.count(RootKind::ImaginaryCompact));
  const auto in = static_cast<std::int64_t>(rf.classification.count(RootKind::ImaginaryNoncompact));
  const auto cx = static_cast<std::int64_t>(rf.classification.count(RootKind::Complex));
  d.k = d.t + ic + cx / 2;
  d.s = d.a + in + cx / 2;

  const auto k_roots = static_cast<std::int64_t>(rf.k_roots.positive_roots.size());
  if (2 * k_roots != d.k - d.t) {
    throw Error(Errc::NotARootSystem, "compact root count " + std::to_string(2 * k_roots) +
                                          " does not match dim k - dim t = " + std::to_string(d.k - d.t));
  }
  if ((d.s - d.a) % 2 != 0) throw Error(Errc::NotARootSystem, "dim s and dim a differ in parity");
  rf.r = static_cast<int>((d.s - d.a) / 2);
  rf.dim_S = pow2(static_cast<unsigned>(d.s / 2));
  rf.spin_mult_m = pow2(static_cast<unsigned>(d.a / 2));
  return rf;
}

}  // namespace sigform
