#pragma once

// Real forms given by Vogan diagrams, relative to a maximally compact Cartan
// subalgebra h = t + a and a theta-stable positive system.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigform/matrix.hpp"
#include "sigform/rational.hpp"
#include "sigform/rootsys.hpp"

namespace sigform {

/// Dynkin diagram automorphism of order <= 2 plus a painting of some of its
/// fixed nodes (the noncompact imaginary simple roots).  Indices are 0-based.
struct VoganDiagram {
  CartanType type;
  std::vector<int> involution;  // involution[i] = image of simple root i
  std::vector<int> painted;     // sorted, each a fixed point of involution

  static VoganDiagram compact(const CartanType& t);

  bool is_painted(std::size_t i) const;
  bool is_inner() const;  // identity diagram involution, i.e. equal rank
  /// "A3 [1,2,3] {3}" with 1-based labels.
  std::string str() const;

  friend bool operator==(const VoganDiagram&, const VoganDiagram&) = default;
};

/// Checks that the involution preserves the Cartan matrix, squares to the
/// identity and fixes every painted node.  Throws Error(InvalidInvolution).
void validate(const VoganDiagram& vd, const RootSystem& rs);

/// theta restricted to h*, as a permutation of the simple roots.
struct ThetaAction {
  IntMatrix matrix;
  std::vector<int> permutation;

  Weight apply(const Weight& v) const { return sigform::apply(matrix, v); }
  /// Fixed by theta, i.e. lies in t* (zero-extended).
  bool fixes(const Weight& v) const { return apply(v) == v; }
};

ThetaAction derive_theta(const VoganDiagram& vd, const RootSystem& rs);

enum class RootKind { ImaginaryCompact, ImaginaryNoncompact, Complex, Real };

std::string_view root_kind_name(RootKind k);

struct RootClassification {
  std::vector<RootKind> kinds;  // parallel to RootSystem::roots()

  std::size_t count(RootKind k) const;
};

/// Imaginary roots are graded by theta acting on their root vectors: the
/// painted-coefficient parity, times -1 when alpha = beta + theta(beta) for a
/// root beta (the folding sign, which only occurs for the A_{2n} flip).
/// Throws Error(RealRootFound) if a root has theta(alpha) = -alpha.
RootClassification classify_roots(const VoganDiagram& vd, const ThetaAction& theta, const RootSystem& rs);

/// Res(alpha) = (alpha + theta alpha) / 2.
Weight restricted_root(const ThetaAction& theta, const Weight& alpha);

/// Delta(k, t) embedded in h*, with the positive system inherited from
/// Delta+(g, h).
struct KRootSystem {
  std::vector<Weight> positive_roots;
  std::vector<Weight> simple_roots;
  Weight rho;
};

/// Throws Error(NotARootSystem) if the restrictions are not closed under
/// their own reflections.
KRootSystem k_root_system(const RootSystem& rs, const ThetaAction& theta, const RootClassification& cls);

struct RealFormDims {
  std::int64_t g = 0;
  std::int64_t k = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::int64_t a = 0;
};

struct RealFormData {
  VoganDiagram diagram;
  ThetaAction theta;
  RootClassification classification;
  KRootSystem k_roots;
  RealFormDims dims;
  int r = 0;              // 2r = dim s - dim a
  Integer spin_mult_m;    // 2^{floor(dim a / 2)}
  Integer dim_S;          // 2^{floor(dim s / 2)}

  bool equal_rank() const { return dims.a == 0; }
};

RealFormData make_real_form(const VoganDiagram& vd, const RootSystem& rs);

// ------------------------------------------------------------------ presets

struct Preset {
  std::string name;
  VoganDiagram diagram;
};

/// Parses the preset table format:
///   name  type  involution  painted
/// with 1-based labels, '-' for the identity involution / empty painting,
/// involution as the comma-separated list of images.  '#' starts a comment.
std::vector<Preset> parse_presets(std::string_view text);

/// The table shipped with the library (data/real_forms.txt).
const std::vector<Preset>& presets();

/// Looks up a preset by name; also accepts "compact(<type>)".
std::optional<VoganDiagram> find_preset(std::string_view name);

}  // namespace sigform
