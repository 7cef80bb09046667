#pragma once

// Root systems of semisimple complex Lie algebras in exact arithmetic.
//
// Coordinates: every Weight is expressed in the basis of simple roots.
// Fundamental-weight coordinates (Dynkin labels) are a conversion layer,
// see RootSystem::to_fundamental / from_fundamental.
//
// Simple roots are numbered 0..rank-1 internally, following Bourbaki's
// labelling shifted down by one.  The Cartan matrix convention is
// A(i,j) = <alpha_j, alpha_i^vee>, so <v, alpha_i^vee> = sum_j A(i,j) v_j.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sigform/matrix.hpp"
#include "sigform/rational.hpp"

namespace sigform {

inline constexpr int kDefaultRankCap = 8;
inline constexpr std::uint64_t kDefaultWeylCap = 1'000'000;
inline constexpr std::int64_t kDefaultMultiplicityDimCap = 100'000;

enum class Family { A, B, C, D, E, F, G };

struct SimpleComponent {
  Family family;
  int rank;

  friend bool operator==(const SimpleComponent&, const SimpleComponent&) = default;
};

/// A semisimple Cartan type, a direct sum of simple components.
class CartanType {
 public:
  CartanType() = default;
  /// Throws Error(InvalidType) when a component violates the rank bounds.
  explicit CartanType(std::vector<SimpleComponent> components);

  /// Parses "A3", "B2xA1", "g2" ('x' or '+' separate components).
  static CartanType parse(std::string_view text);

  const std::vector<SimpleComponent>& components() const { return components_; }
  int rank() const;
  bool is_simple() const { return components_.size() == 1; }
  std::string str() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;

 private:
  std::vector<SimpleComponent> components_;
};

/// Order of the Weyl group from the classification tables.
Integer weyl_group_order(const CartanType& t);

/// Vector in h* with exact rational coordinates in the simple-root basis.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : c_(rank) {}
  explicit Weight(std::vector<Rational> coords) : c_(std::move(coords)) {}
  static Weight from_ints(std::span<const std::int64_t> coords);
  static Weight from_ints(std::initializer_list<std::int64_t> coords);

  std::size_t size() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_integral() const;
  /// Sum of coordinates (height, for elements of the root lattice).
  Rational height() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& s);
  Weight operator-() const;

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Weight a, const Rational& s) { return a *= s; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

  /// "3/2,2,3/2"
  std::string str() const;

 private:
  std::vector<Rational> c_;
};

/// Applies an integer matrix (acting on simple-root coordinates) to a weight.
Weight apply(const IntMatrix& m, const Weight& v);

/// Weyl group element: a reduced word in simple reflections together with
/// its matrix.  The word (i_1, ..., i_k) denotes s_{i_1} ... s_{i_k}, so
/// s_{i_k} acts first.
struct WeylElement {
  std::vector<int> word;
  IntMatrix matrix;

  std::size_t length() const { return word.size(); }
  Weight apply(const Weight& v) const { return sigform::apply(matrix, v); }
};

class RootSystem {
 public:
  const CartanType& type() const { return type_; }
  std::size_t rank() const { return cartan_.rows(); }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  /// Symmetric bilinear form (alpha_i, alpha_j); long roots of each simple
  /// component have squared length 2.
  const RatMatrix& form() const { return form_; }

  Weight simple_root(std::size_t i) const;
  /// Positive roots ordered by height, then by coefficient vector with
  /// earlier simple roots first.
  const std::vector<Weight>& positive_roots() const { return positive_; }
  /// All roots: positive roots followed by their negatives in the same order.
  const std::vector<Weight>& roots() const { return all_; }
  /// Index into roots(), or nullopt.
  std::optional<std::size_t> root_index(const Weight& v) const;
  bool is_root(const Weight& v) const { return root_index(v).has_value(); }

  const Weight& rho() const { return rho_; }

  Rational inner(const Weight& u, const Weight& v) const;
  /// <v, alpha_i^vee>
  Rational coroot_pairing(const Weight& v, std::size_t i) const;
  /// <v, delta^vee> = 2 (v, delta) / (delta, delta) for any nonzero delta.
  Rational coroot_pairing(const Weight& v, const Weight& delta) const;

  Weight reflect(std::size_t i, const Weight& v) const;
  IntMatrix simple_reflection_matrix(std::size_t i) const;

  /// Dynkin labels <v, alpha_i^vee>.
  std::vector<Rational> to_fundamental(const Weight& v) const;
  Weight from_fundamental(std::span<const Rational> labels) const;

  bool is_dominant(const Weight& v) const;
  /// All Dynkin labels are integers.
  bool is_integral(const Weight& v) const;

  /// Index of the simple component containing simple root i.
  std::size_t component_of(std::size_t i) const { return component_of_[i]; }
  /// Highest root; requires a simple type.
  Weight highest_root() const;

 private:
  friend RootSystem build_root_system(const CartanType& t, int rank_cap);

  CartanType type_;
  IntMatrix cartan_;
  RatMatrix form_;
  RatMatrix inverse_cartan_;
  std::vector<Weight> positive_;
  std::vector<Weight> all_;
  std::map<Weight, std::size_t> index_;
  Weight rho_;
  std::vector<std::size_t> component_of_;
};

/// Throws Error(UnsupportedRank) if t.rank() > rank_cap.
RootSystem build_root_system(const CartanType& t, int rank_cap = kDefaultRankCap);

inline Weight reflect(const RootSystem& rs, std::size_t i, const Weight& v) { return rs.reflect(i, v); }

/// All elements of W, identity first, then by length; each element carries
/// its lexicographically smallest reduced word.  Throws Error(GroupTooLarge)
/// if |W| exceeds cap.
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::uint64_t cap = kDefaultWeylCap);

/// The dominant element of the W-orbit of v and some w with w(v) dominant.
std::pair<Weight, WeylElement> dominant_representative(const RootSystem& rs, const Weight& v);

/// The W-orbit of v, by breadth-first search under simple reflections.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& v);

/// Weyl's dimension formula for the positive system `positive_roots` with
/// bilinear form `form` (on simple-root coordinates of the ambient space).
/// Throws Error(NonDominant) or Error(NonIntegral).
Integer weyl_dim(std::span<const Weight> positive_roots, const RatMatrix& form, const Weight& mu);

inline Integer weyl_dim(const RootSystem& rs, const Weight& mu) {
  return weyl_dim(rs.positive_roots(), rs.form(), mu);
}

/// Weight multiplicities of the irreducible module with highest weight lambda.
/// Throws Error(RepTooLarge) if its dimension exceeds dim_cap.
std::map<Weight, std::int64_t> freudenthal_multiplicities(
    const RootSystem& rs, const Weight& lambda, std::int64_t dim_cap = kDefaultMultiplicityDimCap);

}  // namespace sigform
