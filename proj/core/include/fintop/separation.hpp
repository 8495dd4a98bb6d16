#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <span>
#include <string_view>
#include <vector>

#include "fintop/point_set.hpp"
#include "fintop/space.hpp"

namespace fintop {

/// Strength of a separation between two points.
enum class Separation { t0 = 0, t1 = 1, t2 = 2 };

/// Throws InvalidInput unless index is 0, 1 or 2.
Separation separation_from_index(int index);

/// Pair of opens, the first containing x, the second containing y.
struct OpenPair {
  PointSet first;
  PointSet second;
  friend bool operator==(const OpenPair&, const OpenPair&) = default;
};

/// Witnesses for the separations a pair of points admits. Each witness is the
/// first admissible choice in canonical open order (lexicographic for pairs).
struct PairSeparation {
  /// An open containing exactly one of x, y.
  std::optional<PointSet> t0;
  /// Opens containing x but not y, and y but not x.
  std::optional<OpenPair> t1;
  /// Disjoint opens around x and y.
  std::optional<OpenPair> t2;

  bool has(Separation level) const;
};

PairSeparation pair_separation(const FiniteSpace& s, std::size_t x, std::size_t y);

/// Whether x and y admit a separation of the given strength. Requires x != y.
bool separated(const FiniteSpace& s, std::size_t x, std::size_t y, Separation level);

enum class Axiom { t0, t1, t2, t01, t02, t12, regular, normal, zero_dim, sober };

inline constexpr Axiom kAllAxioms[] = {Axiom::t0,  Axiom::t1,      Axiom::t2,     Axiom::t01,
                                       Axiom::t02, Axiom::t12,     Axiom::regular, Axiom::normal,
                                       Axiom::zero_dim, Axiom::sober};

std::string_view axiom_name(Axiom a);
/// Accepts the names returned by axiom_name, plus "preh" for t02.
std::optional<Axiom> parse_axiom(std::string_view name);

struct SeparationProfile {
  bool t0 = true;
  bool t1 = true;
  bool t2 = true;
  bool t01 = true;
  bool t02 = true;
  bool t12 = true;
  bool regular = true;
  bool normal = true;
  bool zero_dim = true;
  bool sober = true;

  bool get(Axiom a) const;
  /// Fields read as a 10-bit binary number, t0 most significant.
  std::uint16_t signature() const;
  static SeparationProfile from_signature(std::uint16_t bits);

  friend bool operator==(const SeparationProfile&, const SeparationProfile&) = default;
};

SeparationProfile axiom_profile(const FiniteSpace& s);
bool satisfies(const FiniteSpace& s, Axiom a);

/// T_{i,j} for i < j: every pair with a T_i separation has a T_j one.
bool is_tij(const FiniteSpace& s, Separation i, Separation j);
/// Every pair of distinct points is separated at the given strength.
bool is_ti(const FiniteSpace& s, Separation level);
inline bool is_pre_hausdorff(const FiniteSpace& s) {
  return is_tij(s, Separation::t0, Separation::t2);
}
/// A T0-separated pair lacking a T2 separation, if any.
std::optional<std::pair<std::size_t, std::size_t>> pre_hausdorff_violation(const FiniteSpace& s);

/// Closed sets need not contain closed points here: A closed and x outside A
/// must have disjoint open neighborhoods.
bool is_regular(const FiniteSpace& s);
/// Disjoint closed sets have disjoint open neighborhoods.
bool is_normal(const FiniteSpace& s);
/// Has a basis of clopen sets.
bool is_zero_dimensional(const FiniteSpace& s);
/// The pseudo-complement on opens, U -> interior(X \ U), is an involution.
bool double_negation_is_identity(const FiniteSpace& s);

std::vector<PointSet> closed_sets(const FiniteSpace& s);
std::vector<PointSet> clopen_sets(const FiniteSpace& s);
/// Nonempty closed sets that are not the union of two proper closed subsets.
std::vector<PointSet> irreducible_closed_sets(const FiniteSpace& s);
/// Every irreducible closed set has exactly one generic point.
bool is_sober(const FiniteSpace& s);

/// Nonempty and closed under complement and (finite, hence countable) union.
bool is_borel_field(std::size_t n, std::span<const PointSet> family);

}  // namespace fintop
