#pragma once

#include <optional>

#include "fintop/separation.hpp"
#include "fintop/space.hpp"

namespace fintop {

/// x ~ y iff no open set contains exactly one of them (equal minimal
/// neighborhoods).
Partition indistinguishability_classes(const FiniteSpace& s);
/// x ~ y iff every clopen set containing x contains y.
Partition clopen_classes(const FiniteSpace& s);
/// Connected components of the specialization graph. On finite spaces these
/// coincide with clopen_classes; both are kept so that each checks the other.
Partition connected_components(const FiniteSpace& s);

/// x R_i y iff every continuous map into a T_i space identifies x and y.
/// R_0 is indistinguishability. On finite spaces a map into any T_i space
/// factors through its finite image, which is T_i, so R_1 = R_2 = clopen
/// indistinguishability.
Partition r_relation(const FiniteSpace& s, Separation level);

/// Four independent readings of "pre-Hausdorff".
struct PreHausdorffReport {
  /// Every T0-separated pair is T2-separated.
  bool by_definition = false;
  /// R_0 closed in the square. Empty when n^2 exceeds kMaxPoints.
  std::optional<bool> r0_closed;
  /// R_0 equals the closure of the diagonal. Empty when n^2 exceeds kMaxPoints.
  std::optional<bool> r0_equals_diagonal_closure;
  /// X / R_0 is Hausdorff.
  bool quotient_hausdorff = false;
  Partition r0;

  /// All populated readings agree.
  bool consistent() const;
};

PreHausdorffReport pre_hausdorff_report(const FiniteSpace& s);

/// R_0 and the diagonal as subsets of product(s, s).
PointSet relation_in_square(const FiniteSpace& s, const Partition& relation);
PointSet diagonal_in_square(const FiniteSpace& s);

/// Universal T_i quotient X / R_i with its projection. Spaces that already
/// satisfy T_i come back point for point with the identity projection.
Quotient reflect(const FiniteSpace& s, Separation level);

/// Universal pre-Hausdorff coarsening: same points, topology induced from
/// X / R_2 along the projection. The identity s -> result is continuous.
FiniteSpace reflect_pre_hausdorff(const FiniteSpace& s);

/// X / R_0 for a pre-Hausdorff space; the result is Hausdorff. Throws
/// NotPreHausdorff otherwise.
Quotient hausdorff_reflection_of_preh(const FiniteSpace& s);

/// The unique map g with f = g o q, q the projection of reflect(s, level).
/// Throws NotContinuous if f is not continuous and CodomainNotTi if `cod`
/// fails T_i.
PointMap factor_through_quotient(const FiniteSpace& s, const PointMap& f,
                                 const FiniteSpace& cod, Separation level);

/// Compares reflect(s, t2) with the two-step route through the
/// pre-Hausdorff reflection, using the map induced between them.
bool compose_reflections_check(const FiniteSpace& s);

}  // namespace fintop
