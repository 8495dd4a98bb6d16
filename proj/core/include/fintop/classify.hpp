#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "fintop/counting.hpp"
#include "fintop/space.hpp"

namespace fintop {

/// Sizes of the minimal-basis blocks of a pre-Hausdorff space, descending.
/// A complete homeomorphism invariant for such spaces. Throws
/// NotPreHausdorff otherwise.
std::vector<std::size_t> preh_invariant(const FiniteSpace& s);

enum class HomeomorphismPath { fast, general };
std::string_view path_name(HomeomorphismPath p);

struct HomeomorphismResult {
  bool homeomorphic = false;
  HomeomorphismPath path = HomeomorphismPath::general;
};

/// Largest point count for the bijection search.
inline constexpr std::size_t kMaxGeneralHomeomorphism = 8;

/// Compares block-size multisets when both spaces are pre-Hausdorff and
/// otherwise searches for a homeomorphism (SizeLimit above
/// kMaxGeneralHomeomorphism points).
HomeomorphismResult are_homeomorphic(const FiniteSpace& a, const FiniteSpace& b);

/// Backtracking search over point bijections, pruned by open-set count and
/// per-point neighborhood and closure sizes.
std::optional<PointMap> find_homeomorphism(const FiniteSpace& a, const FiniteSpace& b);

/// Number of pre-Hausdorff spaces on n points up to homeomorphism, p(n). For
/// n <= kMaxTopologyEnumeration the value is also confirmed by bucketing the
/// enumerated spaces; a disagreement throws std::logic_error.
BigCount count_preh_classes(std::size_t n);

/// Distinct preh_invariant values over enumerate_pre_hausdorff(n).
std::size_t count_preh_classes_by_enumeration(std::size_t n);

}  // namespace fintop
