#pragma once

#include <string>
#include <string_view>

#include "fintop/space.hpp"

namespace fintop {

/// Parses {"points": n, "opens": [[...], ...]}. Opens may appear in any
/// order; points inside an open must be distinct and in range. Unknown keys
/// are ignored.
///
/// Throws InvalidInput on malformed documents, SizeLimit above kMaxPoints
/// points, and NotATopology when the family is not closed under union and
/// intersection or lacks the empty or full set.
FiniteSpace read_space_json(std::string_view text);

/// The canonical document: opens in canonical order, points ascending.
std::string write_space_json(const FiniteSpace& s);

/// Reads a file and parses it; unreadable files are InvalidInput.
FiniteSpace load_space(const std::string& path);

}  // namespace fintop
