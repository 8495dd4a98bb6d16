#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>

#include "fintop/separation.hpp"

namespace fintop {

struct CensusOptions {
  /// Worker threads; 0 means one per available core.
  std::size_t workers = 0;
  /// Permits n = 7 (9,535,241 topologies).
  bool allow_large = false;
  /// Called as (finished_chunks, total_chunks), serialized across workers.
  std::function<void(std::size_t, std::size_t)> progress;
};

/// Exact tally of all topologies on n labeled points by separation profile.
struct CensusTable {
  std::size_t n = 0;
  /// SeparationProfile::signature() -> number of topologies with it.
  std::map<std::uint16_t, std::uint64_t> rows;
  std::uint64_t total = 0;

  /// Number of topologies satisfying the axiom.
  std::uint64_t count_with(Axiom a) const;
  friend bool operator==(const CensusTable&, const CensusTable&) = default;
};

/// Largest n accepted without CensusOptions::allow_large.
inline constexpr std::size_t kDefaultCensusLimit = 6;

/// Throws SizeLimit for n > 7, or n = 7 without allow_large. The table does
/// not depend on the worker count.
CensusTable census(std::size_t n, const CensusOptions& options = {});

/// Header `n,t0,t1,t2,t01,t02,t12,regular,normal,zero_dim,sober,count`, one
/// row per signature in ascending signature order, booleans as 0/1.
void write_census_csv(std::ostream& out, const CensusTable& table);
std::string census_csv(const CensusTable& table);

}  // namespace fintop
