#include "fintop/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "fintop/enumeration.hpp"
#include "fintop/error.hpp"

namespace fintop {

namespace {

constexpr std::size_t kSignatures = std::size_t{1} << 10;
constexpr std::size_t kSplitDepth = 8;

using Tally = std::array<std::uint64_t, kSignatures>;

}  // namespace

std::uint64_t CensusTable::count_with(Axiom a) const {
  std::uint64_t count = 0;
  for (const auto& [signature, rows_count] : rows) {
    if (SeparationProfile::from_signature(signature).get(a)) count += rows_count;
  }
  return count;
}

CensusTable census(std::size_t n, const CensusOptions& options) {
  if (n > kMaxTopologyEnumeration || (n > kDefaultCensusLimit && !options.allow_large)) {
    std::string what = "census of " + std::to_string(n) + " points exceeds the limit of " +
                       std::to_string(kDefaultCensusLimit);
    what += n == kMaxTopologyEnumeration ? " (n = 7 needs allow_large)"
                                         : " (7 with allow_large)";
    throw SizeLimit(what);
  }
  const PreorderSearch search(n);
  const std::vector<PreorderSearch::Prefix> chunks = search.prefixes(kSplitDepth);
  std::vector<Tally> tallies(chunks.size(), Tally{});

  std::atomic<std::size_t> next{0};
  std::size_t finished = 0;
  std::mutex progress_mutex;
  auto work = [&] {
    for (std::size_t c = next++; c < chunks.size(); c = next++) {
      Tally& tally = tallies[c];
      search.run(chunks[c], [&](std::span<const PointSet> rows) {
        FiniteSpace s = FiniteSpace::from_neighborhoods_unchecked({rows.begin(), rows.end()});
        ++tally[axiom_profile(s).signature()];
      });
      if (options.progress) {
        std::lock_guard lock(progress_mutex);
        options.progress(++finished, chunks.size());
      }
    }
  };

  std::size_t workers = options.workers;
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(chunks.size(), 1));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  CensusTable table;
  table.n = n;
  for (const Tally& tally : tallies) {
    for (std::size_t sig = 0; sig < kSignatures; ++sig) {
      if (tally[sig] == 0) continue;
      table.rows[static_cast<std::uint16_t>(sig)] += tally[sig];
      table.total += tally[sig];
    }
  }
  return table;
}

void write_census_csv(std::ostream& out, const CensusTable& table) {
  out << "n";
  for (Axiom a : kAllAxioms) out << ',' << axiom_name(a);
  out << ",count\n";
  // Signatures are unique keys, so ascending signature order is total.
  for (const auto& [signature, count] : table.rows) {
    const SeparationProfile p = SeparationProfile::from_signature(signature);
    out << table.n;
    for (Axiom a : kAllAxioms) out << ',' << (p.get(a) ? '1' : '0');
    out << ',' << count << '\n';
  }
}

std::string census_csv(const CensusTable& table) {
  std::ostringstream out;
  write_census_csv(out, table);
  return out.str();
}

}  // namespace fintop
