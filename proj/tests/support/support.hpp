#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fintop/space.hpp"
#include "oracle.hpp"

namespace fintop::testing {

inline oracle::Topology to_oracle(const FiniteSpace& s) {
  std::vector<oracle::Mask> opens;
  for (PointSet u : s.opens()) opens.push_back(u.bits());
  return oracle::make(static_cast<int>(s.size()), std::move(opens));
}

inline FiniteSpace from_oracle(const oracle::Topology& t) {
  std::vector<PointSet> opens;
  for (oracle::Mask u : t.opens) opens.push_back(PointSet(u));
  return build_space(static_cast<std::size_t>(t.n), opens);
}

inline oracle::Map to_oracle(const PointMap& f) {
  oracle::Map out;
  for (std::size_t v : f.table()) out.push_back(static_cast<int>(v));
  return out;
}

/// Every topology on up to max_n points, via the oracle enumerator.
inline std::vector<FiniteSpace> oracle_spaces(int max_n, int min_n = 0) {
  std::vector<FiniteSpace> out;
  for (int n = min_n; n <= max_n; ++n) {
    for (const oracle::Topology& t : oracle::all_topologies(n)) out.push_back(from_oracle(t));
  }
  return out;
}

// Hand-rolled generators; seeded so failures reproduce.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  PointSet subset(std::size_t n) {
    PointSet out;
    for (std::size_t x = 0; x < n; ++x) {
      if (coin()) out = out.with(x);
    }
    return out;
  }

  /// A topology generated by a few random subsets.
  FiniteSpace space(std::size_t n) {
    std::vector<PointSet> subbasis;
    const std::size_t k = below(n + 2);
    for (std::size_t i = 0; i < k; ++i) subbasis.push_back(subset(n));
    return generate_topology(n, subbasis);
  }

  std::vector<std::size_t> labels(std::size_t n, std::size_t max_blocks) {
    std::vector<std::size_t> out(n);
    for (std::size_t& v : out) v = below(max_blocks);
    return out;
  }

  Partition partition(std::size_t n) {
    if (n == 0) return Partition::discrete(0);
    return Partition::from_labels(labels(n, n));
  }

  PointMap map(std::size_t dom, std::size_t cod) { return PointMap(cod, labels(dom, cod)); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fintop::testing
