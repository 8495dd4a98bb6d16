#include "fintop/enumeration.hpp"

#include <algorithm>
#include <string>

#include "fintop/error.hpp"

namespace fintop {

PreorderSearch::PreorderSearch(std::size_t n) : n_(n) {
  if (n > kMaxTopologyEnumeration) {
    throw SizeLimit("topology enumeration supports at most " +
                    std::to_string(kMaxTopologyEnumeration) + " points, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) cells_.push_back({i, j});
    }
  }
}

PreorderSearch::State PreorderSearch::initial_state() const {
  State st;
  for (std::size_t i = 0; i < n_; ++i) {
    st.one_row[i] = PointSet::singleton(i);
    st.one_col[i] = PointSet::singleton(i);
  }
  return st;
}

std::vector<PreorderSearch::Prefix> PreorderSearch::prefixes(std::size_t depth) const {
  depth = std::min(depth, cells_.size());
  std::vector<Prefix> out;
  Prefix current;
  // Small explicit DFS; depth is a handful of decisions.
  auto walk = [&](auto&& self, State& st, std::size_t k) -> void {
    if (k == depth) {
      out.push_back(current);
      return;
    }
    for (bool value : {false, true}) {
      if (!admissible(st, k, value)) continue;
      State next = st;
      assign(next, k, value);
      current.push_back(value);
      self(self, next, k + 1);
      current.pop_back();
    }
  };
  State st = initial_state();
  walk(walk, st, 0);
  return out;
}

std::vector<FiniteSpace> enumerate_topologies(std::size_t n) {
  std::vector<FiniteSpace> out;
  for_each_topology(n, [&](FiniteSpace s) { out.push_back(std::move(s)); });
  return out;
}

void for_each_set_partition(std::size_t n,
                            const std::function<void(std::span<const std::size_t>)>& visit) {
  if (n > kMaxPartitionEnumeration) {
    throw SizeLimit("set partition enumeration supports at most " +
                    std::to_string(kMaxPartitionEnumeration) + " points, got " + std::to_string(n));
  }
  std::vector<std::size_t> labels(n, 0);
  if (n == 0) {
    visit(labels);
    return;
  }
  // maxima[i] = max(labels[0..i]).
  std::vector<std::size_t> maxima(n, 0);
  while (true) {
    visit(labels);
    // Advance the restricted growth string: bump the rightmost label that
    // can grow, reset everything after it to 0.
    std::size_t i = n - 1;
    while (i > 0 && labels[i] > maxima[i - 1]) --i;
    if (i == 0) return;
    ++labels[i];
    maxima[i] = std::max(maxima[i - 1], labels[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      labels[j] = 0;
      maxima[j] = maxima[i];
    }
  }
}

std::vector<FiniteSpace> enumerate_pre_hausdorff(std::size_t n) {
  std::vector<FiniteSpace> out;
  for_each_set_partition(n, [&](std::span<const std::size_t> labels) {
    out.push_back(space_from_partition(Partition::from_labels(labels)));
  });
  return out;
}

}  // namespace fintop
