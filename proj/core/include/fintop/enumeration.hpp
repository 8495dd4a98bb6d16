#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fintop/point_set.hpp"
#include "fintop/space.hpp"

namespace fintop {

/// Largest n accepted by the topology enumerators.
inline constexpr std::size_t kMaxTopologyEnumeration = 7;
/// Largest n accepted by the pre-Hausdorff (set partition) enumerators.
inline constexpr std::size_t kMaxPartitionEnumeration = 12;

/// Depth-first search over the preorders on n points.
///
/// The off-diagonal entries of the n x n matrix are decided in row-major
/// order, 0 before 1, so preorders come out in lexicographic order of their
/// row-major matrices. An assignment is pruned as soon as a transitivity
/// constraint among decided entries fails; every constraint is checked when
/// its last entry is decided, so every leaf is a preorder.
///
/// A prefix fixes the first few decisions. The prefixes of a given depth
/// split the search into disjoint sub-searches whose concatenation, in prefix
/// order, is the full stream.
class PreorderSearch {
 public:
  using Prefix = std::vector<bool>;

  /// Throws SizeLimit above kMaxTopologyEnumeration.
  explicit PreorderSearch(std::size_t n);

  std::size_t size() const { return n_; }
  /// Number of off-diagonal decisions, n(n-1).
  std::size_t decisions() const { return cells_.size(); }

  /// Every consistent assignment of the first `depth` decisions, in order.
  std::vector<Prefix> prefixes(std::size_t depth) const;

  /// Calls visit(rows) for each preorder extending `prefix`, where rows[x]
  /// is { y : x <= y }.
  template <class Visitor>
  void run(const Prefix& prefix, Visitor&& visit) const {
    State st = initial_state();
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      if (!admissible(st, k, prefix[k])) return;
      assign(st, k, prefix[k]);
    }
    descend(st, prefix.size(), cells_.size(), visit);
  }

  template <class Visitor>
  void run(Visitor&& visit) const {
    run(Prefix{}, visit);
  }

 private:
  struct State {
    std::array<PointSet, kMaxTopologyEnumeration> one_row{};
    std::array<PointSet, kMaxTopologyEnumeration> zero_row{};
    std::array<PointSet, kMaxTopologyEnumeration> one_col{};
    std::array<PointSet, kMaxTopologyEnumeration> zero_col{};
  };
  struct Cell {
    std::size_t row;
    std::size_t col;
  };

  State initial_state() const;

  bool admissible(const State& st, std::size_t k, bool value) const {
    const auto [i, j] = cells_[k];
    if (!value) {
      // Some decided i <= m <= j would force i <= j.
      return !st.one_row[i].intersects(st.one_col[j]);
    }
    // i <= j <= m with i !<= m, or m <= i <= j with m !<= j.
    return !st.one_row[j].intersects(st.zero_row[i]) &&
           !st.one_col[i].intersects(st.zero_col[j]);
  }

  void assign(State& st, std::size_t k, bool value) const {
    const auto [i, j] = cells_[k];
    if (value) {
      st.one_row[i] = st.one_row[i].with(j);
      st.one_col[j] = st.one_col[j].with(i);
    } else {
      st.zero_row[i] = st.zero_row[i].with(j);
      st.zero_col[j] = st.zero_col[j].with(i);
    }
  }

  template <class Visitor>
  void descend(State& st, std::size_t k, std::size_t stop, Visitor& visit) const {
    if (k == stop) {
      visit(std::span<const PointSet>(st.one_row.data(), n_));
      return;
    }
    for (bool value : {false, true}) {
      if (!admissible(st, k, value)) continue;
      State next = st;
      assign(next, k, value);
      descend(next, k + 1, stop, visit);
    }
  }

  std::size_t n_;
  std::vector<Cell> cells_;
};

/// Every topology on n labeled points exactly once, in lexicographic order
/// of the specialization matrix. visit receives a FiniteSpace.
template <class Visitor>
void for_each_topology(std::size_t n, Visitor&& visit) {
  PreorderSearch search(n);
  search.run([&](std::span<const PointSet> rows) {
    visit(FiniteSpace::from_neighborhoods_unchecked({rows.begin(), rows.end()}));
  });
}

std::vector<FiniteSpace> enumerate_topologies(std::size_t n);

/// Calls visit(labels) for every set partition of n points as a restricted
/// growth string (labels[0] = 0, labels[i] <= 1 + max of earlier labels), in
/// lexicographic order. Throws SizeLimit above kMaxPartitionEnumeration.
void for_each_set_partition(std::size_t n,
                            const std::function<void(std::span<const std::size_t>)>& visit);

/// Pre-Hausdorff topologies on n points: one partition space per set
/// partition, in restricted-growth-string order.
std::vector<FiniteSpace> enumerate_pre_hausdorff(std::size_t n);

}  // namespace fintop
