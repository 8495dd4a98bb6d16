#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fintop/point_set.hpp"

namespace fintop {

/// A topology on the points {0, ..., n-1}.
///
/// Finite spaces are principal: every point x has a smallest open
/// neighborhood N(x). The space is stored as the vector of these minimal
/// neighborhoods, which determines the open family uniquely (the opens are
/// exactly the unions of minimal neighborhoods) and makes equality and
/// hashing canonical. The full open family is materialized on demand by
/// opens(), in canonical order.
///
/// Values are immutable; construct them with build_space and the other
/// factory operations below.
class FiniteSpace {
 public:
  /// The empty space.
  FiniteSpace() = default;

  /// Trusts that `neighborhoods` is a valid minimal-neighborhood vector:
  /// x in N(x) and y in N(x) implies N(y) within N(x). Used by enumerators
  /// that produce valid preorders by construction.
  static FiniteSpace from_neighborhoods_unchecked(std::vector<PointSet> neighborhoods);

  std::size_t size() const { return n_; }
  PointSet points() const { return PointSet::full(n_); }

  /// Smallest open set containing x.
  PointSet neighborhood(std::size_t x) const { return cells_[x]; }
  std::span<const PointSet> neighborhoods() const { return {cells_.data(), n_}; }
  /// Closure of the single point x, i.e. { y : x in N(y) }.
  PointSet point_closure(std::size_t x) const { return cells_[n_ + x]; }

  bool is_open(PointSet u) const;
  bool is_closed(PointSet c) const { return is_open(c.complement(n_)); }

  /// All open sets in canonical order (ascending size, then encoding).
  std::vector<PointSet> opens() const;
  std::size_t open_count() const;

  /// Visits every open set exactly once, in unspecified order. Runs in time
  /// linear in the number of opens.
  template <class Visitor>
  void for_each_open(Visitor&& visit) const {
    walk_opens(0, PointSet{}, PointSet{}, visit);
  }

  // Point closures are derived from the neighborhoods, so comparing all
  // cells is the same as comparing neighborhoods.
  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  template <class Visitor>
  void walk_opens(std::size_t x, PointSet in, PointSet out, Visitor& visit) const {
    while (x < n_ && (in.contains(x) || out.contains(x))) ++x;
    if (x == n_) {
      visit(in);
      return;
    }
    // Excluding x forces out its closure; including it forces in N(x).
    // Neither choice can conflict with earlier decisions.
    walk_opens(x + 1, in, out | point_closure(x), visit);
    walk_opens(x + 1, in | cells_[x], out, visit);
  }

  std::size_t n_ = 0;
  // [0, n): minimal neighborhoods; [n, 2n): point closures.
  std::vector<PointSet> cells_;
};

/// Specialization preorder. leq(x, y) holds iff x lies in the closure of
/// {y}, equivalently iff every open set containing x also contains y.
class Preorder {
 public:
  Preorder() = default;

  /// Validates reflexivity and transitivity; `rows[x]` is { y : x <= y }.
  static Preorder from_rows(std::vector<PointSet> rows);
  static Preorder from_matrix(const std::vector<std::vector<bool>>& leq);

  std::size_t size() const { return rows_.size(); }
  bool leq(std::size_t x, std::size_t y) const { return rows_[x].contains(y); }
  PointSet upper(std::size_t x) const { return rows_[x]; }
  std::span<const PointSet> rows() const { return rows_; }

  friend bool operator==(const Preorder&, const Preorder&) = default;

 private:
  explicit Preorder(std::vector<PointSet> rows) : rows_(std::move(rows)) {}
  std::vector<PointSet> rows_;
};

/// A partition of {0, ..., n-1} into nonempty blocks, ordered by their
/// smallest element. Doubles as an equivalence relation.
class Partition {
 public:
  Partition() = default;

  /// Validates disjointness, nonemptiness and coverage; reorders blocks.
  static Partition from_blocks(std::size_t n, std::vector<PointSet> blocks);
  /// labels[x] names the class of x; any label values are accepted.
  static Partition from_labels(std::span<const std::size_t> labels);
  static Partition discrete(std::size_t n);
  static Partition indiscrete(std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::span<const PointSet> blocks() const { return blocks_; }
  PointSet block(std::size_t i) const { return blocks_[i]; }
  std::size_t block_index(std::size_t x) const;
  bool related(std::size_t x, std::size_t y) const {
    return block_index(x) == block_index(y);
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<PointSet> blocks_;
};

/// A total function {0..dom-1} -> {0..cod-1}.
class PointMap {
 public:
  PointMap() = default;
  PointMap(std::size_t codomain_size, std::vector<std::size_t> table);

  static PointMap identity(std::size_t n);
  static PointMap constant(std::size_t domain_size, std::size_t codomain_size,
                           std::size_t value);

  std::size_t domain_size() const { return table_.size(); }
  std::size_t codomain_size() const { return cod_n_; }
  std::size_t operator()(std::size_t x) const { return table_[x]; }
  std::span<const std::size_t> table() const { return table_; }

  PointSet image(PointSet a) const;
  PointSet preimage(PointSet b) const;
  bool is_bijective() const;

  friend bool operator==(const PointMap&, const PointMap&) = default;

 private:
  std::size_t cod_n_ = 0;
  std::vector<std::size_t> table_;
};

/// Result of a quotient or reflection: the new space and the projection.
struct Quotient {
  FiniteSpace space;
  PointMap projection;
};

/// One source of an initial topology: a map out of the carrier together with
/// the space it lands in.
struct InitialSource {
  PointMap map;
  FiniteSpace codomain;
};

// Construction ---------------------------------------------------------------

/// Accepts `opens` iff it is exactly a topology on n points. Order and
/// duplicates are ignored. Throws NotATopology with a witness otherwise.
FiniteSpace build_space(std::size_t n, std::span<const PointSet> opens);
/// Smallest topology containing every set in `subbasis`.
FiniteSpace generate_topology(std::size_t n, std::span<const PointSet> subbasis);
/// Opens are all unions of blocks.
FiniteSpace space_from_partition(const Partition& p);
Preorder specialization_preorder(const FiniteSpace& s);
FiniteSpace space_from_preorder(const Preorder& p);

FiniteSpace discrete_space(std::size_t n);
FiniteSpace indiscrete_space(std::size_t n);
FiniteSpace sierpinski_space();

/// Named spaces: "sierpinski", "point", "indiscrete:k", "discrete:k" and
/// "partition:0,1|2" (blocks separated by '|', points by ',').
FiniteSpace example_space(std::string_view name);

// Point-set operators ----------------------------------------------------------

PointSet closure(const FiniteSpace& s, PointSet a);
PointSet interior(const FiniteSpace& s, PointSet a);
/// Intersection of all opens containing `a`; the empty set for a = {}.
PointSet minimal_open(const FiniteSpace& s, PointSet a);
/// Distinct minimal neighborhoods in canonical order; the coarsest basis.
std::vector<PointSet> minimal_basis(const FiniteSpace& s);

// Derived spaces ---------------------------------------------------------------

/// Points of `a` are relabeled 0..|a|-1 in increasing order.
FiniteSpace subspace(const FiniteSpace& s, PointSet a);
/// Point (x, y) is encoded as x * b.size() + y.
FiniteSpace product(const FiniteSpace& a, const FiniteSpace& b);
FiniteSpace initial_topology(std::size_t n, std::span<const InitialSource> sources);
/// Block i of `p` becomes point i of the quotient.
Quotient quotient(const FiniteSpace& s, const Partition& p);

// Maps ---------------------------------------------------------------------------

bool is_continuous(const PointMap& f, const FiniteSpace& dom, const FiniteSpace& cod);
/// Images of closed sets are closed.
bool is_closed_map(const PointMap& f, const FiniteSpace& dom, const FiniteSpace& cod);
bool is_homeomorphism(const PointMap& f, const FiniteSpace& dom, const FiniteSpace& cod);

std::string to_string(const FiniteSpace& s);

}  // namespace fintop

template <>
struct std::hash<fintop::FiniteSpace> {
  std::size_t operator()(const fintop::FiniteSpace& s) const noexcept {
    std::size_t h = s.size();
    for (fintop::PointSet u : s.neighborhoods()) {
      h ^= std::hash<fintop::PointSet>{}(u) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
