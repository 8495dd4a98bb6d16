#include "fintop/separation.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "fintop/error.hpp"

namespace fintop {

namespace {

PointSet union_of_neighborhoods(const FiniteSpace& s, PointSet a) {
  PointSet out;
  for (std::size_t x : a) out |= s.neighborhood(x);
  return out;
}

PointSet interior_of(const FiniteSpace& s, PointSet a) {
  PointSet out;
  for (std::size_t x : a) {
    if (s.neighborhood(x).subset_of(a)) out = out.with(x);
  }
  return out;
}

bool t0_pair(const FiniteSpace& s, std::size_t x, std::size_t y) {
  return !s.neighborhood(x).contains(y) || !s.neighborhood(y).contains(x);
}
bool t1_pair(const FiniteSpace& s, std::size_t x, std::size_t y) {
  return !s.neighborhood(x).contains(y) && !s.neighborhood(y).contains(x);
}
bool t2_pair(const FiniteSpace& s, std::size_t x, std::size_t y) {
  return !s.neighborhood(x).intersects(s.neighborhood(y));
}

bool pair_has(const FiniteSpace& s, std::size_t x, std::size_t y, Separation level) {
  switch (level) {
    case Separation::t0: return t0_pair(s, x, y);
    case Separation::t1: return t1_pair(s, x, y);
    case Separation::t2: return t2_pair(s, x, y);
  }
  return false;
}

// Checks against one closed set. The smallest open superset M(A) of any set
// A exists, so two sets have disjoint open neighborhoods iff their M's are
// disjoint.

// Every x outside closed A is separated from A.
bool regular_at(const FiniteSpace& s, PointSet closed) {
  PointSet outside = closed.complement(s.size());
  return !union_of_neighborhoods(s, outside).intersects(union_of_neighborhoods(s, closed));
}

// Every closed B disjoint from A is separated from A. The closed sets
// disjoint from A are exactly those inside X \ M(A), and M is monotone, so
// the largest one decides.
bool normal_at(const FiniteSpace& s, PointSet closed) {
  PointSet around = union_of_neighborhoods(s, closed);
  PointSet largest_disjoint = around.complement(s.size());
  return !around.intersects(union_of_neighborhoods(s, largest_disjoint));
}

// C is reducible iff it equals the union of its proper closed subsets. Every
// closed set is the union of the point closures it contains, so that union is
// the union of the point closures inside C that differ from C.
bool irreducible_at(const FiniteSpace& s, PointSet closed) {
  if (closed.empty()) return false;
  PointSet proper_union;
  for (std::size_t x : closed) {
    PointSet cx = s.point_closure(x);
    if (cx != closed) proper_union |= cx;
  }
  return proper_union != closed;
}

std::size_t generic_points(const FiniteSpace& s, PointSet closed) {
  std::size_t count = 0;
  for (std::size_t x : closed) {
    if (s.point_closure(x) == closed) ++count;
  }
  return count;
}

bool sober_at(const FiniteSpace& s, PointSet closed) {
  return !irreducible_at(s, closed) || generic_points(s, closed) == 1;
}

// not not U = interior(X \ interior(X \ U))
bool double_negation_fixes(const FiniteSpace& s, PointSet open) {
  const std::size_t n = s.size();
  PointSet negation = interior_of(s, open.complement(n));
  return interior_of(s, negation.complement(n)) == open;
}

template <class Check>
bool all_closed_sets(const FiniteSpace& s, Check check) {
  bool ok = true;
  s.for_each_open([&](PointSet u) {
    if (ok && !check(s, u.complement(s.size()))) ok = false;
  });
  return ok;
}

}  // namespace

Separation separation_from_index(int index) {
  switch (index) {
    case 0: return Separation::t0;
    case 1: return Separation::t1;
    case 2: return Separation::t2;
    default: throw InvalidInput("separation index must be 0, 1 or 2, got " + std::to_string(index));
  }
}

bool PairSeparation::has(Separation level) const {
  switch (level) {
    case Separation::t0: return t0.has_value();
    case Separation::t1: return t1.has_value();
    case Separation::t2: return t2.has_value();
  }
  return false;
}

PairSeparation pair_separation(const FiniteSpace& s, std::size_t x, std::size_t y) {
  if (x == y || x >= s.size() || y >= s.size()) {
    throw InvalidInput("pair_separation needs two distinct points of the space, got " +
                       std::to_string(x) + " and " + std::to_string(y));
  }
  // Any open containing x contains N(x), so N(x) is canonically first among
  // opens containing x, and likewise for y.
  PairSeparation out;
  PointSet nx = s.neighborhood(x);
  PointSet ny = s.neighborhood(y);
  std::optional<PointSet> only_x = nx.contains(y) ? std::nullopt : std::optional(nx);
  std::optional<PointSet> only_y = ny.contains(x) ? std::nullopt : std::optional(ny);
  if (only_x && only_y) {
    out.t0 = canonical_less(*only_y, *only_x) ? *only_y : *only_x;
    out.t1 = OpenPair{nx, ny};
  } else if (only_x) {
    out.t0 = only_x;
  } else if (only_y) {
    out.t0 = only_y;
  }
  if (!nx.intersects(ny)) out.t2 = OpenPair{nx, ny};
  return out;
}

bool separated(const FiniteSpace& s, std::size_t x, std::size_t y, Separation level) {
  if (x == y || x >= s.size() || y >= s.size()) {
    throw InvalidInput("separated needs two distinct points of the space");
  }
  return pair_has(s, x, y, level);
}

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::t0: return "t0";
    case Axiom::t1: return "t1";
    case Axiom::t2: return "t2";
    case Axiom::t01: return "t01";
    case Axiom::t02: return "t02";
    case Axiom::t12: return "t12";
    case Axiom::regular: return "regular";
    case Axiom::normal: return "normal";
    case Axiom::zero_dim: return "zero_dim";
    case Axiom::sober: return "sober";
  }
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
  if (name == "preh") return Axiom::t02;
  for (Axiom a : kAllAxioms) {
    if (axiom_name(a) == name) return a;
  }
  return std::nullopt;
}

bool SeparationProfile::get(Axiom a) const {
  switch (a) {
    case Axiom::t0: return t0;
    case Axiom::t1: return t1;
    case Axiom::t2: return t2;
    case Axiom::t01: return t01;
    case Axiom::t02: return t02;
    case Axiom::t12: return t12;
    case Axiom::regular: return regular;
    case Axiom::normal: return normal;
    case Axiom::zero_dim: return zero_dim;
    case Axiom::sober: return sober;
  }
  return false;
}

std::uint16_t SeparationProfile::signature() const {
  std::uint16_t bits = 0;
  for (Axiom a : kAllAxioms) bits = static_cast<std::uint16_t>((bits << 1) | (get(a) ? 1 : 0));
  return bits;
}

SeparationProfile SeparationProfile::from_signature(std::uint16_t bits) {
  auto bit = [&](int i) { return ((bits >> (9 - i)) & 1U) != 0; };
  SeparationProfile p;
  p.t0 = bit(0);
  p.t1 = bit(1);
  p.t2 = bit(2);
  p.t01 = bit(3);
  p.t02 = bit(4);
  p.t12 = bit(5);
  p.regular = bit(6);
  p.normal = bit(7);
  p.zero_dim = bit(8);
  p.sober = bit(9);
  return p;
}

bool is_ti(const FiniteSpace& s, Separation level) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = x + 1; y < s.size(); ++y) {
      if (!pair_has(s, x, y, level)) return false;
    }
  }
  return true;
}

bool is_tij(const FiniteSpace& s, Separation i, Separation j) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = x + 1; y < s.size(); ++y) {
      if (pair_has(s, x, y, i) && !pair_has(s, x, y, j)) return false;
    }
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> pre_hausdorff_violation(const FiniteSpace& s) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = x + 1; y < s.size(); ++y) {
      if (t0_pair(s, x, y) && !t2_pair(s, x, y)) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

bool is_regular(const FiniteSpace& s) { return all_closed_sets(s, regular_at); }

bool is_normal(const FiniteSpace& s) { return all_closed_sets(s, normal_at); }

bool is_zero_dimensional(const FiniteSpace& s) {
  // The minimal neighborhoods belong to every basis, so a clopen basis
  // exists iff they are all clopen.
  for (PointSet u : s.neighborhoods()) {
    if (!s.is_closed(u)) return false;
  }
  return true;
}

bool double_negation_is_identity(const FiniteSpace& s) {
  bool ok = true;
  s.for_each_open([&](PointSet u) {
    if (ok && !double_negation_fixes(s, u)) ok = false;
  });
  return ok;
}

std::vector<PointSet> closed_sets(const FiniteSpace& s) {
  std::vector<PointSet> out;
  s.for_each_open([&](PointSet u) { out.push_back(u.complement(s.size())); });
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<PointSet> clopen_sets(const FiniteSpace& s) {
  std::vector<PointSet> out;
  s.for_each_open([&](PointSet u) {
    if (s.is_closed(u)) out.push_back(u);
  });
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<PointSet> irreducible_closed_sets(const FiniteSpace& s) {
  std::vector<PointSet> out;
  s.for_each_open([&](PointSet u) {
    PointSet c = u.complement(s.size());
    if (irreducible_at(s, c)) out.push_back(c);
  });
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

bool is_sober(const FiniteSpace& s) { return all_closed_sets(s, sober_at); }

SeparationProfile axiom_profile(const FiniteSpace& s) {
  SeparationProfile p;
  const std::size_t n = s.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const bool s0 = t0_pair(s, x, y);
      const bool s1 = t1_pair(s, x, y);
      const bool s2 = t2_pair(s, x, y);
      p.t0 = p.t0 && s0;
      p.t1 = p.t1 && s1;
      p.t2 = p.t2 && s2;
      p.t01 = p.t01 && (!s0 || s1);
      p.t02 = p.t02 && (!s0 || s2);
      p.t12 = p.t12 && (!s1 || s2);
    }
  }
  p.zero_dim = is_zero_dimensional(s);
  // One pass over the open lattice serves the four lattice predicates.
  s.for_each_open([&](PointSet u) {
    const PointSet c = u.complement(n);
    p.regular = p.regular && regular_at(s, c);
    p.normal = p.normal && normal_at(s, c);
    p.sober = p.sober && sober_at(s, c);
  });
  return p;
}

bool satisfies(const FiniteSpace& s, Axiom a) {
  switch (a) {
    case Axiom::t0: return is_ti(s, Separation::t0);
    case Axiom::t1: return is_ti(s, Separation::t1);
    case Axiom::t2: return is_ti(s, Separation::t2);
    case Axiom::t01: return is_tij(s, Separation::t0, Separation::t1);
    case Axiom::t02: return is_tij(s, Separation::t0, Separation::t2);
    case Axiom::t12: return is_tij(s, Separation::t1, Separation::t2);
    case Axiom::regular: return is_regular(s);
    case Axiom::normal: return is_normal(s);
    case Axiom::zero_dim: return is_zero_dimensional(s);
    case Axiom::sober: return is_sober(s);
  }
  return false;
}

bool is_borel_field(std::size_t n, std::span<const PointSet> family) {
  if (n > kMaxPoints) throw SizeLimit("at most " + std::to_string(kMaxPoints) + " points are supported");
  const PointSet all = PointSet::full(n);
  if (family.empty()) return false;
  std::unordered_set<PointSet> members;
  for (PointSet a : family) {
    if (!a.subset_of(all)) throw InvalidInput("set " + to_string(a) + " is not within the carrier");
    members.insert(a);
  }
  for (PointSet a : members) {
    if (!members.contains(a.complement(n))) return false;
    for (PointSet b : members) {
      if (!members.contains(a | b)) return false;
    }
  }
  return true;
}

}  // namespace fintop
