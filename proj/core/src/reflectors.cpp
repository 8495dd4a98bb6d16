#include "fintop/reflectors.hpp"

#include <stdexcept>
#include <vector>

#include "fintop/error.hpp"

namespace fintop {

Partition indistinguishability_classes(const FiniteSpace& s) {
  std::vector<std::size_t> labels(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) labels[x] = s.neighborhood(x).bits();
  return Partition::from_labels(labels);
}

Partition clopen_classes(const FiniteSpace& s) {
  // Refine the one-block partition by every clopen set.
  std::vector<std::size_t> labels(s.size(), 0);
  for (PointSet c : clopen_sets(s)) {
    for (std::size_t x : c) labels[x] |= std::size_t{1} << 63;
    Partition refined = Partition::from_labels(labels);
    for (std::size_t x = 0; x < s.size(); ++x) labels[x] = refined.block_index(x);
  }
  return Partition::from_labels(labels);
}

Partition connected_components(const FiniteSpace& s) {
  std::vector<std::size_t> labels(s.size(), s.size());
  std::size_t next = 0;
  for (std::size_t root = 0; root < s.size(); ++root) {
    if (labels[root] != s.size()) continue;
    PointSet component = PointSet::singleton(root);
    PointSet frontier = component;
    while (!frontier.empty()) {
      PointSet reached;
      for (std::size_t x : frontier) reached |= s.neighborhood(x) | s.point_closure(x);
      frontier = reached - component;
      component |= reached;
    }
    for (std::size_t x : component) labels[x] = next;
    ++next;
  }
  return Partition::from_labels(labels);
}

Partition r_relation(const FiniteSpace& s, Separation level) {
  if (level == Separation::t0) return indistinguishability_classes(s);
  return clopen_classes(s);
}

bool PreHausdorffReport::consistent() const {
  if (quotient_hausdorff != by_definition) return false;
  if (r0_closed && *r0_closed != by_definition) return false;
  if (r0_equals_diagonal_closure && *r0_equals_diagonal_closure != by_definition) return false;
  return true;
}

PointSet relation_in_square(const FiniteSpace& s, const Partition& relation) {
  const std::size_t n = s.size();
  PointSet out;
  for (PointSet block : relation.blocks()) {
    for (std::size_t x : block) {
      for (std::size_t y : block) out = out.with(x * n + y);
    }
  }
  return out;
}

PointSet diagonal_in_square(const FiniteSpace& s) {
  PointSet out;
  for (std::size_t x = 0; x < s.size(); ++x) out = out.with(x * s.size() + x);
  return out;
}

PreHausdorffReport pre_hausdorff_report(const FiniteSpace& s) {
  PreHausdorffReport report;
  report.by_definition = is_pre_hausdorff(s);
  report.r0 = indistinguishability_classes(s);
  if (s.size() * s.size() <= kMaxPoints) {
    FiniteSpace square = product(s, s);
    PointSet r0 = relation_in_square(s, report.r0);
    report.r0_closed = square.is_closed(r0);
    report.r0_equals_diagonal_closure = closure(square, diagonal_in_square(s)) == r0;
  }
  report.quotient_hausdorff = is_ti(quotient(s, report.r0).space, Separation::t2);
  return report;
}

Quotient reflect(const FiniteSpace& s, Separation level) {
  return quotient(s, r_relation(s, level));
}

FiniteSpace reflect_pre_hausdorff(const FiniteSpace& s) {
  Quotient hausdorff = reflect(s, Separation::t2);
  InitialSource source{hausdorff.projection, hausdorff.space};
  return initial_topology(s.size(), std::span(&source, 1));
}

Quotient hausdorff_reflection_of_preh(const FiniteSpace& s) {
  if (auto bad = pre_hausdorff_violation(s)) throw NotPreHausdorff(bad->first, bad->second);
  return quotient(s, indistinguishability_classes(s));
}

PointMap factor_through_quotient(const FiniteSpace& s, const PointMap& f, const FiniteSpace& cod,
                                 Separation level) {
  if (!is_continuous(f, s, cod)) throw NotContinuous("map to factor is not continuous");
  if (!is_ti(cod, level)) {
    throw CodomainNotTi("codomain is not T" + std::to_string(static_cast<int>(level)));
  }
  Quotient reflected = reflect(s, level);
  const PointMap& q = reflected.projection;

  std::vector<std::size_t> table(reflected.space.size(), cod.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    std::size_t& slot = table[q(x)];
    if (slot != cod.size() && slot != f(x)) {
      throw std::logic_error("map does not respect R_" + std::to_string(static_cast<int>(level)));
    }
    slot = f(x);
  }
  PointMap factor(cod.size(), std::move(table));
  if (!is_continuous(factor, reflected.space, cod)) {
    throw std::logic_error("induced map on the quotient is not continuous");
  }
  return factor;
}

bool compose_reflections_check(const FiniteSpace& s) {
  Quotient direct = reflect(s, Separation::t2);
  FiniteSpace coarse = reflect_pre_hausdorff(s);
  Quotient two_step = hausdorff_reflection_of_preh(coarse);

  // Both projections start at the same carrier; the comparison map sends the
  // class of x in the direct route to the class of x in the two-step route.
  std::vector<std::size_t> table(direct.space.size(), two_step.space.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    std::size_t& slot = table[direct.projection(x)];
    if (slot != two_step.space.size() && slot != two_step.projection(x)) return false;
    slot = two_step.projection(x);
  }
  PointMap comparison(two_step.space.size(), std::move(table));
  return is_homeomorphism(comparison, direct.space, two_step.space);
}

}  // namespace fintop
