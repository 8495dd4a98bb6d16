#include "fintop/classify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>

#include "fintop/enumeration.hpp"
#include "fintop/error.hpp"
#include "fintop/separation.hpp"

namespace fintop {

namespace {

using PointSignature = std::pair<std::size_t, std::size_t>;

PointSignature signature_of(const FiniteSpace& s, std::size_t x) {
  return {s.neighborhood(x).size(), s.point_closure(x).size()};
}

class BijectionSearch {
 public:
  BijectionSearch(const FiniteSpace& a, const FiniteSpace& b)
      : a_(a), b_(b), image_(a.size(), 0) {}

  bool solve() { return extend(0); }
  PointMap result() const { return PointMap(b_.size(), image_); }

 private:
  // Homeomorphisms of finite spaces are exactly the isomorphisms of the
  // specialization preorders.
  bool consistent(std::size_t x, std::size_t fx) const {
    for (std::size_t u = 0; u < x; ++u) {
      const std::size_t fu = image_[u];
      if (a_.neighborhood(u).contains(x) != b_.neighborhood(fu).contains(fx)) return false;
      if (a_.neighborhood(x).contains(u) != b_.neighborhood(fx).contains(fu)) return false;
    }
    return true;
  }

  bool extend(std::size_t x) {
    if (x == a_.size()) return true;
    const PointSignature want = signature_of(a_, x);
    for (std::size_t fx = 0; fx < b_.size(); ++fx) {
      if (used_.contains(fx) || signature_of(b_, fx) != want || !consistent(x, fx)) continue;
      image_[x] = fx;
      used_ = used_.with(fx);
      if (extend(x + 1)) return true;
      used_ = used_.without(fx);
    }
    return false;
  }

  const FiniteSpace& a_;
  const FiniteSpace& b_;
  std::vector<std::size_t> image_;
  PointSet used_;
};

std::vector<PointSignature> sorted_signatures(const FiniteSpace& s) {
  std::vector<PointSignature> out;
  for (std::size_t x = 0; x < s.size(); ++x) out.push_back(signature_of(s, x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::size_t> preh_invariant(const FiniteSpace& s) {
  if (auto bad = pre_hausdorff_violation(s)) throw NotPreHausdorff(bad->first, bad->second);
  std::vector<std::size_t> sizes;
  for (PointSet block : minimal_basis(s)) sizes.push_back(block.size());
  std::sort(sizes.begin(), sizes.end(), std::greater<>{});
  return sizes;
}

std::string_view path_name(HomeomorphismPath p) {
  return p == HomeomorphismPath::fast ? "fast" : "general";
}

std::optional<PointMap> find_homeomorphism(const FiniteSpace& a, const FiniteSpace& b) {
  if (a.size() > kMaxGeneralHomeomorphism || b.size() > kMaxGeneralHomeomorphism) {
    throw SizeLimit("homeomorphism search supports at most " +
                    std::to_string(kMaxGeneralHomeomorphism) + " points");
  }
  if (a.size() != b.size()) return std::nullopt;
  if (sorted_signatures(a) != sorted_signatures(b)) return std::nullopt;
  if (a.open_count() != b.open_count()) return std::nullopt;
  BijectionSearch search(a, b);
  if (!search.solve()) return std::nullopt;
  return search.result();
}

HomeomorphismResult are_homeomorphic(const FiniteSpace& a, const FiniteSpace& b) {
  if (is_pre_hausdorff(a) && is_pre_hausdorff(b)) {
    return {a.size() == b.size() && preh_invariant(a) == preh_invariant(b),
            HomeomorphismPath::fast};
  }
  return {find_homeomorphism(a, b).has_value(), HomeomorphismPath::general};
}

std::size_t count_preh_classes_by_enumeration(std::size_t n) {
  std::set<std::vector<std::size_t>> classes;
  for_each_set_partition(n, [&](std::span<const std::size_t> labels) {
    classes.insert(preh_invariant(space_from_partition(Partition::from_labels(labels))));
  });
  return classes.size();
}

BigCount count_preh_classes(std::size_t n) {
  BigCount formula = integer_partition_count(n);
  if (n <= kMaxTopologyEnumeration) {
    BigCount counted(count_preh_classes_by_enumeration(n));
    if (counted != formula) {
      throw std::logic_error("class count " + counted.str() + " disagrees with p(" +
                             std::to_string(n) + ") = " + formula.str());
    }
  }
  return formula;
}

}  // namespace fintop
