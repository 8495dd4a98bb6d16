#include "fintop/space.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <unordered_set>

#include "fintop/error.hpp"

namespace fintop {

namespace {

void require_points(std::size_t n) {
  if (n > kMaxPoints) {
    throw SizeLimit("at most " + std::to_string(kMaxPoints) + " points are supported, got " +
                    std::to_string(n));
  }
}

void require_subset(const FiniteSpace& s, PointSet a, const char* what) {
  if (!a.subset_of(s.points())) {
    throw InvalidInput(std::string(what) + ": set " + to_string(a) + " is not within the " +
                       std::to_string(s.size()) + " points of the space");
  }
}

/// Relabels the members of `set` (which must lie in `frame`) by their rank
/// inside `frame`.
PointSet compress(PointSet set, PointSet frame) {
  PointSet out;
  std::size_t rank = 0;
  for (std::size_t x : frame) {
    if (set.contains(x)) out = out.with(rank);
    ++rank;
  }
  return out;
}

std::size_t parse_count(std::string_view text, std::string_view token) {
  std::size_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw InvalidInput("bad count in example token '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string to_string(PointSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t x : s) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

// FiniteSpace ------------------------------------------------------------------

FiniteSpace FiniteSpace::from_neighborhoods_unchecked(std::vector<PointSet> neighborhoods) {
  FiniteSpace s;
  s.n_ = neighborhoods.size();
  s.cells_ = std::move(neighborhoods);
  s.cells_.resize(2 * s.n_);
  for (std::size_t y = 0; y < s.n_; ++y) {
    for (std::size_t x : s.cells_[y]) s.cells_[s.n_ + x] = s.cells_[s.n_ + x].with(y);
  }
  return s;
}

bool FiniteSpace::is_open(PointSet u) const {
  if (!u.subset_of(points())) return false;
  for (std::size_t x : u) {
    if (!cells_[x].subset_of(u)) return false;
  }
  return true;
}

std::vector<PointSet> FiniteSpace::opens() const {
  std::vector<PointSet> out;
  for_each_open([&](PointSet u) { out.push_back(u); });
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::size_t FiniteSpace::open_count() const {
  std::size_t count = 0;
  for_each_open([&](PointSet) { ++count; });
  return count;
}

// Preorder ---------------------------------------------------------------------

Preorder Preorder::from_rows(std::vector<PointSet> rows) {
  const std::size_t n = rows.size();
  require_points(n);
  const PointSet all = PointSet::full(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (!rows[x].subset_of(all)) throw InvalidInput("preorder row " + std::to_string(x) + " out of range");
    if (!rows[x].contains(x)) throw InvalidInput("preorder is not reflexive at " + std::to_string(x));
    for (std::size_t y : rows[x]) {
      if (!rows[y].subset_of(rows[x])) {
        throw InvalidInput("preorder is not transitive: " + std::to_string(x) + " <= " +
                           std::to_string(y) + " but row " + std::to_string(y) +
                           " is not within row " + std::to_string(x));
      }
    }
  }
  return Preorder(std::move(rows));
}

Preorder Preorder::from_matrix(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  require_points(n);
  std::vector<PointSet> rows(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (leq[x].size() != n) throw InvalidInput("preorder matrix is not square");
    for (std::size_t y = 0; y < n; ++y) {
      if (leq[x][y]) rows[x] = rows[x].with(y);
    }
  }
  return from_rows(std::move(rows));
}

// Partition --------------------------------------------------------------------

Partition Partition::from_blocks(std::size_t n, std::vector<PointSet> blocks) {
  require_points(n);
  PointSet seen;
  for (PointSet b : blocks) {
    if (b.empty()) throw InvalidInput("partition has an empty block");
    if (!b.subset_of(PointSet::full(n))) throw InvalidInput("partition block " + to_string(b) + " out of range");
    if (b.intersects(seen)) throw InvalidInput("partition blocks overlap at " + to_string(b & seen));
    seen |= b;
  }
  if (seen != PointSet::full(n)) {
    throw InvalidInput("partition does not cover points " + to_string(PointSet::full(n) - seen));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](PointSet a, PointSet b) { return a.front() < b.front(); });
  Partition p;
  p.n_ = n;
  p.blocks_ = std::move(blocks);
  return p;
}

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  require_points(labels.size());
  std::vector<std::size_t> seen_labels;
  std::vector<PointSet> blocks;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto it = std::find(seen_labels.begin(), seen_labels.end(), labels[x]);
    if (it == seen_labels.end()) {
      seen_labels.push_back(labels[x]);
      blocks.push_back(PointSet::singleton(x));
    } else {
      auto i = static_cast<std::size_t>(it - seen_labels.begin());
      blocks[i] = blocks[i].with(x);
    }
  }
  Partition p;
  p.n_ = labels.size();
  p.blocks_ = std::move(blocks);
  return p;
}

Partition Partition::discrete(std::size_t n) {
  require_points(n);
  Partition p;
  p.n_ = n;
  for (std::size_t x = 0; x < n; ++x) p.blocks_.push_back(PointSet::singleton(x));
  return p;
}

Partition Partition::indiscrete(std::size_t n) {
  require_points(n);
  Partition p;
  p.n_ = n;
  if (n > 0) p.blocks_.push_back(PointSet::full(n));
  return p;
}

std::size_t Partition::block_index(std::size_t x) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].contains(x)) return i;
  }
  throw InvalidInput("point " + std::to_string(x) + " outside partition");
}

// PointMap ---------------------------------------------------------------------

PointMap::PointMap(std::size_t codomain_size, std::vector<std::size_t> table)
    : cod_n_(codomain_size), table_(std::move(table)) {
  require_points(cod_n_);
  require_points(table_.size());
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if (table_[x] >= cod_n_) {
      throw InvalidInput("map sends " + std::to_string(x) + " to " + std::to_string(table_[x]) +
                         ", outside a codomain of " + std::to_string(cod_n_) + " points");
    }
  }
}

PointMap PointMap::identity(std::size_t n) {
  std::vector<std::size_t> table(n);
  for (std::size_t x = 0; x < n; ++x) table[x] = x;
  return PointMap(n, std::move(table));
}

PointMap PointMap::constant(std::size_t domain_size, std::size_t codomain_size, std::size_t value) {
  return PointMap(codomain_size, std::vector<std::size_t>(domain_size, value));
}

PointSet PointMap::image(PointSet a) const {
  PointSet out;
  for (std::size_t x : a) out = out.with(table_[x]);
  return out;
}

PointSet PointMap::preimage(PointSet b) const {
  PointSet out;
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if (b.contains(table_[x])) out = out.with(x);
  }
  return out;
}

bool PointMap::is_bijective() const {
  return domain_size() == cod_n_ && image(PointSet::full(domain_size())) == PointSet::full(cod_n_);
}

// Construction ------------------------------------------------------------------

FiniteSpace build_space(std::size_t n, std::span<const PointSet> opens) {
  require_points(n);
  const PointSet all = PointSet::full(n);
  std::vector<PointSet> family(opens.begin(), opens.end());
  for (PointSet u : family) {
    if (!u.subset_of(all)) throw InvalidInput("open set " + to_string(u) + " is not within the carrier");
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  auto member = [&](PointSet u) { return std::binary_search(family.begin(), family.end(), u); };

  if (!member(PointSet{})) {
    throw NotATopology(NotATopology::Reason::missing_empty, {}, {}, "the empty set is not open");
  }
  if (!member(all)) {
    throw NotATopology(NotATopology::Reason::missing_full, all, all, "the full set is not open");
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      PointSet a = family[i];
      PointSet b = family[j];
      if (!member(a | b)) {
        throw NotATopology(NotATopology::Reason::union_escape, a, b,
                           "union of " + to_string(a) + " and " + to_string(b) + " is not open");
      }
      if (!member(a & b)) {
        throw NotATopology(NotATopology::Reason::intersection_escape, a, b,
                           "intersection of " + to_string(a) + " and " + to_string(b) +
                               " is not open");
      }
    }
  }

  std::vector<PointSet> nbhd(n, all);
  for (PointSet u : family) {
    for (std::size_t x : u) nbhd[x] &= u;
  }
  return FiniteSpace::from_neighborhoods_unchecked(std::move(nbhd));
}

FiniteSpace generate_topology(std::size_t n, std::span<const PointSet> subbasis) {
  require_points(n);
  const PointSet all = PointSet::full(n);
  // The smallest open set around x is the intersection of the generators
  // that contain it; unions of these are exactly the generated opens.
  std::vector<PointSet> nbhd(n, all);
  for (PointSet u : subbasis) {
    if (!u.subset_of(all)) throw InvalidInput("generator " + to_string(u) + " is not within the carrier");
    for (std::size_t x : u) nbhd[x] &= u;
  }
  return FiniteSpace::from_neighborhoods_unchecked(std::move(nbhd));
}

FiniteSpace space_from_partition(const Partition& p) {
  std::vector<PointSet> nbhd(p.size());
  for (PointSet b : p.blocks()) {
    for (std::size_t x : b) nbhd[x] = b;
  }
  return FiniteSpace::from_neighborhoods_unchecked(std::move(nbhd));
}

Preorder specialization_preorder(const FiniteSpace& s) {
  // x <= y iff x in cl{y} iff y in N(x).
  std::vector<PointSet> rows(s.neighborhoods().begin(), s.neighborhoods().end());
  return Preorder::from_rows(std::move(rows));
}

FiniteSpace space_from_preorder(const Preorder& p) {
  return FiniteSpace::from_neighborhoods_unchecked({p.rows().begin(), p.rows().end()});
}

FiniteSpace discrete_space(std::size_t n) { return space_from_partition(Partition::discrete(n)); }

FiniteSpace indiscrete_space(std::size_t n) { return space_from_partition(Partition::indiscrete(n)); }

FiniteSpace sierpinski_space() {
  // One proper open set, {1}.
  return FiniteSpace::from_neighborhoods_unchecked({PointSet{0, 1}, PointSet{1}});
}

FiniteSpace example_space(std::string_view name) {
  auto argument = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (name.substr(0, prefix.size()) == prefix) return name.substr(prefix.size());
    return std::nullopt;
  };
  if (name == "sierpinski") return sierpinski_space();
  if (name == "point") return discrete_space(1);
  if (auto k = argument("indiscrete:")) {
    std::size_t n = parse_count(*k, name);
    require_points(n);
    return indiscrete_space(n);
  }
  if (auto k = argument("discrete:")) {
    std::size_t n = parse_count(*k, name);
    require_points(n);
    return discrete_space(n);
  }
  if (auto blocks_text = argument("partition:")) {
    std::vector<PointSet> blocks;
    std::size_t n = 0;
    std::string_view rest = *blocks_text;
    while (true) {
      std::size_t bar = rest.find('|');
      std::string_view block_text = rest.substr(0, bar);
      PointSet block;
      while (true) {
        std::size_t comma = block_text.find(',');
        std::size_t x = parse_count(block_text.substr(0, comma), name);
        if (x >= kMaxPoints) throw SizeLimit("point index too large in '" + std::string(name) + "'");
        if (block.contains(x)) throw InvalidInput("repeated point in '" + std::string(name) + "'");
        block = block.with(x);
        n = std::max(n, x + 1);
        if (comma == std::string_view::npos) break;
        block_text.remove_prefix(comma + 1);
      }
      blocks.push_back(block);
      if (bar == std::string_view::npos) break;
      rest.remove_prefix(bar + 1);
    }
    return space_from_partition(Partition::from_blocks(n, std::move(blocks)));
  }
  throw InvalidInput("unknown example space '" + std::string(name) + "'");
}

// Point-set operators -------------------------------------------------------------

PointSet closure(const FiniteSpace& s, PointSet a) {
  require_subset(s, a, "closure");
  PointSet out;
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (s.neighborhood(x).intersects(a)) out = out.with(x);
  }
  return out;
}

PointSet interior(const FiniteSpace& s, PointSet a) {
  require_subset(s, a, "interior");
  PointSet out;
  for (std::size_t x : a) {
    if (s.neighborhood(x).subset_of(a)) out = out.with(x);
  }
  return out;
}

PointSet minimal_open(const FiniteSpace& s, PointSet a) {
  require_subset(s, a, "minimal_open");
  PointSet out;
  for (std::size_t x : a) out |= s.neighborhood(x);
  return out;
}

std::vector<PointSet> minimal_basis(const FiniteSpace& s) {
  std::vector<PointSet> out(s.neighborhoods().begin(), s.neighborhoods().end());
  std::sort(out.begin(), out.end(), CanonicalLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Derived spaces ------------------------------------------------------------------

FiniteSpace subspace(const FiniteSpace& s, PointSet a) {
  require_subset(s, a, "subspace");
  std::vector<PointSet> nbhd;
  nbhd.reserve(a.size());
  for (std::size_t x : a) nbhd.push_back(compress(s.neighborhood(x) & a, a));
  return FiniteSpace::from_neighborhoods_unchecked(std::move(nbhd));
}

FiniteSpace product(const FiniteSpace& a, const FiniteSpace& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (na * nb > kMaxPoints) {
    throw SizeLimit("product of " + std::to_string(na) + " and " + std::to_string(nb) +
                    " points exceeds " + std::to_string(kMaxPoints));
  }
  // Minimal neighborhood of (x, y) is the box N(x) x N(y).
  std::vector<PointSet> nbhd(na * nb);
  for (std::size_t x = 0; x < na; ++x) {
    for (std::size_t y = 0; y < nb; ++y) {
      PointSet box;
      for (std::size_t u : a.neighborhood(x)) {
        for (std::size_t v : b.neighborhood(y)) box = box.with(u * nb + v);
      }
      nbhd[x * nb + y] = box;
    }
  }
  return FiniteSpace::from_neighborhoods_unchecked(std::move(nbhd));
}

FiniteSpace initial_topology(std::size_t n, std::span<const InitialSource> sources) {
  require_points(n);
  std::vector<PointSet> subbasis;
  for (const InitialSource& src : sources) {
    if (src.map.domain_size() != n || src.map.codomain_size() != src.codomain.size()) {
      throw InvalidInput("initial source arity mismatch: map " +
                         std::to_string(src.map.domain_size()) + " -> " +
                         std::to_string(src.map.codomain_size()) + " against carrier " +
                         std::to_string(n) + " and codomain " +
                         std::to_string(src.codomain.size()));
    }
    // Preimages of a basis generate the same topology as preimages of all opens.
    for (PointSet v : src.codomain.neighborhoods()) subbasis.push_back(src.map.preimage(v));
  }
  return generate_topology(n, subbasis);
}

Quotient quotient(const FiniteSpace& s, const Partition& p) {
  if (p.size() != s.size()) {
    throw InvalidInput("partition of " + std::to_string(p.size()) + " points applied to a space of " +
                       std::to_string(s.size()));
  }
  std::vector<std::size_t> table(s.size());
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    for (std::size_t x : p.block(i)) table[x] = i;
  }
  PointMap q(p.block_count(), std::move(table));

  // V is open in the quotient iff q^-1(V) is open. Grow {b} until its
  // preimage is open; the fixpoint is the smallest open set around b.
  std::vector<PointSet> nbhd(p.block_count());
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    PointSet v = PointSet::singleton(b);
    while (true) {
      PointSet grown = q.image(minimal_open(s, q.preimage(v)));
      if (grown == v) break;
      v = grown;
    }
    nbhd[b] = v;
  }
  return {FiniteSpace::from_neighborhoods_unchecked(std::move(nbhd)), std::move(q)};
}

// Maps -------------------------------------------------------------------------------

namespace {

void require_arity(const PointMap& f, const FiniteSpace& dom, const FiniteSpace& cod) {
  if (f.domain_size() != dom.size() || f.codomain_size() != cod.size()) {
    throw InvalidInput("map " + std::to_string(f.domain_size()) + " -> " +
                       std::to_string(f.codomain_size()) + " does not fit spaces of " +
                       std::to_string(dom.size()) + " and " + std::to_string(cod.size()) +
                       " points");
  }
}

}  // namespace

bool is_continuous(const PointMap& f, const FiniteSpace& dom, const FiniteSpace& cod) {
  require_arity(f, dom, cod);
  // Preimages of all opens are open iff every minimal neighborhood maps into
  // the minimal neighborhood of the image point.
  for (std::size_t x = 0; x < dom.size(); ++x) {
    if (!f.image(dom.neighborhood(x)).subset_of(cod.neighborhood(f(x)))) return false;
  }
  return true;
}

bool is_closed_map(const PointMap& f, const FiniteSpace& dom, const FiniteSpace& cod) {
  require_arity(f, dom, cod);
  bool closed = true;
  dom.for_each_open([&](PointSet u) {
    if (closed && !cod.is_closed(f.image(u.complement(dom.size())))) closed = false;
  });
  return closed;
}

bool is_homeomorphism(const PointMap& f, const FiniteSpace& dom, const FiniteSpace& cod) {
  require_arity(f, dom, cod);
  if (!f.is_bijective()) return false;
  std::vector<std::size_t> inverse(cod.size());
  for (std::size_t x = 0; x < dom.size(); ++x) inverse[f(x)] = x;
  PointMap g(dom.size(), std::move(inverse));
  return is_continuous(f, dom, cod) && is_continuous(g, cod, dom);
}

std::string to_string(const FiniteSpace& s) {
  std::string out = "FiniteSpace(n=" + std::to_string(s.size()) + ", opens={";
  bool first = true;
  for (PointSet u : s.opens()) {
    if (!first) out += ',';
    out += to_string(u);
    first = false;
  }
  return out + "})";
}

}  // namespace fintop
