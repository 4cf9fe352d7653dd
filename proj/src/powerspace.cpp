#include "pspace/powerspace.hpp"

#include <algorithm>

#include "pspace/error.hpp"

namespace pspace {

namespace {

// Order and operation tables are dense; beyond this they stop fitting in
// memory comfortably even though enumeration itself would still succeed.
constexpr std::size_t kTableLimit = 2048;
constexpr std::size_t kMaxConvergenceElems = 20;
constexpr std::size_t kMaxTopologyElems = 16;
constexpr std::size_t kMaxExhaustiveCandidates = 16;

std::string set_label(const Poset& base, const Subset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ",";
    out += base.name(i);
    first = false;
  });
  return out + "}";
}

// lim D = {x : D -> x}.
Subset limits(const Poset& base, const Subset& d) {
  Subset out = base.none();
  for (std::size_t x = 0; x < base.size(); ++x)
    if (directed_converges(base, d, x)) out.insert(x);
  return out;
}

bool is_directed_subset(const Poset& base, const Subset& d) {
  if (d.empty()) return false;
  bool ok = true;
  d.for_each([&](std::size_t i) {
    d.for_each([&](std::size_t j) {
      if (ok && !(base.up(i) & base.up(j)).intersects(d)) ok = false;
    });
  });
  return ok;
}

// Every directed subset of `within`, in increasing bit order.
std::vector<Subset> directed_subsets(const Poset& base, const Subset& within) {
  const auto members = within.elements();
  if (members.size() > kMaxExhaustiveCandidates)
    throw Error(ErrorCode::size_limit_exceeded, "exhaustive search is limited to 16 candidate points");
  std::vector<Subset> out;
  const std::uint64_t total = std::uint64_t{1} << members.size();
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    Subset d = base.none();
    for (std::size_t k = 0; k < members.size(); ++k)
      if ((bits >> k) & 1U) d.insert(members[k]);
    if (is_directed_subset(base, d)) out.push_back(std::move(d));
  }
  return out;
}

// Calls fn on every tuple of the product of the given sets until fn returns
// false; returns whether all tuples were accepted.
template <class Fn>
bool for_all_tuples(const std::vector<const Subset*>& sets, Fn&& fn) {
  std::vector<std::vector<std::size_t>> members;
  members.reserve(sets.size());
  for (const Subset* s : sets) members.push_back(s->elements());
  std::vector<std::size_t> pos(sets.size(), 0);
  std::vector<std::size_t> tuple(sets.size());
  while (true) {
    for (std::size_t i = 0; i < sets.size(); ++i) tuple[i] = members[i][pos[i]];
    if (!fn(tuple)) return false;
    std::size_t k = 0;
    while (k < sets.size()) {
      if (++pos[k] < members[k].size()) break;
      pos[k] = 0;
      ++k;
    }
    if (k == sets.size()) return true;
  }
}

// Tries every nonempty collection of candidate directed sets against a
// predicate; exhaustive mode of the ⇒_U and ⇒_P searches.
template <class Pred>
bool any_collection(const std::vector<Subset>& candidates, Pred&& pred) {
  if (candidates.size() > kMaxExhaustiveCandidates)
    throw Error(ErrorCode::size_limit_exceeded, "exhaustive search is limited to 16 candidate sets");
  const std::uint64_t total = std::uint64_t{1} << candidates.size();
  std::vector<const Subset*> chosen;
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    chosen.clear();
    for (std::size_t k = 0; k < candidates.size(); ++k)
      if ((bits >> k) & 1U) chosen.push_back(&candidates[k]);
    if (pred(chosen)) return true;
  }
  return false;
}

bool compare_raw(Kind kind, const Poset& base, const Elem& e1, const Elem& e2) {
  const bool lower_ok = kind == Kind::upper || e1.max.is_subset_of(closure(base, e2.max, Direction::down));
  const bool upper_ok = kind == Kind::lower || e2.min.is_subset_of(closure(base, e1.min, Direction::up));
  return lower_ok && upper_ok;
}

void require_family(Kind kind, const Poset& base, std::span<const Elem> family, const Elem& target) {
  require_elem(kind, base, target);
  if (!is_directed_family(kind, base, family))
    throw Error(ErrorCode::not_directed, "family is not directed");
}

// Candidate principal witnesses: D = {m} for every m in `pool` whose limit
// set ↓m meets `gens`.
std::vector<Subset> principal_candidates(const Poset& base, const Subset& pool, const Subset& gens) {
  std::vector<Subset> out;
  pool.for_each([&](std::size_t m) {
    Subset d = Subset::singleton(base.size(), m);
    if (limits(base, d).intersects(gens)) out.push_back(std::move(d));
  });
  return out;
}

// Conditions shared by ⇒_U and ⇒_P for a chosen collection D_1..D_k:
//   every lim D_i meets F; F ⊆ ⋃ lim D_i; every tuple (d_1..d_k) of the
//   product has some family member G with ↑G ⊆ ⋃ ↑d_i.
bool upper_conditions(const Poset& base, std::span<const Elem> family, const Subset& gens,
                      const std::vector<const Subset*>& ds) {
  if (ds.empty()) return false;
  Subset covered = base.none();
  for (const Subset* d : ds) {
    Subset lim = limits(base, *d);
    if (!lim.intersects(gens)) return false;
    covered |= lim;
  }
  if (!gens.is_subset_of(covered)) return false;
  return for_all_tuples(ds, [&](const std::vector<std::size_t>& tuple) {
    Subset up = base.none();
    for (std::size_t d : tuple) up |= base.up(d);
    return std::any_of(family.begin(), family.end(), [&](const Elem& g) {
      return closure(base, g.min, Direction::up).is_subset_of(up);
    });
  });
}

}  // namespace

std::string_view to_string(Kind kind) noexcept {
  switch (kind) {
    case Kind::lower: return "lower";
    case Kind::upper: return "upper";
    case Kind::convex: return "convex";
  }
  return "lower";
}

std::optional<Kind> parse_kind(std::string_view text) noexcept {
  if (text == "lower") return Kind::lower;
  if (text == "upper") return Kind::upper;
  if (text == "convex") return Kind::convex;
  return std::nullopt;
}

SemilatticeKind semilattice_kind(Kind kind) noexcept {
  switch (kind) {
    case Kind::lower: return SemilatticeKind::inflationary;
    case Kind::upper: return SemilatticeKind::deflationary;
    case Kind::convex: return SemilatticeKind::plain;
  }
  return SemilatticeKind::plain;
}

Elem canonical(Kind kind, const Poset& base, const Subset& gens) {
  if (gens.universe() != base.size()) throw Error(ErrorCode::base_mismatch, "generator width differs from base size");
  if (gens.empty()) throw Error(ErrorCode::empty_subset, "powerspace generators must be nonempty");
  switch (kind) {
    case Kind::lower: return {maximal_elements(base, gens), base.none()};
    case Kind::upper: return {base.none(), minimal_elements(base, gens)};
    case Kind::convex: return {maximal_elements(base, gens), minimal_elements(base, gens)};
  }
  return {};
}

Elem unit_elem(Kind kind, const Poset& base, std::size_t x) {
  return canonical(kind, base, Subset::singleton(base.size(), x));
}

Subset generators(Kind kind, const Elem& e) {
  switch (kind) {
    case Kind::lower: return e.max;
    case Kind::upper: return e.min;
    case Kind::convex: return e.max | e.min;
  }
  return e.max;
}

Subset denotation(Kind kind, const Poset& base, const Elem& e) {
  switch (kind) {
    case Kind::lower: return closure(base, e.max, Direction::down);
    case Kind::upper: return closure(base, e.min, Direction::up);
    case Kind::convex:
      return closure(base, e.max, Direction::down) & closure(base, e.min, Direction::up);
  }
  return {};
}

void require_elem(Kind kind, const Poset& base, const Elem& e) {
  if (e.max.universe() != base.size() || e.min.universe() != base.size())
    throw Error(ErrorCode::base_mismatch, "element is over a different base");
  const bool has_max = !e.max.empty();
  const bool has_min = !e.min.empty();
  const bool shape_ok = (kind == Kind::lower && has_max && !has_min) ||
                        (kind == Kind::upper && !has_max && has_min) ||
                        (kind == Kind::convex && has_max && has_min);
  if (!shape_ok)
    throw Error(ErrorCode::kind_mismatch, "element is not a " + std::string(to_string(kind)) + " element");
  if (!(canonical(kind, base, generators(kind, e)) == e))
    throw Error(ErrorCode::invalid_argument, "element is not in canonical form");
}

bool compare(Kind kind, const Poset& base, const Elem& e1, const Elem& e2) {
  require_elem(kind, base, e1);
  require_elem(kind, base, e2);
  return compare_raw(kind, base, e1, e2);
}

Elem combine(Kind kind, const Poset& base, const Elem& e1, const Elem& e2) {
  require_elem(kind, base, e1);
  require_elem(kind, base, e2);
  return canonical(kind, base, generators(kind, e1) | generators(kind, e2));
}

std::string elem_label(Kind kind, const Poset& base, const Elem& e) {
  switch (kind) {
    case Kind::lower: return "↓" + set_label(base, e.max);
    case Kind::upper: return "↑" + set_label(base, e.min);
    case Kind::convex: return set_label(base, e.max | e.min) + "^";
  }
  return {};
}

std::optional<std::size_t> Powerspace::find(const Elem& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Powerspace::index_of(const Elem& e) const {
  auto i = find(e);
  if (!i) throw Error(ErrorCode::invalid_argument, "not an element of this powerspace");
  return *i;
}

SemilatticeSpace Powerspace::as_semilattice() const {
  return SemilatticeSpace{order_, op_, semilattice_kind(kind_)};
}

std::vector<Subset> enumerate_antichains(const Poset& p, std::size_t limit) {
  std::vector<Subset> out;
  Subset current = p.none();
  // Elements are added in increasing index order; `blocked` holds everything
  // comparable to a chosen element.
  auto rec = [&](auto&& self, std::size_t from, const Subset& blocked) -> void {
    for (std::size_t i = from; i < p.size(); ++i) {
      if (blocked.contains(i)) continue;
      current.insert(i);
      out.push_back(current);
      if (out.size() > limit)
        throw Error(ErrorCode::size_limit_exceeded,
                    "more than " + std::to_string(limit) + " antichains");
      self(self, i + 1, blocked | p.up(i) | p.down(i));
      current.erase(i);
    }
  };
  rec(rec, 0, p.none());
  return out;
}

Powerspace build_powerspace(Kind kind, const Poset& base, std::size_t limit) {
  if (base.empty()) throw Error(ErrorCode::empty_poset, "cannot build a powerspace over an empty poset");

  std::vector<Elem> elems;
  const auto antichains = enumerate_antichains(base, limit);
  if (kind == Kind::lower) {
    for (const auto& a : antichains) elems.push_back({a, base.none()});
  } else if (kind == Kind::upper) {
    for (const auto& a : antichains) elems.push_back({base.none(), a});
  } else {
    // (maxA, minA) with minA an antichain inside ↓maxA and maxA ⊆ ↑minA.
    for (const auto& top : antichains) {
      const Subset below = closure(base, top, Direction::down);
      Subset current = base.none();
      auto rec = [&](auto&& self, std::size_t from, const Subset& blocked) -> void {
        for (std::size_t i = from; i < base.size(); ++i) {
          if (!below.contains(i) || blocked.contains(i)) continue;
          current.insert(i);
          if (top.is_subset_of(closure(base, current, Direction::up))) {
            elems.push_back({top, current});
            if (elems.size() > limit)
              throw Error(ErrorCode::size_limit_exceeded,
                          "more than " + std::to_string(limit) + " convex elements");
          }
          self(self, i + 1, blocked | base.up(i) | base.down(i));
          current.erase(i);
        }
      };
      rec(rec, 0, base.none());
    }
  }
  if (elems.size() > kTableLimit)
    throw Error(ErrorCode::size_limit_exceeded,
                std::to_string(elems.size()) + " elements exceed the order/operation table limit of " +
                    std::to_string(kTableLimit));

  struct Keyed {
    std::size_t weight;
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
    Elem elem;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(elems.size());
  for (auto& e : elems) {
    const std::size_t weight = denotation(kind, base, e).count();
    const Subset& primary = kind == Kind::upper ? e.min : e.max;
    const Subset& secondary = kind == Kind::upper ? e.max : e.min;
    keyed.push_back({weight, primary.elements(), secondary.elements(), std::move(e)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });

  Powerspace ps;
  ps.kind_ = kind;
  ps.base_ = base;
  ps.elems_.reserve(keyed.size());
  for (auto& k : keyed) ps.elems_.push_back(std::move(k.elem));
  const std::size_t n = ps.elems_.size();
  for (std::size_t i = 0; i < n; ++i) ps.index_.emplace(ps.elems_[i], i);

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : ps.elems_) labels.push_back(elem_label(kind, base, e));
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = compare_raw(kind, base, ps.elems_[i], ps.elems_[j]);
  ps.order_ = Poset::from_relation(std::move(labels), rel);

  ps.op_ = OpTable(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Subset gens = generators(kind, ps.elems_[i]) | generators(kind, ps.elems_[j]);
      const std::size_t k = ps.index_of(canonical(kind, base, gens));
      ps.op_.set(i, j, k);
      ps.op_.set(j, i, k);
    }

  ps.unit_.reserve(base.size());
  for (std::size_t x = 0; x < base.size(); ++x) ps.unit_.push_back(ps.index_of(unit_elem(kind, base, x)));
  return ps;
}

// --- Convergence -------------------------------------------------------------

bool is_directed_family(Kind kind, const Poset& base, std::span<const Elem> family) {
  if (family.empty()) return false;
  for (const auto& e : family) require_elem(kind, base, e);
  for (const auto& a : family)
    for (const auto& b : family) {
      const bool bounded = std::any_of(family.begin(), family.end(), [&](const Elem& c) {
        return compare_raw(kind, base, a, c) && compare_raw(kind, base, b, c);
      });
      if (!bounded) return false;
    }
  return true;
}

bool directed_converges(const Poset& base, const Subset& d, std::size_t x) {
  // The least open neighbourhood of x is ↑x; D is eventually inside it iff
  // D meets it.
  return d.intersects(base.up(x));
}

bool converges_lower(const Poset& base, std::span<const Elem> family, const Elem& target,
                     Search search) {
  require_family(Kind::lower, base, family, target);
  Subset pool = base.none();
  for (const auto& e : family) pool |= closure(base, e.max, Direction::down);

  std::vector<Subset> witnesses;
  if (search == Search::principal) {
    pool.for_each([&](std::size_t m) { witnesses.push_back(Subset::singleton(base.size(), m)); });
  } else {
    witnesses = directed_subsets(base, pool);
  }
  bool all = true;
  target.max.for_each([&](std::size_t a) {
    if (!all) return;
    all = std::any_of(witnesses.begin(), witnesses.end(),
                      [&](const Subset& d) { return directed_converges(base, d, a); });
  });
  return all;
}

bool converges_upper(const Poset& base, std::span<const Elem> family, const Elem& target,
                     Search search) {
  require_family(Kind::upper, base, family, target);
  const Subset& gens = target.min;
  if (search == Search::principal) {
    // Every condition is monotone in the collection once each member's limit
    // meets F, so the collection of all eligible singletons is the best
    // candidate.
    auto candidates = principal_candidates(base, base.all(), gens);
    std::vector<const Subset*> ds;
    for (const auto& c : candidates) ds.push_back(&c);
    return upper_conditions(base, family, gens, ds);
  }
  std::vector<Subset> eligible;
  for (auto& d : directed_subsets(base, base.all()))
    if (limits(base, d).intersects(gens)) eligible.push_back(std::move(d));
  return any_collection(eligible, [&](const std::vector<const Subset*>& ds) {
    return upper_conditions(base, family, gens, ds);
  });
}

bool converges_convex(const Poset& base, std::span<const Elem> family, const Elem& target,
                      Search search) {
  require_family(Kind::convex, base, family, target);
  const Subset gens = generators(Kind::convex, target);
  // Each D_j must lie inside the union of the lower parts of the family.
  Subset pool = base.none();
  for (const auto& e : family) pool |= closure(base, e.max, Direction::down);
  if (search == Search::principal) {
    auto candidates = principal_candidates(base, pool, gens);
    std::vector<const Subset*> ds;
    for (const auto& c : candidates) ds.push_back(&c);
    return upper_conditions(base, family, gens, ds);
  }
  std::vector<Subset> eligible;
  for (auto& d : directed_subsets(base, pool))
    if (limits(base, d).intersects(gens)) eligible.push_back(std::move(d));
  return any_collection(eligible, [&](const std::vector<const Subset*>& ds) {
    return upper_conditions(base, family, gens, ds);
  });
}

bool converges(Kind kind, const Poset& base, std::span<const Elem> family, const Elem& target,
               Search search) {
  switch (kind) {
    case Kind::lower: return converges_lower(base, family, target, search);
    case Kind::upper: return converges_upper(base, family, target, search);
    case Kind::convex: return converges_convex(base, family, target, search);
  }
  return false;
}

bool upper_intersection_criterion(const Poset& base, std::span<const Elem> family,
                                  const Elem& target) {
  Subset meet = base.all();
  for (const auto& g : family) meet &= closure(base, g.min, Direction::up);
  return meet.is_subset_of(closure(base, target.min, Direction::up));
}

ConvergenceStructure::ConvergenceStructure(const Powerspace& ps, Search search)
    : labels_(ps.order().names()) {
  const std::size_t n = ps.size();
  if (n > kMaxConvergenceElems)
    throw Error(ErrorCode::size_limit_exceeded, "convergence structure is limited to 20 elements");
  const Poset& order = ps.order();
  std::vector<Elem> family;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    Subset fam = Subset::from_bits(n, bits);
    if (!is_directed_subset(order, fam)) continue;
    family.clear();
    fam.for_each([&](std::size_t i) { family.push_back(ps.element(i)); });
    for (std::size_t t = 0; t < n; ++t)
      if (converges(ps.kind(), ps.base(), family, ps.element(t), search)) pairs_.push_back({fam, t});
  }
}

bool ConvergenceStructure::is_open(const Subset& u) const {
  for (const auto& p : pairs_)
    if (u.contains(p.target) && !p.family.intersects(u)) return false;
  return true;
}

FiniteTopology ConvergenceStructure::topology() const {
  const std::size_t n = labels_.size();
  if (n > kMaxTopologyElems)
    throw Error(ErrorCode::size_limit_exceeded, "convergence topology is limited to 16 elements");
  std::vector<Subset> opens;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Subset u = Subset::from_bits(n, bits);
    if (is_open(u)) opens.push_back(std::move(u));
  }
  return FiniteTopology::make(labels_, std::move(opens));
}

bool is_convergence_open(const Powerspace& ps, const Subset& u) {
  if (u.universe() != ps.size()) throw Error(ErrorCode::base_mismatch, "subset width differs from powerspace size");
  return ConvergenceStructure(ps).is_open(u);
}

}  // namespace pspace
