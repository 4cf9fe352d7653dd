#include "pspace/classic.hpp"

#include <algorithm>
#include <set>

#include "pspace/error.hpp"

namespace pspace {

namespace {

constexpr std::size_t kMaxBase = 20;
constexpr std::size_t kMaxVietorisCarrier = 24;

std::string set_name(const Poset& p, const Subset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ",";
    out += p.name(i);
    first = false;
  });
  return out + "}";
}

bool sorted_before(const Subset& a, const Subset& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return lex_less(a, b);
}

template <class Keep, class Leq, class Join>
SetFamily build_family(const Poset& p, Keep keep, Leq leq, Join join) {
  if (p.empty()) throw Error(ErrorCode::empty_poset, "poset has no elements");
  if (p.size() > kMaxBase)
    throw Error(ErrorCode::size_limit_exceeded, "classical carriers are limited to 20 base points");
  SetFamily f;
  f.base = p;
  const std::uint64_t total = std::uint64_t{1} << p.size();
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    Subset s = Subset::from_bits(p.size(), bits);
    if (keep(s)) f.sets.push_back(std::move(s));
  }
  std::sort(f.sets.begin(), f.sets.end(), sorted_before);

  const std::size_t n = f.sets.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& s : f.sets) names.push_back(set_name(p, s));
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = leq(f.sets[i], f.sets[j]);
  f.order = Poset::from_relation(std::move(names), rel);

  f.op = OpTable(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f.op.set(i, j, *f.find(join(f.sets[i], f.sets[j])));
  return f;
}

}  // namespace

std::optional<std::size_t> SetFamily::find(const Subset& s) const {
  auto it = std::lower_bound(sets.begin(), sets.end(), s, sorted_before);
  if (it == sets.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - sets.begin());
}

Lens Lens::make(const Poset& base, Subset members) {
  if (members.empty()) throw Error(ErrorCode::empty_subset, "a lens must be nonempty");
  if (!is_convex(base, members))
    throw Error(ErrorCode::invalid_argument, set_name(base, members) + " is not convex");
  return Lens{std::move(members)};
}

Elem Lens::canonical_pair(const Poset& base) const {
  return Elem{maximal_elements(base, members), minimal_elements(base, members)};
}

ClosedSetLattice hoare(const Poset& p) {
  return build_family(
      p, [&](const Subset& s) { return is_lower_set(p, s); },
      [](const Subset& a, const Subset& b) { return a.is_subset_of(b); },
      [](const Subset& a, const Subset& b) { return a | b; });
}

CompactSaturatedFamily smyth(const Poset& p) {
  return build_family(
      p, [&](const Subset& s) { return is_upper_set(p, s); },
      [](const Subset& a, const Subset& b) { return b.is_subset_of(a); },
      [](const Subset& a, const Subset& b) { return a | b; });
}

SetFamily lenses(const Poset& p) {
  return build_family(
      p, [&](const Subset& s) { return is_convex(p, s); },
      [&](const Subset& a, const Subset& b) {
        return closure(p, a, Direction::down).is_subset_of(closure(p, b, Direction::down)) &&
               closure(p, b, Direction::up).is_subset_of(closure(p, a, Direction::up));
      },
      [&](const Subset& a, const Subset& b) {
        Subset u = a | b;
        return closure(p, u, Direction::down) & closure(p, u, Direction::up);
      });
}

FiniteTopology generated_topology(std::vector<std::string> points, const std::vector<Subset>& subbase) {
  const std::size_t n = points.size();
  std::set<Subset> base{Subset::full(n)};
  base.insert(subbase.begin(), subbase.end());
  // Close under finite intersections.
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Subset> cur(base.begin(), base.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (base.insert(cur[i] & cur[j]).second) grew = true;
  }
  // Close under unions; a worklist keeps this linear in the number of opens
  // times the base size.
  std::set<Subset> opens{Subset(n)};
  std::vector<Subset> work;
  for (const auto& b : base)
    if (opens.insert(b).second) work.push_back(b);
  while (!work.empty()) {
    Subset s = std::move(work.back());
    work.pop_back();
    for (const auto& b : base) {
      Subset u = s | b;
      if (opens.insert(u).second) work.push_back(std::move(u));
    }
  }
  return FiniteTopology::make(std::move(points), std::vector<Subset>(opens.begin(), opens.end()));
}

FiniteTopology vietoris(const Poset& p, VietorisSide side) {
  const SetFamily fam = side == VietorisSide::lower ? hoare(p) : smyth(p);
  const std::size_t n = fam.sets.size();
  if (n > kMaxVietorisCarrier)
    throw Error(ErrorCode::size_limit_exceeded, "Vietoris topology is limited to 24 carrier points");
  std::vector<Subset> subbase;
  const FiniteTopology upper_sets = alexandroff_topology(p);
  for (const auto& u : upper_sets.opens()) {
    Subset gen(n);
    for (std::size_t i = 0; i < n; ++i) {
      const bool in = side == VietorisSide::lower ? fam.sets[i].intersects(u) : fam.sets[i].is_subset_of(u);
      if (in) gen.insert(i);
    }
    subbase.push_back(std::move(gen));
  }
  return generated_topology(fam.order.names(), subbase);
}

bool ClassicReport::passed() const {
  return bijection && order_iso && op_preserved && topology_equal.value_or(true) &&
         vietoris_equal.value_or(true);
}

ClassicReport compare_to_classic(Kind kind, const Poset& p) {
  const Powerspace ps = build_powerspace(kind, p);
  const SetFamily fam = kind == Kind::lower ? hoare(p) : kind == Kind::upper ? smyth(p) : lenses(p);
  ClassicReport r;
  r.kind = kind;
  r.powerspace_size = ps.size();
  r.classic_size = fam.sets.size();

  std::vector<bool> hit(fam.sets.size(), false);
  r.bijection = ps.size() == fam.sets.size();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto k = fam.find(denotation(kind, p, ps.element(i)));
    if (!k) {
      r.bijection = false;
      r.detail = ps.order().name(i) + " denotes no classical element";
      return r;
    }
    if (hit[*k]) r.bijection = false;
    hit[*k] = true;
    r.to_classic.push_back(*k);
  }
  if (!r.bijection) {
    r.detail = "carrier sizes or denotations disagree";
    return r;
  }

  const std::size_t n = ps.size();
  r.order_iso = true;
  r.op_preserved = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t ci = r.to_classic[i];
      const std::size_t cj = r.to_classic[j];
      if (r.order_iso && ps.order().leq(i, j) != fam.order.leq(ci, cj)) {
        r.order_iso = false;
        r.detail = "order differs at (" + ps.order().name(i) + ", " + ps.order().name(j) + ")";
      }
      if (r.op_preserved && r.to_classic[ps.op()(i, j)] != fam.op(ci, cj)) {
        r.op_preserved = false;
        if (r.detail.empty())
          r.detail = "operation differs at (" + ps.order().name(i) + ", " + ps.order().name(j) + ")";
      }
    }

  if (n <= kClassicTopologyLimit) {
    const FiniteTopology conv = ConvergenceStructure(ps).topology();
    // Transport the classical upper sets back onto powerspace indices.
    std::set<Subset> expected;
    const FiniteTopology upper_sets = alexandroff_topology(fam.order);
    for (const auto& u : upper_sets.opens()) {
      Subset back(n);
      for (std::size_t i = 0; i < n; ++i)
        if (u.contains(r.to_classic[i])) back.insert(i);
      expected.insert(std::move(back));
    }
    const std::set<Subset> got(conv.opens().begin(), conv.opens().end());
    bool equal = got == expected;
    if (equal) {
      try {
        equal = specialization_order(conv).same_order(ps.order());
      } catch (const Error&) {
        equal = false;
      }
    }
    r.topology_equal = equal;
    if (!equal && r.detail.empty()) r.detail = "convergence-open sets differ from the upper sets";
  }

  if (kind != Kind::convex && fam.sets.size() <= kMaxVietorisCarrier) {
    const FiniteTopology v = vietoris(p, kind == Kind::lower ? VietorisSide::lower : VietorisSide::upper);
    const FiniteTopology a = alexandroff_topology(fam.order);
    r.vietoris_equal = v.opens() == a.opens();
    if (!*r.vietoris_equal && r.detail.empty()) r.detail = "Vietoris topology differs from the upper sets";
  }
  return r;
}

}  // namespace pspace
