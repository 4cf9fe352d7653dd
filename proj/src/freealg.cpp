#include "pspace/freealg.hpp"

#include <string>

#include "pspace/error.hpp"

namespace pspace {

namespace {

constexpr std::size_t kCandidateLimit = std::size_t{1} << 24;

bool monotone_table(const Poset& src, const Poset& dst, const std::vector<std::size_t>& t) {
  if (t.size() != src.size()) return false;
  for (std::size_t v : t)
    if (v >= dst.size()) return false;
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j)
      if (src.leq(i, j) && !dst.leq(t[i], t[j])) return false;
  return true;
}

std::string pair_names(const Poset& p, std::size_t x, std::size_t y) {
  return "(" + p.name(x) + ", " + p.name(y) + ")";
}

std::size_t fold(const OpTable& op, const Subset& gens, const std::vector<std::size_t>& f) {
  std::size_t acc = 0;
  bool first = true;
  gens.for_each([&](std::size_t g) {
    acc = first ? f[g] : op(acc, f[g]);
    first = false;
  });
  return acc;
}

// Pairwise image of two antichains under a binary table, canonicalised.
std::size_t pairwise(const Powerspace& ps, const OpTable& base_op, const Subset& a, const Subset& b) {
  Subset img = ps.base().none();
  a.for_each([&](std::size_t x) { b.for_each([&](std::size_t y) { img.insert(base_op(x, y)); }); });
  return ps.index_of(canonical(ps.kind(), ps.base(), img));
}

}  // namespace

HomomorphismCheck check_homomorphism_detail(const Homomorphism& h) {
  HomomorphismCheck r;
  const Poset& s = h.src.poset;
  const Poset& d = h.dst.poset;
  const std::size_t n = s.size();
  if (h.table.size() != n || h.src.op.size() != n || h.dst.op.size() != d.size())
    throw Error(ErrorCode::invalid_argument, "homomorphism tables are not total");
  for (std::size_t v : h.table)
    if (v >= d.size()) throw Error(ErrorCode::invalid_argument, "homomorphism image out of range");

  for (std::size_t i = 0; i < n && r.monotone; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s.leq(i, j) && !d.leq(h.table[i], h.table[j])) {
        r.monotone = false;
        r.witness = {i, j};
        break;
      }
  for (std::size_t i = 0; i < n && r.preserves_op; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (h.table[h.src.op(i, j)] != h.dst.op(h.table[i], h.table[j])) {
        r.preserves_op = false;
        if (r.monotone) r.witness = {i, j};
        break;
      }
  return r;
}

bool check_homomorphism(const Homomorphism& h) { return check_homomorphism_detail(h).ok(); }

Homomorphism extend(const Powerspace& ps, const std::vector<std::size_t>& f,
                    const SemilatticeSpace& target) {
  if (target.kind != semilattice_kind(ps.kind()))
    throw Error(ErrorCode::kind_mismatch, std::string("a ") + std::string(to_string(ps.kind())) +
                                              " extension needs an " +
                                              std::string(to_string(semilattice_kind(ps.kind()))) +
                                              " target, got " + std::string(to_string(target.kind)));
  if (target.op.size() != target.poset.size())
    throw Error(ErrorCode::invalid_argument, "target operation table size differs from carrier size");
  if (!monotone_table(ps.base(), target.poset, f))
    throw Error(ErrorCode::not_monotone, "map is not monotone into the target");

  Homomorphism h{ps.as_semilattice(), target, std::vector<std::size_t>(ps.size())};
  for (std::size_t i = 0; i < ps.size(); ++i)
    h.table[i] = fold(target.op, generators(ps.kind(), ps.element(i)), f);
  return h;
}

Homomorphism extend(Kind kind, const MonotoneMap& f, const SemilatticeSpace& target) {
  if (f.dst.size() != target.poset.size())
    throw Error(ErrorCode::base_mismatch, "map codomain differs from the target carrier");
  return extend(build_powerspace(kind, f.src), f.table, target);
}

bool UniversalReport::passed() const {
  if (!target_laws.passed()) return false;
  for (const auto& c : cases)
    if (!c.ok()) return false;
  return true;
}

UniversalReport verify_universal_property(Kind kind, const Poset& x, const SemilatticeSpace& target) {
  if (target.kind != semilattice_kind(kind))
    throw Error(ErrorCode::kind_mismatch, "target kind does not match the powerspace kind");
  UniversalReport report;
  report.target_laws = check_semilattice(target);

  const Powerspace ps = build_powerspace(kind, x);
  const SemilatticeSpace src = ps.as_semilattice();
  const std::size_t m = target.poset.size();

  std::vector<bool> is_unit(ps.size(), false);
  for (std::size_t u : ps.unit()) is_unit[u] = true;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (!is_unit[i]) free.push_back(i);

  std::size_t candidates = 1;
  for (std::size_t k = 0; k < free.size(); ++k) {
    candidates *= m;
    if (candidates > kCandidateLimit)
      throw Error(ErrorCode::size_limit_exceeded,
                  "universal-property search needs more than " + std::to_string(kCandidateLimit) +
                      " candidate maps per f");
  }

  for (auto& f : enumerate_monotone_maps(x, target.poset)) {
    UniversalCase c;
    const Homomorphism ext = extend(ps, f, target);
    Homomorphism h{src, target, std::vector<std::size_t>(ps.size(), 0)};
    for (std::size_t p = 0; p < x.size(); ++p) h.table[ps.unit()[p]] = f[p];
    std::vector<std::size_t> digits(free.size(), 0);
    std::vector<std::size_t> found;
    for (std::size_t code = 0; code < candidates; ++code) {
      for (std::size_t k = 0; k < free.size(); ++k) h.table[free[k]] = digits[k];
      if (check_homomorphism(h)) {
        ++c.homomorphisms;
        if (found.empty()) found = h.table;
      }
      for (std::size_t k = 0; k < free.size(); ++k) {
        if (++digits[k] < m) break;
        digits[k] = 0;
      }
    }
    c.matches_extension = c.homomorphisms >= 1 && found == ext.table;
    c.f = std::move(f);
    report.cases.push_back(std::move(c));
  }
  return report;
}

Homomorphism functor_map(const Powerspace& from, const Powerspace& to,
                         const std::vector<std::size_t>& f) {
  if (from.kind() != to.kind()) throw Error(ErrorCode::kind_mismatch, "powerspaces of different kinds");
  if (!monotone_table(from.base(), to.base(), f))
    throw Error(ErrorCode::not_monotone, "map is not monotone");
  Homomorphism h{from.as_semilattice(), to.as_semilattice(), std::vector<std::size_t>(from.size())};
  for (std::size_t i = 0; i < from.size(); ++i) {
    Subset img = to.base().none();
    generators(from.kind(), from.element(i)).for_each([&](std::size_t g) { img.insert(f[g]); });
    h.table[i] = to.index_of(canonical(to.kind(), to.base(), img));
  }
  return h;
}

Homomorphism functor_map(Kind kind, const MonotoneMap& f) {
  if (!check_monotone(f)) throw Error(ErrorCode::not_monotone, "map is not monotone");
  return functor_map(build_powerspace(kind, f.src), build_powerspace(kind, f.dst), f.table);
}

// --- ∨-∧ structure ------------------------------------------------------------

DistributivePowerspace meet_on_lower(const Poset& x) {
  if (x.empty()) throw Error(ErrorCode::empty_poset, "poset has no elements");
  OpTable base_meet(x.size());
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b) {
      auto m = greatest_lower_bound(x, a, b);
      if (!m) throw Error(ErrorCode::meet_missing, "no meet for " + pair_names(x, a, b));
      base_meet.set(a, b, *m);
    }
  Powerspace ps = build_powerspace(Kind::lower, x);
  OpTable meet(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j)
      meet.set(i, j, pairwise(ps, base_meet, ps.element(i).max, ps.element(j).max));
  DistributiveSpace space{ps.order(), ps.op(), std::move(meet)};
  return {std::move(ps), std::move(space)};
}

DistributivePowerspace join_on_upper(const Poset& x) {
  if (x.empty()) throw Error(ErrorCode::empty_poset, "poset has no elements");
  OpTable base_join(x.size());
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b) {
      auto j = least_upper_bound(x, a, b);
      if (!j) throw Error(ErrorCode::join_missing, "no join for " + pair_names(x, a, b));
      base_join.set(a, b, *j);
    }
  Powerspace ps = build_powerspace(Kind::upper, x);
  OpTable join(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j)
      join.set(i, j, pairwise(ps, base_join, ps.element(i).min, ps.element(j).min));
  DistributiveSpace space{ps.order(), std::move(join), ps.op()};
  return {std::move(ps), std::move(space)};
}

namespace {

// Shared two-step construction: bound(a, x) in the base, extended first in x
// and then in a, into the powerspace's own operation.
OpTable two_step(Kind kind, const Poset& x, const OpTable& bound) {
  const Powerspace ps = build_powerspace(kind, x);
  const SemilatticeSpace self = ps.as_semilattice();
  const std::size_t n = x.size();

  // inner[a][v] = extension of (x ↦ unit(bound(a, x))) evaluated at v.
  std::vector<std::vector<std::size_t>> inner(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> fa(n);
    for (std::size_t y = 0; y < n; ++y) fa[y] = ps.unit()[bound(a, y)];
    inner[a] = extend(ps, fa, self).table;
  }
  OpTable out(ps.size());
  for (std::size_t v = 0; v < ps.size(); ++v) {
    std::vector<std::size_t> g(n);
    for (std::size_t a = 0; a < n; ++a) g[a] = inner[a][v];
    const auto outer = extend(ps, g, self).table;
    for (std::size_t u = 0; u < ps.size(); ++u) out.set(u, v, outer[u]);
  }
  return out;
}

}  // namespace

OpTable lower_meet_via_extension(const Poset& x) {
  auto m = meet_table(x);
  if (!m) throw Error(ErrorCode::meet_missing, "poset lacks binary meets");
  return two_step(Kind::lower, x, *m);
}

OpTable upper_join_via_extension(const Poset& x) {
  auto j = join_table(x);
  if (!j) throw Error(ErrorCode::join_missing, "poset lacks binary joins");
  return two_step(Kind::upper, x, *j);
}

bool DistributiveReport::passed() const {
  return join_laws.passed() && meet_laws.passed() && meet_over_join.pass && join_over_meet.pass;
}

DistributiveReport check_distributive(const DistributiveSpace& d) {
  DistributiveReport r;
  r.join_laws = check_semilattice({d.poset, d.join, SemilatticeKind::inflationary});
  r.meet_laws = check_semilattice({d.poset, d.meet, SemilatticeKind::deflationary});
  const auto& j = d.join;
  const auto& m = d.meet;
  const std::size_t n = d.poset.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (r.meet_over_join.pass && m(a, j(b, c)) != j(m(a, b), m(a, c))) {
          r.meet_over_join.pass = false;
          r.meet_over_join.witness = {a, b, c};
        }
        if (r.join_over_meet.pass && j(a, m(b, c)) != m(j(a, b), j(a, c))) {
          r.join_over_meet.pass = false;
          r.join_over_meet.witness = {a, b, c};
        }
      }
  return r;
}

bool preserves_both(const DistributiveSpace& src, const DistributiveSpace& dst,
                    const std::vector<std::size_t>& t) {
  if (!monotone_table(src.poset, dst.poset, t)) return false;
  const std::size_t n = src.poset.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (t[src.join(i, j)] != dst.join(t[i], t[j])) return false;
      if (t[src.meet(i, j)] != dst.meet(t[i], t[j])) return false;
    }
  return true;
}

CommuteResult commute_iso(const Poset& x) {
  const Powerspace lx = build_powerspace(Kind::lower, x);
  const Powerspace ux = build_powerspace(Kind::upper, x);
  CommuteResult r{join_on_upper(lx.order()), meet_on_lower(ux.order()), {}, {}};
  const auto& ul = r.upper_of_lower;
  const auto& lu = r.lower_of_upper;

  // Unit of X into P_L(P_U(X)): x ↦ ↓{↑x}.
  std::vector<std::size_t> eta(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) eta[p] = lu.ps.unit()[ux.unit()[p]];

  const SemilatticeSpace lu_join{lu.space.poset, lu.space.join, SemilatticeKind::inflationary};
  const SemilatticeSpace lu_meet{lu.space.poset, lu.space.meet, SemilatticeKind::deflationary};
  const auto over_lower = extend(lx, eta, lu_join).table;
  r.iso = extend(ul.ps, over_lower, lu_meet).table;

  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::iso_failure, "commutation map " + what);
  };
  const std::size_t n = ul.ps.size();
  if (lu.ps.size() != n)
    fail("has mismatched carriers: " + std::to_string(n) + " vs " + std::to_string(lu.ps.size()));
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (hit[r.iso[i]]) fail("is not injective at " + ul.ps.order().name(i));
    hit[r.iso[i]] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (ul.space.poset.leq(i, j) != lu.space.poset.leq(r.iso[i], r.iso[j]))
        fail("is not an order-isomorphism at " + pair_names(ul.space.poset, i, j));
  if (!preserves_both(ul.space, lu.space, r.iso)) fail("does not preserve join and meet");
  for (std::size_t p = 0; p < x.size(); ++p) {
    const std::size_t from = ul.ps.unit()[lx.unit()[p]];
    if (r.iso[from] != eta[p]) fail("does not track the unit at " + x.name(p));
    r.unit_images.emplace_back(from, eta[p]);
  }
  return r;
}

}  // namespace pspace
