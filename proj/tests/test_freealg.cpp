#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "pspace/error.hpp"
#include "pspace/freealg.hpp"

using namespace pspace;

namespace {

SemilatticeSpace join_space(const Poset& p) { return {p, *join_table(p), SemilatticeKind::inflationary}; }
SemilatticeSpace meet_space(const Poset& p) { return {p, *meet_table(p), SemilatticeKind::deflationary}; }
SemilatticeSpace plain_join(const Poset& p) { return {p, *join_table(p), SemilatticeKind::plain}; }

bool is_chain(const Poset& p, std::size_t n) {
  if (p.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!p.comparable(i, j)) return false;
  return true;
}

std::size_t at(const Poset& p, const char* name) { return *p.index_of(name); }

std::size_t idx(const Powerspace& ps, std::initializer_list<const char*> names) {
  Subset s = ps.base().none();
  for (const char* n : names) s.insert(at(ps.base(), n));
  return ps.index_of(canonical(ps.kind(), ps.base(), s));
}

// M3: bot < a, b, c < top; the smallest non-distributive lattice.
Poset m3() {
  return validate_poset({"bot", "a", "b", "c", "top"},
                        {{"bot", "a"}, {"bot", "b"}, {"bot", "c"}, {"a", "top"}, {"b", "top"}, {"c", "top"}});
}

// Counts maps h : ps -> target with h(unit x) = f(x) that are monotone and
// preserve the operation, by direct enumeration.
std::size_t brute_homomorphisms(const Powerspace& ps, const std::vector<std::size_t>& f,
                                const SemilatticeSpace& y) {
  const std::size_t n = ps.size();
  const std::size_t m = y.poset.size();
  std::vector<std::size_t> h(n, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= m;
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      h[i] = c % m;
      c /= m;
    }
    bool ok = true;
    for (std::size_t x = 0; x < f.size(); ++x) ok = ok && h[ps.unit()[x]] == f[x];
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (ps.order().leq(i, j) && !y.poset.leq(h[i], h[j])) ok = false;
        if (h[ps.op()(i, j)] != y.op(h[i], h[j])) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("extend examples") {
  const Poset a = fixtures::anti2();
  const Poset d = fixtures::diamond();
  const MonotoneMap f{a, d, {at(d, "a"), at(d, "b")}};
  SUBCASE("lower into the diamond join") {
    const Homomorphism h = extend(Kind::lower, f, join_space(d));
    const Powerspace ps = build_powerspace(Kind::lower, a);
    CHECK(h.table[idx(ps, {"a", "b"})] == at(d, "top"));
    CHECK(check_homomorphism(h));
  }
  SUBCASE("upper into the diamond meet") {
    const Homomorphism h = extend(Kind::upper, f, meet_space(d));
    const Powerspace ps = build_powerspace(Kind::upper, a);
    CHECK(h.table[idx(ps, {"a", "b"})] == at(d, "bot"));
    CHECK(check_homomorphism(h));
  }
  SUBCASE("convex into a two-chain with max") {
    const Poset c = fixtures::chain2();
    const Homomorphism h = extend(Kind::convex, MonotoneMap{a, c, {0, 1}}, plain_join(c));
    const Powerspace ps = build_powerspace(Kind::convex, a);
    CHECK(h.table[idx(ps, {"a", "b"})] == 1);
  }
  SUBCASE("errors") {
    try {
      extend(Kind::lower, f, meet_space(d));
      FAIL("expected kind_mismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kind_mismatch);
    }
    const Poset c = fixtures::chain2();
    try {
      extend(Kind::lower, MonotoneMap{c, c, {1, 0}}, join_space(c));
      FAIL("expected not_monotone");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::not_monotone);
    }
  }
}

TEST_CASE("check_homomorphism") {
  const Poset a = fixtures::anti2();
  const Poset c = fixtures::chain2();
  const Powerspace ps = build_powerspace(Kind::lower, a);
  SUBCASE("identity") { CHECK(check_homomorphism({ps.as_semilattice(), ps.as_semilattice(), {0, 1, 2}})); }
  SUBCASE("broken preservation") {
    std::vector<std::size_t> t(3);
    t[idx(ps, {"a"})] = 1;
    t[idx(ps, {"b"})] = 0;
    t[idx(ps, {"a", "b"})] = 0;
    const HomomorphismCheck r = check_homomorphism_detail({ps.as_semilattice(), join_space(c), t});
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.witness.empty());
  }
}

TEST_CASE("verify_universal_property examples") {
  CHECK(verify_universal_property(Kind::lower, fixtures::anti2(), join_space(fixtures::diamond())).passed());
  CHECK(verify_universal_property(Kind::upper, fixtures::chain2(), meet_space(fixtures::chain2())).passed());
  const UniversalReport r = verify_universal_property(Kind::convex, single_point(), plain_join(fixtures::diamond()));
  CHECK(r.passed());
  CHECK(r.cases.size() == 4);
}

TEST_CASE("extensions are the unique homomorphisms, checked by brute force") {
  for (std::size_t n = 1; n <= 2; ++n)
    for (const Poset& x : enumerate_posets(n))
      for (Kind k : {Kind::lower, Kind::upper, Kind::convex}) {
        const Powerspace ps = build_powerspace(k, x);
        for (std::size_t m = 1; m <= 3; ++m)
          for (const SemilatticeSpace& y : enumerate_semilattices(m, semilattice_kind(k)))
            for (const auto& f : enumerate_monotone_maps(x, y.poset)) {
              REQUIRE(brute_homomorphisms(ps, f, y) == 1);
              const Homomorphism h = extend(ps, f, y);
              REQUIRE(check_homomorphism(h));
              for (std::size_t v = 0; v < n; ++v) REQUIRE(h.table[ps.unit()[v]] == f[v]);
            }
      }
}

TEST_CASE("functor_map") {
  const Poset a = fixtures::anti2();
  SUBCASE("identity") {
    const Homomorphism h = functor_map(Kind::lower, MonotoneMap{a, a, {0, 1}});
    CHECK(h.table == std::vector<std::size_t>{0, 1, 2});
  }
  SUBCASE("antichain into a chain") {
    const Poset c = fixtures::chain2();
    const Homomorphism h = functor_map(Kind::lower, MonotoneMap{a, c, {0, 1}});
    const Powerspace from = build_powerspace(Kind::lower, a);
    const Powerspace to = build_powerspace(Kind::lower, c);
    CHECK(h.table[idx(from, {"a", "b"})] == idx(to, {"1"}));
    CHECK(check_homomorphism(h));
  }
  SUBCASE("composition on posets up to 2 points") {
    for (Kind k : {Kind::lower, Kind::upper, Kind::convex})
      for (const Poset& x : enumerate_posets(2))
        for (const Poset& y : enumerate_posets(2))
          for (const Poset& z : enumerate_posets(1)) {
            for (const auto& f : enumerate_monotone_maps(x, y))
              for (const auto& g : enumerate_monotone_maps(y, z)) {
                std::vector<std::size_t> gf(f.size());
                for (std::size_t i = 0; i < f.size(); ++i) gf[i] = g[f[i]];
                const auto pf = functor_map(k, MonotoneMap{x, y, f}).table;
                const auto pg = functor_map(k, MonotoneMap{y, z, g}).table;
                const auto pgf = functor_map(k, MonotoneMap{x, z, gf}).table;
                for (std::size_t i = 0; i < pf.size(); ++i) REQUIRE(pgf[i] == pg[pf[i]]);
              }
          }
  }
}

TEST_CASE("meet_on_lower") {
  SUBCASE("diamond") {
    const DistributivePowerspace d = meet_on_lower(fixtures::diamond());
    CHECK(d.space.meet(idx(d.ps, {"a"}), idx(d.ps, {"b"})) == idx(d.ps, {"bot"}));
    CHECK(check_distributive(d.space).passed());
  }
  SUBCASE("chain") {
    const DistributivePowerspace d = meet_on_lower(fixtures::chain2());
    CHECK(d.space.meet(0, 1) == 0);
    CHECK(check_distributive(d.space).passed());
  }
  SUBCASE("V poset absorbs") {
    const DistributivePowerspace d = meet_on_lower(fixtures::vee());
    CHECK(d.space.meet(idx(d.ps, {"a", "b"}), idx(d.ps, {"a"})) == idx(d.ps, {"a"}));
  }
  SUBCASE("missing meet") {
    try {
      meet_on_lower(fixtures::anti2());
      FAIL("expected meet_missing");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::meet_missing);
    }
  }
  SUBCASE("agrees with the nested extension and the set formula") {
    for (std::size_t n = 1; n <= 4; ++n)
      for (const Poset& x : enumerate_posets(n)) {
        if (!meet_table(x)) continue;
        const DistributivePowerspace d = meet_on_lower(x);
        REQUIRE(lower_meet_via_extension(x) == d.space.meet);
        REQUIRE(check_distributive(d.space).passed());
        // ↓F1 ⊓ ↓F2 is the intersection of the two lower sets.
        for (std::size_t i = 0; i < d.ps.size(); ++i)
          for (std::size_t j = 0; j < d.ps.size(); ++j) {
            const auto a = oracle::mask_of(denotation(Kind::lower, x, d.ps.element(i)));
            const auto b = oracle::mask_of(denotation(Kind::lower, x, d.ps.element(j)));
            REQUIRE(oracle::mask_of(denotation(Kind::lower, x, d.ps.element(d.space.meet(i, j)))) == (a & b));
          }
      }
  }
}

TEST_CASE("join_on_upper") {
  SUBCASE("diamond") {
    const DistributivePowerspace d = join_on_upper(fixtures::diamond());
    CHECK(d.space.join(idx(d.ps, {"a"}), idx(d.ps, {"b"})) == idx(d.ps, {"top"}));
    CHECK(check_distributive(d.space).passed());
  }
  SUBCASE("chain") {
    const DistributivePowerspace d = join_on_upper(fixtures::chain2());
    CHECK(is_chain(d.ps.order(), 2));
    CHECK(check_distributive(d.space).passed());
  }
  SUBCASE("single point") {
    const DistributivePowerspace d = join_on_upper(single_point());
    CHECK(d.ps.size() == 1);
    CHECK(check_distributive(d.space).passed());
  }
  SUBCASE("missing join") {
    try {
      join_on_upper(fixtures::vee());
      FAIL("expected join_missing");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::join_missing);
    }
  }
  SUBCASE("agrees with the nested extension and the set formula") {
    for (std::size_t n = 1; n <= 4; ++n)
      for (const Poset& x : enumerate_posets(n)) {
        if (!join_table(x)) continue;
        const DistributivePowerspace d = join_on_upper(x);
        REQUIRE(upper_join_via_extension(x) == d.space.join);
        for (std::size_t i = 0; i < d.ps.size(); ++i)
          for (std::size_t j = 0; j < d.ps.size(); ++j) {
            const auto a = oracle::mask_of(denotation(Kind::upper, x, d.ps.element(i)));
            const auto b = oracle::mask_of(denotation(Kind::upper, x, d.ps.element(j)));
            REQUIRE(oracle::mask_of(denotation(Kind::upper, x, d.ps.element(d.space.join(i, j)))) == (a & b));
          }
      }
  }
}

TEST_CASE("check_distributive rejects M3") {
  const Poset p = m3();
  const DistributiveReport r = check_distributive({p, *join_table(p), *meet_table(p)});
  CHECK_FALSE(r.passed());
  CHECK(r.join_laws.passed());
  CHECK(r.meet_laws.passed());
  CHECK_FALSE(r.meet_over_join.pass);
  REQUIRE(r.meet_over_join.witness.size() == 3);
  const auto& w = r.meet_over_join.witness;
  const OpTable j = *join_table(p);
  const OpTable m = *meet_table(p);
  CHECK(m(w[0], j(w[1], w[2])) != j(m(w[0], w[1]), m(w[0], w[2])));
}

TEST_CASE("lower extension of a non-meet-preserving map loses meets") {
  // bot ↦ 0, a ↦ 1, b ↦ 1 is monotone but f(a ∧ b) ≠ f(a) ∧ f(b).
  const Poset v = fixtures::vee();
  const Poset c = fixtures::chain2();
  const DistributivePowerspace src = meet_on_lower(v);
  const DistributiveSpace dst{c, *join_table(c), *meet_table(c)};
  const Homomorphism bad = extend(src.ps, {0, 1, 1}, join_space(c));
  CHECK(check_homomorphism(bad));
  CHECK_FALSE(preserves_both(src.space, dst, bad.table));
  const Homomorphism good = extend(src.ps, {0, 1, 0}, join_space(c));
  CHECK(preserves_both(src.space, dst, good.table));
}

TEST_CASE("commute_iso") {
  SUBCASE("single point") {
    const CommuteResult r = commute_iso(single_point());
    CHECK(r.upper_of_lower.ps.size() == 1);
    CHECK(r.lower_of_upper.ps.size() == 1);
    CHECK(r.iso == std::vector<std::size_t>{0});
  }
  SUBCASE("ANTI2") {
    const CommuteResult r = commute_iso(fixtures::anti2());
    CHECK(r.upper_of_lower.ps.size() == 4);
    CHECK(r.lower_of_upper.ps.size() == 4);
    for (const auto& [u, l] : r.unit_images) CHECK(r.iso[u] == l);
  }
  SUBCASE("CHAIN2") {
    const CommuteResult r = commute_iso(fixtures::chain2());
    CHECK(is_chain(r.upper_of_lower.ps.order(), 2));
    CHECK(is_chain(r.lower_of_upper.ps.order(), 2));
  }
  SUBCASE("every poset up to 3 points") {
    for (std::size_t n = 1; n <= 3; ++n)
      for (const Poset& x : enumerate_posets(n)) {
        const CommuteResult r = commute_iso(x);
        const Powerspace lx = build_powerspace(Kind::lower, x);
        // The composite's carrier is the set of nonempty antichains of P_L(X).
        REQUIRE(r.upper_of_lower.ps.size() == oracle::count_antichains(lx.order()));
        REQUIRE(r.lower_of_upper.ps.size() == r.upper_of_lower.ps.size());
        REQUIRE(check_distributive(r.upper_of_lower.space).passed());
        REQUIRE(check_distributive(r.lower_of_upper.space).passed());
        REQUIRE(preserves_both(r.upper_of_lower.space, r.lower_of_upper.space, r.iso));
        const auto& po = r.upper_of_lower.ps.order();
        const auto& qo = r.lower_of_upper.ps.order();
        for (std::size_t i = 0; i < po.size(); ++i)
          for (std::size_t j = 0; j < po.size(); ++j) REQUIRE(po.leq(i, j) == qo.leq(r.iso[i], r.iso[j]));
        for (const auto& [u, l] : r.unit_images) REQUIRE(r.iso[u] == l);
      }
  }
  SUBCASE("ANTI3") { CHECK(commute_iso(antichain(3)).upper_of_lower.ps.size() == 18); }
}
