#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "pspace/classic.hpp"
#include "pspace/error.hpp"

using namespace pspace;

namespace {

std::set<oracle::Mask> opens_of(const FiniteTopology& t) {
  std::set<oracle::Mask> out;
  for (const Subset& u : t.opens()) out.insert(oracle::mask_of(u));
  return out;
}

}  // namespace

TEST_CASE("hoare") {
  const ClosedSetLattice h = hoare(fixtures::anti2());
  REQUIRE(h.sets.size() == 3);
  CHECK(h.sets[2] == Subset::of(2, {0, 1}));
  CHECK(h.order.less(0, 2));
  CHECK(h.order.less(1, 2));
  CHECK(hoare(fixtures::chain2()).order.same_order(chain(2)));
  CHECK(hoare(single_point()).sets.size() == 1);
}

TEST_CASE("smyth") {
  const CompactSaturatedFamily s = smyth(fixtures::anti2());
  REQUIRE(s.sets.size() == 3);
  CHECK(s.order.less(2, 0));
  CHECK(s.order.less(2, 1));
  const CompactSaturatedFamily v = smyth(fixtures::vee());
  CHECK(v.sets.size() == 4);
  CHECK(smyth(single_point()).sets.size() == 1);
}

TEST_CASE("lenses") {
  const SetFamily c = lenses(fixtures::chain2());
  REQUIRE(c.sets.size() == 3);
  const std::size_t lo = *c.find(Subset::of(2, {0}));
  const std::size_t mid = *c.find(Subset::of(2, {0, 1}));
  const std::size_t hi = *c.find(Subset::of(2, {1}));
  CHECK(c.order.less(lo, mid));
  CHECK(c.order.less(mid, hi));
  CHECK(lenses(fixtures::anti2()).order.same_order(antichain(3)));

  const Poset d = fixtures::diamond();
  const Lens ab = Lens::make(d, Subset::of(4, {1, 2}));
  CHECK(ab.canonical_pair(d).max == Subset::of(4, {1, 2}));
  CHECK_THROWS_AS(Lens::make(d, Subset::of(4, {0, 3})), Error);
  CHECK_THROWS_AS(Lens::make(d, Subset(4)), Error);
}

TEST_CASE("lens canonical pairs round trip") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n))
      for (const Subset& s : lenses(p).sets) {
        const Elem e = Lens::make(p, s).canonical_pair(p);
        REQUIRE_NOTHROW(require_elem(Kind::convex, p, e));
        REQUIRE(denotation(Kind::convex, p, e) == s);
      }
}

TEST_CASE("vietoris") {
  SUBCASE("lower on ANTI2") {
    const FiniteTopology t = vietoris(fixtures::anti2(), VietorisSide::lower);
    CHECK(opens_of(t) == oracle::alexandroff_opens(hoare(fixtures::anti2()).order));
    // ⟨↑a⟩ = {{a}, {a,b}}.
    CHECK(t.is_open(Subset::of(3, {0, 2})));
  }
  SUBCASE("upper on CHAIN2") {
    const FiniteTopology t = vietoris(fixtures::chain2(), VietorisSide::upper);
    const CompactSaturatedFamily q = smyth(fixtures::chain2());
    const std::size_t top = *q.find(Subset::of(2, {1}));
    CHECK(opens_of(t) == std::set<oracle::Mask>{0, oracle::Mask{1} << top, 0b11});
  }
  SUBCASE("single point") {
    for (VietorisSide side : {VietorisSide::lower, VietorisSide::upper})
      CHECK(vietoris(single_point(), side).opens().size() == 2);
  }
}

TEST_CASE("Vietoris topologies are the upper-set topologies up to 4 points") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      if (hoare(p).sets.size() <= 24)
        REQUIRE(opens_of(vietoris(p, VietorisSide::lower)) == oracle::alexandroff_opens(hoare(p).order));
      if (smyth(p).sets.size() <= 24)
        REQUIRE(opens_of(vietoris(p, VietorisSide::upper)) == oracle::alexandroff_opens(smyth(p).order));
    }
}

TEST_CASE("generated_topology closes a subbase") {
  const FiniteTopology t = generated_topology({"0", "1", "2"}, {Subset::of(3, {0, 1}), Subset::of(3, {1, 2})});
  CHECK(opens_of(t) == std::set<oracle::Mask>{0, 0b010, 0b011, 0b110, 0b111});
}

TEST_CASE("compare_to_classic examples") {
  const ClassicReport lower = compare_to_classic(Kind::lower, fixtures::anti2());
  CHECK(lower.passed());
  CHECK(lower.topology_equal == true);
  CHECK(lower.vietoris_equal == true);
  const ClassicReport upper = compare_to_classic(Kind::upper, fixtures::vee());
  CHECK(upper.passed());
  CHECK(upper.classic_size == 4);
  const ClassicReport convex = compare_to_classic(Kind::convex, fixtures::chain2());
  CHECK(convex.passed());
  CHECK_FALSE(convex.vietoris_equal);
}

TEST_CASE("classical equivalence on every poset up to 3 points") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const Poset& p : enumerate_posets(n))
      for (Kind k : {Kind::lower, Kind::upper, Kind::convex}) {
        const ClassicReport r = compare_to_classic(k, p);
        INFO(r.detail);
        REQUIRE(r.passed());
        REQUIRE(r.bijection);
        REQUIRE(r.order_iso);
        REQUIRE(r.op_preserved);
      }
}
