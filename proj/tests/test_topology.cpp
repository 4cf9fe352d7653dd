#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "pspace/error.hpp"
#include "pspace/topology.hpp"

using namespace pspace;

namespace {

FiniteTopology from_masks(std::vector<std::string> points, std::initializer_list<oracle::Mask> opens) {
  std::vector<Subset> v;
  for (oracle::Mask m : opens) v.push_back(Subset::from_bits(points.size(), m));
  return FiniteTopology::make(std::move(points), std::move(v));
}

}  // namespace

TEST_CASE("topology axioms are enforced") {
  CHECK_THROWS_AS(from_masks({"0", "1"}, {0b00, 0b01}), Error);         // missing the full set
  CHECK_THROWS_AS(from_masks({"0", "1", "2"}, {0, 0b001, 0b010, 0b111}), Error);  // {0}∪{1} missing
  try {
    from_masks({"0", "1"}, {0b11, 0b01});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_topology);
  }
}

TEST_CASE("specialization_order") {
  SUBCASE("Sierpinski space") {
    const Poset p = specialization_order(from_masks({"0", "1"}, {0, 0b10, 0b11}));
    CHECK(p.leq(0, 1));
    CHECK_FALSE(p.leq(1, 0));
  }
  SUBCASE("discrete topology") {
    const Poset p = specialization_order(from_masks({"a", "b"}, {0, 0b01, 0b10, 0b11}));
    CHECK(p.same_order(antichain(2)));
  }
  SUBCASE("Alexandroff round trip of a two-chain") {
    CHECK(specialization_order(alexandroff_topology(chain(2))).same_order(chain(2)));
  }
  SUBCASE("indiscrete topology is not T0") {
    try {
      specialization_order(from_masks({"0", "1"}, {0, 0b11}));
      FAIL("expected not_t0");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::not_t0);
    }
  }
}

TEST_CASE("Alexandroff topology round trips for every poset up to 4 points") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      const FiniteTopology t = alexandroff_topology(p);
      std::set<oracle::Mask> got;
      for (const Subset& u : t.opens()) got.insert(oracle::mask_of(u));
      REQUIRE(got == oracle::alexandroff_opens(p));
      REQUIRE(specialization_order(t).same_order(p));
      for (std::size_t x = 0; x < n; ++x)
        REQUIRE(oracle::mask_of(t.neighbourhood(x)) == oracle::up(p, oracle::Mask{1} << x));
    }
}

TEST_CASE("is_directed_space") {
  SUBCASE("Alexandroff topologies are directed spaces") {
    for (const Poset& p : {fixtures::diamond(), fixtures::vee(), chain(3), antichain(3)}) {
      const DirectedSpaceVerdict v = is_directed_space(alexandroff_topology(p));
      CHECK(v.directed);
      CHECK_FALSE(v.witness);
    }
  }
  SUBCASE("Sierpinski space") {
    CHECK(is_directed_space(from_masks({"0", "1"}, {0, 0b10, 0b11})).directed);
  }
  SUBCASE("three-chain without the open {1,2} is rejected as not T0") {
    // Points 0 and 1 share every neighbourhood, so the input has no
    // specialization order to test against.
    try {
      is_directed_space(from_masks({"0", "1", "2"}, {0, 0b100, 0b111}));
      FAIL("expected not_t0");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::not_t0);
    }
  }
}

TEST_CASE("every T0 topology on up to 4 points is a directed space") {
  // Oracle: enumerate all families of subsets closed under ∪ and ∩ on n
  // points, keep the T0 ones, and compare with the upper sets of the
  // specialization order computed by hand.
  for (std::size_t n = 1; n <= 3; ++n) {
    const oracle::Mask all = oracle::full(n);
    const std::size_t subsets = std::size_t{1} << n;
    const std::uint64_t families = std::uint64_t{1} << subsets;
    std::size_t t0_count = 0;
    for (std::uint64_t fam = 0; fam < families; ++fam) {
      auto has = [&](oracle::Mask s) { return (fam >> s & 1U) != 0; };
      if (!has(0) || !has(all)) continue;
      bool closed = true;
      for (oracle::Mask a = 0; a <= all && closed; ++a)
        for (oracle::Mask b = 0; b <= all && closed; ++b)
          if (has(a) && has(b) && (!has(a | b) || !has(a & b))) closed = false;
      if (!closed) continue;
      std::vector<oracle::Mask> nbhd(n, all);
      for (oracle::Mask u = 0; u <= all; ++u)
        if (has(u))
          for (std::size_t x = 0; x < n; ++x)
            if (u >> x & 1U) nbhd[x] &= u;
      bool t0 = true;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
          if (nbhd[x] == nbhd[y]) t0 = false;
      if (!t0) continue;
      ++t0_count;

      std::vector<std::string> names;
      std::vector<Subset> opens;
      for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
      for (oracle::Mask u = 0; u <= all; ++u)
        if (has(u)) opens.push_back(Subset::from_bits(n, u));
      const FiniteTopology t = FiniteTopology::make(names, opens);
      const DirectedSpaceVerdict v = is_directed_space(t);
      REQUIRE(v.directed);
      // x ⊑ y iff every open containing x contains y.
      const Poset order = specialization_order(t);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) REQUIRE(order.leq(x, y) == ((nbhd[x] >> y & 1U) != 0));
    }
    // T0 topologies on n labelled points are in bijection with partial orders.
    CHECK(t0_count == enumerate_posets(n).size());
  }
}

TEST_CASE("net convergence in an Alexandroff space") {
  const Poset c = chain(3);
  const FiniteTopology t = alexandroff_topology(c);
  CHECK(net_converges(t, c, Subset::of(3, {0, 1}), 1));
  CHECK(net_converges(t, c, Subset::of(3, {0, 1}), 0));
  CHECK_FALSE(net_converges(t, c, Subset::of(3, {0, 1}), 2));
}
