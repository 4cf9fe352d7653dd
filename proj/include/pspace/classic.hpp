#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pspace/poset.hpp"
#include "pspace/powerspace.hpp"
#include "pspace/semilattice.hpp"
#include "pspace/topology.hpp"

namespace pspace {

// A family of subsets of a base poset, ordered and combined as one of the
// classical powerdomains. sets[i] is the member set of carrier element i.
struct SetFamily {
  Poset base;
  std::vector<Subset> sets;
  Poset order;
  OpTable op;

  std::optional<std::size_t> find(const Subset& s) const;
};

// Nonempty lower sets, inclusion, union.
using ClosedSetLattice = SetFamily;
// Nonempty upper sets, reverse inclusion, union.
using CompactSaturatedFamily = SetFamily;

// A nonempty convex subset.
struct Lens {
  Subset members;

  // Throws empty_subset, or invalid_argument if members is not convex.
  static Lens make(const Poset& base, Subset members);
  // (max, min) as a convex powerspace element.
  Elem canonical_pair(const Poset& base) const;
};

// Bases are limited to 20 points (size_limit_exceeded).
ClosedSetLattice hoare(const Poset& p);
CompactSaturatedFamily smyth(const Poset& p);
// Every lens, Egli-Milner order (↓A ⊆ ↓B and ↑B ⊆ ↑A), op = convex hull of
// the union.
SetFamily lenses(const Poset& p);

enum class VietorisSide { lower, upper };

// lower: on hoare(p), generated by ⟨U⟩ = {A : A ∩ U ≠ ∅};
// upper: on smyth(p), generated by [U] = {K : K ⊆ U}; U ranges over the upper
// sets of p. Carriers are limited to 24 points.
FiniteTopology vietoris(const Poset& p, VietorisSide side);

// Topology generated by a subbase on `points`.
FiniteTopology generated_topology(std::vector<std::string> points, const std::vector<Subset>& subbase);

struct ClassicReport {
  Kind kind = Kind::lower;
  std::size_t powerspace_size = 0;
  std::size_t classic_size = 0;
  // to_classic[i] = classical element denoted by powerspace element i.
  std::vector<std::size_t> to_classic;
  bool bijection = false;
  bool order_iso = false;
  bool op_preserved = false;
  // Convergence-open sets equal the upper sets of the classical order, with
  // the specialization order recovered from them matching. Empty when the
  // powerspace is too large to enumerate its opens.
  std::optional<bool> topology_equal;
  // Vietoris topology equals the upper-set topology of the classical carrier.
  // Empty for the convex kind.
  std::optional<bool> vietoris_equal;
  std::string detail;

  bool passed() const;
};

inline constexpr std::size_t kClassicTopologyLimit = 10;

ClassicReport compare_to_classic(Kind kind, const Poset& p);

}  // namespace pspace
