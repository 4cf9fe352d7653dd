#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pspace/powerspace.hpp"
#include "pspace/semilattice.hpp"

namespace pspace {

// A map between semilattice spaces. It is a homomorphism when it is monotone
// and table[op_src(u, v)] == op_dst(table[u], table[v]).
struct Homomorphism {
  SemilatticeSpace src;
  SemilatticeSpace dst;
  std::vector<std::size_t> table;
};

struct HomomorphismCheck {
  bool monotone = true;
  bool preserves_op = true;
  std::vector<std::size_t> witness;

  bool ok() const noexcept { return monotone && preserves_op; }
};

HomomorphismCheck check_homomorphism_detail(const Homomorphism& h);
bool check_homomorphism(const Homomorphism& h);

// Free extension of a monotone f : X -> Y.poset over the powerspace of the
// matching kind: every element is sent to the fold of Y's operation over f
// applied to its generators. Throws kind_mismatch or not_monotone.
Homomorphism extend(const Powerspace& ps, const std::vector<std::size_t>& f,
                    const SemilatticeSpace& target);
Homomorphism extend(Kind kind, const MonotoneMap& f, const SemilatticeSpace& target);

struct UniversalCase {
  std::vector<std::size_t> f;
  // Number of maps h with h ∘ unit = f that are homomorphisms.
  std::size_t homomorphisms = 0;
  bool matches_extension = false;

  bool ok() const noexcept { return homomorphisms == 1 && matches_extension; }
};

struct UniversalReport {
  // Result of check_semilattice on the target.
  LawReport target_laws;
  std::vector<UniversalCase> cases;

  bool passed() const;
};

// For each monotone f : X -> Y.poset, enumerates every function from the
// powerspace to Y agreeing with f on the unit images, counts the
// homomorphisms among them and compares the unique one with extend().
// Throws kind_mismatch, or size_limit_exceeded when a single f would need more
// than 2^24 candidate maps.
UniversalReport verify_universal_property(Kind kind, const Poset& x, const SemilatticeSpace& target);

// Action of the powerspace functor on a monotone map: image of the generators,
// canonicalised. Throws not_monotone.
Homomorphism functor_map(Kind kind, const MonotoneMap& f);
Homomorphism functor_map(const Powerspace& from, const Powerspace& to,
                         const std::vector<std::size_t>& f);

// --- ∨-∧ structure ------------------------------------------------------------

struct DistributiveSpace {
  Poset poset;
  OpTable join;
  OpTable meet;
};

// A powerspace together with the second operation induced by the base.
struct DistributivePowerspace {
  Powerspace ps;
  DistributiveSpace space;
};

// Lower powerspace with ↓F1 ⊓ ↓F2 = ↓{a ∧ b : a ∈ F1, b ∈ F2}.
// Throws meet_missing naming the first pair without a meet.
DistributivePowerspace meet_on_lower(const Poset& x);
// Upper powerspace with ↑F1 ⊔ ↑F2 = ↑{a ∨ b : a ∈ F1, b ∈ F2}.
// Throws join_missing.
DistributivePowerspace join_on_upper(const Poset& x);

// The same meet table on the lower powerspace obtained by two nested free
// extensions (first over x ↦ ↓(a ∧ x) for each a, then over a ↦ that
// extension evaluated at the second argument). Cross-check for meet_on_lower.
OpTable lower_meet_via_extension(const Poset& x);
OpTable upper_join_via_extension(const Poset& x);

struct DistributiveReport {
  LawReport join_laws;
  LawReport meet_laws;
  // a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)
  LawResult meet_over_join{"meet-distributes-over-join", true, {}};
  // a ∨ (b ∧ c) = (a ∨ b) ∧ (a ∨ c)
  LawResult join_over_meet{"join-distributes-over-meet", true, {}};

  bool passed() const;
};

DistributiveReport check_distributive(const DistributiveSpace& d);

// Homomorphism for both operations.
bool preserves_both(const DistributiveSpace& src, const DistributiveSpace& dst,
                    const std::vector<std::size_t>& table);

struct CommuteResult {
  DistributivePowerspace upper_of_lower;  // P_U(P_L(X)) with ⊔ from join_on_upper
  DistributivePowerspace lower_of_upper;  // P_L(P_U(X)) with ⊓ from meet_on_lower
  // iso[i] is the image in lower_of_upper of element i of upper_of_lower.
  std::vector<std::size_t> iso;
  // unit_images[x] = (index of ↑{↓x}, index of ↓{↑x}).
  std::vector<std::pair<std::size_t, std::size_t>> unit_images;
};

// The ∨-∧ isomorphism P_U(P_L(X)) -> P_L(P_U(X)) sending ↑(↓x) to ↓(↑x),
// obtained by extending the composite unit freely (lower extension into the
// join, then upper extension into the meet). Verified bijective, order- and
// operation-preserving; throws iso_failure with the witness otherwise.
CommuteResult commute_iso(const Poset& x);

}  // namespace pspace
