#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pspace/poset.hpp"
#include "pspace/semilattice.hpp"
#include "pspace/topology.hpp"

namespace pspace {

enum class Kind { lower, upper, convex };

std::string_view to_string(Kind kind) noexcept;
std::optional<Kind> parse_kind(std::string_view text) noexcept;
// lower -> inflationary, upper -> deflationary, convex -> plain.
SemilatticeKind semilattice_kind(Kind kind) noexcept;

// Canonical element of a powerspace over a base poset.
//   lower:  max = maximal generators of ↓F, min = ∅
//   upper:  min = minimal generators of ↑F, max = ∅
//   convex: max = maximal elements of F, min = minimal elements of F, which
//           determine the pair (↓F, ↑F)
// Two elements are equal iff they denote the same set(s).
struct Elem {
  Subset max;
  Subset min;

  friend bool operator==(const Elem&, const Elem&) = default;
  friend bool operator<(const Elem& a, const Elem& b) {
    return a.max < b.max || (a.max == b.max && a.min < b.min);
  }
};

// Canonical element generated by a nonempty finite F. Throws empty_subset.
Elem canonical(Kind kind, const Poset& base, const Subset& generators);
Elem unit_elem(Kind kind, const Poset& base, std::size_t x);
// lower: max; upper: min; convex: max ∪ min.
Subset generators(Kind kind, const Elem& e);
// ↓max (lower), ↑min (upper), ↓max ∩ ↑min (convex).
Subset denotation(Kind kind, const Poset& base, const Elem& e);

// Throws base_mismatch or kind_mismatch when e is not a canonical element of
// this kind over this base.
void require_elem(Kind kind, const Poset& base, const Elem& e);

// lower: ↓e1 ⊆ ↓e2; upper: ↑e2 ⊆ ↑e1; convex: both (Egli-Milner).
bool compare(Kind kind, const Poset& base, const Elem& e1, const Elem& e2);
// Canonical element generated by the union of generators.
Elem combine(Kind kind, const Poset& base, const Elem& e1, const Elem& e2);

// Human-readable label: ↓{a,b}, ↑{a,b}, or {a,b}^ (for convex the generators
// max ∪ min are shown).
std::string elem_label(Kind kind, const Poset& base, const Elem& e);

inline constexpr std::size_t kDefaultElementLimit = std::size_t{1} << 20;

class Powerspace {
 public:
  Kind kind() const noexcept { return kind_; }
  const Poset& base() const noexcept { return base_; }
  const std::vector<Elem>& elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  const Elem& element(std::size_t i) const { return elems_[i]; }
  const Poset& order() const noexcept { return order_; }
  const OpTable& op() const noexcept { return op_; }
  // unit()[x] is the index of the element generated by {x}.
  const std::vector<std::size_t>& unit() const noexcept { return unit_; }

  std::optional<std::size_t> find(const Elem& e) const;
  // Throws invalid_argument if e is not an element.
  std::size_t index_of(const Elem& e) const;

  SemilatticeSpace as_semilattice() const;

 private:
  friend Powerspace build_powerspace(Kind, const Poset&, std::size_t);

  Kind kind_ = Kind::lower;
  Poset base_;
  std::vector<Elem> elems_;
  Poset order_;
  OpTable op_;
  std::vector<std::size_t> unit_;
  std::map<Elem, std::size_t> index_;
};

// Enumerates every canonical element (nonempty antichains for lower/upper,
// consistent antichain pairs for convex), sorted by the size of the denoted
// set and then lexicographically by generators. Throws empty_poset, or
// size_limit_exceeded once more than `limit` candidates have been produced.
Powerspace build_powerspace(Kind kind, const Poset& base,
                            std::size_t limit = kDefaultElementLimit);

// Every nonempty antichain of p in deterministic order. Throws
// size_limit_exceeded past `limit`.
std::vector<Subset> enumerate_antichains(const Poset& p, std::size_t limit = kDefaultElementLimit);

// --- Convergence -----------------------------------------------------------

// How the directed subsets D_i of the base are searched.
//   principal:  every D_i is a singleton {m}. Conditions depend on D_i only
//               through lim D_i = ↓max D_i and through the tuples of the
//               product, so replacing D_i by {max D_i} never breaks a witness;
//               the search is therefore complete on finite bases.
//   exhaustive: every finite set of directed subsets of the base is tried
//               literally (oracle mode, small bases only).
enum class Search { principal, exhaustive };

// Nonempty and every pair has an upper bound inside the family.
bool is_directed_family(Kind kind, const Poset& base, std::span<const Elem> family);

// D -> x in the Alexandroff topology of the base: some d in D is above x.
bool directed_converges(const Poset& base, const Subset& d, std::size_t x);

// The ⇒_L, ⇒_U and ⇒_P relations of a directed family to a target.
// Throw not_directed if the family is not directed.
bool converges_lower(const Poset& base, std::span<const Elem> family, const Elem& target,
                     Search search = Search::principal);
bool converges_upper(const Poset& base, std::span<const Elem> family, const Elem& target,
                     Search search = Search::principal);
bool converges_convex(const Poset& base, std::span<const Elem> family, const Elem& target,
                      Search search = Search::principal);
bool converges(Kind kind, const Poset& base, std::span<const Elem> family, const Elem& target,
               Search search = Search::principal);

// ⋂{↑G : ↑G ∈ family} ⊆ ↑target.
bool upper_intersection_criterion(const Poset& base, std::span<const Elem> family,
                                  const Elem& target);

// All (directed family, target) pairs of a powerspace with family ⇒ target,
// precomputed so that convergence-openness of many subsets is cheap.
// Limited to powerspaces with at most 20 elements.
class ConvergenceStructure {
 public:
  explicit ConvergenceStructure(const Powerspace& ps, Search search = Search::principal);

  // Every target in u is reached only by families that meet u.
  bool is_open(const Subset& u) const;
  // All convergence-open subsets; requires at most 16 elements.
  FiniteTopology topology() const;
  std::size_t pair_count() const noexcept { return pairs_.size(); }

 private:
  struct Pair {
    Subset family;
    std::size_t target;
  };
  std::vector<std::string> labels_;
  std::vector<Pair> pairs_;
};

bool is_convergence_open(const Powerspace& ps, const Subset& u);

}  // namespace pspace
