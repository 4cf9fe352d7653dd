#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pspace/subset.hpp"

namespace pspace {

// A finite partially ordered set. Element identity is the index; names are
// only used for presentation and input. The order is stored as principal
// up-sets and down-sets, so ↑i and ↓i are O(1).
class Poset {
 public:
  Poset() = default;

  // Reflexive-transitive closure of `le` (pairs i <= j, by index). Throws
  // antisymmetry_violation if the closure contains a cycle of length >= 2.
  static Poset from_pairs(std::vector<std::string> names,
                          const std::vector<std::pair<std::size_t, std::size_t>>& le);

  // Builds directly from a full relation; the caller guarantees it is a
  // partial order. Used by constructions that compute the order themselves.
  static Poset from_relation(std::vector<std::string> names,
                             const std::vector<std::vector<bool>>& leq);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool leq(std::size_t i, std::size_t j) const noexcept { return up_[i].contains(j); }
  bool less(std::size_t i, std::size_t j) const noexcept { return i != j && leq(i, j); }
  bool comparable(std::size_t i, std::size_t j) const noexcept {
    return leq(i, j) || leq(j, i);
  }

  // ↑i and ↓i.
  const Subset& up(std::size_t i) const { return up_[i]; }
  const Subset& down(std::size_t i) const { return down_[i]; }

  Subset none() const { return Subset(size()); }
  Subset all() const { return Subset::full(size()); }

  // Covering pairs (transitive reduction), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  // Same carrier size and the same relation; names are ignored.
  bool same_order(const Poset& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
};

// Input construction from labelled pairs. Throws duplicate_label,
// unknown_label, or antisymmetry_violation.
Poset validate_poset(std::vector<std::string> names,
                     const std::vector<std::pair<std::string, std::string>>& le_pairs);

// Small named posets used throughout tests and examples.
Poset chain(std::size_t n);
Poset antichain(std::size_t n);
Poset single_point();

enum class Direction { down, up };
enum class Extremum { max, min };

Subset closure(const Poset& p, const Subset& s, Direction dir);
bool is_lower_set(const Poset& p, const Subset& s);
bool is_upper_set(const Poset& p, const Subset& s);
bool is_antichain(const Poset& p, const Subset& s);
// members = ↓members ∩ ↑members
bool is_convex(const Poset& p, const Subset& s);

// A set of pairwise incomparable elements. Only constructible through
// extremal_antichain or the checked factory, so the invariant always holds.
class Antichain {
 public:
  static Antichain checked(const Poset& p, Subset s);

  const Subset& elems() const noexcept { return elems_; }
  friend bool operator==(const Antichain&, const Antichain&) = default;

 private:
  explicit Antichain(Subset s) : elems_(std::move(s)) {}
  friend Antichain extremal_antichain(const Poset&, const Subset&, Extremum);

  Subset elems_;
};

// Maximal (resp. minimal) elements of a nonempty subset. Throws empty_subset.
Antichain extremal_antichain(const Poset& p, const Subset& s, Extremum which);

// Raw mask variant without the emptiness check; returns ∅ for ∅.
Subset maximal_elements(const Poset& p, const Subset& s);
Subset minimal_elements(const Poset& p, const Subset& s);

struct MonotoneMap {
  Poset src;
  Poset dst;
  std::vector<std::size_t> table;
};

// True iff table is total into dst and i <= j implies table[i] <= table[j].
bool check_monotone(const MonotoneMap& f);

// Carrier = pairs (x, y) at index x * |q| + y, ordered pointwise.
Poset tensor(const Poset& p, const Poset& q);

// Every partial order on {0, ..., n-1} (labels "0", "1", ...), in a fixed
// deterministic order.
std::vector<Poset> enumerate_posets(std::size_t n);

// Every map from src to dst that is monotone, in lexicographic table order.
std::vector<std::vector<std::size_t>> enumerate_monotone_maps(const Poset& src,
                                                              const Poset& dst);

}  // namespace pspace
