#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pspace/poset.hpp"

namespace pspace {

// Square table of a binary operation on element indices.
class OpTable {
 public:
  OpTable() = default;
  explicit OpTable(std::size_t n) : n_(n), cells_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::size_t v) { cells_[i * n_ + j] = v; }

  friend bool operator==(const OpTable&, const OpTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> cells_;
};

enum class SemilatticeKind { inflationary, deflationary, plain };

std::string_view to_string(SemilatticeKind kind) noexcept;

struct SemilatticeSpace {
  Poset poset;
  OpTable op;
  SemilatticeKind kind = SemilatticeKind::plain;
};

struct LawResult {
  std::string law;
  bool pass = true;
  // Element indices of the first violating instance (pair or triple).
  std::vector<std::size_t> witness;
};

struct LawReport {
  std::vector<LawResult> results;

  bool passed() const;
  const LawResult* first_failure() const;
};

// Idempotence, associativity, commutativity, joint monotonicity, and per kind
// inflation (x ⊕ y ≥ x) plus least-upper-bound coincidence, or deflation plus
// greatest-lower-bound coincidence.
LawReport check_semilattice(const SemilatticeSpace& s);

std::optional<std::size_t> least_upper_bound(const Poset& p, std::size_t x, std::size_t y);
std::optional<std::size_t> greatest_lower_bound(const Poset& p, std::size_t x, std::size_t y);

// Binary join / meet table; std::nullopt if some pair lacks one.
std::optional<OpTable> join_table(const Poset& p);
std::optional<OpTable> meet_table(const Poset& p);

// Every semilattice space of the given kind whose carrier is one of the
// labelled posets on n elements. Plain kinds enumerate all commutative
// idempotent tables and keep those passing check_semilattice.
std::vector<SemilatticeSpace> enumerate_semilattices(std::size_t n, SemilatticeKind kind);

}  // namespace pspace
