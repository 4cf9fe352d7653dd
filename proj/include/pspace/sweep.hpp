#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pspace/io.hpp"

namespace pspace {

struct SuiteResult {
  std::string name;
  // Largest base size actually swept (suites cap their own bound).
  std::size_t max_n = 0;
  std::size_t instances = 0;
  std::size_t failures = 0;
  // First few failures, each replayable from its JSON.
  std::vector<Json> witnesses;

  bool passed() const noexcept { return failures == 0; }
};

struct SweepOptions {
  std::size_t max_n = 3;
  // Empty means every suite.
  std::vector<std::string> suites;
};

struct SweepReport {
  std::vector<SuiteResult> suites;

  bool passed() const;
  // One line per suite plus a closing verdict; byte-stable for equal inputs.
  std::string summary() const;
  Json to_json() const;
};

// posets, semilattice, convergence, classic (capped at 5 base points);
// universal, topology, commute, functor, analyzer (capped at 3).
const std::vector<std::string>& suite_names();
std::size_t suite_cap(std::string_view suite);

// Throws invalid_argument for an unknown suite name.
SuiteResult run_suite(std::string_view suite, std::size_t max_n);
SweepReport run_sweep(const SweepOptions& options);

// Every expression of depth <= d over the given literals, built from choice
// and the binary operator `op` (depth 0 = literal). Subtrees are shared.
std::vector<ExprPtr> enumerate_programs(std::size_t depth, const std::vector<std::int64_t>& literals,
                                        const std::string& op);

// Set-image oracle for a lifted binary operator: the canonical element
// generated by {op(a, b) : a ∈ ⟦x⟧, b ∈ ⟦y⟧}.
Elem lift_oracle(Kind kind, const Poset& base, const OpTable& op, const Elem& x, const Elem& y);

}  // namespace pspace
