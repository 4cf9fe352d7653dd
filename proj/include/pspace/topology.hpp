#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pspace/poset.hpp"
#include "pspace/subset.hpp"

namespace pspace {

// A topology on a finite set of named points, given by its open sets.
class FiniteTopology {
 public:
  // Validates the axioms (∅ and the full set are open; closed under pairwise
  // ∩ and ∪) and stores the opens sorted and deduplicated. Throws
  // invalid_topology with the offending pair on failure.
  static FiniteTopology make(std::vector<std::string> points, std::vector<Subset> opens);

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::vector<Subset>& opens() const noexcept { return opens_; }
  bool is_open(const Subset& s) const;

  // Smallest open set containing point i.
  Subset neighbourhood(std::size_t i) const;

 private:
  std::vector<std::string> points_;
  std::vector<Subset> opens_;
};

// All upper sets of p.
FiniteTopology alexandroff_topology(const Poset& p);

// i ⊑ j iff i lies in the closure of {j}. Throws not_t0 when two points have
// the same open neighbourhoods.
Poset specialization_order(const FiniteTopology& t);

struct DirectedSpaceVerdict {
  bool directed = false;
  // A directed-open set that is not open, when directed == false.
  std::optional<Subset> witness;
};

// Sweeps every directed subset D and every limit x of D (net convergence in
// t), collects the directed-open sets and compares them with t's opens.
// Exponential in the number of points; limited to 16 points.
DirectedSpaceVerdict is_directed_space(const FiniteTopology& t);

// Net convergence of a directed subset in t: every open neighbourhood of x
// eventually contains D.
bool net_converges(const FiniteTopology& t, const Poset& specialization, const Subset& d,
                   std::size_t x);

}  // namespace pspace
