#pragma once

// Independent brute-force helpers used as test oracles. They work on plain
// bitmasks and the raw leq relation only, never on the library's closure or
// canonical-form code.

#include <cstdint>
#include <set>
#include <vector>

#include "pspace/poset.hpp"
#include "pspace/powerspace.hpp"
#include "pspace/semilattice.hpp"
#include "pspace/subset.hpp"

namespace oracle {

using Mask = std::uint64_t;

inline Mask mask_of(const pspace::Subset& s) {
  Mask m = 0;
  for (std::size_t i = 0; i < s.universe(); ++i)
    if (s.contains(i)) m |= Mask{1} << i;
  return m;
}

inline Mask down(const pspace::Poset& p, Mask s) {
  Mask out = 0;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if ((s >> y & 1U) && p.leq(x, y)) out |= Mask{1} << x;
  return out;
}

inline Mask up(const pspace::Poset& p, Mask s) {
  Mask out = 0;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if ((s >> y & 1U) && p.leq(y, x)) out |= Mask{1} << x;
  return out;
}

inline bool is_lower(const pspace::Poset& p, Mask s) { return down(p, s) == s; }
inline bool is_upper(const pspace::Poset& p, Mask s) { return up(p, s) == s; }
inline bool is_convex(const pspace::Poset& p, Mask s) { return (down(p, s) & up(p, s)) == s; }

inline Mask full(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Nonempty lower / upper / convex subsets.
inline std::vector<Mask> lower_sets(const pspace::Poset& p) {
  std::vector<Mask> out;
  for (Mask s = 1; s <= full(p.size()); ++s)
    if (is_lower(p, s)) out.push_back(s);
  return out;
}
inline std::vector<Mask> upper_sets(const pspace::Poset& p) {
  std::vector<Mask> out;
  for (Mask s = 1; s <= full(p.size()); ++s)
    if (is_upper(p, s)) out.push_back(s);
  return out;
}
inline std::vector<Mask> convex_sets(const pspace::Poset& p) {
  std::vector<Mask> out;
  for (Mask s = 1; s <= full(p.size()); ++s)
    if (is_convex(p, s)) out.push_back(s);
  return out;
}

inline std::size_t count_antichains(const pspace::Poset& p) {
  std::size_t c = 0;
  for (Mask s = 1; s <= full(p.size()); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        if (i != j && (s >> i & 1U) && (s >> j & 1U) && p.leq(i, j)) ok = false;
    if (ok) ++c;
  }
  return c;
}

// All upper sets including ∅, as a set of masks.
inline std::set<Mask> alexandroff_opens(const pspace::Poset& p) {
  std::set<Mask> out{0};
  for (Mask s : upper_sets(p)) out.insert(s);
  return out;
}

// {op(a, b) : a ∈ x, b ∈ y}, closed to the shape of the kind.
inline Mask image(pspace::Kind k, const pspace::Poset& p, const pspace::OpTable& op, Mask x, Mask y) {
  Mask img = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if ((x >> a & 1U) && (y >> b & 1U)) img |= Mask{1} << op(a, b);
  if (k == pspace::Kind::lower) return down(p, img);
  if (k == pspace::Kind::upper) return up(p, img);
  return down(p, img) & up(p, img);
}

// Every jointly monotone binary table on p, by exhaustive enumeration.
inline std::vector<pspace::OpTable> monotone_tables(const pspace::Poset& p) {
  const std::size_t n = p.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) total *= n;
  std::vector<pspace::OpTable> out;
  for (std::size_t code = 0; code < total; ++code) {
    pspace::OpTable t(n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        t.set(i, j, c % n);
        c /= n;
      }
    bool mono = true;
    for (std::size_t a = 0; a < n && mono; ++a)
      for (std::size_t b = 0; b < n && mono; ++b)
        for (std::size_t a2 = 0; a2 < n && mono; ++a2)
          for (std::size_t b2 = 0; b2 < n && mono; ++b2)
            if (p.leq(a, a2) && p.leq(b, b2) && !p.leq(t(a, b), t(a2, b2))) mono = false;
    if (mono) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace oracle
