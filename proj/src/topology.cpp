#include "pspace/topology.hpp"

#include <algorithm>
#include <set>

#include "pspace/error.hpp"

namespace pspace {

namespace {

constexpr std::size_t kMaxSweepPoints = 10;

std::string describe(const std::vector<std::string>& points, const Subset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ",";
    out += points[i];
    first = false;
  });
  return out + "}";
}

bool sorted_before(const Subset& a, const Subset& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return lex_less(a, b);
}

bool is_directed_in(const Poset& order, const Subset& d) {
  if (d.empty()) return false;
  bool ok = true;
  d.for_each([&](std::size_t i) {
    d.for_each([&](std::size_t j) {
      if (ok && !(order.up(i) & order.up(j)).intersects(d)) ok = false;
    });
  });
  return ok;
}

}  // namespace

FiniteTopology FiniteTopology::make(std::vector<std::string> points, std::vector<Subset> opens) {
  const std::size_t n = points.size();
  for (const auto& o : opens)
    if (o.universe() != n) throw Error(ErrorCode::invalid_topology, "open set width differs from point count");
  std::set<Subset> unique(opens.begin(), opens.end());
  if (!unique.count(Subset(n))) throw Error(ErrorCode::invalid_topology, "the empty set must be open");
  if (!unique.count(Subset::full(n))) throw Error(ErrorCode::invalid_topology, "the whole space must be open");
  for (const auto& a : unique)
    for (const auto& b : unique) {
      if (!unique.count(a & b))
        throw Error(ErrorCode::invalid_topology, "not closed under intersection: " + describe(points, a) +
                                                     " and " + describe(points, b));
      if (!unique.count(a | b))
        throw Error(ErrorCode::invalid_topology,
                    "not closed under union: " + describe(points, a) + " and " + describe(points, b));
    }
  FiniteTopology t;
  t.points_ = std::move(points);
  t.opens_.assign(unique.begin(), unique.end());
  std::sort(t.opens_.begin(), t.opens_.end(), sorted_before);
  return t;
}

bool FiniteTopology::is_open(const Subset& s) const {
  return std::find(opens_.begin(), opens_.end(), s) != opens_.end();
}

Subset FiniteTopology::neighbourhood(std::size_t i) const {
  Subset out = Subset::full(size());
  for (const auto& o : opens_)
    if (o.contains(i)) out &= o;
  return out;
}

FiniteTopology alexandroff_topology(const Poset& p) {
  if (p.size() > 20) throw Error(ErrorCode::size_limit_exceeded, "upper-set enumeration is limited to 20 points");
  std::vector<Subset> opens;
  const std::uint64_t total = std::uint64_t{1} << p.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Subset s = Subset::from_bits(p.size(), bits);
    if (is_upper_set(p, s)) opens.push_back(std::move(s));
  }
  return FiniteTopology::make(p.names(), std::move(opens));
}

Poset specialization_order(const FiniteTopology& t) {
  const std::size_t n = t.size();
  // Closed sets are complements of opens; closure{j} is the least closed set
  // containing j.
  std::vector<Subset> closure_of(n, Subset::full(n));
  for (const auto& o : t.opens()) {
    Subset closed = o.complement();
    for (std::size_t j = 0; j < n; ++j)
      if (closed.contains(j)) closure_of[j] &= closed;
  }
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = closure_of[j].contains(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rel[i][j] && rel[j][i])
        throw Error(ErrorCode::not_t0, "points '" + t.points()[i] + "' and '" + t.points()[j] +
                                           "' have the same open neighbourhoods");
  return Poset::from_relation(t.points(), rel);
}

bool net_converges(const FiniteTopology& t, const Poset& specialization, const Subset& d,
                   std::size_t x) {
  for (const auto& u : t.opens()) {
    if (!u.contains(x)) continue;
    bool eventually = false;
    d.for_each([&](std::size_t i) {
      if (!eventually && (specialization.up(i) & d).is_subset_of(u)) eventually = true;
    });
    if (!eventually) return false;
  }
  return true;
}

DirectedSpaceVerdict is_directed_space(const FiniteTopology& t) {
  const Poset order = specialization_order(t);
  const std::size_t n = t.size();
  if (n > kMaxSweepPoints)
    throw Error(ErrorCode::size_limit_exceeded, "directed-open sweep is limited to 10 points");

  // D(X): every directed subset with every limit it converges to.
  std::vector<std::pair<Subset, std::size_t>> limits;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    Subset d = Subset::from_bits(n, bits);
    if (!is_directed_in(order, d)) continue;
    for (std::size_t x = 0; x < n; ++x)
      if (net_converges(t, order, d, x)) limits.emplace_back(d, x);
  }

  std::vector<Subset> directed_open;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Subset u = Subset::from_bits(n, bits);
    bool open = true;
    for (const auto& [d, x] : limits)
      if (u.contains(x) && !d.intersects(u)) {
        open = false;
        break;
      }
    if (open) directed_open.push_back(std::move(u));
  }
  std::sort(directed_open.begin(), directed_open.end(), sorted_before);

  DirectedSpaceVerdict verdict;
  verdict.directed = true;
  for (const auto& u : directed_open)
    if (!t.is_open(u)) {
      verdict.directed = false;
      verdict.witness = u;
      break;
    }
  return verdict;
}

}  // namespace pspace
