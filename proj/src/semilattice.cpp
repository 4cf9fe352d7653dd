#include "pspace/semilattice.hpp"

#include "pspace/error.hpp"

namespace pspace {

std::string_view to_string(SemilatticeKind kind) noexcept {
  switch (kind) {
    case SemilatticeKind::inflationary: return "inflationary";
    case SemilatticeKind::deflationary: return "deflationary";
    case SemilatticeKind::plain: return "plain";
  }
  return "plain";
}

bool LawReport::passed() const { return first_failure() == nullptr; }

const LawResult* LawReport::first_failure() const {
  for (const auto& r : results)
    if (!r.pass) return &r;
  return nullptr;
}

std::optional<std::size_t> least_upper_bound(const Poset& p, std::size_t x, std::size_t y) {
  Subset upper = p.up(x) & p.up(y);
  Subset least = minimal_elements(p, upper);
  if (least.count() != 1) return std::nullopt;
  return least.first();
}

std::optional<std::size_t> greatest_lower_bound(const Poset& p, std::size_t x, std::size_t y) {
  Subset lower = p.down(x) & p.down(y);
  Subset greatest = maximal_elements(p, lower);
  if (greatest.count() != 1) return std::nullopt;
  return greatest.first();
}

namespace {

template <class Bound>
std::optional<OpTable> bound_table(const Poset& p, Bound bound) {
  OpTable t(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      auto b = bound(p, x, y);
      if (!b) return std::nullopt;
      t.set(x, y, *b);
    }
  return t;
}

}  // namespace

std::optional<OpTable> join_table(const Poset& p) { return bound_table(p, least_upper_bound); }
std::optional<OpTable> meet_table(const Poset& p) { return bound_table(p, greatest_lower_bound); }

LawReport check_semilattice(const SemilatticeSpace& s) {
  const Poset& p = s.poset;
  const OpTable& op = s.op;
  const std::size_t n = p.size();
  if (op.size() != n) throw Error(ErrorCode::invalid_argument, "operation table size differs from carrier size");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (op(x, y) >= n) throw Error(ErrorCode::invalid_argument, "operation table entry out of range");

  LawReport report;
  auto add = [&](std::string law) -> LawResult& {
    report.results.push_back(LawResult{std::move(law), true, {}});
    return report.results.back();
  };
  auto fail = [](LawResult& r, std::vector<std::size_t> w) {
    if (r.pass) {
      r.pass = false;
      r.witness = std::move(w);
    }
  };

  LawResult& idem = add("idempotence");
  for (std::size_t x = 0; x < n; ++x)
    if (op(x, x) != x) fail(idem, {x});

  LawResult& comm = add("commutativity");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (op(x, y) != op(y, x)) fail(comm, {x, y});

  LawResult& assoc = add("associativity");
  for (std::size_t x = 0; x < n && assoc.pass; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (op(op(x, y), z) != op(x, op(y, z))) fail(assoc, {x, y, z});

  // Joint monotonicity: (x1,y1) <= (x2,y2) pointwise implies op(x1,y1) <= op(x2,y2).
  LawResult& mono = add("joint-monotonicity");
  for (std::size_t x1 = 0; x1 < n && mono.pass; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2) {
      if (!p.leq(x1, x2)) continue;
      for (std::size_t y1 = 0; y1 < n; ++y1)
        for (std::size_t y2 = 0; y2 < n; ++y2)
          if (p.leq(y1, y2) && !p.leq(op(x1, y1), op(x2, y2))) fail(mono, {x1, y1, x2, y2});
    }

  if (s.kind == SemilatticeKind::inflationary) {
    LawResult& infl = add("inflation");
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (!p.leq(x, op(x, y))) fail(infl, {x, y});
    LawResult& lub = add("least-upper-bound");
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        auto j = least_upper_bound(p, x, y);
        if (!j || *j != op(x, y)) fail(lub, {x, y});
      }
  } else if (s.kind == SemilatticeKind::deflationary) {
    LawResult& defl = add("deflation");
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (!p.leq(op(x, y), x)) fail(defl, {x, y});
    LawResult& glb = add("greatest-lower-bound");
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        auto m = greatest_lower_bound(p, x, y);
        if (!m || *m != op(x, y)) fail(glb, {x, y});
      }
  }
  return report;
}

std::vector<SemilatticeSpace> enumerate_semilattices(std::size_t n, SemilatticeKind kind) {
  std::vector<SemilatticeSpace> out;
  for (Poset& p : enumerate_posets(n)) {
    if (kind == SemilatticeKind::inflationary) {
      if (auto t = join_table(p)) out.push_back({std::move(p), std::move(*t), kind});
      continue;
    }
    if (kind == SemilatticeKind::deflationary) {
      if (auto t = meet_table(p)) out.push_back({std::move(p), std::move(*t), kind});
      continue;
    }
    // Off-diagonal cells of the upper triangle are free; the rest follows
    // from idempotence and commutativity.
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) cells.emplace_back(i, j);
    std::size_t total = 1;
    for (std::size_t k = 0; k < cells.size(); ++k) total *= n;
    for (std::size_t code = 0; code < total; ++code) {
      OpTable t(n);
      for (std::size_t i = 0; i < n; ++i) t.set(i, i, i);
      std::size_t c = code;
      for (auto [i, j] : cells) {
        t.set(i, j, c % n);
        t.set(j, i, c % n);
        c /= n;
      }
      SemilatticeSpace s{p, std::move(t), kind};
      if (check_semilattice(s).passed()) out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace pspace
