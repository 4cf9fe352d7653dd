// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracle.hpp"
#include "pspace/classic.hpp"
#include "pspace/error.hpp"
#include "pspace/freealg.hpp"
#include "pspace/ndsem.hpp"
#include "pspace/sweep.hpp"

using namespace pspace;

namespace {

constexpr Kind kKinds[] = {Kind::lower, Kind::upper, Kind::convex};

struct Tally {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++instances;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

std::string describe(const Poset& p) {
  std::string s = std::to_string(p.size()) + " points, covers";
  for (auto [a, b] : p.covers()) s += " " + p.name(a) + "<" + p.name(b);
  return s;
}

Tally ac1_semilattice_laws() {
  Tally t;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n))
      for (Kind k : kKinds) {
        const Powerspace ps = build_powerspace(k, p);
        const SemilatticeSpace s = ps.as_semilattice();
        t.check(s.kind == semilattice_kind(k) && check_semilattice(s).passed(),
                std::string(to_string(k)) + " over " + describe(p));
      }
  return t;
}

Tally ac2_universal_property() {
  Tally t;
  for (Kind k : kKinds) {
    std::vector<SemilatticeSpace> targets;
    for (std::size_t m = 1; m <= 3; ++m)
      for (auto& y : enumerate_semilattices(m, semilattice_kind(k))) targets.push_back(std::move(y));
    for (std::size_t n = 1; n <= 3; ++n)
      for (const Poset& x : enumerate_posets(n))
        for (const SemilatticeSpace& y : targets) {
          const UniversalReport r = verify_universal_property(k, x, y);
          // Every monotone f must appear as a case.
          const bool complete = r.cases.size() == enumerate_monotone_maps(x, y.poset).size();
          t.check(complete && r.passed(), std::string(to_string(k)) + " over " + describe(x));
        }
  }
  return t;
}

// Directed families of a finite powerspace are the subsets with a greatest
// member m; they are enumerated as m plus any subset of the elements below m.
template <class Fn>
void for_each_directed_family(const Powerspace& ps, Fn&& fn) {
  const Poset& o = ps.order();
  for (std::size_t m = 0; m < ps.size(); ++m) {
    std::vector<std::size_t> below;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (o.less(i, m)) below.push_back(i);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << below.size()); ++bits) {
      std::vector<Elem> fam{ps.element(m)};
      for (std::size_t i = 0; i < below.size(); ++i)
        if (bits >> i & 1U) fam.push_back(ps.element(below[i]));
      fn(fam, m);
    }
  }
}

Tally ac3_convergence() {
  Tally t;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      const Powerspace ps = build_powerspace(Kind::upper, p);
      for_each_directed_family(ps, [&](const std::vector<Elem>& fam, std::size_t) {
        // ⋂{↑G} ⊆ ↑F computed on bitmasks.
        oracle::Mask meet = oracle::full(n);
        for (const Elem& g : fam) meet &= oracle::mask_of(denotation(Kind::upper, p, g));
        for (const Elem& target : ps.elements()) {
          const bool criterion = (meet & ~oracle::mask_of(denotation(Kind::upper, p, target))) == 0;
          t.check(converges_upper(p, fam, target) == criterion, "upper criterion over " + describe(p));
        }
      });
    }
  for (std::size_t n = 1; n <= 3; ++n)
    for (const Poset& p : enumerate_posets(n))
      for (Kind k : kKinds) {
        const Powerspace ps = build_powerspace(k, p);
        for_each_directed_family(ps, [&](const std::vector<Elem>& fam, std::size_t m) {
          for (std::size_t target = 0; target < ps.size(); ++target)
            t.check(converges(k, p, fam, ps.element(target)) == ps.order().leq(target, m),
                    std::string(to_string(k)) + " collapse over " + describe(p));
        });
      }
  return t;
}

Tally ac4_topology() {
  Tally t;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const Poset& p : enumerate_posets(n))
      for (Kind k : kKinds) {
        const Powerspace ps = build_powerspace(k, p);
        const FiniteTopology conv = ConvergenceStructure(ps).topology();
        std::set<oracle::Mask> got;
        for (const Subset& u : conv.opens()) got.insert(oracle::mask_of(u));
        bool ok = got == oracle::alexandroff_opens(ps.order());
        try {
          ok = ok && specialization_order(conv).same_order(ps.order());
        } catch (const Error&) {
          ok = false;
        }
        t.check(ok, std::string(to_string(k)) + " over " + describe(p));
      }
  return t;
}

Tally ac5_classic() {
  Tally t;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n))
      for (Kind k : kKinds) {
        const ClassicReport r = compare_to_classic(k, p);
        const bool vietoris_ran = k == Kind::convex || r.vietoris_equal.has_value();
        t.check(r.bijection && r.order_iso && r.op_preserved && vietoris_ran && r.passed(),
                std::string(to_string(k)) + " over " + describe(p) + ": " + r.detail);
      }
  return t;
}

Tally ac6_commute() {
  Tally t;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const Poset& x : enumerate_posets(n)) {
      const std::string where = describe(x);
      CommuteResult r;
      try {
        r = commute_iso(x);
      } catch (const Error& e) {
        t.check(false, where + ": " + e.what());
        continue;
      }
      const auto& src = r.upper_of_lower;
      const auto& dst = r.lower_of_upper;
      const std::size_t m = src.ps.size();
      bool bijective = dst.ps.size() == m;
      std::vector<bool> hit(dst.ps.size(), false);
      for (std::size_t v : r.iso) {
        if (v >= hit.size() || hit[v]) bijective = false;
        else hit[v] = true;
      }
      bool order_iso = bijective;
      for (std::size_t i = 0; i < m && order_iso; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (src.ps.order().leq(i, j) != dst.ps.order().leq(r.iso[i], r.iso[j])) order_iso = false;
      bool units = r.unit_images.size() == n;
      for (std::size_t v = 0; v < r.unit_images.size(); ++v) {
        const auto [u, l] = r.unit_images[v];
        // ↑{↓x} and ↓{↑x}, rebuilt from the inner powerspaces.
        const Powerspace inner_l = build_powerspace(Kind::lower, x);
        const Powerspace inner_u = build_powerspace(Kind::upper, x);
        const Elem up_down = unit_elem(Kind::upper, inner_l.order(), inner_l.unit()[v]);
        const Elem down_up = unit_elem(Kind::lower, inner_u.order(), inner_u.unit()[v]);
        units = units && src.ps.element(u) == up_down && dst.ps.element(l) == down_up && r.iso[u] == l;
      }
      t.check(bijective && order_iso && units && preserves_both(src.space, dst.space, r.iso) &&
                  check_distributive(src.space).passed() && check_distributive(dst.space).passed(),
              where);
    }
  return t;
}

Tally ac7_analyzer() {
  Tally t;
  const AbstractDomain sign = sign_domain();
  auto verdict = [&](const char* prog, Mode m) { return analyze(*parse_program(prog), sign, m); };
  const std::size_t neg = *sign.poset.index_of("Neg");
  const std::size_t pos = *sign.poset.index_of("Pos");

  const Verdict may = verdict("choice(-1,2)", Mode::may);
  t.check(may.element.max == Subset::of(3, {neg, pos}) && render_verdict(may) == "may: {Neg, Pos}",
          "choice(-1,2) may");
  const Verdict must = verdict("choice(-1,2)", Mode::must);
  t.check(must.element.min == Subset::of(3, {neg, pos}) && must.element.max.empty(), "choice(-1,2) must");
  const Verdict one = verdict("choice(1,2)", Mode::must);
  t.check(one.element.min == Subset::of(3, {pos}) && render_verdict(one) == "must: at least Pos",
          "choice(1,2) must");

  for (std::size_t n = 1; n <= 3; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      const std::vector<OpTable> tables = oracle::monotone_tables(p);
      for (Kind k : kKinds) {
        const Powerspace ps = build_powerspace(k, p);
        std::vector<oracle::Mask> den;
        for (const Elem& e : ps.elements()) den.push_back(oracle::mask_of(denotation(k, p, e)));
        for (const OpTable& op : tables)
          for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = 0; j < ps.size(); ++j) {
              const Elem got = lift_binop(k, p, op, ps.element(i), ps.element(j));
              const bool ok = ps.find(got).has_value() &&
                              oracle::mask_of(denotation(k, p, got)) == oracle::image(k, p, op, den[i], den[j]);
              t.check(ok, std::string(to_string(k)) + " lift over " + describe(p));
            }
      }
    }
  return t;
}

Tally ac8_determinism() {
  Tally t;
  const SweepOptions opts{3, {}};
  const SweepReport a = run_sweep(opts);
  const SweepReport b = run_sweep(opts);
  t.check(a.summary() == b.summary(), "summaries differ");
  t.check(a.to_json().dump() == b.to_json().dump(), "JSON reports differ");
  t.check(a.passed(), "sweep failed:\n" + a.summary());
  return t;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Tally()>> criteria[] = {
      {"AC1 semilattice laws of every powerspace over posets up to 4 points", ac1_semilattice_laws},
      {"AC2 universal property against every target up to 3 points", ac2_universal_property},
      {"AC3 convergence criterion and finite collapse", ac3_convergence},
      {"AC4 convergence-open sets are the upper sets", ac4_topology},
      {"AC5 classical powerdomains and Vietoris topologies", ac5_classic},
      {"AC6 commuting the lower and upper powerspaces", ac6_commute},
      {"AC7 analyzer verdicts and lifted operators", ac7_analyzer},
      {"AC8 sweep determinism", ac8_determinism},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = run();
    } catch (const std::exception& e) {
      t.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = t.failures == 0 && t.instances > 0;
    all = all && ok;
    std::printf("%s %s (%zu checks, %zu failures, %.1fs)\n", ok ? "PASS" : "FAIL", name, t.instances,
                t.failures, secs);
    if (!ok) std::printf("  first failure: %s\n", t.first.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
