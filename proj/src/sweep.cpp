#include "pspace/sweep.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "pspace/error.hpp"

namespace pspace {

namespace {

constexpr std::size_t kMaxWitnesses = 5;
constexpr std::array<Kind, 3> kKinds{Kind::lower, Kind::upper, Kind::convex};

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}

  void check(bool ok, const std::function<Json()>& witness) {
    ++r_.instances;
    if (ok) return;
    ++r_.failures;
    if (r_.witnesses.size() < kMaxWitnesses) {
      Json w = witness();
      w["suite"] = r_.name;
      r_.witnesses.push_back(std::move(w));
    }
  }

  // Runs body; a library exception counts as one failed instance.
  void guard(const std::function<void()>& body, const std::function<Json()>& witness) {
    try {
      body();
    } catch (const Error& e) {
      check(false, [&] {
        Json w = witness();
        w["error"] = std::string(to_string(e.code())) + ": " + e.what();
        return w;
      });
    }
  }

 private:
  SuiteResult& r_;
};

Json kind_witness(const Poset& p, Kind kind) {
  Json w;
  w["poset"] = poset_to_json(p);
  w["kind"] = std::string(to_string(kind));
  return w;
}

Json map_json(const Poset& src, const Poset& dst, const std::vector<std::size_t>& f) {
  Json m = Json::object();
  for (std::size_t i = 0; i < f.size(); ++i) m[src.name(i)] = dst.name(f[i]);
  return m;
}

std::vector<Poset> posets_upto(std::size_t n) {
  std::vector<Poset> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& p : enumerate_posets(k)) out.push_back(std::move(p));
  return out;
}

// Directed subsets of a finite poset are exactly the nonempty subsets with a
// greatest element.
template <class Fn>
void for_each_directed(const Poset& order, Fn fn) {
  for (std::size_t m = 0; m < order.size(); ++m) {
    Subset below = order.down(m);
    below.erase(m);
    const auto rest = below.elements();
    const std::uint64_t total = std::uint64_t{1} << rest.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      Subset fam = Subset::singleton(order.size(), m);
      for (std::size_t k = 0; k < rest.size(); ++k)
        if ((bits >> k) & 1U) fam.insert(rest[k]);
      fn(fam, m);
    }
  }
}

std::vector<Elem> members(const Powerspace& ps, const Subset& fam) {
  std::vector<Elem> out;
  fam.for_each([&](std::size_t i) { out.push_back(ps.element(i)); });
  return out;
}

std::size_t fold_over(const OpTable& op, const Subset& gens, const std::vector<std::size_t>& f) {
  std::size_t acc = 0;
  bool first = true;
  gens.for_each([&](std::size_t g) {
    acc = first ? f[g] : op(acc, f[g]);
    first = false;
  });
  return acc;
}

// --- suites ---------------------------------------------------------------------

void suite_posets(SuiteResult& r, Recorder& rec) {
  // Labelled posets on n points (OEIS A001035).
  const std::size_t expected[] = {0, 1, 3, 19, 219, 4231};
  for (std::size_t n = 1; n <= r.max_n; ++n) {
    const auto all = enumerate_posets(n);
    rec.check(all.size() == expected[n], [&] {
      Json w;
      w["n"] = n;
      w["count"] = all.size();
      w["expected"] = expected[n];
      return w;
    });
    for (const auto& p : all) {
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (p.leq(i, j) != p.down(j).contains(i)) ok = false;
          if (i != j && p.leq(i, j) && p.leq(j, i)) ok = false;
          for (std::size_t k = 0; k < n; ++k)
            if (p.leq(i, j) && p.leq(j, k) && !p.leq(i, k)) ok = false;
        }
      for (std::size_t i = 0; i < n; ++i) ok = ok && p.leq(i, i);
      ok = ok && Poset::from_pairs(p.names(), p.covers()).same_order(p);

      std::size_t brute = 0;
      for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits)
        if (is_antichain(p, Subset::from_bits(n, bits))) ++brute;
      ok = ok && enumerate_antichains(p).size() == brute;
      rec.check(ok, [&] {
        Json w;
        w["poset"] = poset_to_json(p);
        return w;
      });
    }
  }
}

void suite_semilattice(SuiteResult& r, Recorder& rec) {
  for (const auto& p : posets_upto(r.max_n))
    for (Kind kind : kKinds)
      rec.guard(
          [&] {
            const Powerspace ps = build_powerspace(kind, p);
            const LawReport laws = check_semilattice(ps.as_semilattice());
            bool embeds = true;
            for (std::size_t x = 0; x < p.size(); ++x)
              for (std::size_t y = 0; y < p.size(); ++y)
                if (p.leq(x, y) != ps.order().leq(ps.unit()[x], ps.unit()[y])) embeds = false;
            rec.check(laws.passed() && embeds, [&] {
              Json w = kind_witness(p, kind);
              w["laws"] = law_report_to_json(laws, ps.order());
              w["unit_embeds"] = embeds;
              return w;
            });
          },
          [&] { return kind_witness(p, kind); });
}

void suite_universal(SuiteResult& r, Recorder& rec) {
  const auto xs = posets_upto(r.max_n);
  for (Kind kind : kKinds) {
    std::vector<SemilatticeSpace> ys;
    for (std::size_t m = 1; m <= r.max_n; ++m)
      for (auto& y : enumerate_semilattices(m, semilattice_kind(kind))) ys.push_back(std::move(y));
    for (const auto& x : xs) {
      const Powerspace ps = build_powerspace(kind, x);
      // Generating sets of each element, for the fold-independence check.
      std::vector<std::vector<Subset>> gen_sets(ps.size());
      for (std::size_t i = 0; i < ps.size(); ++i) {
        const Subset den = denotation(kind, x, ps.element(i));
        const auto pts = den.elements();
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << pts.size()); ++bits) {
          Subset f = x.none();
          for (std::size_t k = 0; k < pts.size(); ++k)
            if ((bits >> k) & 1U) f.insert(pts[k]);
          if (canonical(kind, x, f) == ps.element(i)) gen_sets[i].push_back(std::move(f));
        }
      }
      for (const auto& y : ys)
        rec.guard(
            [&] {
              const UniversalReport rep = verify_universal_property(kind, x, y);
              rec.check(rep.passed(), [&] {
                Json w = kind_witness(x, kind);
                w["target"] = semilattice_to_json(y);
                w["report"] = universal_report_to_json(rep, x, y);
                return w;
              });
              for (const auto& c : rep.cases) {
                const Homomorphism h = extend(ps, c.f, y);
                bool ok = check_homomorphism(h);
                for (std::size_t p = 0; p < x.size(); ++p) ok = ok && h.table[ps.unit()[p]] == c.f[p];
                for (std::size_t i = 0; i < ps.size(); ++i)
                  for (const auto& g : gen_sets[i]) ok = ok && fold_over(y.op, g, c.f) == h.table[i];
                rec.check(ok, [&] {
                  Json w = kind_witness(x, kind);
                  w["target"] = semilattice_to_json(y);
                  w["f"] = map_json(x, y.poset, c.f);
                  w["check"] = "extension postconditions";
                  return w;
                });
              }
            },
            [&] {
              Json w = kind_witness(x, kind);
              w["target"] = semilattice_to_json(y);
              return w;
            });
    }
  }
}

void suite_convergence(SuiteResult& r, Recorder& rec) {
  for (const auto& p : posets_upto(r.max_n)) {
    const Powerspace ups = build_powerspace(Kind::upper, p);
    for_each_directed(ups.order(), [&](const Subset& fam, std::size_t) {
      const auto family = members(ups, fam);
      for (std::size_t t = 0; t < ups.size(); ++t) {
        const bool conv = converges_upper(p, family, ups.element(t));
        const bool crit = upper_intersection_criterion(p, family, ups.element(t));
        rec.check(conv == crit, [&] {
          Json w = kind_witness(p, Kind::upper);
          w["family"] = fam.elements();
          w["target"] = t;
          w["converges"] = conv;
          w["criterion"] = crit;
          return w;
        });
      }
    });
    if (p.size() > 3) continue;
    for (Kind kind : kKinds) {
      const Powerspace ps = build_powerspace(kind, p);
      const bool literal = p.size() <= 2;
      for_each_directed(ps.order(), [&](const Subset& fam, std::size_t top) {
        const auto family = members(ps, fam);
        for (std::size_t t = 0; t < ps.size(); ++t) {
          const bool expect = ps.order().leq(t, top);
          const bool got = converges(kind, p, family, ps.element(t));
          const bool got_literal =
              literal ? converges(kind, p, family, ps.element(t), Search::exhaustive) : expect;
          rec.check(got == expect && got_literal == expect, [&] {
            Json w = kind_witness(p, kind);
            w["family"] = fam.elements();
            w["target"] = t;
            w["expected"] = expect;
            w["principal"] = got;
            w["exhaustive"] = got_literal;
            return w;
          });
        }
      });
    }
  }
}

void suite_topology(SuiteResult& r, Recorder& rec) {
  for (const auto& p : posets_upto(r.max_n))
    for (Kind kind : kKinds)
      rec.guard(
          [&] {
            const Powerspace ps = build_powerspace(kind, p);
            const FiniteTopology conv = ConvergenceStructure(ps).topology();
            const FiniteTopology upper = alexandroff_topology(ps.order());
            const bool same_opens = conv.opens() == upper.opens();
            const bool same_order = specialization_order(conv).same_order(ps.order());
            rec.check(same_opens && same_order, [&] {
              Json w = kind_witness(p, kind);
              w["convergence_opens"] = topology_to_json(conv)["opens"];
              w["upper_sets"] = topology_to_json(upper)["opens"];
              return w;
            });
          },
          [&] { return kind_witness(p, kind); });
}

void suite_classic(SuiteResult& r, Recorder& rec) {
  for (const auto& p : posets_upto(r.max_n))
    for (Kind kind : kKinds)
      rec.guard(
          [&] {
            const ClassicReport rep = compare_to_classic(kind, p);
            rec.check(rep.passed(), [&] {
              Json w = kind_witness(p, kind);
              w["report"] = classic_report_to_json(rep);
              return w;
            });
            // Lens round trip.
            if (kind == Kind::convex) {
              const SetFamily ls = lenses(p);
              for (const auto& s : ls.sets) {
                const Elem e = Lens::make(p, s).canonical_pair(p);
                const bool ok = denotation(Kind::convex, p, e) == s && canonical(Kind::convex, p, s) == e;
                rec.check(ok, [&] {
                  Json w = kind_witness(p, kind);
                  w["lens"] = s.elements();
                  return w;
                });
              }
            }
          },
          [&] { return kind_witness(p, kind); });
}

// Number of order-isomorphisms preserving both operations and the unit images.
std::size_t count_isos(const CommuteResult& c) {
  const auto& a = c.upper_of_lower.space;
  const auto& b = c.lower_of_upper.space;
  const std::size_t n = a.poset.size();
  if (b.poset.size() != n) return 0;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::size_t count = 0;
  do {
    bool ok = preserves_both(a, b, perm);
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        if (a.poset.leq(i, j) != b.poset.leq(perm[i], perm[j])) ok = false;
    for (auto [u, v] : c.unit_images) ok = ok && perm[u] == v;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

void suite_commute(SuiteResult& r, Recorder& rec) {
  for (const auto& p : posets_upto(r.max_n)) {
    auto base = [&] {
      Json w;
      w["poset"] = poset_to_json(p);
      return w;
    };
    rec.guard(
        [&] {
          const CommuteResult c = commute_iso(p);
          const DistributiveReport d1 = check_distributive(c.upper_of_lower.space);
          const DistributiveReport d2 = check_distributive(c.lower_of_upper.space);
          rec.check(d1.passed() && d2.passed(), [&] {
            Json w = base();
            w["commute"] = commute_to_json(c);
            return w;
          });
          if (p.size() <= 2) {
            const std::size_t isos = count_isos(c);
            rec.check(isos == 1, [&] {
              Json w = base();
              w["isomorphisms"] = isos;
              return w;
            });
          }
        },
        base);
    if (meet_table(p)) {
      rec.guard(
          [&] {
            const DistributivePowerspace d = meet_on_lower(p);
            const bool ok = check_distributive(d.space).passed() && lower_meet_via_extension(p) == d.space.meet;
            bool unit_meet = true;
            const auto m = *meet_table(p);
            for (std::size_t x = 0; x < p.size(); ++x)
              for (std::size_t y = 0; y < p.size(); ++y)
                if (d.ps.unit()[m(x, y)] != d.space.meet(d.ps.unit()[x], d.ps.unit()[y])) unit_meet = false;
            rec.check(ok && unit_meet, [&] {
              Json w = base();
              w["construction"] = "meet_on_lower";
              return w;
            });
          },
          base);
    }
    if (join_table(p)) {
      rec.guard(
          [&] {
            const DistributivePowerspace d = join_on_upper(p);
            const bool ok = check_distributive(d.space).passed() && upper_join_via_extension(p) == d.space.join;
            rec.check(ok, [&] {
              Json w = base();
              w["construction"] = "join_on_upper";
              return w;
            });
          },
          base);
    }
  }
}

void suite_functor(SuiteResult& r, Recorder& rec) {
  const auto xs = posets_upto(r.max_n);
  const auto small = posets_upto(std::min<std::size_t>(r.max_n, 2));
  for (Kind kind : kKinds) {
    // Identity.
    for (const auto& x : xs) {
      std::vector<std::size_t> id(x.size());
      for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
      const Homomorphism h = functor_map(kind, MonotoneMap{x, x, id});
      bool ok = true;
      for (std::size_t i = 0; i < h.table.size(); ++i) ok = ok && h.table[i] == i;
      rec.check(ok, [&] { return kind_witness(x, kind); });
    }
    // Agreement with the free extension of unit ∘ f.
    for (const auto& x : xs)
      for (const auto& z : xs) {
        const Powerspace pz = build_powerspace(kind, z);
        const SemilatticeSpace target = pz.as_semilattice();
        for (const auto& f : enumerate_monotone_maps(x, z)) {
          const Homomorphism h = functor_map(kind, MonotoneMap{x, z, f});
          std::vector<std::size_t> uf(f.size());
          for (std::size_t i = 0; i < f.size(); ++i) uf[i] = pz.unit()[f[i]];
          const Homomorphism e = extend(kind, MonotoneMap{x, pz.order(), uf}, target);
          rec.check(h.table == e.table && check_homomorphism(h), [&] {
            Json w = kind_witness(x, kind);
            w["codomain"] = poset_to_json(z);
            w["f"] = map_json(x, z, f);
            return w;
          });
        }
      }
    // Composition.
    for (const auto& x : small)
      for (const auto& y : small)
        for (const auto& z : small) {
          const auto fs = enumerate_monotone_maps(x, y);
          const auto gs = enumerate_monotone_maps(y, z);
          for (const auto& f : fs)
            for (const auto& g : gs) {
              std::vector<std::size_t> gf(f.size());
              for (std::size_t i = 0; i < f.size(); ++i) gf[i] = g[f[i]];
              const auto pf = functor_map(kind, MonotoneMap{x, y, f}).table;
              const auto pg = functor_map(kind, MonotoneMap{y, z, g}).table;
              const auto pgf = functor_map(kind, MonotoneMap{x, z, gf}).table;
              bool ok = true;
              for (std::size_t i = 0; i < pf.size(); ++i) ok = ok && pgf[i] == pg[pf[i]];
              rec.check(ok, [&] {
                Json w = kind_witness(x, kind);
                w["f"] = map_json(x, y, f);
                w["g"] = map_json(y, z, g);
                return w;
              });
            }
        }
  }
  // Extensions into a distributive lattice also preserve the meet.
  std::vector<DistributiveSpace> lattices;
  for (const auto& y : xs) {
    auto j = join_table(y);
    auto m = meet_table(y);
    if (!j || !m) continue;
    DistributiveSpace d{y, *j, *m};
    if (check_distributive(d).passed()) lattices.push_back(std::move(d));
  }
  // Theorem pattern: a ∧-morphism f extends over P_L to a morphism for both
  // operations, and dually a ∨-morphism over P_U.
  auto preserves = [](const OpTable& src, const OpTable& dst, const std::vector<std::size_t>& f) {
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = 0; b < f.size(); ++b)
        if (f[src(a, b)] != dst(f[a], f[b])) return false;
    return true;
  };
  for (const auto& x : xs) {
    const auto xm = meet_table(x);
    const auto xj = join_table(x);
    if (!xm && !xj) continue;
    const std::optional<DistributivePowerspace> lx = xm ? std::optional(meet_on_lower(x)) : std::nullopt;
    const std::optional<DistributivePowerspace> ux = xj ? std::optional(join_on_upper(x)) : std::nullopt;
    for (const auto& y : lattices)
      for (const auto& f : enumerate_monotone_maps(x, y.poset)) {
        if (lx && preserves(*xm, y.meet, f)) {
          const Homomorphism h = extend(lx->ps, f, {y.poset, y.join, SemilatticeKind::inflationary});
          rec.check(preserves_both(lx->space, y, h.table), [&] {
            Json w = kind_witness(x, Kind::lower);
            w["lattice"] = poset_to_json(y.poset);
            w["f"] = map_json(x, y.poset, f);
            return w;
          });
        }
        if (ux && preserves(*xj, y.join, f)) {
          const Homomorphism h = extend(ux->ps, f, {y.poset, y.meet, SemilatticeKind::deflationary});
          rec.check(preserves_both(ux->space, y, h.table), [&] {
            Json w = kind_witness(x, Kind::upper);
            w["lattice"] = poset_to_json(y.poset);
            w["f"] = map_json(x, y.poset, f);
            return w;
          });
        }
      }
  }
}

AbstractDomain sign_top_domain() {
  AbstractDomain d;
  d.poset = Poset::from_pairs({"Neg", "Zero", "Pos", "Top"}, {{0, 3}, {1, 3}, {2, 3}});
  d.lits.sign = LiteralRules::Sign{0, 1, 2};
  OpTable mul(4);
  const std::size_t t[4][4] = {{2, 1, 0, 3}, {1, 1, 1, 1}, {0, 1, 2, 3}, {3, 1, 3, 3}};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) mul.set(a, b, t[a][b]);
  d.ops.emplace("*", std::move(mul));
  validate_domain(d);
  return d;
}

bool jointly_monotone(const Poset& p, const OpTable& t) {
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a2 : p.up(a).elements())
        for (std::size_t b2 : p.up(b).elements())
          if (!p.leq(t(a, b), t(a2, b2))) return false;
  return true;
}

// Every jointly monotone binary table on p (n^(n*n) candidates).
std::vector<OpTable> monotone_tables(const Poset& p) {
  const std::size_t n = p.size();
  std::size_t total = 1;
  for (std::size_t k = 0; k < n * n; ++k) total *= n;
  std::vector<OpTable> out;
  for (std::size_t code = 0; code < total; ++code) {
    OpTable t(n);
    std::size_t c = code;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        t.set(a, b, c % n);
        c /= n;
      }
    if (jointly_monotone(p, t)) out.push_back(std::move(t));
  }
  return out;
}

void suite_analyzer(SuiteResult& r, Recorder& rec) {
  // Smoke programs over SIGN.
  const AbstractDomain sign = sign_domain();
  auto verdict_text = [&](const char* src, Mode mode) {
    return render_verdict(analyze(*parse_program(src), sign, mode));
  };
  rec.check(verdict_text("choice(-1, 2)", Mode::may) == "may: {Neg, Pos}", [] { return Json{{"program", "choice(-1, 2)"}}; });
  rec.check(verdict_text("choice(1, 2)", Mode::must) == "must: at least Pos", [] { return Json{{"program", "choice(1, 2)"}}; });

  // Lifting against the set-image oracle.
  for (const auto& p : posets_upto(r.max_n)) {
    const std::vector<OpTable> tables = monotone_tables(p);
    for (Kind kind : kKinds) {
      const Powerspace ps = build_powerspace(kind, p);
      for (const auto& t : tables) {
        bool ok = true;
        for (const auto& a : ps.elements())
          for (const auto& b : ps.elements())
            if (lift_binop(kind, p, t, a, b) != lift_oracle(kind, p, t, a, b)) ok = false;
        rec.check(ok, [&] {
          Json w = kind_witness(p, kind);
          AbstractDomain d;
          d.poset = p;
          d.ops.emplace("op", t);
          w["op"] = domain_to_json(d)["ops"]["op"];
          return w;
        });
      }
    }
  }

  // may / must consistency on every SIGN program up to depth 3.
  const auto programs = enumerate_programs(std::min<std::size_t>(r.max_n, 3), {-1, 0, 2}, "*");
  for (const auto& e : programs) {
    const Verdict may = analyze(*e, sign, Mode::may);
    const Verdict must = analyze(*e, sign, Mode::must);
    bool ok = true;
    must.element.min.for_each([&](std::size_t m) {
      if (!(sign.poset.up(m).intersects(may.element.max))) ok = false;
    });
    rec.check(ok, [&] {
      Json w;
      w["program"] = to_source(*e);
      w["may"] = render_verdict(may);
      w["must"] = render_verdict(must);
      return w;
    });
  }

  // Raising one literal's abstraction raises the verdict.
  AbstractDomain top = sign_top_domain();
  const auto shallow = enumerate_programs(std::min<std::size_t>(r.max_n, 2), {-1, 0, 2}, "*");
  for (std::int64_t lit : {-1, 0, 2}) {
    AbstractDomain raised = top;
    raised.lits.map[lit] = 3;
    for (Mode mode : {Mode::may, Mode::must, Mode::convex}) {
      const Kind kind = mode_kind(mode);
      for (const auto& e : shallow) {
        const Verdict lo = analyze(*e, top, mode);
        const Verdict hi = analyze(*e, raised, mode);
        rec.check(compare(kind, top.poset, lo.element, hi.element), [&] {
          Json w;
          w["program"] = to_source(*e);
          w["mode"] = std::string(to_string(mode));
          w["raised_literal"] = lit;
          return w;
        });
      }
    }
  }

  // Choice laws at the verdict level.
  const auto tiny = enumerate_programs(1, {-1, 0, 2}, "*");
  for (Mode mode : {Mode::may, Mode::must, Mode::convex}) {
    auto v = [&](const ExprPtr& e) { return analyze(*e, sign, mode).element; };
    for (const auto& a : tiny)
      for (const auto& b : tiny) {
        bool ok = v(make_choice(a, a)) == v(a) && v(make_choice(a, b)) == v(make_choice(b, a));
        for (const auto& c : tiny)
          ok = ok && v(make_choice(make_choice(a, b), c)) == v(make_choice(a, make_choice(b, c)));
        rec.check(ok, [&] {
          Json w;
          w["mode"] = std::string(to_string(mode));
          w["lhs"] = to_source(*a);
          w["rhs"] = to_source(*b);
          return w;
        });
      }
  }
}

using SuiteFn = void (*)(SuiteResult&, Recorder&);

struct SuiteDef {
  const char* name;
  std::size_t cap;
  SuiteFn fn;
};

const std::array<SuiteDef, 9> kSuites{{
    {"posets", 5, suite_posets},
    {"semilattice", 5, suite_semilattice},
    {"universal", 3, suite_universal},
    {"convergence", 4, suite_convergence},
    {"topology", 3, suite_topology},
    {"classic", 4, suite_classic},
    {"commute", 3, suite_commute},
    {"functor", 3, suite_functor},
    {"analyzer", 3, suite_analyzer},
}};

const SuiteDef& find_suite(std::string_view name) {
  for (const auto& s : kSuites)
    if (name == s.name) return s;
  throw Error(ErrorCode::invalid_argument, "unknown suite '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

std::size_t suite_cap(std::string_view suite) { return find_suite(suite).cap; }

SuiteResult run_suite(std::string_view suite, std::size_t max_n) {
  const SuiteDef& def = find_suite(suite);
  SuiteResult r;
  r.name = def.name;
  r.max_n = std::min(max_n, def.cap);
  if (r.max_n == 0) return r;
  Recorder rec(r);
  def.fn(r, rec);
  return r;
}

SweepReport run_sweep(const SweepOptions& options) {
  SweepReport report;
  const auto& names = options.suites.empty() ? suite_names() : options.suites;
  for (const auto& n : names) find_suite(n);
  for (const auto& n : names) report.suites.push_back(run_suite(n, options.max_n));
  return report;
}

bool SweepReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

std::string SweepReport::summary() const {
  std::ostringstream os;
  std::vector<std::string> failed;
  for (const auto& s : suites) {
    os << "suite " << s.name << ": n<=" << s.max_n << ", " << s.instances << " instances, " << s.failures
       << " failures\n";
    if (!s.passed()) failed.push_back(s.name);
  }
  if (failed.empty()) {
    os << "all suites pass\n";
  } else {
    os << "failed suites:";
    for (const auto& f : failed) os << ' ' << f;
    os << '\n';
  }
  return os.str();
}

Json SweepReport::to_json() const {
  Json j;
  j["pass"] = passed();
  Json arr = Json::array();
  for (const auto& s : suites) {
    Json e;
    e["suite"] = s.name;
    e["max_n"] = s.max_n;
    e["instances"] = s.instances;
    e["failures"] = s.failures;
    e["witnesses"] = s.witnesses;
    arr.push_back(std::move(e));
  }
  j["suites"] = std::move(arr);
  return j;
}

std::vector<ExprPtr> enumerate_programs(std::size_t depth, const std::vector<std::int64_t>& literals,
                                        const std::string& op) {
  std::vector<ExprPtr> all;
  for (auto v : literals) all.push_back(make_lit(v));
  for (std::size_t d = 1; d <= depth; ++d) {
    const std::vector<ExprPtr> prev = all;
    std::vector<ExprPtr> next;
    for (auto v : literals) next.push_back(make_lit(v));
    for (const auto& a : prev)
      for (const auto& b : prev) {
        next.push_back(make_choice(a, b));
        next.push_back(make_binop(op, a, b));
      }
    all = std::move(next);
  }
  return all;
}

Elem lift_oracle(Kind kind, const Poset& base, const OpTable& op, const Elem& x, const Elem& y) {
  const Subset dx = denotation(kind, base, x);
  const Subset dy = denotation(kind, base, y);
  Subset img = base.none();
  dx.for_each([&](std::size_t a) { dy.for_each([&](std::size_t b) { img.insert(op(a, b)); }); });
  return canonical(kind, base, img);
}

}  // namespace pspace
