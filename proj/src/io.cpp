#include "pspace/io.hpp"

#include <fstream>
#include <sstream>

#include "pspace/error.hpp"

namespace pspace {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::invalid_argument, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) bad(std::string("\"") + key + "\" must be an array");
  return a;
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where + " must be a string");
  return j.get<std::string>();
}

// Element given by name or by index.
std::size_t element_ref(const Poset& p, const Json& j, const std::string& where) {
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    const auto i = j.get<std::size_t>();
    if (i >= p.size()) bad(where + ": index " + std::to_string(i) + " out of range");
    return i;
  }
  if (j.is_string()) {
    auto i = p.index_of(j.get<std::string>());
    if (!i) throw Error(ErrorCode::unknown_label, where + ": unknown element '" + j.get<std::string>() + "'");
    return *i;
  }
  bad(where + ": expected an element name or index");
}

OpTable table_from_json(const Poset& p, const Json& j, const std::string& where) {
  const std::size_t n = p.size();
  if (!j.is_array() || j.size() != n) bad(where + " must be a " + std::to_string(n) + "x" + std::to_string(n) + " array");
  OpTable t(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!j[a].is_array() || j[a].size() != n) bad(where + " row " + std::to_string(a) + " has the wrong length");
    for (std::size_t b = 0; b < n; ++b) t.set(a, b, element_ref(p, j[a][b], where));
  }
  return t;
}

Json table_to_json(const OpTable& t) {
  Json rows = Json::array();
  for (std::size_t a = 0; a < t.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < t.size(); ++b) row.push_back(t(a, b));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json names_of(const Poset& p, const Subset& s) {
  Json out = Json::array();
  s.for_each([&](std::size_t i) { out.push_back(p.name(i)); });
  return out;
}

Json names_of(const std::vector<std::string>& names, const Subset& s) {
  Json out = Json::array();
  s.for_each([&](std::size_t i) { out.push_back(names[i]); });
  return out;
}

Json witness_json(const std::vector<std::size_t>& w, const Poset& p) {
  Json out = Json::array();
  for (std::size_t i : w) out.push_back(p.name(i));
  return out;
}

template <class Fn>
auto guarded(Fn fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::invalid_argument, e.what());
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::io_error, "cannot read '" + path + "'");
  return ss.str();
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::syntax_error, e.what());
  }
}

Poset poset_from_json(const Json& j) {
  return guarded([&] {
    std::vector<std::string> names;
    for (const auto& e : array_field(j, "elements")) names.push_back(as_string(e, "element name"));
    std::vector<std::pair<std::string, std::string>> le;
    if (j.contains("le")) {
      for (const auto& pr : array_field(j, "le")) {
        if (!pr.is_array() || pr.size() != 2) bad("each \"le\" entry must be a pair");
        le.emplace_back(as_string(pr[0], "\"le\" entry"), as_string(pr[1], "\"le\" entry"));
      }
    }
    return validate_poset(std::move(names), le);
  });
}

Json poset_to_json(const Poset& p) {
  Json j;
  j["elements"] = p.names();
  Json le = Json::array();
  for (auto [a, b] : p.covers()) le.push_back(Json::array({p.name(a), p.name(b)}));
  j["le"] = std::move(le);
  return j;
}

FiniteTopology topology_from_json(const Json& j) {
  return guarded([&] {
    std::vector<std::string> points;
    for (const auto& e : array_field(j, "points")) points.push_back(as_string(e, "point name"));
    const std::size_t n = points.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (points[a] == points[b]) throw Error(ErrorCode::duplicate_label, "duplicate point '" + points[a] + "'");
    std::vector<Subset> opens;
    for (const auto& o : array_field(j, "opens")) {
      if (!o.is_array()) bad("each open set must be an array of point names");
      Subset s(n);
      for (const auto& name : o) {
        const std::string label = as_string(name, "open set member");
        std::size_t k = 0;
        while (k < n && points[k] != label) ++k;
        if (k == n) throw Error(ErrorCode::unknown_label, "unknown point '" + label + "'");
        s.insert(k);
      }
      opens.push_back(std::move(s));
    }
    return FiniteTopology::make(std::move(points), std::move(opens));
  });
}

Json topology_to_json(const FiniteTopology& t) {
  Json j;
  j["points"] = t.points();
  Json opens = Json::array();
  for (const auto& o : t.opens()) opens.push_back(names_of(t.points(), o));
  j["opens"] = std::move(opens);
  return j;
}

Json powerspace_to_json(const Powerspace& ps) {
  Json j;
  j["kind"] = std::string(to_string(ps.kind()));
  j["base"] = poset_to_json(ps.base());
  Json elems = Json::array();
  for (const auto& e : ps.elements()) {
    Json el;
    if (ps.kind() != Kind::upper) el["max"] = names_of(ps.base(), e.max);
    if (ps.kind() != Kind::lower) el["min"] = names_of(ps.base(), e.min);
    el["label"] = elem_label(ps.kind(), ps.base(), e);
    elems.push_back(std::move(el));
  }
  j["elements"] = std::move(elems);
  Json order = Json::array();
  for (std::size_t a = 0; a < ps.size(); ++a)
    for (std::size_t b = 0; b < ps.size(); ++b)
      if (ps.order().less(a, b)) order.push_back(Json::array({a, b}));
  j["order"] = std::move(order);
  j["op"] = table_to_json(ps.op());
  j["unit"] = ps.unit();
  return j;
}

std::string hasse_dot(const Poset& p, std::string_view graph_name) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph " << quote(std::string(graph_name)) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < p.size(); ++i) os << "  n" << i << " [label=" << quote(p.name(i)) << "];\n";
  for (auto [a, b] : p.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

SemilatticeSpace semilattice_from_json(const Json& j) {
  return guarded([&] {
    SemilatticeSpace s;
    s.poset = poset_from_json(field(j, "poset"));
    s.op = table_from_json(s.poset, field(j, "op"), "\"op\"");
    const std::string kind = as_string(field(j, "kind"), "\"kind\"");
    if (kind == "inflationary") {
      s.kind = SemilatticeKind::inflationary;
    } else if (kind == "deflationary") {
      s.kind = SemilatticeKind::deflationary;
    } else if (kind == "plain") {
      s.kind = SemilatticeKind::plain;
    } else {
      bad("\"kind\" must be inflationary, deflationary or plain");
    }
    return s;
  });
}

Json semilattice_to_json(const SemilatticeSpace& s) {
  Json j;
  j["poset"] = poset_to_json(s.poset);
  j["op"] = table_to_json(s.op);
  j["kind"] = std::string(to_string(s.kind));
  return j;
}

AbstractDomain domain_from_json(const Json& j) {
  return guarded([&] {
    AbstractDomain d;
    d.poset = poset_from_json(field(j, "poset"));
    const Poset& p = d.poset;
    const Json& lits = field(j, "lits");
    if (!lits.is_object()) bad("\"lits\" must be an object");
    if (lits.contains("default")) d.lits.fallback = element_ref(p, lits["default"], "\"lits.default\"");
    if (lits.contains("map")) {
      if (!lits["map"].is_object()) bad("\"lits.map\" must be an object");
      for (const auto& [key, val] : lits["map"].items()) {
        std::int64_t v = 0;
        try {
          std::size_t used = 0;
          v = std::stoll(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          bad("\"lits.map\" key '" + key + "' is not an integer");
        }
        d.lits.map[v] = element_ref(p, val, "\"lits.map\"");
      }
    }
    if (lits.contains("sign")) {
      const Json& s = lits["sign"];
      d.lits.sign = LiteralRules::Sign{element_ref(p, field(s, "neg"), "\"lits.sign\""),
                                       element_ref(p, field(s, "zero"), "\"lits.sign\""),
                                       element_ref(p, field(s, "pos"), "\"lits.sign\"")};
    }
    if (lits.contains("parity")) {
      const Json& s = lits["parity"];
      d.lits.parity = LiteralRules::Parity{element_ref(p, field(s, "even"), "\"lits.parity\""),
                                           element_ref(p, field(s, "odd"), "\"lits.parity\"")};
    }
    if (j.contains("ops")) {
      if (!j["ops"].is_object()) bad("\"ops\" must be an object");
      for (const auto& [sym, table] : j["ops"].items())
        d.ops.emplace(sym, table_from_json(p, table, "\"ops." + sym + "\""));
    }
    validate_domain(d);
    return d;
  });
}

Json domain_to_json(const AbstractDomain& d) {
  const Poset& p = d.poset;
  Json j;
  j["poset"] = poset_to_json(p);
  Json lits = Json::object();
  if (d.lits.fallback) lits["default"] = p.name(*d.lits.fallback);
  if (!d.lits.map.empty()) {
    Json m = Json::object();
    for (const auto& [v, e] : d.lits.map) m[std::to_string(v)] = p.name(e);
    lits["map"] = std::move(m);
  }
  if (d.lits.sign)
    lits["sign"] = {{"neg", p.name(d.lits.sign->neg)}, {"zero", p.name(d.lits.sign->zero)}, {"pos", p.name(d.lits.sign->pos)}};
  if (d.lits.parity) lits["parity"] = {{"even", p.name(d.lits.parity->even)}, {"odd", p.name(d.lits.parity->odd)}};
  j["lits"] = std::move(lits);
  Json ops = Json::object();
  for (const auto& [sym, t] : d.ops) {
    Json rows = Json::array();
    for (std::size_t a = 0; a < t.size(); ++a) {
      Json row = Json::array();
      for (std::size_t b = 0; b < t.size(); ++b) row.push_back(p.name(t(a, b)));
      rows.push_back(std::move(row));
    }
    ops[sym] = std::move(rows);
  }
  j["ops"] = std::move(ops);
  return j;
}

Json law_report_to_json(const LawReport& r, const Poset& p) {
  Json laws = Json::array();
  for (const auto& l : r.results) {
    Json e;
    e["law"] = l.law;
    e["pass"] = l.pass;
    if (!l.pass) e["witness"] = witness_json(l.witness, p);
    laws.push_back(std::move(e));
  }
  Json j;
  j["pass"] = r.passed();
  j["laws"] = std::move(laws);
  return j;
}

Json universal_report_to_json(const UniversalReport& r, const Poset& x, const SemilatticeSpace& y) {
  Json j;
  j["pass"] = r.passed();
  j["target_laws"] = law_report_to_json(r.target_laws, y.poset);
  j["maps"] = r.cases.size();
  Json failures = Json::array();
  for (const auto& c : r.cases) {
    if (c.ok()) continue;
    Json f;
    Json m = Json::object();
    for (std::size_t i = 0; i < c.f.size(); ++i) m[x.name(i)] = y.poset.name(c.f[i]);
    f["f"] = std::move(m);
    f["homomorphisms"] = c.homomorphisms;
    f["matches_extension"] = c.matches_extension;
    failures.push_back(std::move(f));
  }
  j["failures"] = std::move(failures);
  return j;
}

Json distributive_report_to_json(const DistributiveReport& r, const Poset& p) {
  auto law = [&](const LawResult& l) {
    Json e;
    e["law"] = l.law;
    e["pass"] = l.pass;
    if (!l.pass) e["witness"] = witness_json(l.witness, p);
    return e;
  };
  Json j;
  j["pass"] = r.passed();
  j["join"] = law_report_to_json(r.join_laws, p);
  j["meet"] = law_report_to_json(r.meet_laws, p);
  j["distributive"] = Json::array({law(r.meet_over_join), law(r.join_over_meet)});
  return j;
}

Json commute_to_json(const CommuteResult& c) {
  const Poset& from = c.upper_of_lower.space.poset;
  const Poset& to = c.lower_of_upper.space.poset;
  Json j;
  j["size"] = from.size();
  Json iso = Json::array();
  for (std::size_t i = 0; i < c.iso.size(); ++i) iso.push_back(Json::array({from.name(i), to.name(c.iso[i])}));
  j["iso"] = std::move(iso);
  Json units = Json::array();
  for (auto [a, b] : c.unit_images) units.push_back(Json::array({from.name(a), to.name(b)}));
  j["unit_images"] = std::move(units);
  j["upper_of_lower"] = distributive_report_to_json(check_distributive(c.upper_of_lower.space), from);
  j["lower_of_upper"] = distributive_report_to_json(check_distributive(c.lower_of_upper.space), to);
  return j;
}

Json classic_report_to_json(const ClassicReport& r) {
  Json j;
  j["kind"] = std::string(to_string(r.kind));
  j["pass"] = r.passed();
  j["powerspace_size"] = r.powerspace_size;
  j["classic_size"] = r.classic_size;
  j["bijection"] = r.bijection;
  j["order_iso"] = r.order_iso;
  j["op_preserved"] = r.op_preserved;
  j["topology_equal"] = r.topology_equal ? Json(*r.topology_equal) : Json("skipped");
  j["vietoris_equal"] = r.vietoris_equal ? Json(*r.vietoris_equal) : Json("n/a");
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["mode"] = std::string(to_string(v.mode));
  const Kind k = mode_kind(v.mode);
  if (k != Kind::upper) j["max"] = names_of(v.domain, v.element.max);
  if (k != Kind::lower) j["min"] = names_of(v.domain, v.element.min);
  j["text"] = render_verdict(v);
  return j;
}

Json topology_verdict_to_json(const DirectedSpaceVerdict& v, const FiniteTopology& t) {
  Json j;
  j["directed"] = v.directed;
  if (v.witness) j["witness"] = names_of(t.points(), *v.witness);
  return j;
}

}  // namespace pspace
