#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "pspace/classic.hpp"
#include "pspace/freealg.hpp"
#include "pspace/ndsem.hpp"
#include "pspace/powerspace.hpp"
#include "pspace/semilattice.hpp"
#include "pspace/topology.hpp"

namespace pspace {

using Json = nlohmann::ordered_json;

// Whole file contents. Throws io_error.
std::string read_file(const std::string& path);

// Parses text, throwing syntax_error with the parser's message on bad JSON.
Json parse_json(std::string_view text);

// {"elements": ["a", ...], "le": [["a", "b"], ...]}
Poset poset_from_json(const Json& j);
Json poset_to_json(const Poset& p);

// {"points": ["x", ...], "opens": [["x", ...], ...]}
FiniteTopology topology_from_json(const Json& j);
Json topology_to_json(const FiniteTopology& t);

// {"kind": ..., "base": poset, "elements": [{"max": [...], "min": [...]}],
//  "order": [[i, j], ...], "op": [[k, ...], ...], "unit": [...]}
// Only the meaningful generator sets are written: max for lower, min for
// upper, both for convex. "order" lists the strict pairs i < j.
Json powerspace_to_json(const Powerspace& ps);

// Hasse diagram (covering pairs, drawn bottom to top).
std::string hasse_dot(const Poset& p, std::string_view graph_name = "hasse");

// {"poset": poset, "op": [[...]], "kind": "inflationary" | ...}
// Table entries may be element names or indices.
SemilatticeSpace semilattice_from_json(const Json& j);
Json semilattice_to_json(const SemilatticeSpace& s);

// {"poset": poset,
//  "lits": {"default": e, "map": {"-1": e, ...}, "sign": {"neg": e, "zero": e, "pos": e},
//           "parity": {"even": e, "odd": e}},
//  "ops": {"+": [[...]], ...}}
// Validated with validate_domain.
AbstractDomain domain_from_json(const Json& j);
Json domain_to_json(const AbstractDomain& d);

Json law_report_to_json(const LawReport& r, const Poset& p);
Json universal_report_to_json(const UniversalReport& r, const Poset& x, const SemilatticeSpace& y);
Json distributive_report_to_json(const DistributiveReport& r, const Poset& p);
Json commute_to_json(const CommuteResult& c);
Json classic_report_to_json(const ClassicReport& r);
Json verdict_to_json(const Verdict& v);
Json topology_verdict_to_json(const DirectedSpaceVerdict& v, const FiniteTopology& t);

}  // namespace pspace
