#include "pspace/pspace.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "pspace/classic.hpp"
#include "pspace/error.hpp"
#include "pspace/freealg.hpp"
#include "pspace/io.hpp"
#include "pspace/ndsem.hpp"
#include "pspace/powerspace.hpp"
#include "pspace/sweep.hpp"
#include "pspace/topology.hpp"

struct pspace_poset {
  pspace::Poset value;
};
struct pspace_space {
  pspace::Powerspace value;
};
struct pspace_domain {
  pspace::AbstractDomain value;
};

namespace {

thread_local std::string last_error;

pspace_status map_code(pspace::ErrorCode c) {
  using pspace::ErrorCode;
  switch (c) {
    case ErrorCode::invalid_argument: return PSPACE_ERR_INVALID_ARGUMENT;
    case ErrorCode::duplicate_label: return PSPACE_ERR_DUPLICATE_LABEL;
    case ErrorCode::antisymmetry_violation: return PSPACE_ERR_ANTISYMMETRY;
    case ErrorCode::unknown_label: return PSPACE_ERR_UNKNOWN_LABEL;
    case ErrorCode::empty_subset: return PSPACE_ERR_EMPTY_SUBSET;
    case ErrorCode::empty_poset: return PSPACE_ERR_EMPTY_POSET;
    case ErrorCode::size_limit_exceeded: return PSPACE_ERR_SIZE_LIMIT;
    case ErrorCode::invalid_topology: return PSPACE_ERR_INVALID_TOPOLOGY;
    case ErrorCode::not_t0: return PSPACE_ERR_NOT_T0;
    case ErrorCode::base_mismatch: return PSPACE_ERR_BASE_MISMATCH;
    case ErrorCode::kind_mismatch: return PSPACE_ERR_KIND_MISMATCH;
    case ErrorCode::not_monotone: return PSPACE_ERR_NOT_MONOTONE;
    case ErrorCode::not_directed: return PSPACE_ERR_NOT_DIRECTED;
    case ErrorCode::meet_missing: return PSPACE_ERR_MEET_MISSING;
    case ErrorCode::join_missing: return PSPACE_ERR_JOIN_MISSING;
    case ErrorCode::syntax_error: return PSPACE_ERR_SYNTAX;
    case ErrorCode::unbound_variable: return PSPACE_ERR_UNBOUND_VARIABLE;
    case ErrorCode::unknown_op: return PSPACE_ERR_UNKNOWN_OP;
    case ErrorCode::iso_failure: return PSPACE_ERR_ISO_FAILURE;
    case ErrorCode::io_error: return PSPACE_ERR_IO;
  }
  return PSPACE_ERR_INTERNAL;
}

template <class Fn>
pspace_status call(Fn fn) {
  try {
    fn();
    last_error.clear();
    return PSPACE_OK;
  } catch (const pspace::Error& e) {
    last_error = std::string(pspace::to_string(e.code())) + ": " + e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PSPACE_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PSPACE_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw pspace::Error(pspace::ErrorCode::invalid_argument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out != nullptr) *out = dup(s);
}

pspace::Kind kind_arg(const char* kind) {
  require(kind, "kind");
  auto k = pspace::parse_kind(kind);
  if (!k) throw pspace::Error(pspace::ErrorCode::invalid_argument, std::string("unknown kind '") + kind + "'");
  return *k;
}

std::string dump(const pspace::Json& j) { return j.dump(2) + "\n"; }

}  // namespace

extern "C" {

const char* pspace_version(void) { return "0.1.0"; }

const char* pspace_status_name(pspace_status status) {
  switch (status) {
    case PSPACE_OK: return "Ok";
    case PSPACE_ERR_OUT_OF_MEMORY: return "OutOfMemory";
    case PSPACE_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status > PSPACE_OK && status < PSPACE_ERR_OUT_OF_MEMORY)
    return pspace::to_string(static_cast<pspace::ErrorCode>(status - 1)).data();
  return "Unknown";
}

const char* pspace_last_error(void) { return last_error.c_str(); }

void pspace_string_free(char* s) { std::free(s); }

pspace_status pspace_poset_from_json(const char* json, pspace_poset** out) {
  return call([&] {
    require(json, "json");
    require(out, "out");
    *out = new pspace_poset{pspace::poset_from_json(pspace::parse_json(json))};
  });
}

pspace_status pspace_poset_from_file(const char* path, pspace_poset** out) {
  return call([&] {
    require(path, "path");
    require(out, "out");
    *out = new pspace_poset{pspace::poset_from_json(pspace::parse_json(pspace::read_file(path)))};
  });
}

pspace_status pspace_poset_chain(size_t n, pspace_poset** out) {
  return call([&] {
    require(out, "out");
    *out = new pspace_poset{pspace::chain(n)};
  });
}

pspace_status pspace_poset_antichain(size_t n, pspace_poset** out) {
  return call([&] {
    require(out, "out");
    *out = new pspace_poset{pspace::antichain(n)};
  });
}

void pspace_poset_free(pspace_poset* p) { delete p; }

pspace_status pspace_poset_size(const pspace_poset* p, size_t* out) {
  return call([&] {
    require(p, "poset");
    require(out, "out");
    *out = p->value.size();
  });
}

pspace_status pspace_poset_to_json(const pspace_poset* p, char** out) {
  return call([&] {
    require(p, "poset");
    require(out, "out");
    *out = dup(dump(pspace::poset_to_json(p->value)));
  });
}

pspace_status pspace_build(const pspace_poset* base, const char* kind, pspace_space** out) {
  return call([&] {
    require(base, "poset");
    require(out, "out");
    *out = new pspace_space{pspace::build_powerspace(kind_arg(kind), base->value)};
  });
}

void pspace_space_free(pspace_space* s) { delete s; }

pspace_status pspace_space_size(const pspace_space* s, size_t* out) {
  return call([&] {
    require(s, "space");
    require(out, "out");
    *out = s->value.size();
  });
}

pspace_status pspace_space_to_json(const pspace_space* s, char** out) {
  return call([&] {
    require(s, "space");
    require(out, "out");
    *out = dup(dump(pspace::powerspace_to_json(s->value)));
  });
}

pspace_status pspace_space_to_dot(const pspace_space* s, char** out) {
  return call([&] {
    require(s, "space");
    require(out, "out");
    const std::string name = std::string(pspace::to_string(s->value.kind())) + "_powerspace";
    *out = dup(pspace::hasse_dot(s->value.order(), name));
  });
}

pspace_status pspace_check_topology(const char* json, char** report, int* directed) {
  return call([&] {
    require(json, "json");
    const auto t = pspace::topology_from_json(pspace::parse_json(json));
    const auto v = pspace::is_directed_space(t);
    if (directed != nullptr) *directed = v.directed ? 1 : 0;
    put(report, dump(pspace::topology_verdict_to_json(v, t)));
  });
}

pspace_status pspace_laws(const pspace_poset* base, const char* kind, const char* const* targets,
                          size_t target_count, char** report, int* pass) {
  return call([&] {
    require(base, "poset");
    const pspace::Kind k = kind_arg(kind);
    const pspace::Powerspace ps = pspace::build_powerspace(k, base->value);

    std::vector<pspace::SemilatticeSpace> ys;
    if (target_count == 0) {
      for (std::size_t m = 1; m <= 2; ++m)
        for (auto& y : pspace::enumerate_semilattices(m, pspace::semilattice_kind(k))) ys.push_back(std::move(y));
    } else {
      require(targets, "targets");
      for (size_t i = 0; i < target_count; ++i) {
        require(targets[i], "target");
        ys.push_back(pspace::semilattice_from_json(pspace::parse_json(targets[i])));
      }
    }

    const pspace::LawReport laws = pspace::check_semilattice(ps.as_semilattice());
    bool ok = laws.passed();
    pspace::Json j;
    j["kind"] = std::string(pspace::to_string(k));
    j["size"] = ps.size();
    j["semilattice"] = pspace::law_report_to_json(laws, ps.order());
    pspace::Json uni = pspace::Json::array();
    for (std::size_t i = 0; i < ys.size(); ++i) {
      const auto rep = pspace::verify_universal_property(k, base->value, ys[i]);
      ok = ok && rep.passed();
      pspace::Json e;
      e["target"] = i;
      e["target_size"] = ys[i].poset.size();
      e["result"] = pspace::universal_report_to_json(rep, base->value, ys[i]);
      uni.push_back(std::move(e));
    }
    j["universal"] = std::move(uni);
    j["pass"] = ok;
    if (pass != nullptr) *pass = ok ? 1 : 0;
    put(report, dump(j));
  });
}

pspace_status pspace_commute(const pspace_poset* base, char** report, int* pass) {
  return call([&] {
    require(base, "poset");
    const auto c = pspace::commute_iso(base->value);
    pspace::Json j = pspace::commute_to_json(c);
    const bool ok = j["upper_of_lower"]["pass"].get<bool>() && j["lower_of_upper"]["pass"].get<bool>();
    j["pass"] = ok;
    if (pass != nullptr) *pass = ok ? 1 : 0;
    put(report, dump(j));
  });
}

pspace_status pspace_classic(const pspace_poset* base, const char* kind, char** report, int* pass) {
  return call([&] {
    require(base, "poset");
    const auto r = pspace::compare_to_classic(kind_arg(kind), base->value);
    if (pass != nullptr) *pass = r.passed() ? 1 : 0;
    put(report, dump(pspace::classic_report_to_json(r)));
  });
}

pspace_status pspace_domain_from_json(const char* json, pspace_domain** out) {
  return call([&] {
    require(json, "json");
    require(out, "out");
    *out = new pspace_domain{pspace::domain_from_json(pspace::parse_json(json))};
  });
}

pspace_status pspace_domain_builtin(const char* name, pspace_domain** out) {
  return call([&] {
    require(name, "name");
    require(out, "out");
    const std::string n = name;
    if (n == "sign") {
      *out = new pspace_domain{pspace::sign_domain()};
    } else if (n == "parity") {
      *out = new pspace_domain{pspace::parity_domain()};
    } else {
      throw pspace::Error(pspace::ErrorCode::invalid_argument, "unknown built-in domain '" + n + "'");
    }
  });
}

void pspace_domain_free(pspace_domain* d) { delete d; }

pspace_status pspace_analyze(const pspace_domain* domain, const char* program, const char* mode,
                             char** text, char** json) {
  return call([&] {
    require(domain, "domain");
    require(program, "program");
    require(mode, "mode");
    auto m = pspace::parse_mode(mode);
    if (!m) throw pspace::Error(pspace::ErrorCode::invalid_argument, std::string("unknown mode '") + mode + "'");
    const auto v = pspace::analyze(*pspace::parse_program(program), domain->value, *m);
    put(text, pspace::render_verdict(v) + "\n");
    put(json, dump(pspace::verdict_to_json(v)));
  });
}

pspace_status pspace_sweep(size_t max_n, const char* suites, char** summary, char** json, int* pass) {
  return call([&] {
    pspace::SweepOptions opts;
    opts.max_n = max_n;
    if (suites != nullptr && *suites != '\0' && std::string(suites) != "all") {
      std::string s = suites;
      std::size_t start = 0;
      while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        const std::string name = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!name.empty()) opts.suites.push_back(name);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    const auto rep = pspace::run_sweep(opts);
    if (pass != nullptr) *pass = rep.passed() ? 1 : 0;
    put(summary, rep.summary());
    put(json, dump(rep.to_json()));
  });
}

}  // extern "C"
