/* C interface to the pspace library.
 *
 * Objects are opaque handles released with their *_free function. Every
 * fallible call returns a pspace_status; on failure pspace_last_error()
 * describes the problem (per thread, valid until the next call on that
 * thread). Strings returned through char** are owned by the caller and must
 * be released with pspace_string_free.
 */
#ifndef PSPACE_H
#define PSPACE_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(PSPACE_BUILDING_LIBRARY)
#define PSPACE_API __declspec(dllexport)
#else
#define PSPACE_API __declspec(dllimport)
#endif
#else
#define PSPACE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pspace_status {
  PSPACE_OK = 0,
  PSPACE_ERR_INVALID_ARGUMENT,
  PSPACE_ERR_DUPLICATE_LABEL,
  PSPACE_ERR_ANTISYMMETRY,
  PSPACE_ERR_UNKNOWN_LABEL,
  PSPACE_ERR_EMPTY_SUBSET,
  PSPACE_ERR_EMPTY_POSET,
  PSPACE_ERR_SIZE_LIMIT,
  PSPACE_ERR_INVALID_TOPOLOGY,
  PSPACE_ERR_NOT_T0,
  PSPACE_ERR_BASE_MISMATCH,
  PSPACE_ERR_KIND_MISMATCH,
  PSPACE_ERR_NOT_MONOTONE,
  PSPACE_ERR_NOT_DIRECTED,
  PSPACE_ERR_MEET_MISSING,
  PSPACE_ERR_JOIN_MISSING,
  PSPACE_ERR_SYNTAX,
  PSPACE_ERR_UNBOUND_VARIABLE,
  PSPACE_ERR_UNKNOWN_OP,
  PSPACE_ERR_ISO_FAILURE,
  PSPACE_ERR_IO,
  PSPACE_ERR_OUT_OF_MEMORY,
  PSPACE_ERR_INTERNAL
} pspace_status;

typedef struct pspace_poset pspace_poset;
typedef struct pspace_space pspace_space;
typedef struct pspace_domain pspace_domain;

PSPACE_API const char* pspace_version(void);
PSPACE_API const char* pspace_status_name(pspace_status status);
PSPACE_API const char* pspace_last_error(void);
PSPACE_API void pspace_string_free(char* s);

/* Posets: {"elements": [...], "le": [[a, b], ...]} */
PSPACE_API pspace_status pspace_poset_from_json(const char* json, pspace_poset** out);
PSPACE_API pspace_status pspace_poset_from_file(const char* path, pspace_poset** out);
PSPACE_API pspace_status pspace_poset_chain(size_t n, pspace_poset** out);
PSPACE_API pspace_status pspace_poset_antichain(size_t n, pspace_poset** out);
PSPACE_API void pspace_poset_free(pspace_poset* p);
PSPACE_API pspace_status pspace_poset_size(const pspace_poset* p, size_t* out);
PSPACE_API pspace_status pspace_poset_to_json(const pspace_poset* p, char** out);

/* Powerspaces; kind is "lower", "upper" or "convex". */
PSPACE_API pspace_status pspace_build(const pspace_poset* base, const char* kind, pspace_space** out);
PSPACE_API void pspace_space_free(pspace_space* s);
PSPACE_API pspace_status pspace_space_size(const pspace_space* s, size_t* out);
PSPACE_API pspace_status pspace_space_to_json(const pspace_space* s, char** out);
PSPACE_API pspace_status pspace_space_to_dot(const pspace_space* s, char** out);

/* Reports are JSON objects; *pass is set to 1 or 0. */

/* Directed-space verdict for {"points": [...], "opens": [[...], ...]}. */
PSPACE_API pspace_status pspace_check_topology(const char* json, char** report, int* directed);

/* Semilattice laws of the powerspace plus the universal property against
 * each target ({"poset", "op", "kind"} JSON). With no targets, every
 * semilattice space of matching kind on at most two points is used. */
PSPACE_API pspace_status pspace_laws(const pspace_poset* base, const char* kind,
                                     const char* const* targets, size_t target_count, char** report,
                                     int* pass);

PSPACE_API pspace_status pspace_commute(const pspace_poset* base, char** report, int* pass);
PSPACE_API pspace_status pspace_classic(const pspace_poset* base, const char* kind, char** report,
                                        int* pass);

/* Abstract domains for the analyzer. Built-in names: "sign", "parity". */
PSPACE_API pspace_status pspace_domain_from_json(const char* json, pspace_domain** out);
PSPACE_API pspace_status pspace_domain_builtin(const char* name, pspace_domain** out);
PSPACE_API void pspace_domain_free(pspace_domain* d);

/* mode is "may", "must" or "convex". Either output may be NULL. */
PSPACE_API pspace_status pspace_analyze(const pspace_domain* domain, const char* program,
                                        const char* mode, char** text, char** json);

/* suites: comma-separated suite names, or NULL / "" / "all" for every suite.
 * Either string output may be NULL. */
PSPACE_API pspace_status pspace_sweep(size_t max_n, const char* suites, char** summary, char** json,
                                      int* pass);

#ifdef __cplusplus
}
#endif

#endif /* PSPACE_H */
