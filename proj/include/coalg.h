/*
 * coalg C API: bisimulation and simulation checking for finite labelled,
 * multiset, probabilistic, and alternating transition systems.
 *
 * All functions return a coalg_status; on any failure coalg_last_error()
 * carries a thread-local message. Out-parameters are only written on
 * COALG_OK. Strings returned through char** are heap-allocated and must be
 * released with coalg_string_free; handles with their coalg_*_free function.
 */
#ifndef COALG_H
#define COALG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct coalg_system coalg_system;
typedef struct coalg_relation coalg_relation;
typedef struct coalg_partition coalg_partition;
typedef struct coalg_order coalg_order;

typedef enum coalg_status {
    COALG_OK = 0,
    COALG_ERR_PARSE = 1,    /* syntax error (line/col in the message) */
    COALG_ERR_INVALID = 2,  /* semantic validation failed */
    COALG_ERR_MISMATCH = 3, /* kind, carrier, or order mismatch */
    COALG_ERR_LIMIT = 4,    /* enumeration or oracle cap exceeded */
    COALG_ERR_BADARG = 5    /* null handle, unknown name, bad bound */
} coalg_status;

const char* coalg_version(void);
const char* coalg_last_error(void);
void coalg_string_free(char* s);

/* ---- systems ---------------------------------------------------------- */

coalg_status coalg_system_parse(const char* text, coalg_system** out);
coalg_status coalg_system_render(const coalg_system* sys, char** out);
void coalg_system_free(coalg_system* sys);

const char* coalg_system_name(const coalg_system* sys);
const char* coalg_system_kind(const coalg_system* sys); /* "lts", "mts", ... */
size_t coalg_system_state_count(const coalg_system* sys);

/* diagnostics: newline-separated list, empty string when valid */
coalg_status coalg_system_validate(const coalg_system* sys, char** diagnostics);

coalg_status coalg_disjoint_union(const coalg_system* s1, const coalg_system* s2,
                                  coalg_system** out);

/* ---- relations, partitions, orders ------------------------------------ */

coalg_status coalg_relation_parse(const char* text, const coalg_system* s1,
                                  const coalg_system* s2, coalg_relation** out);
coalg_status coalg_relation_render(const coalg_relation* rel, char** out);
size_t coalg_relation_pair_count(const coalg_relation* rel);
void coalg_relation_free(coalg_relation* rel);

coalg_status coalg_partition_parse(const char* text, const coalg_system* sys,
                                   coalg_partition** out);
coalg_status coalg_partition_render(const coalg_partition* p, char** out);
size_t coalg_partition_class_count(const coalg_partition* p);
void coalg_partition_free(coalg_partition* p);

/*
 * Order specifications:
 *   "eq", "incl", "kernel-support", "kernel-dm", "kernel-dma"
 * or "file:<text>" where <text> after the prefix is the content of an order
 * file (`le <1|2>:<state> <1|2>:<state>` lines) interpreted over the two
 * systems.
 */
coalg_status coalg_order_parse(const char* spec, const coalg_system* s1,
                               const coalg_system* s2, coalg_order** out);
void coalg_order_free(coalg_order* ord);

/* ---- checks ------------------------------------------------------------ */
/* holds gets 1/0; on refutation *counterexample (if non-NULL) gets a
 * description naming the failing pair. */

coalg_status coalg_check_bisimulation(const coalg_system* s1, const coalg_system* s2,
                                      const coalg_relation* rel, int* holds,
                                      char** counterexample);
coalg_status coalg_check_simulation(const coalg_system* s1, const coalg_system* s2,
                                    const coalg_relation* rel, const coalg_order* ord,
                                    int* holds, char** counterexample);
coalg_status coalg_check_prob_bisimulation(const coalg_system* sys, const coalg_partition* p,
                                           int* holds, char** counterexample);

/* ---- computations ------------------------------------------------------ */

coalg_status coalg_largest_simulation(const coalg_system* s1, const coalg_system* s2,
                                      const coalg_order* ord, coalg_relation** out);
coalg_status coalg_prob_bisimilarity(const coalg_system* sys, coalg_partition** out);
coalg_status coalg_alpha_image(const coalg_system* sys, const char* alpha,
                               coalg_system** out);
coalg_status coalg_canonical_representation(const coalg_system* sys, coalg_system** out);

/* representations with per-element multiplicity <= bound; at most `cap`
 * systems (0 = default cap of 10000) */
coalg_status coalg_enumerate_representations(const coalg_system* sys, int bound, size_t cap,
                                             coalg_system*** out, size_t* count);
void coalg_system_list_free(coalg_system** list, size_t count);

/* ---- verification harness ---------------------------------------------- */

/* property_id: "P1".."P10" or "fixtures". passed gets 1/0; report gets the
 * rendered text. jobs <= 0 means single-threaded. */
coalg_status coalg_run_check(const char* property_id, uint64_t seed, int instances, int jobs,
                             int* passed, char** report);

#ifdef __cplusplus
}
#endif

#endif /* COALG_H */
