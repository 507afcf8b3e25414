/*
 * polysft - subshifts of finite type on finitely generated groups.
 *
 * C interface to the shared library: opaque handles, integer status codes,
 * JSON strings for structured data. Every returned string/byte buffer is
 * owned by the caller and must be released with psft_string_free /
 * psft_bytes_free. Handles are released with their psft_*_free function.
 *
 * All functions are thread-safe on distinct handles; handles are immutable
 * once created. psft_last_error() returns a thread-local message describing
 * the most recent failure in the calling thread.
 */

#ifndef POLYSFT_H
#define POLYSFT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum psft_status {
    PSFT_OK = 0,
    PSFT_ERR_USAGE = 1,             /* bad argument */
    PSFT_ERR_PARSE = 2,             /* malformed JSON or text input */
    PSFT_ERR_GROUP_MISMATCH = 3,
    PSFT_ERR_ALPHABET_MISMATCH = 4,
    PSFT_ERR_DOMAIN = 5,            /* support outside domain, radius too small */
    PSFT_ERR_KIND = 6,              /* wrong homomorphism kind, chain mismatch */
    PSFT_ERR_RELATION = 7,          /* relation violation, non-injective embedding */
    PSFT_ERR_LATTICE = 8,           /* singular basis, lattice not preserved */
    PSFT_ERR_UNSUPPORTED = 9,
    PSFT_ERR_INTERNAL = 10
} psft_status;

typedef struct psft_sft psft_sft;
typedef struct psft_config psft_config;
typedef struct psft_hom psft_hom;
typedef struct psft_tileset psft_tileset;

const char* psft_last_error(void);

void psft_string_free(char* s);
void psft_bytes_free(uint8_t* p);
void psft_sft_free(psft_sft* x);
void psft_config_free(psft_config* c);
void psft_hom_free(psft_hom* h);
void psft_tileset_free(psft_tileset* t);

/* FNV-1a 64-bit content hash, as used in run reports. */
uint64_t psft_digest(const void* bytes, size_t len);

/* ---- parsing and serialization (canonical JSON) ---- */

psft_status psft_sft_parse(const char* json, psft_sft** out);
psft_status psft_sft_to_json(const psft_sft* x, char** out);
psft_status psft_config_parse(const char* json, psft_config** out);
psft_status psft_config_to_json(const psft_config* c, char** out);
psft_status psft_hom_parse(const char* json, psft_hom** out);
psft_status psft_tileset_parse(const char* json, psft_tileset** out);

/* ---- constructions; every output is a fresh handle ---- */

psft_status psft_quotient_lift(const psft_sft* x, const psft_hom* phi, psft_sft** out);
psft_status psft_subgroup_induce(const psft_sft* x, const psft_hom* emb, psft_sft** out);
psft_status psft_product(const psft_sft* x1, const psft_sft* x2, psft_sft** out);
psft_status psft_mod3_marker(int dim, psft_sft** out);
psft_status psft_extend_periodic(const psft_sft* base, int dim, psft_sft** out);
psft_status psft_wang_to_sft(const psft_tileset* t, psft_sft** out);
/* chain: JSON array of homomorphisms, applied in order to the Wang SFT */
psft_status psft_reduce_to_group(const psft_tileset* t, const char* chain_json, psft_sft** out);
/* projection_json: flat {"symbol": 0-or-1} object over the base alphabet */
psft_status psft_aut_free_product(const psft_sft* base, const char* projection_json, int dim,
                                  psft_sft** out);

/* ---- solver ---- */

typedef enum psft_verdict {
    PSFT_VERDICT_WITNESS = 0,
    PSFT_VERDICT_EMPTY = 1,
    PSFT_VERDICT_INCONCLUSIVE = 2
} psft_verdict;

/* budget 0 selects the default of 10^7 search nodes. On PSFT_VERDICT_WITNESS
 * and non-null witness_out, *witness_out receives the first witness. */
psft_status psft_check_ball(const psft_sft* x, int radius, uint64_t budget,
                            psft_verdict* verdict_out, psft_config** witness_out,
                            uint64_t* nodes_out);

/* lattice_text: row-major basis "a,b;c,d". found_out: 0 or 1. */
psft_status psft_find_periodic(const psft_sft* x, const char* lattice_text, int* found_out,
                               psft_config** witness_out, uint64_t* nodes_out);

/* Exhaustive admissible-coloring count of the torus. */
psft_status psft_count_torus(const psft_sft* x, const char* lattice_text, uint64_t* count_out);

/* JSON array [{"lattice": "...", "index": k, "found": bool, "witness": ...}] */
psft_status psft_search_periods(const psft_sft* x, int64_t max_index, char** report_json_out);

/* Stabilizer lattice of a torus configuration, as canonical "a,b;c,d" text. */
psft_status psft_stabilizer(const psft_config* c, char** lattice_text_out);

/* DIMACS CNF of the ball(radius) coloring problem. */
psft_status psft_export_cnf(const psft_sft* x, int radius, char** dimacs_out);

/* ---- automorphisms ---- */

/* matrix_spec: "a,b;c,d" text, or JSON {"matrix": [[...]]} / {"shear": {...}}.
 * refuted_out: 1 when the transformed window violates admissibility. */
psft_status psft_aut_check(const psft_sft* x, const psft_config* c, const char* matrix_spec,
                           int* refuted_out);

/* ---- rendering ---- */

psft_status psft_render_text(const psft_config* c, char** out);
psft_status psft_render_pgm(const psft_config* c, uint8_t** bytes_out, size_t* len_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* POLYSFT_H */
