#ifndef QALG_H
#define QALG_H

/* C interface to the exact quadratic-algebra engine.
 *
 * All functions return a status code; on failure qalg_last_error() holds a
 * message for the calling thread.  Strings returned through `char**` are
 * heap-allocated and must be released with qalg_string_free(). */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define QALG_OK 0       /* success, all checks passed */
#define QALG_MISMATCH 1 /* computation finished, a mathematical check failed */
#define QALG_GUARD 2    /* resource guard tripped */
#define QALG_USAGE 3    /* malformed input */

typedef struct qalg_presentation qalg_presentation;
typedef struct qalg_basis qalg_basis;

const char* qalg_version(void);
const char* qalg_last_error(void);
void qalg_string_free(char* s);

/* ---- presentations ---- */

/* preset is one of: Gn Bn Ent En0 Bnt Bn0 Ant An0 Lnbeta Pnbeta GnComm
 * TildeGn0 */
int qalg_preset_build(const char* preset, int n, qalg_presentation** out);
/* presentation file text (see README for the format) */
int qalg_presentation_parse(const char* text, qalg_presentation** out);
int qalg_presentation_render(const qalg_presentation* p, char** out);
void qalg_presentation_free(qalg_presentation* p);

/* ---- rewriting bases ---- */

/* field: "Q", "Fp:<prime>", or "frac" (field of fractions over the
 * presentation's parameters).  term_guard of 0 selects the default. */
int qalg_complete(const qalg_presentation* p, int degree, const char* field,
                  size_t term_guard, qalg_basis** out);
void qalg_basis_free(qalg_basis* b);
int qalg_basis_rule_count(const qalg_basis* b, size_t* out);
int qalg_basis_complete_to(const qalg_basis* b, int* out);

/* dimension vectors rendered as comma-separated integers, degree 0 first */
int qalg_graded_dims(const qalg_basis* b, int max_degree, char** out_csv);
int qalg_filtered_dims(const qalg_basis* b, int max_degree, char** out_csv);
/* gens: ';'-separated element expressions, each homogeneous of degree 1 */
int qalg_subalgebra_dims(const qalg_basis* b, const char* gens, int max_degree,
                         char** out_csv);

/* normal form of an element expression; optionally the replayable
 * reduction log */
int qalg_reduce(const qalg_basis* b, const char* expr, int emit_log,
                char** out_nf, char** out_log);

/* ---- named verifications ---- */

/* newline-separated "name: description" pairs */
int qalg_check_list(char** out_text);
/* n/deg of -1 select per-check defaults; preset may be NULL; report is
 * rendered as records (or JSON when json != 0) regardless of the verdict */
int qalg_verify(const char* check, int n, int deg, const char* preset, int threads,
                size_t term_guard, int json, char** out_report);

/* dimension command: preset name or presentation file text; deg of -1
 * selects the preset default; expect may be NULL */
int qalg_dim_command(const char* preset_or_text, int is_file_text, int n, int deg,
                     const char* field, int filtered, const char* expect, int json,
                     char** out_report);

/* operator slice comparison over the combinator language */
int qalg_op_check(const char* lhs, const char* rhs, int n, int deg, int json,
                  char** out_report);

/* graded dimensions over Q versus the given primes (comma-separated; empty
 * selects the default prime set) */
int qalg_torsion_probe(const char* preset, int n, int max_degree, const char* primes,
                       int json, char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* QALG_H */
