/*
 * cka - equivalence and inclusion of commutative regular expressions.
 *
 * C API over the shared library. All objects are opaque handles owned by the
 * caller and released with the matching *_destroy function. Functions report
 * CKA_OK on success; on any other status the session stores a human-readable
 * message retrievable with cka_session_error(). Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * cka_string_free().
 */
#ifndef CKA_H
#define CKA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cka_status {
  CKA_OK = 0,
  CKA_ERR_PARSE = 1,   /* malformed expression, monomial, or JSON */
  CKA_ERR_USAGE = 2,   /* null handle, foreign handle, broken precondition */
  CKA_ERR_INTERNAL = 3 /* invariant breach inside the library; a bug */
} cka_status;

/* A fixed alphabet plus the last error message. Not thread-safe; use one
 * session per thread. */
typedef struct cka_session cka_session;
/* A parsed commutative regular expression, bound to its session. */
typedef struct cka_expr cka_expr;
/* A normal form: a finite union of unambiguous linear sets. */
typedef struct cka_semilinear cka_semilinear;

/* letters: comma-separated single letters fixing the coordinate order,
 * e.g. "a,b,c". */
cka_status cka_session_create(const char *letters, cka_session **out);
void cka_session_destroy(cka_session *session);
/* Message of the most recent failure on this session; "" if none. The
 * pointer stays valid until the next call on the session. */
const char *cka_session_error(const cka_session *session);

/* Grammar: union `e+f`, product `e f` / `e.f`, iteration `e*`, powers `e^n`,
 * constants `0` and `1`, parentheses. */
cka_status cka_expr_parse(cka_session *session, const char *text,
                          cka_expr **out);
void cka_expr_destroy(cka_expr *expr);
cka_status cka_expr_format(cka_session *session, const cka_expr *expr,
                           char **out);
/* All vectors of the expression's semantics with total degree <= degree, one
 * monomial per line in canonical order. */
cka_status cka_expr_enumerate(cka_session *session, const cka_expr *expr,
                              unsigned degree, char **out);
cka_status cka_expr_is_empty(cka_session *session, const cka_expr *expr,
                             int *empty);

/* Normalize to a union of unambiguous linear sets with the same semantics. */
cka_status cka_normalize(cka_session *session, const cka_expr *expr,
                         cka_semilinear **out);
void cka_semilinear_destroy(cka_semilinear *set);
/* Expression syntax (one line, re-parseable). */
cka_status cka_semilinear_format(cka_session *session,
                                 const cka_semilinear *set, char **out);
/* {"alphabet": ["a","b"], "terms": [{"offset": {"a":1}, "base":
 * [{"a":1,"b":1}]}]}; omitted letters mean count 0. */
cka_status cka_semilinear_to_json(cka_session *session,
                                  const cka_semilinear *set, char **out);
cka_status cka_semilinear_from_json(cka_session *session, const char *json,
                                    cka_semilinear **out);
cka_status cka_semilinear_term_count(cka_session *session,
                                     const cka_semilinear *set, size_t *count);
/* monomial: `1` or letters with optional powers, e.g. "a^2 b". */
cka_status cka_semilinear_member(cka_session *session,
                                 const cka_semilinear *set,
                                 const char *monomial, int *is_member);

/* Decide inclusion (resp. equivalence) of the semantics. On a negative
 * verdict *counterexample receives a monomial witnessing the difference.
 * With want_trace != 0, *trace_json receives the rewrite trace. Either
 * out-parameter may be NULL when the caller does not need it. */
cka_status cka_decide_leq(cka_session *session, const cka_expr *e,
                          const cka_expr *f, int want_trace, int *holds,
                          char **counterexample, char **trace_json);
cka_status cka_decide_eq(cka_session *session, const cka_expr *e,
                         const cka_expr *f, int want_trace, int *holds,
                         char **counterexample, char **trace_json);

void cka_string_free(char *str);

#ifdef __cplusplus
}
#endif

#endif
