/* C interface to the mirror-formula engine.
 *
 * A session wraps one target model, described by a string of the form
 * "n=<coordinates>;a=<comma separated degrees>", e.g. "n=5;a=5" for the
 * quintic threefold or "n=6;a=3,3" for the bicubic one.
 *
 * Every computation returns a status code; on success the *out parameter
 * receives a malloc'd NUL-terminated document (JSON or CSV, per the
 * format argument) that the caller releases with gwm_free. On failure a
 * human-readable message is available from gwm_last_error until the next
 * call on the same session. All values inside the documents are exact
 * rational strings; output is byte-identical for identical inputs.
 */
#ifndef GWMIRROR_H
#define GWMIRROR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gwm_session gwm_session;

typedef enum gwm_status {
  GWM_OK = 0,
  GWM_ERR_INVALID = 1, /* unparsable input or unsupported combination */
  GWM_ERR_DOMAIN = 2,  /* arguments outside a routine's domain */
  GWM_ERR_COMPUTE = 3  /* internal failure during evaluation */
} gwm_status;

const char* gwm_status_name(gwm_status s);

/* Creates a session for the given model string. On failure returns the
 * status and, if errbuf is non-NULL, copies a message into it (truncated
 * to errlen - 1 characters). */
gwm_status gwm_session_open(const char* model, gwm_session** out,
                            char* errbuf, size_t errlen);
void gwm_session_close(gwm_session* s);

/* Model label, e.g. "X(3,3) in P5"; owned by the session. */
const char* gwm_model_label(const gwm_session* s);

/* Message from the most recent failing call on s; empty if none. */
const char* gwm_last_error(const gwm_session* s);

/* Two-point primary invariants <H^b1, H^b2>_d for d = 1..dmax together
 * with the integer counts obtained by the multiple-cover inversion.
 * Requires a Calabi-Yau model and b1 + b2 = dim - 1. */
gwm_status gwm_bps(gwm_session* s, int b1, int b2, int dmax,
                   const char* format, char** out);

/* Two-point descendant invariants <psi^p1 H^b1, psi^p2 H^b2>_d for
 * d = 1..dmax. Works for Calabi-Yau and Fano models alike. */
gwm_status gwm_descendants(gwm_session* s, int p1, int b1, int p2, int b2,
                           int dmax, const char* format, char** out);

/* Open and unoriented invariants of a Calabi-Yau threefold intersection
 * (n = l + 4), computed from the localization graph sums at torus weights
 * in opposite pairs. what: "disk", "annulus", "klein", or "all". weights:
 * "default", "random" (seeded), or an explicit comma-separated list. */
gwm_status gwm_open_sector(gwm_session* s, const char* what, int dmax,
                           const char* weights, unsigned seed,
                           const char* format, char** out);

/* Runs verification suites ("coeffs", "hypergeom", "equivariant", "open",
 * or "all"; comma separated). failures receives the number of failing
 * checks; the document lists every check with status and detail. */
gwm_status gwm_verify(gwm_session* s, const char* suites, int dmax,
                      int qorder, const char* weights, unsigned seed,
                      const char* format, int* failures, char** out);

void gwm_free(char* buf);

#ifdef __cplusplus
}
#endif

#endif /* GWMIRROR_H */
