/* ramcc — exact ramification invariants of type (II) extensions.
 *
 * C API for the shared library. All functions are thread-compatible: one
 * session per thread; distinct sessions never share mutable state.
 *
 * Typical use:
 *   ramcc_session* s = ramcc_session_new();
 *   ramcc_set_option(s, "command", "compare");
 *   if (ramcc_run_text(s, doc, strlen(doc)) != RAMCC_OK) { ... }
 *   puts(ramcc_report_json(s));
 *   int code = ramcc_exit_code(s);
 *   ramcc_session_free(s);
 */
#ifndef RAMCC_H
#define RAMCC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ramcc_session ramcc_session;

typedef enum {
  RAMCC_OK = 0,
  RAMCC_E_ARGUMENT = 1, /* bad option name/value or null pointer */
  RAMCC_E_RUN = 2,      /* the run itself reported an input error */
  RAMCC_E_INTERNAL = 3
} ramcc_status;

ramcc_session* ramcc_session_new(void);
void ramcc_session_free(ramcc_session* s);

/* Options: "command" (validate|invariants|swan|cc|compare|nearby),
 * "precision" (integer, 0 = default), "seed" (integer),
 * "psi" (psi0 exponent, default 1). */
ramcc_status ramcc_set_option(ramcc_session* s, const char* key, const char* value);

/* Runs the configured command on an input document. Returns RAMCC_OK even
 * when the mathematics reports a mismatch; consult ramcc_exit_code. */
ramcc_status ramcc_run_text(ramcc_session* s, const char* text, size_t len);

/* Report accessors; pointers stay valid until the next run or free. */
const char* ramcc_report_json(const ramcc_session* s);
const char* ramcc_report_text(const ramcc_session* s);

/* CLI exit-code contract: 0 success, 1 mathematical mismatch, 2 input error. */
int ramcc_exit_code(const ramcc_session* s);

/* Message for the last RAMCC_E_* status (empty when none). */
const char* ramcc_last_error(const ramcc_session* s);

const char* ramcc_version(void);

#ifdef __cplusplus
}
#endif

#endif /* RAMCC_H */
