/*
 * C API for the koszul library: construct pre-Koszul pairs from quadratic
 * presentation files, decide Koszulity up to a degree bound, compute the
 * Tor/Ext dimension tables, and build/verify twisted tensor products.
 *
 * All functions are thread-compatible: distinct handles may be used from
 * distinct threads concurrently; a single handle must not be shared without
 * external synchronization.
 */
#ifndef KOSZUL_H
#define KOSZUL_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
#define KOSZUL_OK 0           /* all gates passed */
#define KOSZUL_FAIL 1         /* mathematical failure; witness in the report */
#define KOSZUL_INPUT_ERROR 2  /* unparsable input, schema violation, bad option */

typedef struct koszul_options koszul_options;
typedef struct koszul_result koszul_result;

/* Option setters return KOSZUL_OK or KOSZUL_INPUT_ERROR on bad arguments. */
koszul_options *koszul_options_new(void);
void koszul_options_free(koszul_options *opt);
int koszul_options_set_max_degree(koszul_options *opt, int n);
int koszul_options_set_report_format(koszul_options *opt, const char *fmt); /* "json"|"text" */
int koszul_options_set_field(koszul_options *opt, const char *field);       /* "rational"|"gfP" */
int koszul_options_set_seed(koszul_options *opt, unsigned long long seed);
int koszul_options_set_coring_truncate(koszul_options *opt, int degree);
int koszul_options_set_timings(koszul_options *opt, int enabled);

/*
 * Runs one of the commands "check", "dual", "twist", "hilbert" on the given
 * presentation-file text. Returns the status code and, unless allocation
 * failed, stores a result handle in *out (also on failures, so the report
 * and diagnostic can be read). opt may be NULL for defaults.
 */
int koszul_run(const char *command, const char *input_text, const koszul_options *opt,
               koszul_result **out);

int koszul_result_status(const koszul_result *res);
const char *koszul_result_report(const koszul_result *res);
/* NULL when the run succeeded. */
const char *koszul_result_error(const koszul_result *res);
void koszul_result_free(koszul_result *res);

const char *koszul_version(void);

#ifdef __cplusplus
}
#endif

#endif /* KOSZUL_H */
