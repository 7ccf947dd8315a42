/* C API for the poissonlab verification library.
 *
 * Usage:
 *   plab_config* cfg = plab_config_new();
 *   plab_config_set(cfg, "n", "8");
 *   plab_result* res = plab_run("verify-manin", cfg);
 *   ... plab_result_exit_code(res), plab_result_output(res) ...
 *   plab_result_free(res);
 *   plab_config_free(cfg);
 *
 * Exit-code contract: 0 pass, 1 usage/config error, 2 residual breach,
 * 3 ambiguous cell classification.
 */
#ifndef POISSONLAB_H
#define POISSONLAB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct plab_config plab_config;
typedef struct plab_result plab_result;

/* Status codes returned by API calls themselves (not command exit codes). */
enum plab_status {
  PLAB_OK = 0,
  PLAB_ERR_NULL_ARGUMENT = 1,
  PLAB_ERR_UNKNOWN_COMMAND = 2,
  PLAB_ERR_INTERNAL = 3
};

const char* plab_version(void);

plab_config* plab_config_new(void);
void plab_config_free(plab_config* cfg);
/* All configuration is string key/value; numeric keys are parsed by the
 * command layer.  Returns a plab_status. */
int plab_config_set(plab_config* cfg, const char* key, const char* value);

/* Runs a command ("verify-manin", "verify-poisson", "truncation-growth",
 * "schubert", "gamma-flow").  Returns NULL only on allocation failure or
 * NULL arguments; command failures are reported via the result handle. */
plab_result* plab_run(const char* command, const plab_config* cfg);

int plab_result_exit_code(const plab_result* res);
const char* plab_result_output(const plab_result* res);
const char* plab_result_error(const plab_result* res);
void plab_result_free(plab_result* res);

#ifdef __cplusplus
}
#endif

#endif /* POISSONLAB_H */
