#include "poissonlab.h"

#include <new>
#include <string>

#include "poissonlab/commands.hpp"

struct plab_config {
  plab::RunConfig cfg;
};

struct plab_result {
  plab::CmdResult res;
};

extern "C" {

const char* plab_version(void) { return plab::kVersion; }

plab_config* plab_config_new(void) { return new (std::nothrow) plab_config(); }

void plab_config_free(plab_config* cfg) { delete cfg; }

int plab_config_set(plab_config* cfg, const char* key, const char* value) {
  if (!cfg || !key || !value) return PLAB_ERR_NULL_ARGUMENT;
  cfg->cfg.set(key, value);
  return PLAB_OK;
}

plab_result* plab_run(const char* command, const plab_config* cfg) {
  if (!command || !cfg) return nullptr;
  plab_result* res = new (std::nothrow) plab_result();
  if (!res) return nullptr;
  try {
    res->res = plab::run_command(command, cfg->cfg);
  } catch (const std::exception& ex) {
    res->res = plab::CmdResult{1, "", std::string("internal error: ") + ex.what()};
  } catch (...) {
    res->res = plab::CmdResult{1, "", "internal error"};
  }
  return res;
}

int plab_result_exit_code(const plab_result* res) {
  return res ? res->res.exit_code : PLAB_ERR_NULL_ARGUMENT;
}

const char* plab_result_output(const plab_result* res) {
  return res ? res->res.output.c_str() : "";
}

const char* plab_result_error(const plab_result* res) {
  return res ? res->res.error.c_str() : "";
}

void plab_result_free(plab_result* res) { delete res; }

}  // extern "C"
