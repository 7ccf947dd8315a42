// Exercises the extern-C surface and the CLI binary end to end.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "poissonlab.h"

namespace {

int g_failures = 0;

#define CHECK_MSG(cond, msg)                                                   \
  do {                                                                         \
    if (!(cond)) {                                                             \
      ++g_failures;                                                            \
      std::cerr << __FILE__ << ":" << __LINE__ << ": FAILED: " << msg << "\n"; \
    }                                                                          \
  } while (0)

struct RunOut {
  int code = -1;
  std::string output;
  std::string error;
};

RunOut run_capi(const char* command,
                const std::map<std::string, std::string>& kv) {
  RunOut out;
  plab_config* cfg = plab_config_new();
  for (const auto& [k, v] : kv) plab_config_set(cfg, k.c_str(), v.c_str());
  plab_result* res = plab_run(command, cfg);
  plab_config_free(cfg);
  if (!res) return out;
  out.code = plab_result_exit_code(res);
  out.output = plab_result_output(res);
  out.error = plab_result_error(res);
  plab_result_free(res);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args, const std::string& out_path) {
  const std::string cmd =
      std::string(PLAB_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

int main() {
  // Version string.
  CHECK_MSG(plab_version() != nullptr && std::strlen(plab_version()) > 0,
            "version string");

  // Null-argument contract.
  CHECK_MSG(plab_config_set(nullptr, "n", "2") == PLAB_ERR_NULL_ARGUMENT,
            "null config rejected");
  CHECK_MSG(plab_run(nullptr, nullptr) == nullptr, "null run rejected");

  // verify-manin: small instance passes and reports both signs.
  const RunOut manin = run_capi("verify-manin", {{"n", "2"}, {"trials", "5"}});
  CHECK_MSG(manin.code == 0, "verify-manin exit 0, got " << manin.code
                                                         << " err=" << manin.error);
  CHECK_MSG(contains(manin.output, "\"sign_plus\""), "sign_plus in report");
  CHECK_MSG(contains(manin.output, "\"sign_minus\""), "sign_minus in report");
  CHECK_MSG(contains(manin.output, "\"pass\": true"), "manin pass flag");

  // Deterministic across identical runs.
  const RunOut manin2 = run_capi("verify-manin", {{"n", "2"}, {"trials", "5"}});
  CHECK_MSG(manin.output == manin2.output, "C API output deterministic");

  // Usage errors -> exit 1.
  CHECK_MSG(run_capi("verify-manin", {{"n", "0"}}).code == 1, "n=0 is usage error");
  CHECK_MSG(run_capi("verify-poisson", {{"kind", "bogus"}}).code == 1,
            "unknown kind is usage error");
  CHECK_MSG(run_capi("no-such-command", {}).code == 1, "unknown command");

  // Impossible tolerance -> residual breach, exit 2.
  const RunOut breach = run_capi("verify-manin", {{"n", "2"}, {"trials", "5"},
                                                  {"tol", "0"}});
  CHECK_MSG(breach.code == 2, "tol=0 breaches, got " << breach.code);
  CHECK_MSG(!breach.error.empty(), "breach carries an error message");

  // verify-poisson runs for every kind on a tiny window.
  for (const char* kind : {"unitary_p", "b_plus", "b_minus", "u_res", "b_res_plus"}) {
    const RunOut vp = run_capi("verify-poisson",
                               {{"kind", kind}, {"n", "2"}, {"trials", "5"}});
    CHECK_MSG(vp.code == 0, "verify-poisson " << kind << " exit 0, got " << vp.code
                                              << " err=" << vp.error);
    CHECK_MSG(contains(vp.output, "\"pass\": true"), kind << " pass flag");
  }

  // truncation-growth: CSV is the default format.
  const RunOut growth = run_capi("truncation-growth", {{"n-list", "8,16,32"}});
  CHECK_MSG(growth.code == 0, "truncation-growth exit 0, got " << growth.code);
  CHECK_MSG(contains(growth.output, "N,ratio,norm_kind,trunc_kind,seed"),
            "growth CSV header");

  // schubert census.
  const RunOut census = run_capi("schubert", {{"mode", "census"}, {"n", "2"}});
  CHECK_MSG(census.code == 0, "census exit 0");
  CHECK_MSG(contains(census.output, "\"cells\""), "census lists cells");

  // schubert classify: generic frame classifies, near-boundary frame is
  // reported as ambiguous with exit 3.
  const std::string good = "/tmp/plab_frame_good.json";
  {
    std::ofstream f(good);
    f << R"({"N": 1, "rows": [[[1.0, 0.0]], [[0.5, 0.0]]]})";
  }
  const RunOut cls = run_capi("schubert", {{"mode", "classify"}, {"frame", good}});
  CHECK_MSG(cls.code == 0, "classify exit 0, err=" << cls.error);
  CHECK_MSG(contains(cls.output, "\"ambiguous\": false"), "classify unambiguous");
  CHECK_MSG(contains(cls.output, "[\n    -1\n  ]") || contains(cls.output, "[-1]"),
            "classify S=[-1]");

  const std::string edge = "/tmp/plab_frame_edge.json";
  {
    std::ofstream f(edge);
    f << R"({"N": 1, "rows": [[[1.0, 0.0]], [[1e-8, 0.0]]]})";
  }
  const RunOut amb = run_capi("schubert", {{"mode", "classify"}, {"frame", edge}});
  CHECK_MSG(amb.code == 3, "ambiguous frame exit 3, got " << amb.code);
  CHECK_MSG(contains(amb.output, "\"ambiguous\": true"), "ambiguous flag");

  // gamma-flow stays in the starting cell.
  const RunOut flow = run_capi("gamma-flow", {{"n", "2"}, {"coeffs", "0.5"}});
  CHECK_MSG(flow.code == 0, "gamma-flow exit 0, err=" << flow.error);
  CHECK_MSG(contains(flow.output, "\"trajectory\""), "gamma-flow trajectory");

  // CLI binary: flags reach the engine and output is byte-deterministic.
  const std::string o1 = "/tmp/plab_cli_run1.json";
  const std::string o2 = "/tmp/plab_cli_run2.json";
  CHECK_MSG(run_cli("verify-manin --n 2 --trials 5 --seed 99", o1) == 0,
            "CLI verify-manin exit 0");
  CHECK_MSG(run_cli("verify-manin --n 2 --trials 5 --seed 99", o2) == 0,
            "CLI verify-manin rerun exit 0");
  const std::string c1 = slurp(o1);
  CHECK_MSG(!c1.empty() && c1 == slurp(o2), "CLI output byte-identical");
  CHECK_MSG(contains(c1, "\"seed\": 99"), "CLI --seed reaches the engine");
  CHECK_MSG(contains(c1, "\"N\": 2"), "CLI --n reaches the engine");

  CHECK_MSG(run_cli("truncation-growth --n-list 8,16 --format csv", o1) == 0,
            "CLI growth exit 0");
  CHECK_MSG(run_cli("truncation-growth --n-list 8,16 --format csv", o2) == 0,
            "CLI growth rerun exit 0");
  CHECK_MSG(slurp(o1) == slurp(o2), "CLI growth byte-identical");

  if (g_failures == 0) {
    std::cout << "capi/cli tests: all passed\n";
    return 0;
  }
  std::cerr << "capi/cli tests: " << g_failures << " failure(s)\n";
  return 1;
}
