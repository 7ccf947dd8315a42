// CLI front-end; links only the extern-C shared library API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "poissonlab.h"

namespace {

struct Options {
  std::map<std::string, std::string> kv;
  std::string out_path;
};

void add_if_set(CLI::App* cmd, Options& opts, std::string& command,
                const std::string& name) {
  cmd->final_callback([cmd, &opts, &command, name]() {
    command = name;
    for (const CLI::Option* o : cmd->get_options()) {
      if (o->get_name().rfind("--", 0) != 0 || o->count() == 0) continue;
      const std::string key = o->get_name().substr(2);
      if (key == "help") continue;
      if (key == "out") {
        opts.out_path = o->as<std::string>();
      } else {
        opts.kv[key] = o->as<std::string>();
      }
    }
  });
}

int emit(const Options& opts, const std::string& command) {
  plab_config* cfg = plab_config_new();
  if (!cfg) return 1;
  for (const auto& [k, v] : opts.kv) plab_config_set(cfg, k.c_str(), v.c_str());
  plab_result* res = plab_run(command.c_str(), cfg);
  plab_config_free(cfg);
  if (!res) return 1;
  const int code = plab_result_exit_code(res);
  const std::string output = plab_result_output(res);
  const std::string error = plab_result_error(res);
  if (!opts.out_path.empty()) {
    std::ofstream out(opts.out_path, std::ios::binary);
    out << output;
  } else {
    std::cout << output;
  }
  if (!error.empty()) std::cerr << "error: " << error << "\n";
  plab_result_free(res);
  return code;
}

void common_flags(CLI::App* cmd) {
  cmd->add_option("--n", "window half-size N");
  cmd->add_option("--trials", "number of random trials");
  cmd->add_option("--seed", "master RNG seed");
  cmd->add_option("--tol", "tolerance override");
  cmd->add_option("--format", "output format: json or csv");
  cmd->add_option("--out", "write output to PATH instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"poissonlab: numerical verification of Poisson-Lie structures "
               "on finite operator truncations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(plab_version()));

  Options opts;
  std::string command;

  CLI::App* manin = app.add_subcommand("verify-manin", "Manin triple residual suite");
  common_flags(manin);
  add_if_set(manin, opts, command, "verify-manin");

  CLI::App* poisson =
      app.add_subcommand("verify-poisson", "Poisson-Lie cocycle/Jacobi/tangent suite");
  common_flags(poisson);
  poisson->add_option("--kind",
                      "group kind: unitary_p, b_plus, b_minus, u_res, b_res_plus");
  poisson->add_option("--p", "Schatten exponent for the L_p kinds");
  poisson->add_option("--sign", "Iwasawa sign (+1 or -1)");
  poisson->add_option("--h-step", "finite-difference step");
  poisson->add_option("--tangent-tol", "tangent check tolerance");
  add_if_set(poisson, opts, command, "verify-poisson");

  CLI::App* growth =
      app.add_subcommand("truncation-growth", "triangular-truncation growth experiment");
  common_flags(growth);
  growth->add_option("--n-list", "comma-separated ascending even sizes");
  add_if_set(growth, opts, command, "truncation-growth");

  CLI::App* schubert =
      app.add_subcommand("schubert", "Schubert cell census / frame classification");
  common_flags(schubert);
  schubert->add_option("--mode", "census or classify");
  schubert->add_option("--frame", "frame file (matrix exchange JSON) for classify");
  add_if_set(schubert, opts, command, "schubert");

  CLI::App* gamma = app.add_subcommand("gamma-flow", "Gamma+ flow on the Grassmannian");
  common_flags(gamma);
  gamma->add_option("--coeffs", "comma-separated coefficients (re or re:im)");
  gamma->add_option("--cell", "starting cell as comma-separated window labels");
  gamma->add_option("--t-max", "flow endpoint");
  gamma->add_option("--t-steps", "number of grid steps");
  add_if_set(gamma, opts, command, "gamma-flow");

  CLI11_PARSE(app, argc, argv);
  return emit(opts, command);
}
