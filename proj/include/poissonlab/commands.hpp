#pragma once
// Command layer shared by the C API and the test-suite: every CLI command
// as a pure function from a string key/value config to (exit code, output).

#include <map>
#include <string>

namespace plab {

// Exit-code contract: 0 pass, 1 usage/config error, 2 residual breach,
// 3 ambiguous cell classification.
struct CmdResult {
  int exit_code = 0;
  std::string output;  // JSON or CSV
  std::string error;   // human-readable message when exit_code != 0
};

struct RunConfig {
  std::map<std::string, std::string> kv;

  void set(const std::string& key, const std::string& value) { kv[key] = value; }
  bool has(const std::string& key) const { return kv.count(key) != 0; }
  std::string get(const std::string& key, const std::string& fallback) const;
  long get_int(const std::string& key, long fallback) const;
  double get_real(const std::string& key, double fallback) const;
};

extern const char* kVersion;

// command is one of: verify-manin, verify-poisson, truncation-growth,
// schubert, gamma-flow.
CmdResult run_command(const std::string& command, const RunConfig& cfg);

}  // namespace plab
