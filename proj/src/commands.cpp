#include "poissonlab/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "poissonlab/core.hpp"
#include "poissonlab/grassmannian.hpp"
#include "poissonlab/lie_structures.hpp"
#include "poissonlab/poisson_groups.hpp"
#include "poissonlab/truncation.hpp"

namespace plab {

using json = nlohmann::ordered_json;

const char* kVersion = "1.0.0";

std::string RunConfig::get(const std::string& key, const std::string& fallback) const {
  auto it = kv.find(key);
  return it == kv.end() ? fallback : it->second;
}

long RunConfig::get_int(const std::string& key, long fallback) const {
  auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  return std::stol(it->second);
}

double RunConfig::get_real(const std::string& key, double fallback) const {
  auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  return std::stod(it->second);
}

namespace {

CmdResult usage_error(const std::string& msg) { return CmdResult{1, "", msg}; }

struct CommonCfg {
  int N;
  int trials;
  std::uint64_t seed;
};

bool read_common(const RunConfig& cfg, CommonCfg& out, std::string& err, int default_n,
                 int default_trials) {
  const long n = cfg.get_int("n", default_n);
  const long trials = cfg.get_int("trials", default_trials);
  if (n < 1 || n > 1024) {
    err = "n must be in [1, 1024]";
    return false;
  }
  if (trials < 1 || trials > 1000000) {
    err = "trials must be in [1, 1e6]";
    return false;
  }
  out.N = static_cast<int>(n);
  out.trials = static_cast<int>(trials);
  out.seed = static_cast<std::uint64_t>(cfg.get_int("seed", 12345));
  return true;
}

json manin_report_json(const ManinReport& r) {
  return json{{"invariance_residual", r.invariance_residual},
              {"isotropy_residual_u", r.isotropy_residual_u},
              {"isotropy_residual_b", r.isotropy_residual_b},
              {"decomposition_residual", r.decomposition_residual},
              {"nondegeneracy_min_sv", r.nondegeneracy_min_sv}};
}

CmdResult cmd_verify_manin(const RunConfig& cfg) {
  CommonCfg c;
  std::string err;
  if (!read_common(cfg, c, err, 8, 200)) return usage_error(err);
  const double tol = cfg.get_real("tol", 1e-9);
  const double nondeg_min = cfg.get_real("nondegeneracy-min", 1e-6);
  const Window w(c.N);
  const ManinReport plus = verify_manin_triple(w, +1, c.trials, c.seed);
  const ManinReport minus = verify_manin_triple(w, -1, c.trials, c.seed + 1);
  bool pass = true;
  for (const ManinReport* r : {&plus, &minus}) {
    pass = pass && r->invariance_residual < tol && r->isotropy_residual_u < tol &&
           r->isotropy_residual_b < tol && r->decomposition_residual < tol &&
           r->nondegeneracy_min_sv > nondeg_min;
  }
  json out{{"version", kVersion},
           {"command", "verify-manin"},
           {"seed", c.seed},
           {"N", c.N},
           {"trials", c.trials},
           {"tolerances", {{"residual_tol", tol}, {"nondegeneracy_min", nondeg_min}}},
           {"sign_plus", manin_report_json(plus)},
           {"sign_minus", manin_report_json(minus)},
           {"pass", pass}};
  return CmdResult{pass ? 0 : 2, out.dump(2) + "\n",
                   pass ? "" : "Manin triple residual breach"};
}

bool parse_kind(const std::string& s, GroupKind& kind) {
  if (s == "unitary_p") kind = GroupKind::UnitaryP;
  else if (s == "b_plus") kind = GroupKind::BPlus;
  else if (s == "b_minus") kind = GroupKind::BMinus;
  else if (s == "u_res") kind = GroupKind::URes;
  else if (s == "b_res_plus") kind = GroupKind::BResPlus;
  else return false;
  return true;
}

CmdResult cmd_verify_poisson(const RunConfig& cfg) {
  CommonCfg c;
  std::string err;
  if (!read_common(cfg, c, err, 4, 100)) return usage_error(err);
  GroupKind kind;
  const std::string kind_name = cfg.get("kind", "b_res_plus");
  if (!parse_kind(kind_name, kind)) return usage_error("unknown kind: " + kind_name);
  const double tol = cfg.get_real("tol", 1e-8);
  const double tangent_tol = cfg.get_real("tangent-tol", 1e-6);
  const double h = cfg.get_real("h-step", 1e-4);
  const Window w(c.N);

  // Pi_r(e) over the full covector basis: vanishing at the unit element.
  double pi_e = 0.0;
  {
    const GroupElement e{kind, Mat::Identity(w.size(), w.size())};
    const std::vector<Mat> basis = covector_basis(kind, w);
    for (const Mat& c1 : basis) {
      for (const Mat& c2 : basis) pi_e = std::max(pi_e, std::abs(pi_r(e, c1, c2)));
    }
  }

  double max_cocycle = 0.0, max_jacobi = 0.0, max_tangent = 0.0;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng = trial_rng(c.seed, static_cast<std::uint64_t>(t));
    const GroupElement g = random_group_element(kind, w, rng);
    const GroupElement u = random_group_element(kind, w, rng);
    max_cocycle = std::max(max_cocycle, group_cocycle_residual(g, u, w));

    const Mat c1 = random_covector(kind, w, rng);
    const Mat c2 = random_covector(kind, w, rng);
    const Mat c3 = random_covector(kind, w, rng);
    max_jacobi = std::max(max_jacobi, jacobi_residual(g, c1, c2, c3));

    Rng rng2 = trial_rng(c.seed ^ 0x5bd1e995, static_cast<std::uint64_t>(t));
    const Mat X = (group_sign(kind) != 0 &&
                   (kind == GroupKind::UnitaryP || kind == GroupKind::URes))
                      ? random_op(w, Ensemble::SkewHermitian, rng2)
                      : (kind == GroupKind::BMinus
                             ? Mat(random_op(w, Ensemble::UpperRealDiag, rng2)
                                       .transpose())
                             : random_op(w, Ensemble::UpperRealDiag, rng2));
    const auto [closed, fd] = tangent_bracket_check(kind, w, X, c1, c2, h);
    max_tangent = std::max(max_tangent,
                           std::abs(closed - fd) / scale_of({&X, &c1, &c2}));
  }

  const bool pass = pi_e == 0.0 && max_cocycle < tol && max_jacobi < tol &&
                    max_tangent < tangent_tol;
  json out{{"version", kVersion},
           {"command", "verify-poisson"},
           {"kind", kind_name},
           {"seed", c.seed},
           {"N", c.N},
           {"trials", c.trials},
           {"p", cfg.get_real("p", 2.0)},
           {"tolerances",
            {{"residual_tol", tol}, {"tangent_tol", tangent_tol}, {"h", h}}},
           {"pi_at_identity_max", pi_e},
           {"max_cocycle_residual", max_cocycle},
           {"max_jacobi_residual", max_jacobi},
           {"max_tangent_residual", max_tangent},
           {"pass", pass}};
  return CmdResult{pass ? 0 : 2, out.dump(2) + "\n",
                   pass ? "" : "Poisson-Lie residual breach"};
}

bool parse_int_list(const std::string& s, std::vector<int>& out) {
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (...) {
      return false;
    }
  }
  return !out.empty();
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CmdResult cmd_truncation_growth(const RunConfig& cfg) {
  std::vector<int> n_list;
  if (!parse_int_list(cfg.get("n-list", "8,16,32,64,128,256"), n_list)) {
    return usage_error("bad n-list");
  }
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 2 || n_list[i] % 2 != 0) return usage_error("n-list entries must be even and >= 2");
    if (i > 0 && n_list[i] <= n_list[i - 1]) return usage_error("n-list must be ascending");
  }
  const std::uint64_t seed = static_cast<std::uint64_t>(cfg.get_int("seed", 12345));
  const TruncationKind k = TruncationKind::Upper;

  std::vector<GrowthRow> rows;
  for (SchattenExp e : {SchattenExp::one(), SchattenExp::two(), SchattenExp::inf()}) {
    const auto part = growth_experiment(n_list, e, k, seed);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  for (int n : n_list) {
    const int m = n / 2;
    if (m % 2 != 0) continue;  // interleaved block witness needs even half-size
    rows.push_back({n, block_truncated_trace_norm(m), "tn_block", "upper", seed});
  }

  bool pass = true;
  for (SchattenExp e : {SchattenExp::one(), SchattenExp::inf()}) {
    const char* name = e.kind == SchattenKind::One ? "1" : "inf";
    double prev = -1.0;
    for (const GrowthRow& r : rows) {
      if (r.norm_kind != name) continue;
      if (r.ratio <= prev) pass = false;
      prev = r.ratio;
    }
  }
  for (const GrowthRow& r : rows) {
    if (r.norm_kind == "2" && r.ratio > 1.0 + 1e-9) pass = false;
  }

  std::string output;
  if (cfg.get("format", "csv") == "json") {
    json jrows = json::array();
    for (const GrowthRow& r : rows) {
      jrows.push_back({{"N", r.N},
                       {"ratio", r.ratio},
                       {"norm_kind", r.norm_kind},
                       {"trunc_kind", r.trunc_kind},
                       {"seed", r.seed}});
    }
    json out{{"version", kVersion},
             {"command", "truncation-growth"},
             {"seed", seed},
             {"N", n_list.back()},
             {"tolerances", {{"hs_bound", 1.0 + 1e-9}}},
             {"rows", jrows},
             {"pass", pass}};
    output = out.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "N,ratio,norm_kind,trunc_kind,seed\n";
    for (const GrowthRow& r : rows) {
      os << r.N << ',' << format_double(r.ratio) << ',' << r.norm_kind << ','
         << r.trunc_kind << ',' << r.seed << '\n';
    }
    output = os.str();
  }
  return CmdResult{pass ? 0 : 2, output, pass ? "" : "growth columns violated"};
}

bool parse_frame_file(const std::string& path, int& N, Mat& frame, std::string& err) {
  std::ifstream in(path);
  if (!in) {
    err = "cannot open frame file: " + path;
    return false;
  }
  json j;
  try {
    in >> j;
    N = j.at("N").get<int>();
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != 2 * N) throw std::runtime_error("need 2N rows");
    frame = Mat(2 * N, N);
    for (int r = 0; r < 2 * N; ++r) {
      if (static_cast<int>(rows[r].size()) != N) throw std::runtime_error("need N cols");
      for (int c = 0; c < N; ++c) {
        frame(r, c) = Complex(rows[r][c][0].get<double>(), rows[r][c][1].get<double>());
      }
    }
  } catch (const std::exception& ex) {
    err = std::string("bad frame file: ") + ex.what();
    return false;
  }
  return true;
}

CmdResult cmd_schubert(const RunConfig& cfg) {
  const std::string mode = cfg.get("mode", "census");
  const std::uint64_t seed = static_cast<std::uint64_t>(cfg.get_int("seed", 12345));
  const double rank_tol = cfg.get_real("tol", 0.0);
  if (mode == "census") {
    const long n = cfg.get_int("n", 2);
    if (n < 1 || n > 4) return usage_error("census requires 1 <= n <= 4");
    const Window w(static_cast<int>(n));
    json cells = json::array();
    for (const CellIndex& S : all_cells(w)) {
      const Transversality tv = transversality_check(w, S);
      cells.push_back({{"S", S.S},
                       {"dim", cell_dimension(w, S)},
                       {"dim_minus", tv.dim_minus},
                       {"intersection_dim", tv.intersection_dim}});
    }
    json out{{"version", kVersion},
             {"command", "schubert"},
             {"mode", "census"},
             {"seed", seed},
             {"N", n},
             {"tolerances", {{"rank_tol", rank_tol}}},
             {"cells", cells}};
    return CmdResult{0, out.dump(2) + "\n", ""};
  }
  if (mode == "classify") {
    if (!cfg.has("frame")) return usage_error("classify requires --frame FILE");
    int N = 0;
    Mat frame;
    std::string err;
    if (!parse_frame_file(cfg.get("frame", ""), N, frame, err)) return usage_error(err);
    const Window w(N);
    const GrassPoint W = point_from_frame(w, frame);
    json out{{"version", kVersion},
             {"command", "schubert"},
             {"mode", "classify"},
             {"seed", seed},
             {"N", N},
             {"tolerances", {{"rank_tol", rank_tol}}}};
    try {
      const CellIndex S = cell_index_of(W, rank_tol);
      out["S"] = S.S;
      out["ambiguous"] = false;
      return CmdResult{0, out.dump(2) + "\n", ""};
    } catch (const AmbiguousCell& ex) {
      out["ambiguous"] = true;
      out["diagnostic"] = ex.what();
      return CmdResult{3, out.dump(2) + "\n", ex.what()};
    }
  }
  return usage_error("unknown schubert mode: " + mode);
}

bool parse_coeffs(const std::string& s, std::vector<Complex>& out) {
  if (s.empty()) return true;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      const auto colon = tok.find(':');
      if (colon == std::string::npos) {
        out.push_back(Complex(std::stod(tok), 0.0));
      } else {
        out.push_back(Complex(std::stod(tok.substr(0, colon)),
                              std::stod(tok.substr(colon + 1))));
      }
    } catch (...) {
      return false;
    }
  }
  return true;
}

CmdResult cmd_gamma_flow(const RunConfig& cfg) {
  const long n = cfg.get_int("n", 4);
  if (n < 1 || n > 1024) return usage_error("n must be in [1, 1024]");
  const Window w(static_cast<int>(n));
  std::vector<Complex> coeffs;
  if (!parse_coeffs(cfg.get("coeffs", "1"), coeffs)) return usage_error("bad coeffs");
  if (static_cast<int>(coeffs.size()) >= w.size()) {
    return usage_error("need K < 2N coefficients");
  }
  const std::uint64_t seed = static_cast<std::uint64_t>(cfg.get_int("seed", 12345));

  CellIndex start;
  {
    std::vector<int> labels;
    const std::string cell = cfg.get("cell", "");
    if (cell.empty()) {
      for (int i = 0; i < w.N; ++i) labels.push_back(i);  // H_+ basepoint
    } else if (!parse_int_list(cell, labels) ||
               static_cast<int>(labels.size()) != w.N) {
      return usage_error("cell must list N window labels");
    }
    std::sort(labels.begin(), labels.end());
    start.S = labels;
  }
  const GrassPoint start_pt = basepoint(w, start);

  const double t_max = cfg.get_real("t-max", 1.0);
  const long steps = cfg.get_int("t-steps", 8);
  if (steps < 1 || steps > 100000) return usage_error("t-steps must be in [1, 1e5]");

  json traj = json::array();
  for (long j = 0; j <= steps; ++j) {
    const double t = t_max * static_cast<double>(j) / static_cast<double>(steps);
    std::vector<Complex> scaled(coeffs);
    for (Complex& f : scaled) f *= t;
    const GroupElement M = gamma_plus_operator(scaled, w);
    const GrassPoint pt = act_b(M, start_pt);
    try {
      const CellIndex S = cell_index_of(pt);
      traj.push_back({{"t", t},
                      {"S", S.S},
                      {"distance", (pt.projection - start_pt.projection).norm()}});
    } catch (const AmbiguousCell& ex) {
      return CmdResult{3, "", ex.what()};
    }
  }
  json out{{"version", kVersion},
           {"command", "gamma-flow"},
           {"seed", seed},
           {"N", n},
           {"coeffs", cfg.get("coeffs", "1")},
           {"tolerances", {{"rank_tol", 0.0}}},
           {"trajectory", traj}};
  return CmdResult{0, out.dump(2) + "\n", ""};
}

}  // namespace

CmdResult run_command(const std::string& command, const RunConfig& cfg) {
  try {
    if (command == "verify-manin") return cmd_verify_manin(cfg);
    if (command == "verify-poisson") return cmd_verify_poisson(cfg);
    if (command == "truncation-growth") return cmd_truncation_growth(cfg);
    if (command == "schubert") return cmd_schubert(cfg);
    if (command == "gamma-flow") return cmd_gamma_flow(cfg);
    return usage_error("unknown command: " + command);
  } catch (const std::invalid_argument& ex) {
    return usage_error(ex.what());
  } catch (const std::exception& ex) {
    return CmdResult{1, "", std::string("error: ") + ex.what()};
  }
}

}  // namespace plab
