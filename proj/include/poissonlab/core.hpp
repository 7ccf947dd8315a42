#pragma once
// Finite-truncation model of operators on H = H+ (+) H-: index windows,
// dense complex matrices, Schatten/restricted norms, restricted trace,
// and structured random generation.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace plab {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;

// Index window {-N, ..., N-1} with basis ordered by decreasing n:
// pos(n) = N-1-n, so H+ (n >= 0) occupies matrix rows/cols 0..N-1 and
// H- occupies N..2N-1.  With this ordering the paper's "upper triangular"
// (A|n> in span{|m> : m >= n}) is literal storage upper-triangularity.
struct Window {
  int N = 0;

  explicit Window(int half_size) : N(half_size) {
    if (half_size <= 0) throw std::invalid_argument("window half_size must be positive");
  }
  int size() const { return 2 * N; }
  int pos(int n) const { return N - 1 - n; }  // n in {-N,...,N-1}
  int label(int p) const { return N - 1 - p; }  // inverse of pos
  bool operator==(const Window& o) const { return N == o.N; }
};

enum class SchattenKind { One, Two, P, Inf, Res, OneTwo };

struct SchattenExp {
  SchattenKind kind = SchattenKind::Two;
  double p = 2.0;  // used only for kind == P (requires p > 1)

  static SchattenExp one() { return {SchattenKind::One, 1.0}; }
  static SchattenExp two() { return {SchattenKind::Two, 2.0}; }
  static SchattenExp finite(double p) { return {SchattenKind::P, p}; }
  static SchattenExp inf() { return {SchattenKind::Inf, 0.0}; }
  static SchattenExp res() { return {SchattenKind::Res, 0.0}; }
  static SchattenExp one_two() { return {SchattenKind::OneTwo, 0.0}; }
};

// d = i(p+ - p-): diagonal +i on H+ positions, -i on H-.
Mat split_d(const Window& w);

Eigen::VectorXd singular_values(const Mat& A);

double schatten_norm(const Mat& A, const Window& w, SchattenExp e);
Complex restricted_trace(const Mat& A);
Mat commutator(const Mat& A, const Mat& B);

enum class Ensemble { Ginibre, SkewHermitian, UpperRealDiag, Unitary, BPlusGroup };

using Rng = std::mt19937_64;

// Derives an independent per-trial stream from a master seed (splitmix64).
Rng trial_rng(std::uint64_t master_seed, std::uint64_t trial_index);

Mat random_op(const Window& w, Ensemble ensemble, Rng& rng);

// Scale used to normalize residuals: product of Frobenius norms, floored at 1.
double scale_of(std::initializer_list<const Mat*> ops);

}  // namespace plab
