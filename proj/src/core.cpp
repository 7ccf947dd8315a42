#include "poissonlab/core.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace plab {

Mat split_d(const Window& w) {
  Mat d = Mat::Zero(w.size(), w.size());
  for (int p = 0; p < w.size(); ++p) {
    d(p, p) = (w.label(p) >= 0) ? Complex(0, 1) : Complex(0, -1);
  }
  return d;
}

Eigen::VectorXd singular_values(const Mat& A) {
  if (A.rows() >= 32) {
    return Eigen::BDCSVD<Mat>(A).singularValues();
  }
  return Eigen::JacobiSVD<Mat>(A).singularValues();
}

static void check_finite(const Mat& A) {
  if (!A.allFinite()) throw std::invalid_argument("non-finite entries in operator");
}

double schatten_norm(const Mat& A, const Window& w, SchattenExp e) {
  check_finite(A);
  const int N = w.N;
  switch (e.kind) {
    case SchattenKind::One:
      return singular_values(A).sum();
    case SchattenKind::Two:
      return A.norm();
    case SchattenKind::P: {
      if (!(e.p > 1.0)) throw std::invalid_argument("finite Schatten exponent requires p > 1");
      const Eigen::VectorXd s = singular_values(A);
      double acc = 0.0;
      for (int i = 0; i < s.size(); ++i) acc += std::pow(s(i), e.p);
      return std::pow(acc, 1.0 / e.p);
    }
    case SchattenKind::Inf: {
      const Eigen::VectorXd s = singular_values(A);
      return s.size() > 0 ? s(0) : 0.0;
    }
    case SchattenKind::Res: {
      const Mat d = split_d(w);
      return schatten_norm(A, w, SchattenExp::inf()) + commutator(d, A).norm();
    }
    case SchattenKind::OneTwo: {
      const Mat d = split_d(w);
      const Mat pp = A.topLeftCorner(N, N);      // p+ A |H+
      const Mat mm = A.bottomRightCorner(N, N);  // p- A |H-
      return singular_values(pp).sum() + singular_values(mm).sum() +
             commutator(d, A).norm();
    }
  }
  throw std::logic_error("unreachable");
}

Complex restricted_trace(const Mat& A) {
  check_finite(A);
  return A.trace();  // Tr_res = Tr p+A|H+ + Tr p-A|H- = Tr at finite truncation
}

Mat commutator(const Mat& A, const Mat& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    throw std::invalid_argument("window mismatch in commutator");
  }
  return A * B - B * A;
}

static std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng trial_rng(std::uint64_t master_seed, std::uint64_t trial_index) {
  return Rng(splitmix64(master_seed ^ splitmix64(trial_index + 1)));
}

static Mat ginibre(int n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat G(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      G(i, j) = Complex(re, im);
    }
  }
  return G;
}

Mat random_op(const Window& w, Ensemble ensemble, Rng& rng) {
  const int n = w.size();
  switch (ensemble) {
    case Ensemble::Ginibre:
      return ginibre(n, rng);
    case Ensemble::SkewHermitian: {
      const Mat G = ginibre(n, rng);
      return (G - G.adjoint()) / 2.0;
    }
    case Ensemble::UpperRealDiag: {
      const Mat G = ginibre(n, rng);
      Mat U = G.triangularView<Eigen::StrictlyUpper>();
      for (int i = 0; i < n; ++i) U(i, i) = G(i, i).real();
      return U;
    }
    case Ensemble::Unitary: {
      const Mat G = ginibre(n, rng);
      Eigen::HouseholderQR<Mat> qr(G);
      Mat Q = qr.householderQ();
      const Mat R = qr.matrixQR().triangularView<Eigen::Upper>();
      for (int i = 0; i < n; ++i) {
        const Complex r = R(i, i);
        const Complex phase = (std::abs(r) > 0) ? r / std::abs(r) : Complex(1, 0);
        Q.col(i) *= phase;  // phase-fix: equivalent upper factor has positive diagonal
      }
      return Q;
    }
    case Ensemble::BPlusGroup: {
      const Mat G = ginibre(n, rng);
      Mat B = Mat::Identity(n, n);
      B += 0.25 * Mat(G.triangularView<Eigen::StrictlyUpper>());
      for (int i = 0; i < n; ++i) {
        double d = 1.0 + 0.25 * G(i, i).real();
        if (d < 0.1) d = 0.1 + std::abs(d);
        B(i, i) = d;
      }
      return B;
    }
  }
  throw std::logic_error("unreachable");
}

double scale_of(std::initializer_list<const Mat*> ops) {
  double s = 1.0;
  for (const Mat* A : ops) s *= std::max(1.0, A->norm());
  return s;
}

}  // namespace plab
