#include "poissonlab/grassmannian.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "poissonlab/lie_structures.hpp"
#include "poissonlab/truncation.hpp"

namespace plab {

namespace {

// Thin QR with positive-real R diagonal: canonical orthonormal frame.
Mat orthonormalize(const Mat& columns) {
  const int rows = static_cast<int>(columns.rows());
  const int cols = static_cast<int>(columns.cols());
  Eigen::HouseholderQR<Mat> qr(columns);
  Mat Q = Mat(qr.householderQ()) .leftCols(cols);
  const Mat R = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (int i = 0; i < cols; ++i) {
    const Complex r = R(i, i);
    if (std::abs(r) > 0) Q.col(i) *= r / std::abs(r);
  }
  (void)rows;
  return Q;
}

Mat b_of_Z(const Window& w, const Mat& Z) {
  const int N = w.N;
  if (Z.rows() != N || Z.cols() != N) {
    throw std::invalid_argument("Z block must be N x N");
  }
  Mat b = Mat::Zero(2 * N, 2 * N);
  b.topRightCorner(N, N) = Z;
  return b;
}

}  // namespace

GrassPoint point_from_frame(const Window& w, const Mat& columns) {
  if (columns.rows() != w.size() || columns.cols() != w.N) {
    throw std::invalid_argument("frame must be 2N x N");
  }
  const Mat frame = orthonormalize(columns);
  return GrassPoint{w, frame, frame * frame.adjoint()};
}

GrassPoint point_from_unitary(const GroupElement& g, const Window& w) {
  const Mat frame = g.m.leftCols(w.N);
  return GrassPoint{w, frame, frame * frame.adjoint()};
}

GrassPoint basepoint(const Window& w, const CellIndex& S) {
  if (static_cast<int>(S.S.size()) != w.N) {
    throw std::invalid_argument("cell index must have N elements");
  }
  Mat frame = Mat::Zero(w.size(), w.N);
  for (int i = 0; i < w.N; ++i) frame(w.pos(S.S[i]), i) = 1.0;
  return GrassPoint{w, frame, frame * frame.adjoint()};
}

double pi_grassmannian(const GroupElement& g, const Mat& Z1, const Mat& Z2) {
  const Window w(static_cast<int>(Z1.rows()));
  const Mat w1 = g.m * b_of_Z(w, Z1) * g.m.adjoint();
  const Mat w2 = g.m * b_of_Z(w, Z2) * g.m.adjoint();
  const GroupElement gu{GroupKind::URes, g.m};
  return pi_r_ures(gu, make_covector(QuotientKind::ModU12, w1),
                   make_covector(QuotientKind::ModU12, w2));
}

GrassPoint act_unitary(const GroupElement& g1, const GrassPoint& W) {
  const Mat frame = orthonormalize(g1.m * W.frame);
  return GrassPoint{W.window, frame, g1.m * W.projection * g1.m.adjoint()};
}

GrassPoint act_b(const GroupElement& b, const GrassPoint& W) {
  const Mat cols = b.m.triangularView<Eigen::Upper>().solve(W.frame);
  return point_from_frame(W.window, cols);
}

double poisson_action_residual(const GroupElement& b, const GroupElement& g,
                               const Mat& Z1, const Mat& Z2) {
  const Window w(static_cast<int>(Z1.rows()));
  const Mat w1 = g.m * b_of_Z(w, Z1) * g.m.adjoint();
  const Mat w2 = g.m * b_of_Z(w, Z2) * g.m.adjoint();
  const Mat bi = b.m.inverse();
  // Iwasawa factorization b^-1 g = g1 p1 with g1 unitary, p1 block upper.
  const Mat g1 = orthonormalize(bi * g.m);
  const GroupElement gu1{GroupKind::URes, g1};
  const GroupElement gu{GroupKind::URes, g.m};
  const Mat v1 = bi * w1 * b.m;
  const Mat v2 = bi * w2 * b.m;
  const double lhs = pi_r_ures(gu1, make_covector(QuotientKind::ModU12, v1),
                               make_covector(QuotientKind::ModU12, v2));
  const double rhs = pi_r_ures(gu, make_covector(QuotientKind::ModU12, w1),
                               make_covector(QuotientKind::ModU12, w2)) +
                     pi_r_bres(b, make_covector(QuotientKind::ModBPlus12, w1),
                               make_covector(QuotientKind::ModBPlus12, w2));
  return std::abs(lhs - rhs) / scale_of({&Z1, &Z2});
}

CellIndex cell_index_of(const GrassPoint& W, double rank_tol) {
  const int n = W.window.size();
  const int N = W.window.N;
  const Eigen::VectorXd sv_full = singular_values(W.frame);
  if (rank_tol <= 0.0) rank_tol = 1e-8 * sv_full(0);

  // d(k) = dim(W intersect F_k) = N - rank(rows pos >= N-k); rank jumps mark S.
  std::vector<int> rank_tail(n + 1, 0);
  for (int j = 0; j <= n; ++j) {
    if (j == n) {
      rank_tail[j] = 0;
      continue;
    }
    const Mat sub = W.frame.bottomRows(n - j);
    const Eigen::VectorXd sv = singular_values(sub);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i) {
      if (sv(i) > 10.0 * rank_tol) {
        ++r;
      } else if (sv(i) > 0.1 * rank_tol) {
        throw AmbiguousCell("singular value within ambiguity guard of rank_tol");
      }
    }
    rank_tail[j] = r;
  }
  CellIndex idx;
  for (int j = 1; j <= n; ++j) {
    if (rank_tail[j - 1] > rank_tail[j]) idx.S.push_back(N - j);
  }
  std::sort(idx.S.begin(), idx.S.end());
  if (static_cast<int>(idx.S.size()) != N) {
    throw AmbiguousCell("rank profile did not produce N jumps");
  }
  return idx;
}

int cell_dimension(const Window& w, const CellIndex& S) {
  std::vector<bool> in_S(w.size(), false);
  for (int s : S.S) in_S[w.pos(s)] = true;
  int dim = 0;
  for (int s : S.S) {
    for (int m = -w.N; m < w.N; ++m) {
      if (!in_S[w.pos(m)] && m > s) ++dim;
    }
  }
  return dim;
}

namespace {

int real_rank(const Eigen::MatrixXd& M) {
  if (M.cols() == 0) return 0;
  const Eigen::VectorXd sv = Eigen::BDCSVD<Eigen::MatrixXd>(M).singularValues();
  const double tol = 1e-9 * std::max(1.0, sv(0));
  int r = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol) ++r;
  }
  return r;
}

Eigen::MatrixXd tangent_span(const Window& w, const GrassPoint& base, int sign) {
  const int n = w.size();
  const Mat Iperp = Mat::Identity(n, n) - base.projection;
  const std::vector<Mat> basis = b_basis(w, sign);
  Eigen::MatrixXd span(2 * n * w.N, static_cast<int>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Mat t = Iperp * basis[i] * base.frame;
    const Eigen::Map<const Eigen::VectorXcd> v(t.data(), n * w.N);
    span.col(static_cast<int>(i)) << v.real(), v.imag();
  }
  return span;
}

}  // namespace

Transversality transversality_check(const Window& w, const CellIndex& S) {
  const GrassPoint base = basepoint(w, S);
  const Eigen::MatrixXd plus = tangent_span(w, base, +1);
  const Eigen::MatrixXd minus = tangent_span(w, base, -1);
  const int rp = real_rank(plus);
  const int rm = real_rank(minus);
  Eigen::MatrixXd joint(plus.rows(), plus.cols() + minus.cols());
  joint << plus, minus;
  const int rj = real_rank(joint);
  // Real ranks; tangent spaces are complex subspaces, report complex counts.
  return Transversality{rp / 2, rm / 2, (rp + rm - rj) / 2};
}

std::vector<CellIndex> all_cells(const Window& w) {
  std::vector<CellIndex> cells;
  std::vector<int> pick(w.N);
  // Iterate subsets of {-N,...,N-1} of size N in lexicographic order.
  for (int i = 0; i < w.N; ++i) pick[i] = -w.N + i;
  while (true) {
    cells.push_back(CellIndex{pick});
    int i = w.N - 1;
    while (i >= 0 && pick[i] == w.N - 1 - (w.N - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < w.N; ++j) pick[j] = pick[j - 1] + 1;
  }
  return cells;
}

GroupElement gamma_plus_operator(const std::vector<Complex>& coeffs, const Window& w) {
  const int n = w.size();
  if (static_cast<int>(coeffs.size()) >= n) {
    throw std::invalid_argument("gamma_plus_operator requires K < 2N coefficients");
  }
  // T_f |l> = sum_k f_k |l+k>: entry on the k-th storage superdiagonal.
  Mat T = Mat::Zero(n, n);
  for (std::size_t k = 1; k <= coeffs.size(); ++k) {
    for (int c = static_cast<int>(k); c < n; ++c) {
      T(c - static_cast<int>(k), c) = coeffs[k - 1];
    }
  }
  // exp of a nilpotent matrix: finite series, exact within the window.
  Mat M = Mat::Identity(n, n);
  Mat term = Mat::Identity(n, n);
  for (int j = 1; j < n; ++j) {
    term = term * T / static_cast<double>(j);
    M += term;
    if (term.norm() == 0.0) break;
  }
  return make_group_element(GroupKind::BResPlus, M);
}

}  // namespace plab
