#include "poissonlab/truncation.hpp"

#include <cmath>
#include <numbers>

namespace plab {

Mat truncate(const Mat& A, TruncationKind k) {
  // Paper semantics: keep entries <m|A|n> per kind; through pos(.) these are
  // the literal storage masks below.
  switch (k) {
    case TruncationKind::Lower:        // m <= n
      return A.triangularView<Eigen::Lower>();
    case TruncationKind::StrictUpper:  // m > n
      return A.triangularView<Eigen::StrictlyUpper>();
    case TruncationKind::Upper:        // m >= n
      return A.triangularView<Eigen::Upper>();
    case TruncationKind::StrictLower:  // m < n
      return A.triangularView<Eigen::StrictlyLower>();
    case TruncationKind::Diagonal:
      return A.diagonal().asDiagonal();
  }
  throw std::logic_error("unreachable");
}

Mat project_u(const Mat& A, int sign) {
  const Mat T = (sign > 0) ? truncate(A, TruncationKind::StrictLower)
                           : truncate(A, TruncationKind::StrictUpper);
  const Mat D = truncate(A, TruncationKind::Diagonal);
  return T - T.adjoint() + 0.5 * (D - D.adjoint());
}

Mat project_b(const Mat& A, int sign) { return A - project_u(A, sign); }

IwasawaSplit iwasawa_split(const Mat& A, int sign) {
  IwasawaSplit s;
  s.u_part = project_u(A, sign);
  s.b_part = A - s.u_part;
  s.sign = sign;
  return s;
}

double truncation_operator_ratio(const Mat& A, const Window& w, TruncationKind k,
                                 SchattenExp e) {
  const double denom = schatten_norm(A, w, e);
  if (denom == 0.0) throw std::invalid_argument("truncation_operator_ratio: zero input");
  return schatten_norm(truncate(A, k), w, e) / denom;
}

Mat cauchy_witness(int n) {
  if (n <= 0 || n % 2 != 0) {
    throw std::invalid_argument("cauchy_witness requires positive even size");
  }
  // a_{jk} = 1/(j-k) over window labels; storage (r, c) with j = label(r),
  // k = label(c) gives j - k = c - r.
  Mat A = Mat::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (r != c) A(r, c) = 1.0 / static_cast<double>(c - r);
    }
  }
  return A;
}

static const char* trunc_name(TruncationKind k) {
  switch (k) {
    case TruncationKind::Lower: return "lower";
    case TruncationKind::StrictUpper: return "strict_upper";
    case TruncationKind::Upper: return "upper";
    case TruncationKind::StrictLower: return "strict_lower";
    case TruncationKind::Diagonal: return "diagonal";
  }
  return "?";
}

std::vector<GrowthRow> growth_experiment(const std::vector<int>& N_list, SchattenExp e,
                                         TruncationKind k, std::uint64_t seed) {
  std::vector<GrowthRow> rows;
  const char* norm_name = (e.kind == SchattenKind::One)   ? "1"
                          : (e.kind == SchattenKind::Two) ? "2"
                                                          : "inf";
  for (int n : N_list) {
    const Window w(n / 2);
    const Mat A = cauchy_witness(n);
    double ratio;
    if (e.kind == SchattenKind::Two) {
      ratio = truncation_operator_ratio(A, w, k, e);  // exact contraction
    } else {
      // Bounded-witness normalization: the nested Cauchy family has
      // sup_N ||A_N||_inf = pi, so the diverging truncated norm over pi is
      // the finite-scale unboundedness signature.
      ratio = schatten_norm(truncate(A, k), w, e) / std::numbers::pi;
    }
    rows.push_back({n, ratio, norm_name, trunc_name(k), seed});
  }
  return rows;
}

namespace {

// The interleaved even/odd construction of the unboundedness proposition,
// on an H+ of dimension 2m with labels 1..2m ordered decreasingly
// (storage pos(l) = 2m - l).  Odd labels 2i+1 span H+odd, even labels 2i+2
// span H+even (i = 0..m-1); u maps |2i+1> -> |2i+2>.
struct BlockWitness {
  Mat comm;  // [x, y]|_{H+}, (2m) x (2m) in storage order
  Mat K;     // Hermitian witness on H+odd, m x m in storage order
};

BlockWitness build_block_witness(int m) {
  // K in its own decreasing-label storage basis: Hermitian i * Cauchy.
  const Mat K = Complex(0, 1) * cauchy_witness(m);
  const int n = 2 * m;
  auto pos = [n](int l) { return n - l; };        // H+ storage index of |l>
  auto kpos = [m](int i) { return m - 1 - i; };   // K storage index of odd slot i
  Mat x = Mat::Zero(n, n);
  Mat y = Mat::Zero(n, n);
  for (int i = 0; i < m; ++i) {
    y(pos(2 * i + 2), pos(2 * i + 1)) = 1.0;  // y = u on H+odd
    for (int j = 0; j < m; ++j) {
      const Complex kij = K(kpos(i), kpos(j));
      x(pos(2 * i + 2), pos(2 * j + 1)) = kij;          // block uK
      x(pos(2 * i + 1), pos(2 * j + 2)) = -std::conj(K(kpos(j), kpos(i)));  // -K*u*
    }
  }
  return {commutator(x, y), K};
}

}  // namespace

double block_identity_residual(int m) {
  const BlockWitness bw = build_block_witness(m);
  const Window wfull(m);  // only sizes matter for the norms below
  const Window whalf(m / 2);
  const double lhs =
      schatten_norm(truncate(bw.comm, TruncationKind::Upper), wfull, SchattenExp::one());
  const double rhs =
      2.0 * schatten_norm(truncate(bw.K, TruncationKind::Upper), whalf, SchattenExp::one());
  return std::abs(lhs - rhs);
}

double block_truncated_trace_norm(int m) {
  const BlockWitness bw = build_block_witness(m);
  const Window wfull(m);
  return schatten_norm(truncate(bw.comm, TruncationKind::Upper), wfull, SchattenExp::one());
}

}  // namespace plab
