#pragma once
// Desk-scale restricted Grassmannian Gr(N, 2N): points, the Bruhat-Poisson
// tensor, U_res and B_res^+ actions, Schubert cells, Gamma+ operators.

#include <optional>
#include <vector>

#include "poissonlab/core.hpp"
#include "poissonlab/poisson_groups.hpp"

namespace plab {

struct GrassPoint {
  Window window;
  Mat frame;       // 2N x N, orthonormal columns
  Mat projection;  // frame * frame^*
};

struct CellIndex {
  std::vector<int> S;  // sorted window labels, |S| = N
  bool operator==(const CellIndex& o) const { return S == o.S; }
};

struct AmbiguousCell : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GrassPoint point_from_frame(const Window& w, const Mat& columns);  // re-orthonormalizes
GrassPoint point_from_unitary(const GroupElement& g, const Window& w);
GrassPoint basepoint(const Window& w, const CellIndex& S);  // H_S

// Bruhat-Poisson tensor at the point gH: covector classes [g b(Z_i) g^-1]
// with b(Z) the matrix whose upper-right N x N block is Z.  Well-definedness
// on the quotient is equivariant: pi(g h, h+^* Z h-) = pi(g, Z).
double pi_grassmannian(const GroupElement& g, const Mat& Z1, const Mat& Z2);

GrassPoint act_unitary(const GroupElement& g1, const GrassPoint& W);
// Thm. actionB right action: (g P, b) -> (b^-1 g) P.
GrassPoint act_b(const GroupElement& b, const GrassPoint& W);

// |LHS - RHS| of the action decomposition
// pi^Gr_{b^-1 g P} = pi^Gr_{g H}(L* .) + pi^{B+}_b(...), scale-normalized.
double poisson_action_residual(const GroupElement& b, const GroupElement& g,
                               const Mat& Z1, const Mat& Z2);

// Rank-jump classification; throws AmbiguousCell near strata boundaries.
// rank_tol <= 0 selects the default 1e-8 * (leading singular value).
CellIndex cell_index_of(const GrassPoint& W, double rank_tol = 0.0);

int cell_dimension(const Window& w, const CellIndex& S);  // complex dimension

struct Transversality {
  int dim_plus;
  int dim_minus;
  int intersection_dim;
};
Transversality transversality_check(const Window& w, const CellIndex& S);

std::vector<CellIndex> all_cells(const Window& w);

// M = exp(T_f) for T_f|n> = sum_k f_k |n+k>; unit-diagonal upper triangular.
GroupElement gamma_plus_operator(const std::vector<Complex>& coeffs, const Window& w);

}  // namespace plab
