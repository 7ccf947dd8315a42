#pragma once
// Pairings, coadjoint actions, Manin-triple verification, and the
// algebra-level cocycle condition.

#include <vector>

#include "poissonlab/core.hpp"
#include "poissonlab/truncation.hpp"

namespace plab {

enum class PairingKind { ImTr, ReTrC };

double pairing_im(const Mat& x, const Mat& y);      // Im Tr(xy)
Complex pairing_complex(const Mat& x, const Mat& y);  // Tr(xy)

// ad*_alpha x = p_u([x, alpha]); satisfies <ad*_alpha x, beta> = <x, [alpha, beta]>.
Mat coadjoint_b_on_u(const Mat& alpha, const Mat& x, int sign);
// ad*_x alpha = p_b([alpha, x]); satisfies <ad*_x alpha, y> = <alpha, [x, y]>.
Mat coadjoint_u_on_b(const Mat& x, const Mat& alpha, int sign);

struct ManinReport {
  double invariance_residual = 0.0;
  double isotropy_residual_u = 0.0;
  double isotropy_residual_b = 0.0;
  double decomposition_residual = 0.0;
  double nondegeneracy_min_sv = 0.0;
};

ManinReport verify_manin_triple(const Window& w, int sign, int trials,
                                std::uint64_t seed);

// Which side of the pairing acts: the Iwasawa cases (u acting on b and
// vice versa) satisfy the cocycle identity; the full L_p/L_q self-pairing
// is the negative control of Eq. notbi.
enum class CocycleRoles { UActsOnB, BActsOnU, FullLpLq };

// |LHS - RHS| of Eq. cocycle_mitte:
//   <[x,y],[a,b]> = <y,[ad*_x a, b]> + <y,[a, ad*_x b]>
//                 - <x,[ad*_y a, b]> - <x,[a, ad*_y b]>.
double cocycle_residual_algebra(const Mat& x, const Mat& y, const Mat& alpha,
                                const Mat& beta, CocycleRoles roles, int sign);

// {f,h}(x) = <x, [df, dh]> for linear functionals with constant gradients.
double lie_poisson_bracket(const Mat& f_grad, const Mat& h_grad, const Mat& x);

// Real bases used by the brute-force duality checks.
std::vector<Mat> u_basis(const Window& w);            // skew-Hermitian
std::vector<Mat> b_basis(const Window& w, int sign);  // triangular, real diagonal
std::vector<Mat> full_real_basis(const Window& w);    // {E_ab, iE_ab}

// Smallest singular value of the Gram matrix of Im Tr on full_real_basis.
double pairing_gram_min_sv(const Window& w);

}  // namespace plab
