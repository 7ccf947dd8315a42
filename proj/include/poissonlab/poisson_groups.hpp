#pragma once
// Finite models of the Poisson-Lie groups U_p, B_p^+/-, U_res, B_res^+:
// Poisson tensors, group 1-cocycle, Jacobi identity, tangent brackets.

#include <utility>
#include <vector>

#include "poissonlab/core.hpp"
#include "poissonlab/truncation.hpp"

namespace plab {

enum class GroupKind { UnitaryP, BPlus, BMinus, URes, BResPlus };

// Sign of the Iwasawa decomposition attached to a kind (BMinus -> -1).
int group_sign(GroupKind kind);

struct GroupElement {
  GroupKind kind;
  Mat m;
};

// Validates the defining invariant (unitarity / triangularity with positive
// real diagonal) and throws std::invalid_argument on violation.
GroupElement make_group_element(GroupKind kind, const Mat& m);
GroupElement random_group_element(GroupKind kind, const Window& w, Rng& rng);
GroupElement group_mul(const GroupElement& a, const GroupElement& b);

enum class QuotientKind {
  ModBPlus12,  // L_{1,2}/b^+_{1,2}, canonical rep p_{u_2^+}(x)  (skew)
  ModU12,      // L_{1,2}/u_{1,2},   canonical rep p_{b_2^+}(x)  (upper, real diag)
};

struct QuotientCovector {
  QuotientKind quotient_kind;
  Mat representative;  // always canonical
};

QuotientCovector make_covector(QuotientKind qk, const Mat& raw);

// Poisson tensors (right-translated), Eqs. PiBp / PiUp and Thms.
// BresPoisson / UresPoisson item 3.
double pi_r_bp(const GroupElement& b, const Mat& x1, const Mat& x2, int sign);
double pi_r_up(const GroupElement& u, const Mat& b1, const Mat& b2, int sign);
double pi_r_bres(const GroupElement& b, const QuotientCovector& c1,
                 const QuotientCovector& c2);
double pi_r_ures(const GroupElement& g, const QuotientCovector& c1,
                 const QuotientCovector& c2);

// Uniform covector interface: for UnitaryP covectors live in b_p^+, for
// BPlus/BMinus in u_p, for the restricted kinds in the quotient spaces
// (carried by canonical representative).
double pi_r(const GroupElement& g, const Mat& c1_rep, const Mat& c2_rep);
Mat ad_star(const GroupElement& g, const Mat& c_rep);  // conjugate-then-canonicalize
std::vector<Mat> covector_basis(GroupKind kind, const Window& w);
Mat random_covector(GroupKind kind, const Window& w, Rng& rng);

// max over basis pairs of |Pi_r(gu) - Ad*(g)**Pi_r(u) - Pi_r(g)|, scale-normalized.
double group_cocycle_residual(const GroupElement& g, const GroupElement& u,
                              const Window& w);

// Cyclic Jacobi sum of Eq. Jacobi_tensor with closed-form derivatives and
// interior products; scale-normalized absolute value.
double jacobi_residual(const GroupElement& g, const Mat& c1_rep, const Mat& c2_rep,
                       const Mat& c3_rep);

// Closed-form directional derivative T_g Pi_r(R_g X)(c1, c2).
double tensor_derivative(const GroupElement& g, const Mat& X, const Mat& c1_rep,
                         const Mat& c2_rep);

// (closed_form, finite_diff) of T_e Pi_r(X)(c1, c2); finite_diff uses the
// matrix exponential and central differences with step h.
std::pair<double, double> tangent_bracket_check(GroupKind kind, const Window& w,
                                                const Mat& X, const Mat& c1_rep,
                                                const Mat& c2_rep, double h);

// The induced bracket on the covector space ([c1, c2]* s.t.
// <[c1,c2]*, X> = T_e Pi_r(X)(c1, c2)); a plain (+/-) commutator per kind.
Mat covector_bracket(GroupKind kind, const Mat& c1_rep, const Mat& c2_rep);

}  // namespace plab
