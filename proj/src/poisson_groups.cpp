#include "poissonlab/poisson_groups.hpp"

#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>

#include "poissonlab/lie_structures.hpp"

namespace plab {

int group_sign(GroupKind kind) { return kind == GroupKind::BMinus ? -1 : +1; }

static bool is_unitary_kind(GroupKind kind) {
  return kind == GroupKind::UnitaryP || kind == GroupKind::URes;
}

GroupElement make_group_element(GroupKind kind, const Mat& m) {
  const int n = static_cast<int>(m.rows());
  const double tol = 1e-10 * std::max(1.0, m.norm());
  if (is_unitary_kind(kind)) {
    if ((m.adjoint() * m - Mat::Identity(n, n)).norm() > 1e-10 * n) {
      throw std::invalid_argument("group element is not unitary");
    }
  } else {
    const int sign = group_sign(kind);
    const Mat off = (sign > 0) ? Mat(m.triangularView<Eigen::StrictlyLower>())
                               : Mat(m.triangularView<Eigen::StrictlyUpper>());
    if (off.norm() > tol) throw std::invalid_argument("group element is not triangular");
    for (int i = 0; i < n; ++i) {
      if (std::abs(m(i, i).imag()) > tol || m(i, i).real() <= 0.0) {
        throw std::invalid_argument("triangular group element needs positive real diagonal");
      }
    }
  }
  return GroupElement{kind, m};
}

GroupElement random_group_element(GroupKind kind, const Window& w, Rng& rng) {
  switch (kind) {
    case GroupKind::UnitaryP:
    case GroupKind::URes:
      return make_group_element(kind, random_op(w, Ensemble::Unitary, rng));
    case GroupKind::BPlus:
    case GroupKind::BResPlus:
      return make_group_element(kind, random_op(w, Ensemble::BPlusGroup, rng));
    case GroupKind::BMinus: {
      const Mat b = random_op(w, Ensemble::BPlusGroup, rng);
      return make_group_element(kind, b.transpose());
    }
  }
  throw std::logic_error("unreachable");
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
  if (a.kind != b.kind) throw std::invalid_argument("group kind mismatch");
  return make_group_element(a.kind, a.m * b.m);
}

QuotientCovector make_covector(QuotientKind qk, const Mat& raw) {
  // Canonical representative: the component complementary to the quotiented
  // subalgebra (sign + Iwasawa split).
  const Mat rep =
      (qk == QuotientKind::ModBPlus12) ? project_u(raw, +1) : project_b(raw, +1);
  return QuotientCovector{qk, rep};
}

namespace {

Mat inverse_of(const GroupElement& g) {
  if (is_unitary_kind(g.kind)) return g.m.adjoint();
  return g.m.inverse();
}

// Every tensor evaluates as Im Tr(first(C1) * second(C2)) with C = g^-1 c g.
struct SlotMaps {
  bool project_first;  // project first slot (U_p/B_p) or leave raw (restricted)
  bool first_is_u;     // which component the first slot takes when projected
};

SlotMaps slot_maps(GroupKind kind) {
  switch (kind) {
    case GroupKind::UnitaryP: return {true, true};    // Im Tr p_u(C1) p_b(C2)
    case GroupKind::BPlus:
    case GroupKind::BMinus:   return {true, false};   // Im Tr p_b(C1) p_u(C2)
    case GroupKind::URes:     return {false, true};   // Im Tr C1 p_u(C2)
    case GroupKind::BResPlus: return {false, false};  // Im Tr C1 p_b(C2)
  }
  throw std::logic_error("unreachable");
}

Mat first_slot(const GroupElement& g, const Mat& C) {
  const SlotMaps sm = slot_maps(g.kind);
  if (!sm.project_first) return C;
  const int sign = group_sign(g.kind);
  return sm.first_is_u ? project_u(C, sign) : project_b(C, sign);
}

Mat second_slot(const GroupElement& g, const Mat& C) {
  const SlotMaps sm = slot_maps(g.kind);
  const int sign = group_sign(g.kind);
  // Second slot takes the complementary component of the first.
  const bool second_is_u = sm.project_first ? !sm.first_is_u : sm.first_is_u;
  return second_is_u ? project_u(C, sign) : project_b(C, sign);
}

}  // namespace

double pi_r(const GroupElement& g, const Mat& c1_rep, const Mat& c2_rep) {
  const Mat gi = inverse_of(g);
  const Mat C1 = gi * c1_rep * g.m;
  const Mat C2 = gi * c2_rep * g.m;
  return pairing_im(first_slot(g, C1), second_slot(g, C2));
}

double pi_r_bp(const GroupElement& b, const Mat& x1, const Mat& x2, int sign) {
  const GroupKind kind = (sign > 0) ? GroupKind::BPlus : GroupKind::BMinus;
  return pi_r(GroupElement{kind, b.m}, x1, x2);
}

double pi_r_up(const GroupElement& u, const Mat& b1, const Mat& b2, int sign) {
  if (sign < 0) {
    // sign - tensor: Im Tr p_{u,-}(C1) p_{b,-}(C2).
    const Mat gi = u.m.adjoint();
    const Mat C1 = gi * b1 * u.m;
    const Mat C2 = gi * b2 * u.m;
    return pairing_im(project_u(C1, -1), project_b(C2, -1));
  }
  return pi_r(GroupElement{GroupKind::UnitaryP, u.m}, b1, b2);
}

double pi_r_bres(const GroupElement& b, const QuotientCovector& c1,
                 const QuotientCovector& c2) {
  if (c1.quotient_kind != QuotientKind::ModBPlus12 ||
      c2.quotient_kind != QuotientKind::ModBPlus12) {
    throw std::invalid_argument("pi_r_bres expects ModBPlus12 covectors");
  }
  return pi_r(GroupElement{GroupKind::BResPlus, b.m}, c1.representative,
              c2.representative);
}

double pi_r_ures(const GroupElement& g, const QuotientCovector& c1,
                 const QuotientCovector& c2) {
  if (c1.quotient_kind != QuotientKind::ModU12 ||
      c2.quotient_kind != QuotientKind::ModU12) {
    throw std::invalid_argument("pi_r_ures expects ModU12 covectors");
  }
  return pi_r(GroupElement{GroupKind::URes, g.m}, c1.representative,
              c2.representative);
}

Mat ad_star(const GroupElement& g, const Mat& c_rep) {
  const Mat conj = inverse_of(g) * c_rep * g.m;
  const int sign = group_sign(g.kind);
  // Covectors live in the complementary space: b-side for unitary kinds,
  // u-side for triangular kinds.
  switch (g.kind) {
    case GroupKind::UnitaryP:
    case GroupKind::URes:
      return project_b(conj, sign);
    case GroupKind::BPlus:
    case GroupKind::BMinus:
    case GroupKind::BResPlus:
      return project_u(conj, sign);
  }
  throw std::logic_error("unreachable");
}

std::vector<Mat> covector_basis(GroupKind kind, const Window& w) {
  switch (kind) {
    case GroupKind::UnitaryP:
    case GroupKind::URes:
      return b_basis(w, group_sign(kind));
    case GroupKind::BPlus:
    case GroupKind::BResPlus:
      return u_basis(w);
    case GroupKind::BMinus:
      return u_basis(w);
  }
  throw std::logic_error("unreachable");
}

Mat random_covector(GroupKind kind, const Window& w, Rng& rng) {
  const Mat g = random_op(w, Ensemble::Ginibre, rng);
  switch (kind) {
    case GroupKind::UnitaryP:
    case GroupKind::URes:
      return project_b(g, group_sign(kind));
    case GroupKind::BPlus:
    case GroupKind::BMinus:
    case GroupKind::BResPlus:
      return project_u(g, group_sign(kind));
  }
  throw std::logic_error("unreachable");
}

double group_cocycle_residual(const GroupElement& g, const GroupElement& u,
                              const Window& w) {
  const std::vector<Mat> basis = covector_basis(g.kind, w);
  const int d = static_cast<int>(basis.size());
  const int n = w.size();
  const GroupElement gu = group_mul(g, u);

  // Stack first/second slot matrices so each tensor over the whole basis is
  // one matrix product: Pi(ci, cj) = Im Tr(A_i B_j) = Im(rowvec(A_i^T) . vec(B_j)).
  auto tensor_matrix = [n, d](const GroupElement& h, const std::vector<Mat>& covs) {
    const Mat hi = inverse_of(h);
    Mat MA(d, n * n), MB(n * n, d);
    for (int i = 0; i < d; ++i) {
      const Mat C = hi * covs[i] * h.m;
      const Mat A = first_slot(h, C).transpose();
      const Mat B = second_slot(h, C);
      MA.row(i) = Eigen::Map<const Eigen::VectorXcd>(A.data(), n * n).transpose();
      MB.col(i) = Eigen::Map<const Eigen::VectorXcd>(B.data(), n * n);
    }
    return Eigen::MatrixXd((MA * MB).imag());
  };

  std::vector<Mat> transported(basis.size());
  for (int i = 0; i < d; ++i) transported[i] = ad_star(g, basis[i]);

  const Eigen::MatrixXd T_gu = tensor_matrix(gu, basis);
  const Eigen::MatrixXd T_u = tensor_matrix(u, transported);
  const Eigen::MatrixXd T_g = tensor_matrix(g, basis);
  const double raw = (T_gu - T_u - T_g).cwiseAbs().maxCoeff();
  return raw / (std::max(1.0, g.m.norm()) * std::max(1.0, u.m.norm()));
}

double tensor_derivative(const GroupElement& g, const Mat& X, const Mat& c1_rep,
                         const Mat& c2_rep) {
  const Mat gi = inverse_of(g);
  const int sign = group_sign(g.kind);
  const Mat Y = gi * X * g.m;
  const Mat C1 = gi * c1_rep * g.m;
  const Mat C2 = gi * c2_rep * g.m;
  const Mat u1 = project_u(C1, sign), b1 = C1 - u1;
  const Mat u2 = project_u(C2, sign), b2 = C2 - u2;
  const SlotMaps sm = slot_maps(g.kind);
  // First-slot u (U_p) and raw-first/second-slot b (B_res^+) share one closed
  // form; the two complementary tensors share the mirrored one.
  const bool form_a = sm.project_first ? sm.first_is_u : !sm.first_is_u;
  const Mat comm = form_a ? Mat(commutator(u1, u2) + commutator(b2, b1))
                          : Mat(commutator(u2, u1) + commutator(b1, b2));
  return (Y * comm).trace().imag();
}

namespace {

// Interior product i_c Pi_r(g) as a Lie-algebra element w with
// <mu, w> = Pi_r(g)(c, mu).
Mat interior_product(const GroupElement& g, const Mat& c_rep) {
  const Mat gi = inverse_of(g);
  const Mat C = gi * c_rep * g.m;
  const int sign = group_sign(g.kind);
  switch (g.kind) {
    case GroupKind::UnitaryP: return Mat(g.m * project_u(C, sign) * gi);
    case GroupKind::BPlus:
    case GroupKind::BMinus:   return Mat(g.m * project_b(C, sign) * gi);
    case GroupKind::BResPlus: return Mat(-g.m * project_b(C, sign) * gi);
    case GroupKind::URes:     return Mat(-g.m * project_u(C, sign) * gi);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

double jacobi_residual(const GroupElement& g, const Mat& c1_rep, const Mat& c2_rep,
                       const Mat& c3_rep) {
  const Mat* c[3] = {&c1_rep, &c2_rep, &c3_rep};
  Mat wv[3];
  for (int i = 0; i < 3; ++i) wv[i] = interior_product(g, *c[i]);
  double J = 0.0;
  const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& idx : cyc) {
    const int i = idx[0], j = idx[1], k = idx[2];
    J += tensor_derivative(g, wv[i], *c[j], *c[k]);
    J += pairing_im(*c[i], commutator(wv[k], wv[j]));
  }
  return std::abs(J) / scale_of({c[0], c[1], c[2]});
}

Mat covector_bracket(GroupKind kind, const Mat& c1_rep, const Mat& c2_rep) {
  switch (kind) {
    case GroupKind::UnitaryP:
    case GroupKind::BPlus:
    case GroupKind::BMinus:
      return commutator(c2_rep, c1_rep);
    case GroupKind::URes:
    case GroupKind::BResPlus:
      return commutator(c1_rep, c2_rep);
  }
  throw std::logic_error("unreachable");
}

std::pair<double, double> tangent_bracket_check(GroupKind kind, const Window& w,
                                                const Mat& X, const Mat& c1_rep,
                                                const Mat& c2_rep, double h) {
  if (!(h > 0)) throw std::invalid_argument("h_step must be positive");
  const double closed = pairing_im(covector_bracket(kind, c1_rep, c2_rep), X);
  const Mat ep = (h * X).exp();
  const Mat em = (-h * X).exp();
  const GroupElement gp = make_group_element(kind, ep);
  const GroupElement gm = make_group_element(kind, em);
  const double fd = (pi_r(gp, c1_rep, c2_rep) - pi_r(gm, c1_rep, c2_rep)) / (2.0 * h);
  (void)w;
  return {closed, fd};
}

}  // namespace plab
