#include "poissonlab/lie_structures.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace plab {

double pairing_im(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows()) throw std::invalid_argument("window mismatch in pairing");
  return (x * y).trace().imag();
}

Complex pairing_complex(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows()) throw std::invalid_argument("window mismatch in pairing");
  return (x * y).trace();
}

static bool is_skew(const Mat& x, double tol) {
  return (x + x.adjoint()).norm() <= tol * std::max(1.0, x.norm());
}

static bool is_b(const Mat& a, int sign, double tol) {
  const Mat off = (sign > 0) ? Mat(a.triangularView<Eigen::StrictlyLower>())
                             : Mat(a.triangularView<Eigen::StrictlyUpper>());
  double imdiag = a.diagonal().imag().norm();
  return off.norm() + imdiag <= tol * std::max(1.0, a.norm());
}

Mat coadjoint_b_on_u(const Mat& alpha, const Mat& x, int sign) {
  if (!is_b(alpha, sign, 1e-10) || !is_skew(x, 1e-10)) {
    throw std::invalid_argument("coadjoint_b_on_u: domain violation");
  }
  return project_u(commutator(x, alpha), sign);
}

Mat coadjoint_u_on_b(const Mat& x, const Mat& alpha, int sign) {
  if (!is_b(alpha, sign, 1e-10) || !is_skew(x, 1e-10)) {
    throw std::invalid_argument("coadjoint_u_on_b: domain violation");
  }
  return project_b(commutator(alpha, x), sign);
}

std::vector<Mat> u_basis(const Window& w) {
  const int n = w.size();
  std::vector<Mat> basis;
  basis.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    Mat E = Mat::Zero(n, n);
    E(a, a) = Complex(0, 1);
    basis.push_back(E);
    for (int b = a + 1; b < n; ++b) {
      Mat F = Mat::Zero(n, n);
      F(a, b) = 1.0;
      F(b, a) = -1.0;
      basis.push_back(F);
      Mat G = Mat::Zero(n, n);
      G(a, b) = Complex(0, 1);
      G(b, a) = Complex(0, 1);
      basis.push_back(G);
    }
  }
  return basis;
}

std::vector<Mat> b_basis(const Window& w, int sign) {
  const int n = w.size();
  std::vector<Mat> basis;
  basis.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    Mat E = Mat::Zero(n, n);
    E(a, a) = 1.0;  // real diagonal
    basis.push_back(E);
    for (int b = a + 1; b < n; ++b) {
      const int r = (sign > 0) ? a : b;  // storage upper for b^+, lower for b^-
      const int c = (sign > 0) ? b : a;
      Mat F = Mat::Zero(n, n);
      F(r, c) = 1.0;
      basis.push_back(F);
      Mat G = Mat::Zero(n, n);
      G(r, c) = Complex(0, 1);
      basis.push_back(G);
    }
  }
  return basis;
}

std::vector<Mat> full_real_basis(const Window& w) {
  const int n = w.size();
  std::vector<Mat> basis;
  basis.reserve(2u * n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Mat E = Mat::Zero(n, n);
      E(a, b) = 1.0;
      basis.push_back(E);
      Mat F = Mat::Zero(n, n);
      F(a, b) = Complex(0, 1);
      basis.push_back(F);
    }
  }
  return basis;
}

double pairing_gram_min_sv(const Window& w) {
  const std::vector<Mat> basis = full_real_basis(w);
  const int d = static_cast<int>(basis.size());
  Eigen::MatrixXd gram(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) gram(i, j) = pairing_im(basis[i], basis[j]);
  }
  const Eigen::VectorXd sv = Eigen::BDCSVD<Eigen::MatrixXd>(gram).singularValues();
  return sv(sv.size() - 1);
}

ManinReport verify_manin_triple(const Window& w, int sign, int trials,
                                std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  ManinReport rep;
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const Mat x = random_op(w, Ensemble::Ginibre, rng);
    const Mat y = random_op(w, Ensemble::Ginibre, rng);
    const Mat z = random_op(w, Ensemble::Ginibre, rng);
    // Invariance <[x,y],z> + <y,[x,z]> = 0.
    const double inv = std::abs(pairing_im(commutator(x, y), z) +
                                pairing_im(y, commutator(x, z))) /
                       scale_of({&x, &y, &z});
    rep.invariance_residual = std::max(rep.invariance_residual, inv);

    const Mat u1 = project_u(x, sign), u2 = project_u(y, sign);
    const Mat b1 = project_b(x, sign), b2 = project_b(y, sign);
    rep.isotropy_residual_u = std::max(
        rep.isotropy_residual_u, std::abs(pairing_im(u1, u2)) / scale_of({&u1, &u2}));
    rep.isotropy_residual_b = std::max(
        rep.isotropy_residual_b, std::abs(pairing_im(b1, b2)) / scale_of({&b1, &b2}));
    rep.decomposition_residual = std::max(
        rep.decomposition_residual, (u1 + b1 - x).norm() / std::max(1.0, x.norm()));
  }
  rep.nondegeneracy_min_sv = pairing_gram_min_sv(w);
  return rep;
}

namespace {

// ad*_a(m) = projection of [m, a] onto m's side; in the full L_p/L_q
// self-pairing there is no projection.
Mat ad_star_on_partner(const Mat& actor, const Mat& target, CocycleRoles roles,
                       int sign) {
  const Mat c = commutator(target, actor);
  switch (roles) {
    case CocycleRoles::UActsOnB:  // actor in u, target in b
      return project_b(c, sign);
    case CocycleRoles::BActsOnU:  // actor in b, target in u
      return project_u(c, sign);
    case CocycleRoles::FullLpLq:
      return c;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

double cocycle_residual_algebra(const Mat& x, const Mat& y, const Mat& alpha,
                                const Mat& beta, CocycleRoles roles, int sign) {
  const double lhs = pairing_im(commutator(x, y), commutator(alpha, beta));
  const Mat ax_a = ad_star_on_partner(x, alpha, roles, sign);
  const Mat ax_b = ad_star_on_partner(x, beta, roles, sign);
  const Mat ay_a = ad_star_on_partner(y, alpha, roles, sign);
  const Mat ay_b = ad_star_on_partner(y, beta, roles, sign);
  const double rhs = pairing_im(y, commutator(ax_a, beta)) +
                     pairing_im(y, commutator(alpha, ax_b)) -
                     pairing_im(x, commutator(ay_a, beta)) -
                     pairing_im(x, commutator(alpha, ay_b));
  return std::abs(lhs - rhs);
}

double lie_poisson_bracket(const Mat& f_grad, const Mat& h_grad, const Mat& x) {
  return pairing_im(x, commutator(f_grad, h_grad));
}

}  // namespace plab
