#include <doctest.h>

#include <cmath>

#include "poissonlab/lie_structures.hpp"

using namespace plab;

TEST_CASE("imaginary-part pairing basics") {
  const Window w(2);
  const Mat id = Mat::Identity(4, 4);
  CHECK(pairing_im(Complex(0, 1) * id, id) == doctest::Approx(4.0));
  CHECK(pairing_im(id, id) == 0.0);

  Rng rng = trial_rng(1001, 0);
  const Mat x = random_op(w, Ensemble::Ginibre, rng);
  const Mat y = random_op(w, Ensemble::Ginibre, rng);
  // Symmetry via trace cyclicity.
  CHECK(pairing_im(x, y) == doctest::Approx(pairing_im(y, x)).epsilon(1e-12));
  CHECK(pairing_complex(x, y).imag() == doctest::Approx(pairing_im(x, y)));
  CHECK_THROWS_AS(pairing_im(x, Mat::Identity(2, 2)), std::invalid_argument);
}

TEST_CASE("pairing is nondegenerate on the full matrix space") {
  for (int N : {2, 3, 4}) {
    CHECK(pairing_gram_min_sv(Window(N)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("coadjoint actions satisfy the duality relation (brute force)") {
  const Window w(2);
  for (int sign : {+1, -1}) {
    const auto us = u_basis(w);
    const auto bs = b_basis(w, sign);
    REQUIRE(us.size() == 16);
    REQUIRE(bs.size() == 16);
    // <ad*_alpha x, beta> = <x, [alpha, beta]> for all basis triples.
    for (const Mat& alpha : bs) {
      for (const Mat& x : us) {
        const Mat ax = coadjoint_b_on_u(alpha, x, sign);
        CHECK((ax + ax.adjoint()).norm() < 1e-14);  // stays in u
        for (const Mat& beta : bs) {
          CHECK(pairing_im(ax, beta) ==
                doctest::Approx(pairing_im(x, commutator(alpha, beta))).epsilon(1e-12));
        }
      }
    }
    // <ad*_x alpha, y> = <alpha, [x, y]> for all basis triples.
    for (const Mat& x : us) {
      for (const Mat& alpha : bs) {
        const Mat xa = coadjoint_u_on_b(x, alpha, sign);
        for (const Mat& y : us) {
          CHECK(pairing_im(xa, y) ==
                doctest::Approx(pairing_im(alpha, commutator(x, y))).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("coadjoint sum rule: the two actions reassemble the commutator") {
  const Window w(4);
  for (int sign : {+1, -1}) {
    for (int t = 0; t < 10; ++t) {
      Rng rng = trial_rng(77, static_cast<std::uint64_t>(t));
      const Mat a = random_op(w, Ensemble::Ginibre, rng);
      const Mat x = project_u(a, sign);
      const Mat alpha = project_b(random_op(w, Ensemble::Ginibre, rng), sign);
      // p_u([x,alpha]) + p_b([x,alpha]) = [x,alpha], and
      // coadjoint_u_on_b flips the commutator sign.
      const Mat lhs = coadjoint_b_on_u(alpha, x, sign) -
                      coadjoint_u_on_b(x, alpha, sign);
      CHECK((lhs - commutator(x, alpha)).norm() <
            1e-13 * scale_of({&x, &alpha}));
    }
  }
  CHECK_THROWS_AS(coadjoint_b_on_u(Mat::Identity(8, 8), Mat::Identity(8, 8), +1),
                  std::invalid_argument);
}

TEST_CASE("manin triple verification") {
  for (int N : {2, 4, 8}) {
    for (int sign : {+1, -1}) {
      const ManinReport rep = verify_manin_triple(Window(N), sign, 50, 2026);
      CHECK(rep.invariance_residual < 1e-12);
      CHECK(rep.isotropy_residual_u < 1e-12);
      CHECK(rep.isotropy_residual_b < 1e-12);
      CHECK(rep.decomposition_residual < 1e-15);
      CHECK(rep.nondegeneracy_min_sv == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(verify_manin_triple(Window(2), +1, 0, 1), std::invalid_argument);
}

TEST_CASE("algebra cocycle identity holds for the Iwasawa role pairs") {
  const Window w(4);
  for (int sign : {+1, -1}) {
    for (int t = 0; t < 25; ++t) {
      Rng rng = trial_rng(303, static_cast<std::uint64_t>(t));
      const Mat x = project_u(random_op(w, Ensemble::Ginibre, rng), sign);
      const Mat y = project_u(random_op(w, Ensemble::Ginibre, rng), sign);
      const Mat alpha = project_b(random_op(w, Ensemble::Ginibre, rng), sign);
      const Mat beta = project_b(random_op(w, Ensemble::Ginibre, rng), sign);
      const double scale_u = scale_of({&x, &y, &alpha, &beta});
      CHECK(cocycle_residual_algebra(x, y, alpha, beta, CocycleRoles::UActsOnB, sign) <
            1e-12 * scale_u);
      CHECK(cocycle_residual_algebra(alpha, beta, x, y, CocycleRoles::BActsOnU, sign) <
            1e-12 * scale_u);
    }
  }
}

TEST_CASE("full L_p/L_q self-pairing fails the cocycle identity (negative control)") {
  const Window w(4);
  int nonzero = 0;
  for (int t = 0; t < 25; ++t) {
    Rng rng = trial_rng(404, static_cast<std::uint64_t>(t));
    const Mat x = random_op(w, Ensemble::Ginibre, rng);
    const Mat y = random_op(w, Ensemble::Ginibre, rng);
    const Mat a = random_op(w, Ensemble::Ginibre, rng);
    const Mat b = random_op(w, Ensemble::Ginibre, rng);
    const double r = cocycle_residual_algebra(x, y, a, b, CocycleRoles::FullLpLq, +1);
    if (r > 1e-3 * scale_of({&x, &y, &a, &b})) ++nonzero;
  }
  CHECK(nonzero >= 24);
}

TEST_CASE("lie-poisson bracket of linear functionals satisfies jacobi") {
  const Window w(3);
  for (int t = 0; t < 10; ++t) {
    Rng rng = trial_rng(550, static_cast<std::uint64_t>(t));
    const Mat f = random_op(w, Ensemble::Ginibre, rng);
    const Mat g = random_op(w, Ensemble::Ginibre, rng);
    const Mat h = random_op(w, Ensemble::Ginibre, rng);
    const Mat x = random_op(w, Ensemble::Ginibre, rng);
    // {g,h} is again linear with gradient [dg,dh], so the cyclic sum reduces
    // to <x, sum_cyc [df,[dg,dh]]> = 0 by the matrix Jacobi identity.
    const double cyc = lie_poisson_bracket(f, commutator(g, h), x) +
                       lie_poisson_bracket(g, commutator(h, f), x) +
                       lie_poisson_bracket(h, commutator(f, g), x);
    CHECK(std::abs(cyc) < 1e-11 * scale_of({&f, &g, &h, &x}));
    // Antisymmetry.
    CHECK(lie_poisson_bracket(f, g, x) ==
          doctest::Approx(-lie_poisson_bracket(g, f, x)).epsilon(1e-12));
  }
}

namespace {

struct DoubleElt {
  Mat u;  // skew part
  Mat b;  // triangular part
};

DoubleElt double_bracket(const DoubleElt& A, const DoubleElt& B, int sign) {
  DoubleElt out;
  out.u = commutator(A.u, B.u) + coadjoint_b_on_u(B.b, A.u, sign) -
          coadjoint_b_on_u(A.b, B.u, sign);
  out.b = commutator(A.b, B.b) + coadjoint_u_on_b(B.u, A.b, sign) -
          coadjoint_u_on_b(A.u, B.b, sign);
  return out;
}

double double_pairing(const DoubleElt& A, const DoubleElt& B) {
  return pairing_im(A.u, B.b) + pairing_im(A.b, B.u);
}

}  // namespace

TEST_CASE("double bracket matches the ambient commutator and is ad-invariant") {
  const Window w(4);
  for (int sign : {+1, -1}) {
    for (int t = 0; t < 10; ++t) {
      Rng rng = trial_rng(660, static_cast<std::uint64_t>(t));
      auto rand_elt = [&]() {
        const Mat m = random_op(w, Ensemble::Ginibre, rng);
        return DoubleElt{project_u(m, sign), project_b(m, sign)};
      };
      const DoubleElt A = rand_elt(), B = rand_elt(), C = rand_elt();
      const double scale = scale_of({&A.u, &A.b, &B.u, &B.b, &C.u, &C.b});

      // Oracle: the double of the Iwasawa Manin triple is the ambient matrix
      // algebra, so the component formula must reassemble [u_A+b_A, u_B+b_B].
      const DoubleElt AB = double_bracket(A, B, sign);
      const Mat ambient = commutator(A.u + A.b, B.u + B.b);
      CHECK((AB.u + AB.b - ambient).norm() < 1e-13 * scale);

      // Jacobi identity on the double.
      const DoubleElt J1 = double_bracket(AB, C, sign);
      const DoubleElt J2 = double_bracket(double_bracket(B, C, sign), A, sign);
      const DoubleElt J3 = double_bracket(double_bracket(C, A, sign), B, sign);
      CHECK((J1.u + J2.u + J3.u).norm() + (J1.b + J2.b + J3.b).norm() <
            1e-12 * scale);

      // Invariance of the canonical pairing on the double.
      const double inv = double_pairing(AB, C) +
                         double_pairing(B, double_bracket(A, C, sign));
      CHECK(std::abs(inv) < 1e-12 * scale);
    }
  }
}
