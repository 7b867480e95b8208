#include "bmu/generators.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace bmu;

namespace {

QuantumGroupData zn(int n) { return group_mu(cyclic_group(n)).qg; }

// Keeps all but the last basis vector of A.
OperatorSubspace truncated(const OperatorSubspace& s) {
  auto b = s.basis();
  b.pop_back();
  return span(b, s.rows(), s.cols());
}

}  // namespace

TEST(Pentagon, GroupUnitaryOfZ2IsExact) {
  const Mat W = group_unitary(cyclic_group(2));
  EXPECT_EQ(W, oracle::group_W(oracle::cyclic_table(2)));
  EXPECT_EQ(check_pentagon(W, 2), 0.0);
  EXPECT_EQ(oracle::pentagon(W, 2), 0.0);
}

TEST(Pentagon, IdentityAndFlip) {
  EXPECT_EQ(check_pentagon(identity(9), 3), 0.0);
  for (int d : {2, 3}) {
    EXPECT_GT(check_pentagon(flip(d, d), d), 0.5);
    EXPECT_NEAR(check_pentagon(flip(d, d), d), oracle::pentagon(flip(d, d), d), 1e-12);
  }
}

TEST(Pentagon, RejectsNonUnitary) { EXPECT_THROW(check_pentagon(2.0 * identity(4), 2), NotUnitary); }

TEST(ExtractLegs, CyclicGroups) {
  for (int n = 2; n <= 6; ++n) {
    const Mat W = group_unitary(cyclic_group(n));
    const auto legs = extract_legs(W, n);
    EXPECT_EQ(legs.A.dim(), n);
    EXPECT_EQ(legs.Ahat.dim(), n);
    std::vector<Mat> diag, shifts;
    for (int k = 0; k < n; ++k) {
      diag.push_back(matrix_unit(n, k, k));
      shifts.push_back(right_regular(cyclic_group(n), k));
    }
    EXPECT_LT(subspace_distance(legs.A, span(diag)), 1e-12);
    EXPECT_LT(subspace_distance(legs.Ahat, span(shifts)), 1e-12);
  }
}

TEST(ExtractLegs, IdentityGivesScalars) {
  const auto legs = extract_legs(identity(4), 2);
  EXPECT_EQ(legs.A.dim(), 1);
  EXPECT_EQ(legs.Ahat.dim(), 1);
}

TEST(ExtractLegs, DualExchangesLegs) {
  const auto qg = group_mu(symmetric3()).qg;
  const auto legs = extract_legs(dualize(qg.W(), 6), 6);
  EXPECT_LT(subspace_distance(legs.A, qg.Ahat), 1e-10);
  EXPECT_LT(subspace_distance(legs.Ahat, qg.A), 1e-10);
}

TEST(ExtractLegs, NonAlgebraIsReported) {
  // First-leg slices span {1, u} with u = diag(1, i, -1), and u^2 is not in that span.
  Mat u = Mat::Zero(3, 3);
  u(0, 0) = 1;
  u(1, 1) = cplx(0, 1);
  u(2, 2) = -1;
  const Mat W = kron(matrix_unit(3, 0, 0), identity(3)) + kron(matrix_unit(3, 1, 1), u) +
                kron(matrix_unit(3, 2, 2), identity(3));
  try {
    extract_legs(W, 3);
    ADD_FAILURE() << "expected NotAnAlgebra";
  } catch (const NotAnAlgebra& e) {
    EXPECT_GT(e.worst_residual, 0.1);
  }
}

TEST(Comultiplication, UnitAndCyclicFormula) {
  for (int n : {2, 3, 5}) {
    const auto qg = zn(n);
    EXPECT_LT((comultiplication(qg, identity(n)) - identity(n * n)).norm(), 1e-14);
    for (int k = 0; k < n; ++k) {
      Mat expected = Mat::Zero(n * n, n * n);
      for (int i = 0; i < n; ++i) {
        const int j = ((k - i) % n + n) % n;
        expected += oracle::kron(matrix_unit(n, i, i), matrix_unit(n, j, j));
      }
      EXPECT_LT((comultiplication(qg, matrix_unit(n, k, k)) - expected).norm(), 1e-14);
    }
  }
}

TEST(Comultiplication, RejectsNonMembers) {
  EXPECT_THROW(comultiplication(zn(3), matrix_unit(3, 0, 1)), MembershipError);
  EXPECT_THROW(dual_comultiplication(zn(3), matrix_unit(3, 0, 0)), MembershipError);
}

TEST(Comultiplication, Coassociative) {
  for (int n = 1; n <= 6; ++n) EXPECT_LE(coassociativity_residual(zn(n).W(), n, zn(n).A), 1e-12);
  const auto s3 = group_mu(symmetric3()).qg;
  EXPECT_LE(coassociativity_residual(s3.W(), 6, s3.A), 1e-12);
}

TEST(Cancellation, GroupAndTrivial) {
  for (int n = 2; n <= 5; ++n) {
    const auto c = check_cancellation(zn(n).W(), n, zn(n).A);
    EXPECT_LE(c.left, 1e-10);
    EXPECT_LE(c.right, 1e-10);
  }
  const auto t = check_cancellation(identity(4), 2, scalars(2));
  EXPECT_LE(std::max(t.left, t.right), 1e-14);
}

TEST(Cancellation, TruncatedAlgebraFails) {
  const auto qg = zn(3);
  const auto c = check_cancellation(qg.W(), 3, truncated(qg.A));
  EXPECT_GT(std::max(c.left, c.right), 0.1);
}

TEST(Manageability, GroupUnitaryWithIdentityQ) {
  for (int n = 1; n <= 6; ++n) {
    const auto m = check_manageable(zn(n).W(), n, identity(n));
    EXPECT_EQ(m.unitarity, 0.0);
    EXPECT_EQ(m.commutation, 0.0);
    EXPECT_EQ(m.Wtilde, partial_transpose(zn(n).W(), {n, n}, 0));
  }
  const auto t = check_manageable(identity(4), 2, identity(2));
  EXPECT_EQ(t.Wtilde, identity(4));
}

TEST(Manageability, DiagonalQDoesNotCommuteWithGroupUnitary) {
  // W sends q_x q_y to q_{x-y} q_y, so Q (x) Q is not preserved unless Q is scalar.
  Mat Q = Mat::Zero(2, 2);
  Q(0, 0) = 1;
  Q(1, 1) = 2;
  const auto m = check_manageable(zn(2).W(), 2, Q);
  EXPECT_GT(m.commutation, 0.5);
}

TEST(Manageability, RejectsIndefiniteQ) {
  Mat Q = identity(2);
  Q(1, 1) = -1;
  EXPECT_THROW(check_manageable(zn(2).W(), 2, Q), NotPositiveDefinite);
}

TEST(Duality, InvolutionAndPentagon) {
  for (int n = 2; n <= 4; ++n) {
    const Mat W = zn(n).W();
    EXPECT_EQ(dualize(dualize(W, n), n), W);
    EXPECT_EQ(check_pentagon(dualize(W, n), n), 0.0);
    EXPECT_LE(dual_comult_residual(zn(n)), 1e-12);
  }
  const auto s3 = group_mu(symmetric3()).qg;
  EXPECT_LE(dual_comult_residual(s3), 1e-12);
}

TEST(Regularity, GroupsAndTrivial) {
  for (int n = 1; n <= 5; ++n) {
    const auto r = check_regularity(zn(n));
    EXPECT_LE(std::max({r.main, r.variant1, r.variant2}), 1e-10);
    EXPECT_TRUE(r.agree(1e-10));
  }
  const auto t = check_regularity(identity(4), 2, scalars(2), scalars(2));
  EXPECT_LE(std::max({t.main, t.variant1, t.variant2}), 1e-14);
}

TEST(Heisenberg, CanonicalPairEqualsPentagon) {
  for (int n = 1; n <= 4; ++n) {
    const auto qg = zn(n);
    EXPECT_EQ(check_heisenberg(qg, RepMap::identity(qg.A), RepMap::identity(qg.Ahat), false),
              check_pentagon(qg.W(), n));
  }
}

TEST(Heisenberg, AntiPairFromAntipode) {
  for (int n = 1; n <= 6; ++n) {
    const auto gi = group_mu(cyclic_group(n));
    const auto pr = antiheisenberg_from_heisenberg(gi.qg, RepMap::identity(gi.qg.A), RepMap::identity(gi.qg.Ahat),
                                                   gi.R, gi.Rhat);
    EXPECT_LE(check_heisenberg(gi.qg, pr.first, pr.second, true), 1e-10);
  }
}

TEST(Heisenberg, AntiPairTwiceIsHeisenbergAgain) {
  const auto gi = group_mu(cyclic_group(3));
  const auto pr = antiheisenberg_from_heisenberg(gi.qg, RepMap::identity(gi.qg.A), RepMap::identity(gi.qg.Ahat),
                                                 gi.R, gi.Rhat);
  const auto back = antiheisenberg_from_heisenberg(gi.qg, pr.first, pr.second, gi.R, gi.Rhat);
  EXPECT_LE(check_heisenberg(gi.qg, back.first, back.second, false), 1e-10);
  for (const Mat& a : gi.qg.A.basis()) EXPECT_LT((back.first.apply(a) - a).norm(), 1e-12);
}

TEST(Heisenberg, SwappedPairFailsOnZ3) {
  // pi and pihat exchanged: the transposed anti-Heisenberg maps used in the wrong slots.
  const auto gi = group_mu(cyclic_group(3));
  const auto pr = antiheisenberg_from_heisenberg(gi.qg, RepMap::identity(gi.qg.A), RepMap::identity(gi.qg.Ahat),
                                                 gi.R, gi.Rhat);
  EXPECT_GT(check_heisenberg(gi.qg, pr.first, pr.second, false), 0.1);
}

TEST(Antipode, InversionOnCyclicGroups) {
  for (int n = 1; n <= 6; ++n) {
    const auto gi = group_mu(cyclic_group(n));
    EXPECT_LE(check_antipode(gi.qg, gi.R).worst(), 1e-12);
    EXPECT_LE(check_antipode(gi.qg, gi.Rhat, true).worst(), 1e-12);
  }
}

TEST(Antipode, IdentityPassesOnAbelianGroups) {
  // Cocommutative Delta: the four identities hold for R = id, so they cannot single out
  // the inversion here.
  for (int n : {2, 3}) {
    const auto qg = zn(n);
    EXPECT_EQ(check_antipode(qg, LinearMap::identity_on(qg.A)).worst(), 0.0);
  }
}

TEST(Antipode, IdentityFailsOnS3) {
  const auto qg = group_mu(symmetric3()).qg;
  EXPECT_GT(check_antipode(qg, LinearMap::identity_on(qg.A)).opposite_comultiplication, 0.1);
}

TEST(Antipode, KacCandidateMatchesInversion) {
  for (const auto& g : {cyclic_group(4), symmetric3()}) {
    const auto gi = group_mu(g);
    const LinearMap k = kac_antipode(gi.qg);
    for (const Mat& a : gi.qg.A.basis()) EXPECT_LT((k.apply(a) - gi.R.apply(a)).norm(), 1e-12);
    const LinearMap kh = kac_dual_antipode(gi.qg);
    for (const Mat& a : gi.qg.Ahat.basis()) EXPECT_LT((kh.apply(a) - gi.Rhat.apply(a)).norm(), 1e-12);
  }
}

TEST(QuantumGroup, S3IsNoncommutativeOnTheDualSide) {
  const auto qg = group_mu(symmetric3()).qg;
  EXPECT_EQ(qg.A.dim(), 6);
  EXPECT_EQ(qg.Ahat.dim(), 6);
  double comm = 0;
  for (const Mat& a : qg.Ahat.basis())
    for (const Mat& b : qg.Ahat.basis()) comm = std::max(comm, (a * b - b * a).norm());
  EXPECT_GT(comm, 0.1);
}
