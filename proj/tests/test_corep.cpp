#include "bmu/generators.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace bmu;

namespace {

Mat character(int n, int i) {
  Mat u = Mat::Zero(n, n);
  for (int x = 0; x < n; ++x) {
    const double t = 2 * std::numbers::pi * i * x / n;
    u(x, x) = cplx(std::cos(t), std::sin(t));
  }
  return u;
}

Corep char_corep(int n, int i) { return Corep{1, character(n, i), false}; }

}  // namespace

TEST(Corep, TrivialAndRegular) {
  for (int n = 1; n <= 5; ++n) {
    const auto gi = group_mu(cyclic_group(n));
    EXPECT_EQ(check_corep(trivial_corep(2, n), gi.qg), 0.0);
    EXPECT_EQ(check_corep(Corep{n, gi.qg.W(), false}, gi.qg), 0.0);
    EXPECT_LT(corep_slice_membership(Corep{n, gi.qg.W(), false}, gi.qg), 1e-12);
  }
}

TEST(Corep, RandomUnitaryIsNotACorep) {
  std::mt19937 rng(5);
  const auto gi = group_mu(cyclic_group(3));
  EXPECT_GT(check_corep(Corep{2, oracle::random_unitary(6, rng), false}, gi.qg), 1e-3);
}

TEST(Corep, RejectsNonUnitary) {
  const auto gi = group_mu(cyclic_group(2));
  EXPECT_THROW(check_corep(Corep{1, 2.0 * identity(2), false}, gi.qg), NotUnitary);
}

TEST(TensorCorep, UnitAndAssociativity) {
  const auto gi = group_mu(cyclic_group(3));
  const Corep U{3, gi.qg.W(), false};
  const Corep T = trivial_corep(1, 3);
  EXPECT_EQ(tensor_corep(U, T, 3).U, U.U);
  const Corep left = tensor_corep(tensor_corep(U, U, 3), U, 3);
  const Corep right = tensor_corep(U, tensor_corep(U, U, 3), 3);
  EXPECT_EQ(left.U, right.U);
  EXPECT_LE(check_corep(left, gi.qg), 1e-12);
}

TEST(TensorCorep, CharactersMultiply) {
  const int n = 5;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      EXPECT_LT((tensor_corep(char_corep(n, i), char_corep(n, j), n).U - character(n, (i + j) % n)).norm(), 1e-12);
}

TEST(Intertwiners, Characters) {
  const int n = 4;
  EXPECT_EQ(intertwiners(char_corep(n, 1), char_corep(n, 1), n).dim(), 1);
  EXPECT_EQ(intertwiners(char_corep(n, 1), char_corep(n, 2), n).dim(), 0);
  const auto gi = group_mu(cyclic_group(n));
  const Corep U{n, gi.qg.W(), false};
  const auto hom = intertwiners(tensor_corep(U, trivial_corep(1, n), n), U, n);
  EXPECT_LT(hom.membership(identity(n)), 1e-10);
}

TEST(Contragradient, TrivialAndCharacters) {
  const int n = 5;
  const auto gi = group_mu(cyclic_group(n));
  EXPECT_LT((contragradient(trivial_corep(2, n), gi.qg, gi.R).U - identity(2 * n)).norm(), 1e-12);
  for (int i = 0; i < n; ++i)
    EXPECT_LT((contragradient(char_corep(n, i), gi.qg, gi.R).U - character(n, (n - i) % n)).norm(), 1e-12);
}

TEST(Contragradient, RegularCorepIsAnInvolution) {
  const auto gi = group_mu(cyclic_group(3));
  const Corep U{3, gi.qg.W(), false};
  const Corep c = contragradient(U, gi.qg, gi.R);
  EXPECT_LE(check_corep(c, gi.qg), 1e-12);
  EXPECT_LT((contragradient(c, gi.qg, gi.R).U - U.U).norm(), 1e-12);
  const auto r = check_corep_regularity(c, gi.qg);
  EXPECT_LE(std::max(r.distance, r.distance_mirror), 1e-10);
}

TEST(CorepRegularity, GroupCoreps) {
  for (int n = 1; n <= 4; ++n) {
    const auto gi = group_mu(cyclic_group(n));
    const auto r = check_corep_regularity(Corep{n, gi.qg.W(), false}, gi.qg);
    EXPECT_LE(r.distance, 1e-10);
    EXPECT_LE(r.distance_mirror, 1e-10);
  }
  const auto t = check_corep_regularity(trivial_corep(1, 1), group_mu(cyclic_group(1)).qg);
  EXPECT_EQ(std::max(t.distance, t.distance_mirror), 0.0);
}

TEST(Coaction, ComultiplicationTrivialAndTheta) {
  for (int n = 2; n <= 4; ++n) {
    const auto qg = group_mu(cyclic_group(n)).qg;
    EXPECT_TRUE(check_coaction(comultiplication_coaction(qg), qg).passes(1e-10));
    EXPECT_TRUE(check_coaction(trivial_coaction(qg.A, n), qg).passes(1e-10));
    EXPECT_TRUE(check_coaction(theta_coaction(qg), qg).passes(1e-10));
  }
}

TEST(Coaction, ThetaIsTrivialForGroupUnitaries) {
  // W leaves the second leg untouched, so W*(1 (x) a)W = 1 (x) a for every a in A.
  const auto qg = group_mu(symmetric3()).qg;
  const Coaction th = theta_coaction(qg);
  const Coaction tr = trivial_coaction(qg.A, 6, true);
  for (std::size_t k = 0; k < th.images.size(); ++k) EXPECT_LT((th.images[k] - tr.images[k]).norm(), 1e-12);
}

TEST(Coaction, NonInjectiveMapIsDetected) {
  const auto qg = group_mu(cyclic_group(2)).qg;
  Coaction g = trivial_coaction(qg.A, 2);
  for (auto& y : g.images) y.setZero();
  EXPECT_FALSE(check_coaction(g, qg).injective);
}

TEST(Covariant, TrivialAndRegular) {
  const auto qg = group_mu(cyclic_group(3)).qg;
  EXPECT_EQ(check_covariant(trivial_corep(3, 3), RepMap::identity(qg.A), trivial_coaction(qg.A, 3), qg), 0.0);
  EXPECT_LE(check_covariant(Corep{3, qg.W(), false}, RepMap::identity(qg.A), comultiplication_coaction(qg), qg),
            1e-12);
}

TEST(Covariant, FlippedUnitaryFails) {
  const auto qg = group_mu(cyclic_group(3)).qg;
  const Mat flipped = flip(3, 3) * qg.W() * flip(3, 3);
  EXPECT_GT(check_covariant(Corep{3, flipped, false}, RepMap::identity(qg.A), comultiplication_coaction(qg), qg), 0.1);
}

TEST(YetterDrinfeld, TrivialAndTheta) {
  for (int n = 2; n <= 4; ++n) {
    const auto qg = group_mu(cyclic_group(n)).qg;
    EXPECT_EQ(check_yetter_drinfeld(trivial_coaction(qg.A, n), trivial_coaction(qg.A, n, true), qg), 0.0);
    EXPECT_LE(check_yetter_drinfeld(comultiplication_coaction(qg), theta_coaction(qg), qg), 1e-10);
  }
}

TEST(YetterDrinfeld, TrivialDualCoactionFailsOnTheDualOfS3) {
  // Abelian groups are self-dual, so the negative control needs a noncommutative A.
  const auto qg = dual_quantum_group(group_mu(symmetric3()).qg);
  EXPECT_LE(check_yetter_drinfeld(comultiplication_coaction(qg), theta_coaction(qg), qg), 1e-10);
  EXPECT_GT(check_yetter_drinfeld(comultiplication_coaction(qg), trivial_coaction(qg.A, 6, true), qg), 0.1);
}
