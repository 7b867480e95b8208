#include "bmu/bosonize.hpp"
#include "bmu/generators.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace bmu;

namespace {

struct Built {
  BraidedInstance inst;
  BraidedQuantumGroup bq;
  Bosonization bos;
};

Built build(BraidedInstance inst) {
  Built out{std::move(inst), {}, {}};
  out.bq = extract_B(out.inst.bmu);
  out.bos = build_WC_and_P(out.inst.bmu, out.inst.base.qg);
  build_C(out.bos, out.inst.bmu, out.inst.base.qg, out.bq.B);
  return out;
}

std::vector<BraidedInstance> nontrivial() {
  return {semidirect_action_instance(3, 2, -1), semidirect_grading_instance(3, 2, -1),
          graded_identity_instance(2, 1, 1)};
}

}  // namespace

TEST(BuildWC, TrivialBraidedPartGivesW) {
  for (const auto& g : {cyclic_group(3), symmetric3()}) {
    const auto b = build(trivial_B_braided(g));
    EXPECT_EQ(b.bos.WC, b.inst.base.qg.W());
    EXPECT_EQ(b.bos.P, b.inst.base.qg.W());
    EXPECT_LT(subspace_distance(b.bos.C, b.inst.base.qg.A), 1e-12);
  }
}

TEST(BuildWC, TrivialGroupGivesF) {
  for (int n = 2; n <= 4; ++n) {
    const auto b = build(trivial_group_braided(n));
    EXPECT_EQ(b.bos.WC, b.inst.bmu.F);
    EXPECT_EQ(b.bos.P, identity(n * n));
    EXPECT_LT(subspace_distance(b.bos.C, b.bq.B), 1e-12);
  }
}

TEST(BuildWC, MatchesIndexLoopAssembly) {
  const auto b = build(semidirect_action_instance(3, 2, -1));
  const int d = 2, l = 3;
  const std::vector<int> dims{d, l, d, l};
  const auto& p = b.inst.bmu.pair;
  const Mat w13 = oracle::on_legs(b.inst.base.qg.W(), dims, {0, 2});
  const Mat u23 = oracle::on_legs(p.Ucheck(), dims, {1, 2});
  const Mat v34 = oracle::on_legs(p.Vcheck(), dims, {2, 3});
  const Mat f24 = oracle::on_legs(b.inst.bmu.F, dims, {1, 3});
  EXPECT_LT((b.bos.WC - oracle::matmul({w13, u23, Mat(v34.adjoint()), f24, v34})).norm(), 1e-12);
  EXPECT_LT((b.bos.P - oracle::matmul(w13, u23)).norm(), 1e-12);
}

TEST(Projection, NontrivialInstances) {
  for (auto inst : nontrivial()) {
    const auto b = build(std::move(inst));
    const auto r = check_projection(b.bos);
    EXPECT_LE(r.worst(), 1e-10) << b.inst.name;
    EXPECT_LE(oracle::pentagon(b.bos.WC, b.bos.e()), 1e-10);
  }
}

TEST(Projection, FlippedFFailsPentagon) {
  const auto inst = trivial_group_braided(3);
  const auto b = make_braided_mu(inst.bmu.pair, flip(3, 3), inst.base.qg);
  const auto bos = build_WC_and_P(b, inst.base.qg);
  EXPECT_GT(check_projection(bos).pentagon_WC, 0.5);
}

TEST(BosonizedAlgebra, SemidirectDimensions) {
  // C is A (x) B as a vector space.
  for (auto inst : nontrivial()) {
    const auto b = build(std::move(inst));
    EXPECT_EQ(b.bos.C.dim(), b.inst.base.qg.A.dim() * b.bq.B.dim());
    EXPECT_LE(b.bos.closureC.worst(), 1e-10);
  }
}

TEST(BosonizedComultiplication, PsiMatchesConjugation) {
  for (auto inst : nontrivial()) {
    const auto b = build(std::move(inst));
    const auto r = check_bosonized_comultiplication(b.bos, b.inst.bmu, b.inst.base.qg);
    EXPECT_LE(r.psi_vs_conjugation, 1e-9) << b.inst.name;
    EXPECT_LE(r.slice_algebra, 1e-9) << b.inst.name;
  }
}

TEST(BosonizedComultiplication, TrivialCases) {
  const auto tb = build(trivial_B_braided(cyclic_group(3)));
  const auto r1 = check_bosonized_comultiplication(tb.bos, tb.inst.bmu, tb.inst.base.qg);
  EXPECT_LE(std::max(r1.psi_vs_conjugation, r1.slice_algebra), 1e-12);
  const auto tg = build(trivial_group_braided(3));
  const auto r2 = check_bosonized_comultiplication(tg.bos, tg.inst.bmu, tg.inst.base.qg);
  EXPECT_LE(std::max(r2.psi_vs_conjugation, r2.slice_algebra), 1e-12);
}

TEST(GProduct, InclusionOfA) {
  for (auto inst : nontrivial()) {
    const auto b = build(std::move(inst));
    const auto dl = left_coaction(b.bos, b.inst.bmu, b.inst.base.qg);
    EXPECT_LE(check_gproduct(dl, b.inst.base.qg, b.bos.dL), 1e-10);
  }
  const auto tg = build(trivial_group_braided(2));
  EXPECT_LE(check_gproduct(left_coaction(tg.bos, tg.inst.bmu, tg.inst.base.qg), tg.inst.base.qg, 2), 1e-14);
}

TEST(GProduct, CorruptedInclusionFails) {
  // Over Z/2 the leg flip and the inversion both give another valid inclusion, so use Z/3.
  const auto b = build(graded_identity_instance(3, 1, 1));
  const int d = b.bos.d, l = b.bos.dL;
  std::vector<Mat> in, flipped, inverted;
  for (const Mat& a : b.inst.base.qg.A.basis()) {
    in.push_back(a);
    flipped.push_back(flip(d, l) * kron(a, identity(l)) * flip(l, d));
    inverted.push_back(kron(b.inst.base.R.apply(a), identity(l)));
  }
  const auto dl = left_coaction(b.bos, b.inst.bmu, b.inst.base.qg);
  EXPECT_GT(check_gproduct(dl, b.inst.base.qg, l, LinearMap::from_pairs(in, flipped)), 0.1);
  EXPECT_GT(check_gproduct(dl, b.inst.base.qg, l, LinearMap::from_pairs(in, inverted)), 0.1);
}

TEST(Landstad, TrivialCases) {
  const auto tb = build(trivial_B_braided(cyclic_group(3)));
  EXPECT_EQ(landstad_slices(tb.bos, tb.inst.bmu).D.dim(), 1);
  const auto tg = build(trivial_group_braided(3));
  const auto ls = landstad_slices(tg.bos, tg.inst.bmu);
  EXPECT_LT(subspace_distance(ls.D, tg.bq.B), 1e-12);
  const auto r = check_landstad_conditions(tg.bos, left_coaction(tg.bos, tg.inst.bmu, tg.inst.base.qg),
                                           tg.inst.base.qg, ls.D);
  EXPECT_LE(std::max({r.fixed_point, r.factorization, r.induction}), 1e-12);
}

TEST(Landstad, NontrivialInstances) {
  for (auto inst : nontrivial()) {
    const auto b = build(std::move(inst));
    const auto& qg = b.inst.base.qg;
    const auto ls = landstad_slices(b.bos, b.inst.bmu);
    EXPECT_LT(subspace_distance(ls.D, ls.D_alt), 1e-9) << b.inst.name;
    EXPECT_LE(check_D_equals_B(b.bos, b.inst.bmu, ls.D, b.bq.B), 1e-9);
    const auto r = check_landstad_conditions(b.bos, left_coaction(b.bos, b.inst.bmu, qg), qg, ls.D);
    EXPECT_LE(r.fixed_point, 1e-9);
    EXPECT_LE(r.factorization, 1e-9);
    EXPECT_LE(r.induction, 1e-9);
  }
}

TEST(Landstad, BosonizedAlgebraIsNotFixed) {
  const auto b = build(semidirect_action_instance(3, 2, -1));
  const auto r = check_landstad_conditions(b.bos, left_coaction(b.bos, b.inst.bmu, b.inst.base.qg), b.inst.base.qg,
                                           b.bos.C);
  EXPECT_GT(r.fixed_point, 0.1);
}

TEST(Landstad, AntiHeisenbergSlicesAgree) {
  for (auto inst : {semidirect_grading_instance(3, 2, -1), semidirect_action_instance(3, 2, -1)}) {
    const auto b = build(std::move(inst));
    const auto ah = bosonized_antiheisenberg(b.bos);
    ASSERT_LE(ah.antipode.worst(), 1e-10);
    ASSERT_LE(ah.anti_heisenberg, 1e-10);
    const auto ls = landstad_slices(b.bos, b.inst.bmu);
    EXPECT_LT(subspace_distance(landstad_slices_antiheisenberg(b.bos, ah.rhohat), ls.D), 1e-9);
  }
}

TEST(CommutationLemma, AntiHeisenbergPairCommutes) {
  for (auto inst : {semidirect_grading_instance(3, 2, -1), semidirect_action_instance(3, 2, -1),
                    graded_identity_instance(2, 1, 1)}) {
    const auto b = build(std::move(inst));
    const auto ah = bosonized_antiheisenberg(b.bos);
    ASSERT_LE(ah.anti_heisenberg, 1e-10);
    EXPECT_LE(check_commutation_lemma(b.bos, b.inst.base.qg, ah.rho, ah.rhohat), 1e-9) << b.inst.name;
  }
  const auto tb = build(trivial_B_braided(cyclic_group(3)));
  const auto ah = bosonized_antiheisenberg(tb.bos);
  EXPECT_LE(check_commutation_lemma(tb.bos, tb.inst.base.qg, ah.rho, ah.rhohat), 1e-12);
}

TEST(CommutationLemma, HeisenbergOrderingFails) {
  // Only the grading instance puts H into the slice operator, so only there can the
  // ordering matter; the canonical pair has its legs the other way round.
  const auto b = build(semidirect_grading_instance(3, 2, -1));
  const auto ah = bosonized_antiheisenberg(b.bos);
  const double r = check_commutation_lemma(b.bos, b.inst.base.qg, RepMap::identity(ah.qgC.A),
                                           RepMap::identity(ah.qgC.Ahat));
  EXPECT_GT(r, 0.1);
}

TEST(HatARep, TrivialRegularAndBraided) {
  const auto gi = group_mu(cyclic_group(3));
  const auto triv = check_rep_hatA_lemma(trivial_pair(2, 3), gi.qg, gi.R, gi.Rhat);
  EXPECT_LE(std::max({triv.from_slices, triv.consistency, triv.from_recipe}), 1e-12);
  EXPECT_TRUE(triv.faithful);
  for (int n = 2; n <= 4; ++n) {
    const auto g = group_mu(cyclic_group(n));
    const auto r = check_rep_hatA_lemma(make_pair(g.qg.W(), identity(n * n), n), g.qg, g.R, g.Rhat);
    EXPECT_LE(std::max({r.from_slices, r.consistency, r.from_recipe}), 1e-10);
    EXPECT_TRUE(r.faithful);
  }
  for (const auto& inst : nontrivial()) {
    const auto r = check_rep_hatA_lemma(inst.bmu.pair, inst.base.qg, inst.base.R, inst.base.Rhat);
    EXPECT_LE(std::max({r.from_slices, r.consistency, r.from_recipe}), 1e-10) << inst.name;
  }
}
