#include "bmu/corpus.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace bmu;

TEST(Groups, ValidateRejectsBrokenTables) {
  GroupSpec g{"bad", 2, {{0, 1}, {1, 1}}};
  EXPECT_THROW(validate(g), IllFormedInput);
  GroupSpec nonassoc{"nonassoc", 3, {{0, 1, 2}, {1, 0, 0}, {2, 2, 0}}};
  EXPECT_THROW(validate(nonassoc), IllFormedInput);
  GroupSpec shifted{"shifted", 2, {{1, 0}, {0, 1}}};
  EXPECT_THROW(validate(shifted), IllFormedInput);
  EXPECT_NO_THROW(validate(cyclic_group(5)));
  EXPECT_NO_THROW(validate(symmetric3()));
}

TEST(Groups, SemidirectProducts) {
  const auto g = semidirect_group(3, 2, -1);
  EXPECT_EQ(g.n, 6);
  EXPECT_NO_THROW(validate(g));
  EXPECT_THROW(semidirect_group(3, 3, 2), IllFormedInput);  // 2^3 = 2 mod 3
  int noncommuting = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) noncommuting += g.mul(a, b) != g.mul(b, a);
  EXPECT_GT(noncommuting, 0);
}

TEST(Groups, UnitaryMatchesTableOracle) {
  for (const auto& g : {cyclic_group(4), symmetric3(), semidirect_group(3, 2, -1)}) {
    EXPECT_EQ(group_unitary(g), oracle::group_W(g.table));
    EXPECT_EQ(oracle::pentagon(group_unitary(g), g.n), 0.0);
  }
}

TEST(Groups, RightRegularIsAHomomorphism) {
  const auto g = symmetric3();
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      EXPECT_EQ(right_regular(g, x) * right_regular(g, y), right_regular(g, g.mul(x, y)));
}

TEST(Search, GradedZ2FindsOnlyTheIdentity) {
  const auto qg = group_mu(cyclic_group(2)).qg;
  const auto pair = graded_drinfeld_pair(2, 1, 1);
  const auto res = search_braided_F(pair, qg);
  EXPECT_TRUE(res.nontrivial_braiding);
  EXPECT_TRUE(res.exhausted);
  EXPECT_EQ(res.candidates, 3558);
  EXPECT_EQ(res.invariant, 1186);
  ASSERT_EQ(res.hits.size(), 1u);
  EXPECT_EQ(res.hits[0], identity(4));
  const Mat Z = compute_Z(pair, pair, qg).Z;
  for (const Mat& F : res.hits) EXPECT_LE(oracle::braided_pentagon(F, Z, 2), 1e-12);
}

TEST(Search, TrivialPairRecoversGroupUnitary) {
  const auto qg = group_mu(cyclic_group(3)).qg;
  const auto pair = graded_drinfeld_pair(3, 0, 0);
  const auto res = search_braided_F(pair, qg);
  EXPECT_FALSE(res.nontrivial_braiding);
  const Mat W = group_unitary(cyclic_group(3));
  bool found = false;
  for (const Mat& F : res.hits) {
    found = found || (F - W).norm() < 1e-12;
    EXPECT_LE(oracle::pentagon(F, 3), 1e-10);
  }
  EXPECT_TRUE(found);
}

TEST(Search, EmptyGridIsExhausted) {
  const auto qg = group_mu(cyclic_group(2)).qg;
  const auto res = search_braided_F(graded_drinfeld_pair(2, 1, 1), qg, SearchGrid{0, false});
  EXPECT_EQ(res.candidates, 0);
  EXPECT_TRUE(res.hits.empty());
  EXPECT_TRUE(res.exhausted);
}

TEST(Instances, SemidirectPairsAreCompatible) {
  for (const auto& inst : {semidirect_action_instance(3, 2, -1), semidirect_grading_instance(3, 2, -1),
                           semidirect_action_instance(5, 4, 2)}) {
    EXPECT_LE(check_drinfeld_pair(inst.bmu.pair, inst.base.qg), 1e-12) << inst.name;
    EXPECT_LE(check_corep(inst.bmu.pair.U, inst.base.qg), 1e-12);
    EXPECT_LE(check_corep(inst.bmu.pair.V, inst.base.qg), 1e-12);
  }
  EXPECT_THROW(automorphism_pair(5, 2, 2, true, false), IllFormedInput);  // 2^2 = 4 mod 5
}

TEST(Instances, ActionAndGradingTogetherBreakThePentagon) {
  const auto inst = generate_instance("action-and-grading");
  const auto qg = quantum_group_of(inst);
  const auto b = braided_of(inst, qg);
  EXPECT_GT(check_braided_mu(b, qg).pentagon, 0.1);
}

TEST(Corpus, FamiliesAreListedAndGenerated) {
  for (const auto& f : generator_families()) {
    const Instance inst = generate_instance(f.name);
    EXPECT_EQ(inst.meta["generator"], f.name);
    EXPECT_EQ(inst.meta["negative_control"], f.negative_control);
    EXPECT_FALSE(applicable_pipelines(inst).empty());
  }
  EXPECT_THROW(generate_instance("no-such-family"), IllFormedInput);
  EXPECT_THROW(generate_instance("cyclic", {{"n", 0}}), IllFormedInput);
  EXPECT_THROW(generate_instance("cyclic", {{"bogus", 2}}), IllFormedInput);
}

TEST(Corpus, RegularInstancesPassAndControlsFail) {
  for (const Instance& inst : standard_corpus()) {
    const bool negative = inst.meta.value("negative_control", false);
    bool all = true;
    for (const auto& p : applicable_pipelines(inst)) {
      const auto cert = run_pipeline(inst, p);
      if (!negative) EXPECT_TRUE(cert.all_pass()) << inst.id << " " << p << "\n" << cert.to_text();
      all = all && cert.all_pass();
    }
    if (negative) EXPECT_FALSE(all) << inst.id;
  }
}
