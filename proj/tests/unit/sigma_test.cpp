// Copyright 2026 The teleop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "teleop/sigma.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "teleop/protocol.hpp"

namespace {

using namespace teleop;
using oracle::kRt2;

Matrix sigma11(const Channel& c) { return extract_sigma(c, BellIndex(1), BellIndex(1)).m; }

TEST(ExtractSigma, CatalogChannels) {
  EXPECT_LT(oracle::max_diff(sigma11(catalog("ghz4")), oracle::ghz_operator()), 1e-12);
  EXPECT_LT(oracle::max_diff(sigma11(catalog("w4")), oracle::w_operator()), 1e-12);
  EXPECT_LT(oracle::max_diff(sigma11(catalog("cnot-channel")), oracle::cnot()), 1e-12);
  EXPECT_LT(oracle::max_diff(sigma11(catalog("bell-pairs")), Matrix::identity(4)), 1e-12);
}

TEST(ExtractSigma, YeoChuaIsQuotedOperatorWithMiddleColumnsExchanged) {
  const Matrix m = sigma11(catalog("yeo-chua"));
  EXPECT_LT(oracle::max_diff(m, oracle::swap_middle_columns(oracle::yeo_chua_quoted())), 1e-12);
  EXPECT_GT(oracle::max_diff(m, oracle::yeo_chua_quoted()), 1.0);
  EXPECT_TRUE(is_unitary(m, 1e-10));
}

TEST(ExtractSigma, PartialPairDiagonal) {
  for (double theta : {0.1, std::numbers::pi / 6, 0.9, 1.4}) {
    const Channel c = catalog(CatalogName{CatalogName::Kind::PartialPair, 1, 1, theta});
    const double a = kRt2 * std::cos(theta), b = kRt2 * std::sin(theta);
    const Matrix expected{{a, 0, 0, 0}, {0, a, 0, 0}, {0, 0, b, 0}, {0, 0, 0, b}};
    EXPECT_LT(oracle::max_diff(sigma11(c), expected), 1e-12) << theta;
  }
}

TEST(ExtractSigma, MatchesBruteForceOracle) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Channel c = random_channel(seed);
    for (const TransformOp& op : extract_all(c)) {
      EXPECT_LT(oracle::max_diff(op.m, oracle::sigma(c.amplitudes(), op.i.value(), op.j.value())), 1e-13);
    }
  }
}

TEST(ExtractAll, OrderAndUnitarity) {
  const std::vector<TransformOp> ops = extract_all(catalog("yeo-chua"));
  ASSERT_EQ(ops.size(), 16u);
  for (std::size_t k = 0; k < 16; ++k) {
    EXPECT_EQ(ops[k].i.value(), static_cast<int>(k / 4 + 1));
    EXPECT_EQ(ops[k].j.value(), static_cast<int>(k % 4 + 1));
    EXPECT_TRUE(is_unitary(ops[k].m, 1e-10));
  }
  for (const TransformOp& op : extract_all(catalog("ghz4"))) {
    EXPECT_LT(singular_values(op.m).back(), 1e-12);
  }
}

TEST(ExtractAll, CompletenessOnRandomChannels) {
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const std::vector<TransformOp> ops = extract_all(random_channel(seed));
    Matrix sum(4, 4);
    for (const TransformOp& op : ops) sum = sum + oracle::product(oracle::adjoint(op.m), op.m);
    EXPECT_LT(oracle::max_diff(sum, Complex(16.0) * Matrix::identity(4)), 1e-9) << seed;
    EXPECT_LT(completeness_defect(ops), 1e-9);
  }
}

TEST(ExtractAll, EqualSpectra) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::vector<TransformOp> ops = extract_all(random_channel(seed));
    const std::vector<double> ref = singular_values(ops.front().m);
    for (const TransformOp& op : ops) {
      const std::vector<double> s = singular_values(op.m);
      for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(s[k], ref[k], 1e-9);
    }
  }
}

TEST(ExtractAll, ReconstructionIdentity) {
  oracle::Gen gen(31);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::vector<Complex> chi = gen.unit_vector(4);
    EXPECT_LT(reconstruction_defect(random_channel(seed), chi), 1e-10);
  }
}

TEST(PauliRelation, AssignmentIsTheFactorList) {
  const auto& w = pauli_assignment();
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(w[i - 1], pauli_factor(BellIndex(i)).matrix);
}

TEST(PauliRelation, HoldsOnCatalogAndRandomChannels) {
  for (const char* name : {"yeo-chua", "bell-pairs", "cnot-channel", "ghz4", "w4"}) {
    const RelationCheck r = verify_pauli_relation(catalog(name));
    EXPECT_TRUE(r.holds) << name;
    EXPECT_LT(r.defect, 1e-10) << name;
  }
  for (std::uint64_t seed : {42u, 1u, 2u, 3u}) {
    EXPECT_LT(verify_pauli_relation(random_channel(seed)).defect, 1e-10);
  }
}

TEST(PauliRelation, IndependentCheckAgainstBruteForce) {
  // m_ij = m_11 (F_i (x) F_j), everything computed by the oracle.
  const Channel c = random_channel(42);
  const Matrix base = oracle::sigma(c.amplitudes(), 1, 1);
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      const Matrix w = kron(pauli_factor(BellIndex(i)).matrix, pauli_factor(BellIndex(j)).matrix);
      EXPECT_LT(oracle::max_diff(oracle::sigma(c.amplitudes(), i, j), oracle::product(base, w)), 1e-12);
    }
  }
}

TEST(Classify, Examples) {
  const Classification yc = classify(catalog("yeo-chua"));
  EXPECT_EQ(yc.verdict, Verdict::Perfect);
  EXPECT_EQ(yc.success_probability, 1.0);
  EXPECT_EQ(classify(catalog("ghz4")).verdict, Verdict::Impossible);
  const Classification w = classify(catalog("w4"));
  EXPECT_EQ(w.verdict, Verdict::Impossible);
  EXPECT_EQ(w.success_probability, 0.0);
  EXPECT_LT(w.det_magnitude, 1e-15);
  const Classification pp = classify(catalog(CatalogName{CatalogName::Kind::PartialPair, 1, 1, std::numbers::pi / 6}));
  EXPECT_EQ(pp.verdict, Verdict::Probabilistic);
  EXPECT_NEAR(pp.success_probability, 0.5, 1e-12);
  EXPECT_NEAR(pp.det_magnitude, 0.75, 1e-12);
}

TEST(Classify, TiesResolveToProbabilistic) {
  // s_min exactly equal to tol
  const double tol = 0.25;
  const std::vector<Complex> d{1.0, 1.0, 1.0, tol};
  const Classification c = classify_operator(Matrix::diagonal(d), tol);
  EXPECT_EQ(c.verdict, Verdict::Probabilistic);
  EXPECT_TRUE(c.borderline);
  const Classification clear = classify_operator(Matrix::identity(4), 1e-9);
  EXPECT_EQ(clear.verdict, Verdict::Perfect);
  EXPECT_FALSE(clear.borderline);
  const std::vector<Complex> near_flat{1.0, 1.0, 1.0, 1.0 - 5e-10};
  const Classification nf = classify_operator(Matrix::diagonal(near_flat), 1e-9);
  EXPECT_EQ(nf.verdict, Verdict::Perfect);
  EXPECT_TRUE(nf.borderline);
}

TEST(Classify, InvariantUnderReceiverUnitaries) {
  oracle::Gen gen(37);
  const std::vector<Channel> channels{random_channel(5), catalog("partial-pair:theta=0.5235987755982988"),
                                      catalog("yeo-chua"), catalog("w4")};
  for (const Channel& c : channels) {
    const Classification base = classify(c);
    for (int trial = 0; trial < 20; ++trial) {
      const Classification moved = classify(c.with_receiver_operator(gen.unitary(4)));
      EXPECT_EQ(moved.verdict, base.verdict);
      EXPECT_NEAR(moved.success_probability, base.success_probability, 1e-9);
    }
  }
}

TEST(Classify, SuccessEqualsFilterSumOverBranches) {
  oracle::Gen gen(41);
  const std::vector<Channel> channels{catalog("partial-pair:theta=0.5235987755982988"), random_channel(9)};
  for (const Channel& c : channels) {
    const double expected = classify(c).success_probability;
    for (int trial = 0; trial < 50; ++trial) {
      const std::vector<Complex> v = gen.unit_vector(4);
      const InputState chi({v[0], v[1], v[2], v[3]});
      double total = 0.0;
      for (const OutcomeRecord& r : run_deterministic(chi, c)) total += r.probability * r.filter_success_probability;
      EXPECT_NEAR(total, expected, 1e-9);
    }
  }
}

TEST(Analyze, Reports) {
  const AnalysisReport yc = analyze(catalog("yeo-chua"));
  EXPECT_EQ(yc.channel_name, "yeo-chua");
  EXPECT_EQ(yc.classification.verdict, Verdict::Perfect);
  EXPECT_LT(yc.completeness_defect, 1e-9);
  EXPECT_LT(yc.pauli_relation_defect, 1e-9);
  const AnalysisReport cn = analyze(catalog("cnot-channel"));
  EXPECT_EQ(cn.classification.verdict, Verdict::Perfect);
  EXPECT_LT(oracle::max_diff(cn.sigma11, oracle::cnot()), 1e-12);
  EXPECT_EQ(to_string(Verdict::Probabilistic), "Probabilistic");
}

}  // namespace
