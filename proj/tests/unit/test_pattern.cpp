#include <gtest/gtest.h>

#include "gcfiber/error.hpp"
#include "gcfiber/fixtures.hpp"
#include "gcfiber/pattern.hpp"
#include "support.hpp"

namespace gcfiber {
namespace {

using testing::triangle;

const GCTriangle kSpherical = triangle({{"2"}, {"2", "2"}, {"3", "2", "1"}});
const GCTriangle kRegular = triangle({{"2.5"}, {"2.7", "1.5"}, {"3", "2", "1"}});
const GCTriangle kVertical = triangle({{"3"}, {"3", "1.5"}, {"3", "2", "1"}});
const GCTriangle kOneDiagonal = triangle({{"2.5"}, {"2.5", "1.5"}, {"3", "2", "1"}});

std::vector<Exact> exact(std::initializer_list<int> v) {
  std::vector<Exact> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

TEST(RegularFiberDim, Examples) {
  EXPECT_EQ(regular_fiber_dim(Spectrum({3, 2, 1})), 3);
  EXPECT_EQ(regular_fiber_dim(Spectrum({1.5, 1.5})), 0);
  EXPECT_EQ(regular_fiber_dim(Spectrum({2, 2, 1})), 2);
  EXPECT_EQ(regular_fiber_dim(exact({7, 6, 5, 4, 3, 2, 1})), 21);
}

TEST(ULambdaDim, Examples) {
  EXPECT_EQ(u_lambda_dim(Spectrum({3, 2, 1})), 3);
  EXPECT_EQ(u_lambda_dim(Spectrum({2, 2, 1})), 5);
  EXPECT_EQ(u_lambda_dim(Spectrum({4, 4, 4})), 9);
}

TEST(ExtractPattern, StrictTriangleHasNoPairs) { EXPECT_TRUE(extract_pattern(kRegular).equal_pairs.empty()); }

TEST(ExtractPattern, SphericalPairs) {
  const auto p = extract_pattern(kSpherical);
  const std::vector<EqualPair> expected{
      {{1, 1}, {1, 2}}, {{1, 1}, {2, 2}}, {{1, 2}, {2, 2}}, {{1, 2}, {2, 3}}, {{2, 2}, {2, 3}}};
  EXPECT_EQ(p.equal_pairs, expected);
}

TEST(ExtractPattern, ForcedPositionsFromRepeatedSpectrum) {
  const auto t = triangle({{"1.5"}, {"2", "1.2"}, {"2", "2", "1"}});
  const auto p = extract_pattern(t);
  EXPECT_FALSE(p.is_forced({1, 1}));
  EXPECT_TRUE(p.is_forced({1, 2}));
  EXPECT_FALSE(p.is_forced({2, 2}));
  for (int i = 1; i <= 3; ++i) EXPECT_TRUE(p.is_forced({i, 3}));
}

TEST(Chains, Diamond) {
  const auto c = chains(extract_pattern(kSpherical), kSpherical);
  ASSERT_EQ(c.size(), 1u);
  const std::vector<TrianglePosition> positions{{1, 1}, {1, 2}, {2, 2}, {2, 3}};
  EXPECT_EQ(c[0].positions, positions);
  EXPECT_EQ(c[0].row_counts, (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(c[0].first_row, 1);
  EXPECT_EQ(c[0].value, Exact(2));
  EXPECT_TRUE(c[0].is_perfect_diamond());
}

TEST(Chains, Vertical) {
  const auto c = chains(extract_pattern(kVertical), kVertical);
  ASSERT_EQ(c.size(), 1u);
  const std::vector<TrianglePosition> positions{{1, 1}, {1, 2}, {1, 3}};
  EXPECT_EQ(c[0].positions, positions);
  EXPECT_EQ(c[0].row_counts, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(c[0].dimension_deficit(), 2);
}

TEST(Chains, RegularHasNone) { EXPECT_TRUE(chains(extract_pattern(kRegular), kRegular).empty()); }

TEST(Chains, RejectsGapInARow) {
  const auto t = triangle({{"2"}, {"2", "2"}, {"2", "2", "2"}});
  EqualityPattern p;
  p.n = 3;
  p.equal_pairs = {{{1, 2}, {1, 3}}, {{1, 2}, {3, 3}}};
  try {
    chains(p, t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonContiguousChain);
  }
}

TEST(Chain, DiamondShapeNeedsIntervalsNotJustCounts) {
  Chain skew;
  skew.row_counts = {1, 2, 1};
  skew.intervals = {{1, 1, 1}, {2, 1, 2}, {3, 3, 3}};
  EXPECT_FALSE(skew.is_perfect_diamond());
  skew.intervals[2] = {3, 2, 2};
  EXPECT_TRUE(skew.is_perfect_diamond());
  EXPECT_EQ(skew.diamond_size(), 2);
}

TEST(FiberDimension, Examples) {
  EXPECT_EQ(fiber_dimension(kRegular), 3);
  EXPECT_EQ(fiber_dimension(kSpherical), 3);
  EXPECT_EQ(fiber_dimension(kOneDiagonal), 2);
  EXPECT_EQ(fiber_dimension(kVertical), 1);
}

TEST(Classify, Examples) {
  const auto sphere = classify(kSpherical);
  EXPECT_EQ(sphere.kind, FiberKind::Diamond);
  EXPECT_TRUE(sphere.lagrangian);
  const auto vertical = classify(kVertical);
  EXPECT_EQ(vertical.kind, FiberKind::Elliptic);
  EXPECT_FALSE(vertical.lagrangian);
  EXPECT_EQ(classify(kRegular).kind, FiberKind::Regular);
}

TEST(Classify, OverlappingDiamondsOfSizeThree) {
  const auto f = overlapping_diamonds_fixture();
  const auto a = analyze_pattern(f.triangle);
  ASSERT_EQ(a.chains.size(), 1u);
  EXPECT_EQ(a.chains[0].row_counts, (std::vector<int>{1, 2, 3, 2, 3, 2, 1}));
  EXPECT_EQ(a.classification.kind, FiberKind::SymmetricOverlapping);
  EXPECT_TRUE(a.classification.lagrangian);
  EXPECT_EQ(a.dimension, 21);
  EXPECT_FALSE(a.topology.certified);
}

TEST(Classify, TwoSeparateDiamonds) {
  const auto t = realize_pattern(generic_lambda(5), {diamond_positions(1, 1, 2), diamond_positions(3, 3, 2)});
  const auto a = analyze_pattern(t);
  EXPECT_EQ(a.classification.kind, FiberKind::MultiDiamond);
  EXPECT_EQ(a.topology.su_factors, (std::vector<int>{2, 2}));
  EXPECT_EQ(a.topology.torus_dim, 10 - 3 - 3);
  EXPECT_EQ(a.topology.dimension(), a.dimension);
}

TEST(Classify, ThickParallelogramIsGeneral) {
  const auto t = realize_pattern(generic_lambda(5), {parallelogram_positions(1, 1, 3, 2)});
  const auto a = analyze_pattern(t);
  EXPECT_EQ(a.classification.kind, FiberKind::GeneralDegenerate);
  EXPECT_EQ(a.dimension, 10 - 2 * 1);
  EXPECT_FALSE(a.classification.lagrangian);
}

TEST(Classify, ForcedEqualitiesAloneAreRegular) {
  const auto t = triangle({{"1.5"}, {"2", "1.2"}, {"2", "2", "1"}});
  const auto a = analyze_pattern(t);
  EXPECT_EQ(a.classification.kind, FiberKind::Regular);
  EXPECT_EQ(a.dimension, 2);
  EXPECT_EQ(a.regular_dim, 2);
}

TEST(Topology, Examples) {
  const auto sphere = topology(kSpherical);
  EXPECT_EQ(sphere.su_factors, (std::vector<int>{2}));
  EXPECT_EQ(sphere.torus_dim, 0);
  EXPECT_TRUE(sphere.certified);

  const auto regular4 = topology(triangle({{"2.5"}, {"3", "2"}, {"3.5", "2.5", "1.5"}, {"4", "3", "2", "1"}}));
  EXPECT_EQ(regular4.torus_dim, 6);
  EXPECT_TRUE(regular4.su_factors.empty());
  EXPECT_TRUE(regular4.certified);

  const auto elliptic = topology(kOneDiagonal);
  EXPECT_EQ(elliptic.torus_dim, 2);
  EXPECT_TRUE(elliptic.certified);
}

TEST(GkDims, Examples) {
  EXPECT_EQ(g_k_dims(kRegular).back(), 3);
  EXPECT_EQ(g_k_dims(kSpherical)[1], 4);
  EXPECT_EQ(g_k_dims(overlapping_diamonds_fixture().triangle)[2], 9);
}

class CorpusProperties : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { corpus_ = new std::vector<Fixture>(build_corpus(6, RandomSeed{3})); }
  static void TearDownTestSuite() {
    delete corpus_;
    corpus_ = nullptr;
  }
  static std::vector<Fixture>* corpus_;
};
std::vector<Fixture>* CorpusProperties::corpus_ = nullptr;

TEST_F(CorpusProperties, DimensionNeverExceedsHalfOrbit) {
  for (const auto& f : *corpus_) EXPECT_LE(fiber_dimension(f.triangle), regular_fiber_dim(f.triangle.lambda())) << f.name;
}

TEST_F(CorpusProperties, CertifiedTopologyAddsUp) {
  for (const auto& f : *corpus_) {
    const auto a = analyze_pattern(f.triangle);
    if (a.topology.certified) EXPECT_EQ(a.topology.dimension(), a.dimension) << f.name;
  }
}

TEST_F(CorpusProperties, LagrangianIffNoRepeatedCounts) {
  for (const auto& f : *corpus_) {
    const auto a = analyze_pattern(f.triangle);
    const bool repeats =
        std::any_of(a.chains.begin(), a.chains.end(), [](const Chain& c) { return c.has_repeated_count(); });
    EXPECT_EQ(a.classification.lagrangian, !repeats) << f.name;
  }
}

TEST_F(CorpusProperties, DiamondsCostNothingAndVerticalChainsCostLengthMinusOne) {
  for (const auto& f : *corpus_) {
    for (const auto& c : analyze_pattern(f.triangle).chains) {
      if (c.is_perfect_diamond()) EXPECT_EQ(c.dimension_deficit(), 0) << f.name;
      if (std::all_of(c.row_counts.begin(), c.row_counts.end(), [](int l) { return l == 1; }))
        EXPECT_EQ(c.dimension_deficit(), static_cast<int>(c.row_counts.size()) - 1) << f.name;
    }
  }
}

TEST_F(CorpusProperties, MatchesFamilyFormulas) {
  for (const auto& f : *corpus_) {
    const auto a = analyze_pattern(f.triangle);
    EXPECT_EQ(a.dimension, f.expected.dimension) << f.name;
    EXPECT_EQ(a.classification.kind, f.expected.kind) << f.name;
  }
}

TEST_F(CorpusProperties, GroupLedgerWithCombinatorialHPrime) {
  for (const auto& f : *corpus_) {
    const auto a = analyze_pattern(f.triangle);
    int total = -a.u_lambda;
    for (int g : a.g_dims) total += g;
    for (int h : testing::h_prime_from_rows(f.triangle)) total -= h;
    EXPECT_EQ(total, a.dimension) << f.name;
  }
}

TEST(Perturbation, RemovingEqualitiesRestoresRegularDimension) {
  const auto f = overlapping_diamonds_fixture();
  const auto regular = realize_pattern(f.triangle.lambda(), {});
  EXPECT_EQ(fiber_dimension(regular), 21);
  EXPECT_EQ(classify(regular).kind, FiberKind::Regular);
}

}  // namespace
}  // namespace gcfiber
