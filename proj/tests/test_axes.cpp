#include <gtest/gtest.h>

#include "eucdom/eucdom.hpp"
#include "support/oracles.hpp"
#include "support/reference_data.hpp"

using namespace eucdom;
using namespace eucdom::testing;

namespace {

std::vector<std::vector<int>> as_vectors(const std::vector<Axis>& axes) {
  std::vector<std::vector<int>> out;
  for (const auto& ax : axes) out.emplace_back(ax.ids().begin(), ax.ids().end());
  return out;
}

Profile mixed_random_profile(Rng& rng, int max_m, int max_n) {
  const int m = uniform(rng, 1, max_m), n = uniform(rng, 1, max_n);
  return uniform(rng, 0, 1) ? random_euclidean_profile(rng, m, n) : random_profile(rng, m, n);
}

}  // namespace

TEST(SinglePeaked, SmallExampleOnIdentity) {
  const Profile p = parse_profile(kSmallNonEuclidean);
  EXPECT_TRUE(is_single_peaked_on(p, Axis::identity(6)));
  EXPECT_FALSE(is_single_peaked_on(p, Axis({1, 2, 3, 4, 6, 5})));
  EXPECT_THROW(is_single_peaked_on(p, Axis::identity(5)), DimensionError);
}

TEST(SinglePeaked, OneVoterPeakInside) {
  EXPECT_TRUE(is_single_peaked_on(Profile::from_rows({{2, 1, 3}}), Axis::identity(3)));
  EXPECT_FALSE(is_single_peaked_on(Profile::from_rows({{1, 3, 2}}), Axis::identity(3)));
}

TEST(SinglePeaked, CyclicTripleFailsEveryAxis) {
  const Profile p = Profile::from_rows({{2, 3, 1}, {1, 3, 2}, {1, 2, 3}});
  for (const auto& ax : {Axis({1, 2, 3}), Axis({1, 3, 2}), Axis({2, 1, 3})}) EXPECT_FALSE(is_single_peaked_on(p, ax));
  EXPECT_TRUE(enumerate_axes(p).axes.empty());
}

TEST(SinglePeakedProperty, AgreesWithDefinitionOnRandomAxes) {
  Rng rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const Profile p = mixed_random_profile(rng, 7, 4);
    const auto axis = random_permutation(rng, p.num_alternatives());
    EXPECT_EQ(is_single_peaked_on(p, Axis(axis)), brute_single_peaked(p, axis));
  }
}

TEST(EnumerateAxes, SmallExampleMatchesBruteForce) {
  const Profile p = parse_profile(kSmallNonEuclidean);
  const auto found = enumerate_axes(p);
  EXPECT_FALSE(found.truncated);
  EXPECT_EQ(as_vectors(found.axes), brute_canonical_axes(p));
  EXPECT_EQ(found.axes.front(), Axis::identity(6));
}

TEST(EnumerateAxesProperty, MatchesBruteForce) {
  Rng rng(22);
  for (int trial = 0; trial < 400; ++trial) {
    const Profile p = mixed_random_profile(rng, 7, 4);
    const auto found = enumerate_axes(p);
    EXPECT_FALSE(found.truncated);
    EXPECT_EQ(as_vectors(found.axes), brute_canonical_axes(p)) << serialize_profile(p);
  }
}

TEST(EnumerateAxes, CapTruncatesInOrder) {
  // one voter on 6 alternatives has 2^5 axes, 16 up to mirroring
  const Profile p = Profile::from_rows({{3, 4, 2, 5, 1, 6}});
  const auto all = enumerate_axes(p);
  EXPECT_EQ(all.axes.size(), 16u);
  EXPECT_FALSE(all.truncated);
  const auto capped = enumerate_axes(p, 5);
  EXPECT_TRUE(capped.truncated);
  ASSERT_EQ(capped.axes.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(capped.axes[i], all.axes[i]);
  EXPECT_FALSE(enumerate_axes(p, 16).truncated);
  EXPECT_THROW(enumerate_axes(p, 0), std::invalid_argument);
}

TEST(EnumerateAxes, SingleAlternative) {
  const auto found = enumerate_axes(Profile::from_rows({{1}, {1}}));
  ASSERT_EQ(found.axes.size(), 1u);
  EXPECT_EQ(found.axes.front(), Axis::identity(1));
}

TEST(SPObstruction, TripleOnCyclicProfile) {
  const Profile p = Profile::from_rows({{2, 3, 1}, {1, 3, 2}, {1, 2, 3}});
  const auto w = find_sp_obstruction(p);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, SPWitnessKind::Triple);
  EXPECT_EQ(w->voters, (std::vector<VoterId>{1, 2, 3}));
  EXPECT_EQ(w->alternatives, (std::vector<AlternativeId>{1, 2, 3}));
  EXPECT_TRUE(witness_holds(p, *w));
}

TEST(SPObstruction, IntervalPatternWithTwoVoters) {
  const Profile p = Profile::from_rows({{1, 4, 2, 3}, {3, 4, 2, 1}});
  const auto w = find_sp_obstruction(p);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, SPWitnessKind::Interval4);
  EXPECT_TRUE(witness_holds(p, *w));
}

TEST(SPObstruction, NoneOnSinglePeaked) {
  EXPECT_FALSE(find_sp_obstruction(parse_profile(kSmallNonEuclidean)));
}

TEST(SPObstruction, WitnessHoldsRejectsMalformed) {
  const Profile p = Profile::from_rows({{2, 3, 1}, {1, 3, 2}, {1, 2, 3}});
  EXPECT_FALSE(witness_holds(p, SPWitness{SPWitnessKind::Triple, {1, 2}, {1, 2, 3}}));
  EXPECT_FALSE(witness_holds(p, SPWitness{SPWitnessKind::Triple, {1, 2, 3}, {1, 1, 3}}));
  EXPECT_FALSE(witness_holds(p, SPWitness{SPWitnessKind::Triple, {2, 1, 3}, {1, 2, 3}}));
}

TEST(SPObstructionProperty, PresentExactlyWhenNotSinglePeaked) {
  Rng rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const Profile p = mixed_random_profile(rng, 6, 4);
    const bool sp = !brute_canonical_axes(p).empty();
    const auto w = find_sp_obstruction(p);
    EXPECT_EQ(!w.has_value(), sp) << serialize_profile(p);
    if (w) EXPECT_TRUE(witness_holds(p, *w));
  }
}
