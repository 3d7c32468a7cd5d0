// Copyright 2026 The dbwalk Authors
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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "dbwalk/errors.hpp"
#include "dbwalk/generators.hpp"
#include "dbwalk/watchman.hpp"
#include "oracles.hpp"

namespace dbwalk {
namespace {

TEST(WatchmanFormula, Values) {
  EXPECT_EQ(watchman_number_formula(2, 3), 4u);
  EXPECT_EQ(watchman_number_formula(3, 2), 3u);
  EXPECT_EQ(watchman_number_formula(2, 2), 2u);
  EXPECT_THROW(watchman_number_formula(2, 1), DomainError);
}

TEST(KTourWalk, WorkedExamples) {
  const Digraph g23 = build_de_bruijn_graph(2, 3);
  const Walk w23 = theorem_walk(2, 3, parse_sequence("1001", 2));
  EXPECT_EQ(walk_labels(g23, w23), "100,001,011,110");
  EXPECT_TRUE(w23.is_closed());
  EXPECT_TRUE(is_closed_dominating_walk(g23, w23));

  const Digraph g22 = build_de_bruijn_graph(2, 2);
  const Walk w22 = theorem_walk(2, 2, parse_sequence("01", 2));
  EXPECT_EQ(walk_labels(g22, w22), "01,10");
  EXPECT_TRUE(is_closed_dominating_walk(g22, w22));

  const Digraph g32 = build_de_bruijn_graph(3, 2);
  const Walk w32 = theorem_walk(3, 2, parse_sequence("012", 3));
  EXPECT_EQ(w32.length(), 3u);
  EXPECT_TRUE(is_closed_dominating_walk(g32, w32));
}

TEST(KTourWalk, RejectsBadSeeds) {
  EXPECT_THROW(theorem_walk(2, 3, parse_sequence("1101", 2)), DomainError);
  EXPECT_THROW(theorem_walk(2, 3, parse_sequence("0120", 3)), DomainError);
  EXPECT_THROW(theorem_walk(2, 1), DomainError);
}

TEST(KTourWalk, EveryGeneratorSeedGivesMinimumLengthDominatingWalk) {
  for (int a = 2; a <= 8; ++a) {
    for (int k = 2; k <= 12; ++k) {
      if (!bounded_pow(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(k), 4096)) break;
      const Digraph g = build_de_bruijn_graph(a, k);
      const std::vector<CyclicSequence> seeds{gen_fkm(a, k - 1), gen_greedy(a, k - 1),
                                              gen_eulerian(a, k - 1)};
      for (const auto& seed : seeds) {
        const Walk w = theorem_walk(a, k, seed);
        EXPECT_TRUE(is_closed_dominating_walk(g, w)) << a << "," << k << " " << seed.str();
        EXPECT_EQ(w.length(), watchman_number_formula(a, k));
      }
    }
  }
}

TEST(InducedWalk, WorkedExamples) {
  const auto d = parse_sequence("1001", 2);
  const Walk w = induced_walk(d, 3);
  const Digraph g = generated_subdigraph(d, 3);
  EXPECT_EQ(walk_labels(g, w), "100,001,011,110");
  EXPECT_EQ(w.length(), 4u);

  const auto fig4 = parse_sequence("01210123", 4);
  const Digraph g4 = generated_subdigraph(fig4, 3);
  const Walk w4 = induced_walk(g4, fig4, 3);
  EXPECT_EQ(w4.length(), 8u);
  EXPECT_EQ(w4.vertices()[0], w4.vertices()[4]);
  EXPECT_EQ(g4.label(w4.vertices()[0]).str(), "012");

  const auto zeros = parse_sequence("000", 2);
  const Digraph gz = generated_subdigraph(zeros, 3);
  const Walk wz = induced_walk(gz, zeros, 3);
  EXPECT_EQ(walk_labels(gz, wz), "000,000,000");
  EXPECT_EQ(wz.length(), 3u);
  EXPECT_TRUE(is_closed_dominating_walk(gz, wz));

  EXPECT_THROW(induced_walk(parse_sequence("01", 2), 3), DomainError);
}

TEST(SolveMinWalk, MatchesClosedFormAtDeskScale) {
  for (auto [a, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
    const Digraph g = build_de_bruijn_graph(a, k);
    const auto result = solve_min_walk(g);
    ASSERT_TRUE(result);
    EXPECT_EQ(result->optimum_length, watchman_number_formula(a, k)) << a << "," << k;
    EXPECT_TRUE(is_closed_dominating_walk(g, result->witness));
    EXPECT_EQ(result->witness.length(), result->optimum_length);
    EXPECT_EQ(canonical_rotation(result->witness), result->witness);
  }
}

TEST(SolveMinWalk, Seq01210123Optimum) {
  const Digraph g = generated_subdigraph(parse_sequence("01210123", 4), 3);
  const auto result = solve_min_walk(g);
  ASSERT_TRUE(result);
  EXPECT_EQ(result->optimum_length, 8u);
}

TEST(SolveMinWalk, OrderOneGraphHasStationaryWatchman) {
  // N[0] = {0, 1} covers G(2,1), so nobody needs to move.
  const Digraph g = build_de_bruijn_graph(2, 1);
  const auto result = solve_min_walk(g);
  ASSERT_TRUE(result);
  EXPECT_EQ(result->optimum_length, 0u);
  EXPECT_TRUE(result->witness.is_stationary());
  EXPECT_TRUE(is_closed_dominating_walk(g, result->witness));
  const Digraph g31 = build_de_bruijn_graph(3, 1);
  EXPECT_EQ(solve_min_walk(g31)->optimum_length, 0u);
}

TEST(SolveMinWalk, CustomGraphs) {
  const Alphabet four(4);
  auto v = [&](const char* s) { return KString::parse(s, four); };
  const Digraph star(four, 1, {v("0"), v("1"), v("2")}, {{0, 1}, {0, 2}}, Provenance{});
  EXPECT_EQ(solve_min_walk(star)->optimum_length, 0u);

  const Digraph stranded(four, 1, {v("0"), v("1"), v("2")}, {{0, 1}, {1, 0}}, Provenance{});
  EXPECT_FALSE(solve_min_walk(stranded));

  const Digraph ring(four, 1, {v("0"), v("1"), v("2"), v("3")}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
                     Provenance{});
  const auto r = solve_min_walk(ring);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->optimum_length, 4u);
  EXPECT_EQ(r->witness, Walk::closed({0, 1, 2, 3}));
}

TEST(SolveMinWalk, EnforcesVertexCap) {
  const Digraph g = build_de_bruijn_graph(2, 5);
  EXPECT_THROW(solve_min_walk(g), ResourceError);
  EXPECT_THROW(enumerate_min_walks(g, 16), ResourceError);
  Limits wide;
  wide.max_vertices = 32;
  const auto result = solve_min_walk(g, wide);
  ASSERT_TRUE(result);
  EXPECT_EQ(result->optimum_length, 16u);
}

TEST(EnumerateMinWalks, Seq01210123HasTwoWalksUpToRotation) {
  const auto d = parse_sequence("01210123", 4);
  const Digraph g = generated_subdigraph(d, 3);
  const auto walks = enumerate_min_walks(g, 8);
  ASSERT_EQ(walks.size(), 2u);
  const Walk induced = canonical_rotation(induced_walk(g, d, 3));
  EXPECT_NE(std::find(walks.begin(), walks.end(), induced), walks.end());

  const auto naive = testing::naive_min_walk(g, 8);
  ASSERT_TRUE(naive);
  EXPECT_EQ(naive->length, 8u);
  EXPECT_EQ(naive->rotation_classes, 2u);
  // Without rotation deduplication every rotation of both walks is counted.
  EXPECT_EQ(naive->sequences, 16u);
}

TEST(EnumerateMinWalks, DeBruijnGraphContainsExampleWalk) {
  const Digraph g = build_de_bruijn_graph(2, 3);
  const auto walks = enumerate_min_walks(g, 4);
  const Walk example = canonical_rotation(theorem_walk(2, 3, parse_sequence("1001", 2)));
  EXPECT_NE(std::find(walks.begin(), walks.end(), example), walks.end());
  EXPECT_TRUE(enumerate_min_walks(g, 3).empty());
  EXPECT_TRUE(enumerate_min_walks(g, 0).empty());
}

TEST(EnumerateMinWalks, WalksAreDistinctRotationClassesOfExactLength) {
  for (auto [a, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
    const Digraph g = build_de_bruijn_graph(a, k);
    const std::size_t optimum = solve_min_walk(g)->optimum_length;
    const auto walks = enumerate_min_walks(g, optimum);
    ASSERT_FALSE(walks.empty());
    std::set<Walk> classes;
    for (const Walk& w : walks) {
      EXPECT_EQ(w.length(), optimum);
      EXPECT_TRUE(is_closed_dominating_walk(g, w));
      EXPECT_EQ(canonical_rotation(w), w);
      EXPECT_TRUE(classes.insert(w).second);
    }
    EXPECT_EQ(walks.front(), solve_min_walk(g)->witness);
    EXPECT_EQ(testing::naive_min_walk(g, optimum)->rotation_classes, walks.size());
  }
}

TEST(SolveMinWalk, AgreesWithNaiveSearchOnSmallGeneratedGraphs) {
  std::mt19937 rng(1234);
  int checked = 0;
  while (checked < 150) {
    const int a = std::uniform_int_distribution<int>(2, 3)(rng);
    const int k = std::uniform_int_distribution<int>(1, 3)(rng);
    const int n = std::uniform_int_distribution<int>(k, 7)(rng);
    std::string text;
    for (int i = 0; i < n; ++i) text += testing::kSymbols[std::uniform_int_distribution<int>(0, a - 1)(rng)];
    const Digraph g = generated_subdigraph(parse_sequence(text, a), k);
    if (g.vertex_count() > 6) continue;
    ++checked;
    const auto result = solve_min_walk(g);
    ASSERT_TRUE(result) << text;
    EXPECT_TRUE(is_closed_dominating_walk(g, result->witness));
    const auto naive = testing::naive_min_walk(g, result->optimum_length);
    ASSERT_TRUE(naive) << text;
    EXPECT_EQ(naive->length, result->optimum_length) << text << " k=" << k;
    EXPECT_EQ(naive->rotation_classes,
              enumerate_min_walks(g, result->optimum_length).size()) << text;
  }
}

}  // namespace
}  // namespace dbwalk
