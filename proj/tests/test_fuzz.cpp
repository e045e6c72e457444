#include <gtest/gtest.h>

#include "vknot/fuzz.hpp"

using namespace vknot;

TEST(Fuzz, ZeroMovesPasses) {
  auto r = fuzz_invariance(5, 0, 3);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.trace.steps.empty());
}

TEST(Fuzz, SixChordsFiftyMoves) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto r = fuzz_invariance(6, 50, seed);
    EXPECT_TRUE(r.passed()) << seed << " " << (r.failures.empty() ? "" : r.failures[0].check);
    std::size_t diagram_moves = 0;
    for (auto k : kAllMoveKinds) diagram_moves += r.counts[std::string(move_kind_name(k))];
    EXPECT_EQ(diagram_moves, 50u);
  }
}

TEST(Fuzz, CoversEveryMoveKind) {
  std::map<std::string, std::size_t> total;
  for (std::uint64_t seed = 0; seed < 40; ++seed)
    for (const auto& [k, v] : fuzz_invariance(5, 50, seed).counts) total[k] += v;
  for (auto k : kAllMoveKinds) EXPECT_GT(total[std::string(move_kind_name(k))], 0u) << move_kind_name(k);
  for (auto k : kAllOmegaKinds) EXPECT_GT(total[std::string(omega_kind_name(k))], 0u) << omega_kind_name(k);
}

TEST(Fuzz, TraceReplaysExactly) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    FuzzOptions opt;
    auto r = fuzz_invariance(4, 30, seed, opt);
    auto j = trace_to_json(r.trace);
    auto again = trace_from_json(nlohmann::json::parse(j.dump()));
    auto a = replay(r.trace);
    auto b = replay(again);
    EXPECT_EQ(a.diagram, b.diagram);
    EXPECT_EQ(a.graph, b.graph);
    EXPECT_EQ(writhe_polynomial(a.diagram), writhe_polynomial(parse_gauss_code(r.trace.start)));
    EXPECT_EQ(graph_writhe_polynomial(a.graph), writhe_polynomial(a.diagram));
  }
}

TEST(Fuzz, Deterministic) {
  auto a = fuzz_invariance(6, 40, 11);
  auto b = fuzz_invariance(6, 40, 11);
  EXPECT_EQ(trace_to_json(a.trace), trace_to_json(b.trace));
}

TEST(Fuzz, InjectedSenseBugIsCaught) {
  FuzzOptions opt;
  opt.inject_sense_bug = true;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto r = fuzz_invariance(6, 20, seed, opt);
    ASSERT_FALSE(r.passed()) << seed;
    EXPECT_FALSE(r.trace.steps.empty());
    EXPECT_FALSE(r.failures.empty());
  }
}
