#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "vknot/moves.hpp"

using namespace vknot;

namespace {

const char* kTrefoil = "O1+ O2+ U1+ U2+";

/// Diagram after a random walk of mixed moves, so that removal and shell
/// sites are present.
GaussDiagram scrambled(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto d = random_diagram(2 + seed % 4, seed);
  for (int i = 0; i < 6; ++i) {
    auto k = kAllMoveKinds[rng() % kAllMoveKinds.size()];
    if (adds_chords(k) && d.size() > 8) continue;
    if (auto s = random_move_site(d, k, rng)) d = apply_move(d, *s);
  }
  return d;
}

}  // namespace

TEST(Moves, R1Sites) {
  auto k = parse_gauss_code("O1+ U1+");
  auto rm = enumerate_moves(k, MoveKind::R1Remove);
  ASSERT_EQ(rm.size(), 1u);
  EXPECT_TRUE(apply_move(k, rm[0]).empty());
  EXPECT_EQ(enumerate_moves(GaussDiagram{}, MoveKind::R1Add).size(), 4u);
  EXPECT_EQ(enumerate_moves(parse_gauss_code(kTrefoil), MoveKind::R1Add).size(), 16u);
  EXPECT_TRUE(enumerate_moves(parse_gauss_code(kTrefoil), MoveKind::R1Remove).empty());
}

TEST(Moves, R1AddThenRemoveIsIdentity) {
  auto t = parse_gauss_code(kTrefoil);
  for (const auto& site : enumerate_moves(t, MoveKind::R1Add)) {
    auto k = apply_move(t, site);
    EXPECT_EQ(format_poly(writhe_polynomial(k)), "t + t^-1 - 2");
    auto gap = std::get<R1Add>(site).gap;
    EXPECT_EQ(apply_move(k, R1Remove{gap}), t);
  }
}

TEST(Moves, R2Sites) {
  EXPECT_TRUE(enumerate_moves(parse_gauss_code(kTrefoil), MoveKind::R2Remove).empty());
  auto par = parse_gauss_code("O1+ O2- U1+ U2-");
  auto sites = enumerate_moves(par, MoveKind::R2Remove);
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_TRUE(apply_move(par, sites[0]).empty());
  EXPECT_EQ(enumerate_moves(GaussDiagram{}, MoveKind::R2Add).size(), 8u);
  // differing roles inside a segment is not a bigon
  EXPECT_TRUE(enumerate_moves(parse_gauss_code("O1+ U2- O2- U1+"), MoveKind::R2Remove).empty());
  EXPECT_EQ(enumerate_moves(parse_gauss_code("O1+ U2- U1+ O2-"), MoveKind::R2Remove).size(), 1u);
}

TEST(Moves, R2AddThenRemoveIsIdentity) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto d = random_diagram(seed % 4, seed);
    for (const auto& site : enumerate_moves(d, MoveKind::R2Add)) {
      auto e = apply_move(d, site);
      ASSERT_EQ(writhe_polynomial(e), writhe_polynomial(d));
      ChordId u = d.next_id();
      bool undone = false;
      for (const auto& r : enumerate_moves(e, MoveKind::R2Remove)) {
        auto f = apply_move(e, r);
        if (!f.contains(u) && !f.contains(ChordId{u.value + 1})) {
          EXPECT_EQ(f, d);
          undone = true;
        }
      }
      EXPECT_TRUE(undone);
    }
  }
}

TEST(Moves, R3OnTheLocalPatterns) {
  std::size_t n = 0;
  for (const auto& p : r3::patterns()) {
    auto d = r3::pattern_diagram(p);
    auto sites = enumerate_moves(d, MoveKind::R3);
    // the complementary arcs of a three-chord diagram can form a second triangle
    ASSERT_GE(sites.size(), 1u);
    ASSERT_LE(sites.size(), 2u);
    bool reversed = false;
    for (const auto& site : sites) {
      auto e = apply_move(d, site);
      reversed = reversed || e == r3::pattern_diagram(p.reversed());
      EXPECT_EQ(oracle::writhe_poly(e), oracle::writhe_poly(d));
      EXPECT_EQ(apply_move(e, site), d);
    }
    EXPECT_TRUE(reversed);
    ++n;
  }
  // 8 orientations x 6 height orders x 2 sides, closed under relabeling
  EXPECT_GT(n, 0u);
  EXPECT_EQ(n % 2, 0u);
}

TEST(Moves, R3InsideLargerDiagrams) {
  std::size_t seen = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    auto d = random_diagram(3 + seed % 5, seed);
    for (const auto& site : enumerate_moves(d, MoveKind::R3)) {
      auto e = apply_move(d, site);
      EXPECT_EQ(oracle::writhe_poly(e), oracle::writhe_poly(d));
      ++seen;
    }
  }
  EXPECT_GT(seen, 20u);
}

TEST(Moves, S1KeepsTheLabeledGraph) {
  std::size_t seen = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto d = scrambled(seed);
    for (const auto& site : enumerate_moves(d, MoveKind::S1)) {
      auto e = apply_move(d, site);
      EXPECT_EQ(build_intersection_graph(e), build_intersection_graph(d));
      EXPECT_EQ(oracle::writhe_poly(e), oracle::writhe_poly(d));
      bool back = false;
      for (const auto& r : enumerate_moves(e, MoveKind::S1))
        back = back || canonical_form(apply_move(e, r)) == canonical_form(d);
      EXPECT_TRUE(back);
      ++seen;
    }
  }
  EXPECT_GT(seen, 100u);
}

TEST(Moves, S2ExampleOnTrefoil) {
  auto t = parse_gauss_code(kTrefoil);
  auto sites = enumerate_moves(t, MoveKind::S2Add);
  EXPECT_EQ(sites.size(), 8u);
  for (const auto& site : sites) {
    auto e = apply_move(t, site);
    EXPECT_EQ(e.size(), 4u);
    EXPECT_FALSE(check_s2_constraints(t, e, site));
    auto oi = oracle::indices(e);
    auto ot = oracle::indices(t);
    EXPECT_EQ(oi[1], ot[1]);
    EXPECT_EQ(oi[2], ot[2]);
    EXPECT_EQ(oi[3], oi[4]);
    EXPECT_EQ(e.sign(ChordId{3}), -e.sign(ChordId{4}));
    EXPECT_EQ(oracle::writhe_poly(e), oracle::writhe_poly(t));
    bool back = false;
    for (const auto& r : enumerate_moves(e, MoveKind::S2Remove)) back = back || apply_move(e, r) == t;
    EXPECT_TRUE(back);
  }
}

TEST(Moves, S2OnRandomDiagrams) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto d = random_diagram(1 + seed % 6, seed);
    for (const auto& site : enumerate_moves(d, MoveKind::S2Add)) {
      auto e = apply_move(d, site);
      auto who = s2_participants(d, site);
      EXPECT_EQ(e.sign(who.c3), -e.sign(who.c4));
      EXPECT_EQ(chord_index(e, who.c3), chord_index(e, who.c4));
      EXPECT_EQ(chord_index(e, who.c1), chord_index(d, who.c1));
      EXPECT_EQ(chord_index(e, who.c2), chord_index(d, who.c2));
      EXPECT_EQ(oracle::writhe_poly(e), oracle::writhe_poly(d));
      auto removals = enumerate_moves(e, MoveKind::S2Remove);
      bool back = false;
      for (const auto& r : removals) back = back || apply_move(e, r) == d;
      EXPECT_TRUE(back);
    }
  }
}

TEST(Moves, InvalidSitesThrow) {
  auto t = parse_gauss_code(kTrefoil);
  EXPECT_THROW(apply_move(t, R1Remove{0}), InvalidSite);
  EXPECT_THROW(apply_move(t, R1Add{9, Sign::Positive, Role::Over}), InvalidSite);
  EXPECT_THROW(apply_move(t, R2Remove{0, 2}), InvalidSite);
  EXPECT_THROW(apply_move(t, R3Move{{0, 1, 2}}), InvalidSite);
  EXPECT_THROW(apply_move(parse_gauss_code("O1+ U1+ O2- U2-"), S1Move{0}), InvalidSite);
  EXPECT_THROW(apply_move(t, S2Remove{0}), InvalidSite);
  EXPECT_THROW(apply_move(t, S2Add{7, Sign::Positive}), InvalidSite);
}

TEST(Moves, EveryMovePreservesWrithePolynomial) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto d = scrambled(seed);
    for (auto k : kAllMoveKinds) {
      if (k == MoveKind::R2Add && d.size() > 5) continue;
      for (const auto& site : enumerate_moves(d, k))
        ASSERT_EQ(oracle::writhe_poly(apply_move(d, site)), oracle::writhe_poly(d)) << move_kind_name(k);
    }
  }
}

TEST(Moves, CanonicalForm) {
  auto a = parse_gauss_code("O1+ O2+ U1+ U2+");
  auto b = parse_gauss_code("O9+ U5+ U9+ O5+");
  EXPECT_EQ(canonical_form(a), canonical_form(b));
  EXPECT_NE(canonical_form(a), canonical_form(parse_gauss_code("O1+ U1+ O2+ U2+")));
  EXPECT_NE(canonical_form(a), canonical_form(parse_gauss_code("O1- O2+ U1- U2+")));
  EXPECT_EQ(canonical_form(GaussDiagram{}), "");
}

TEST(Moves, SiteJsonRoundTrip) {
  std::vector<DiagramMoveSite> sites{R1Add{3, Sign::Negative, Role::Under}, R1Remove{2},
                                     R2Add{1, 4, Role::Over, false, Sign::Negative}, R2Remove{0, 5},
                                     R3Move{{1, 4, 8}}, S1Move{6}, S2Add{2, Sign::Positive}, S2Remove{3}};
  for (const auto& s : sites) EXPECT_EQ(move_site_from_json(nlohmann::json::parse(move_site_to_json(s).dump())), s);
  EXPECT_THROW(move_site_from_json(nlohmann::json::parse(R"({"kind":"R4"})")), InvalidSite);
}
