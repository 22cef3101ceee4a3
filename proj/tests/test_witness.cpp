#include <gtest/gtest.h>

#include <random>

#include "modcert/error.hpp"
#include "modcert/witness.hpp"
#include "support.hpp"

namespace modcert {
namespace {

using gf2::BitVector;

Graph star(std::size_t leaves) { return testing::complete_bipartite(1, leaves); }

TEST(QModular, Examples) {
  const auto c5 = is_q_modular(testing::cycle(5), VertexSet::all(5), 1000);
  EXPECT_TRUE(c5.modular);
  EXPECT_EQ(c5.residue, 2);

  const auto s2 = is_q_modular(star(3), VertexSet::all(4), 2);
  EXPECT_TRUE(s2.modular);
  EXPECT_EQ(s2.residue, 1);

  const auto s4 = is_q_modular(star(3), VertexSet::all(4), 4);
  EXPECT_FALSE(s4.modular);
  ASSERT_TRUE(s4.conflict.has_value());
  EXPECT_EQ(s4.conflict->first, 0u);

  EXPECT_TRUE(is_q_modular(star(3), VertexSet(4, {}), 4).modular);
  EXPECT_THROW(is_q_modular(star(3), VertexSet::all(4), 0), InvalidInput);
}

TEST(ModularWitnessTest, Validation) {
  EXPECT_THROW(ModularWitness::make(star(3), VertexSet::all(4), 3), InvalidInput);
  try {
    ModularWitness::make(star(3), VertexSet::all(4), 4);
    FAIL() << "expected InvalidInput";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("'0'"), std::string::npos);
  }
  const auto w = ModularWitness::make(star(3), VertexSet::all(4), 2);
  EXPECT_EQ(w.degree(0), 3);
  EXPECT_EQ(w.residue(), 1);
}

TEST(TerminalCheck, Examples) {
  const Graph c5 = testing::cycle(5);
  const auto r1 = terminal_check(ModularWitness::make(c5, VertexSet::all(5), 8));
  ASSERT_TRUE(std::holds_alternative<TerminalRegular>(r1));
  EXPECT_EQ(std::get<TerminalRegular>(r1).degree, 2);

  const auto r2 = terminal_check(ModularWitness::make(c5, VertexSet(5, {0, 2}), 4));
  ASSERT_TRUE(std::holds_alternative<TerminalRegular>(r2));
  EXPECT_EQ(std::get<TerminalRegular>(r2).degree, 0);

  const Graph indep = Graph::from_edges(3, std::vector<Edge>{});
  const auto r3 = terminal_check(ModularWitness::make(indep, VertexSet::all(3), 4));
  ASSERT_TRUE(std::holds_alternative<TerminalRegular>(r3));
  EXPECT_EQ(std::get<TerminalRegular>(r3).degree, 0);

  EXPECT_TRUE(std::holds_alternative<TooLarge>(terminal_check(ModularWitness::make(star(3), VertexSet::all(4), 2))));
}

TEST(TerminalCheck, NeverRegularForIrregularSets) {
  std::mt19937_64 rng(41);
  std::bernoulli_distribution coin(0.5);
  std::size_t regular_seen = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Graph g = testing::random_graph(12, 0.5, rng);
    for (std::int64_t q : {2, 4, 8}) {
      std::vector<Vertex> members;
      for (Vertex v = 0; v < g.order() && members.size() < static_cast<std::size_t>(q); ++v)
        if (coin(rng)) members.push_back(v);
      const VertexSet a(g.order(), members);
      if (!is_q_modular(g, a, q).modular) continue;
      const auto r = terminal_check(ModularWitness::make(g, a, q));
      ASSERT_TRUE(std::holds_alternative<TerminalRegular>(r));
      EXPECT_TRUE(is_regular(g, a).regular);
      ++regular_seen;
    }
  }
  EXPECT_GT(regular_seen, 100u);
}

TEST(TopBitLabel, DefectFreeAndConstantLabels) {
  const Graph empty = Graph::from_edges(4, std::vector<Edge>{});
  const auto w = ModularWitness::make(empty, VertexSet::all(4), 2);
  const auto zero = top_bit_label(w, VertexSet::all(4));
  EXPECT_EQ(zero.lift, 0);
  EXPECT_FALSE(zero.labels.any());

  const auto ones = top_bit_label(w, VertexSet::all(4), 2);
  EXPECT_EQ(ones.labels.count(), 4u);
  EXPECT_TRUE(quotient_class(ones.labels).is_zero());

  EXPECT_THROW(top_bit_label(w, VertexSet::all(4), 1), InvalidInput);
  EXPECT_THROW(top_bit_label(w, VertexSet::all(4), 4), InvalidInput);
}

TEST(TopBitLabel, LiftExample) {
  const Graph g = load_graph_file(testing::fixture("lift_mod2_to_mod4.txt"), GraphFormat::EdgeList);
  const VertexSet a = testing::named(g, {"1", "2", "3", "4", "x1", "x2", "y1", "y2"});
  const VertexSet u = testing::named(g, {"1", "2", "3", "4"});
  const auto w = ModularWitness::make(g, a, 2);
  EXPECT_EQ(w.residue(), 1);
  const auto label = top_bit_label(w, u);
  EXPECT_EQ(label.labels, BitVector::of({1, 0, 1, 0}));
}

TEST(QuotientCoords, Examples) {
  EXPECT_FALSE(quotient_coords(BitVector::of({1, 1, 1, 1})).any());
  EXPECT_FALSE(quotient_coords(BitVector::of({0, 0, 0})).any());
  EXPECT_EQ(quotient_coords(BitVector::of({1, 0, 0, 0})), BitVector::of({1, 1, 1}));
  EXPECT_EQ(quotient_coords(BitVector::of({1, 0, 1, 0, 0}), 4), BitVector::of({1, 0, 1, 0}));

  const VertexSet core(9, {2, 4, 6});
  EXPECT_EQ(quotient_coords(core, BitVector::of({0, 1, 0}), 6), BitVector::of({0, 1}));
  EXPECT_THROW(quotient_coords(core, BitVector::of({0, 1, 0}), 3), InvalidInput);
  EXPECT_THROW(quotient_coords(BitVector::of({1}), 1), InvalidInput);
}

TEST(QuotientCoords, ConstantShiftInvariance) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::uint64_t> word;
  for (int trial = 0; trial < 200; ++trial) {
    const BitVector x = testing::bits_of(word(rng), 20);
    BitVector shifted = x;
    for (std::size_t i = 0; i < 20; ++i) shifted.flip(i);
    EXPECT_EQ(quotient_coords(x), quotient_coords(shifted));
    EXPECT_EQ(quotient_coords(x, 7), quotient_coords(shifted, 7));
  }
}

TEST(AffineLift, Examples) {
  const Graph c4 = testing::cycle(4);
  const auto w = ModularWitness::make(c4, VertexSet::all(4), 2);
  EXPECT_TRUE(affine_lift_check(w, VertexSet::all(4)));

  const Graph s = star(3);
  const auto ws = ModularWitness::make(s, VertexSet::all(4), 2);
  EXPECT_FALSE(affine_lift_check(ws, VertexSet::all(4)));

  const Graph g = load_graph_file(testing::fixture("lift_mod2_to_mod4.txt"), GraphFormat::EdgeList);
  const auto wg = ModularWitness::make(g, testing::named(g, {"1", "2", "3", "4", "x1", "x2", "y1", "y2"}), 2);
  EXPECT_TRUE(affine_lift_check(wg, testing::named(g, {"1", "2", "3", "4"})));
  EXPECT_THROW(affine_lift_check(wg, testing::named(g, {"1", "z"})), InvalidInput);
}

// Greedily shrinks a random set until it is q-modular.
VertexSet modular_subset(const Graph& g, std::int64_t q, std::mt19937_64& rng) {
  std::vector<Vertex> members;
  std::bernoulli_distribution coin(0.7);
  for (Vertex v = 0; v < g.order(); ++v)
    if (coin(rng)) members.push_back(v);
  while (true) {
    const VertexSet s(g.order(), members);
    const auto check = is_q_modular(g, s, q);
    if (check.modular) return s;
    std::erase(members, check.conflict->second);
  }
}

TEST(AffineLift, AgreesWithDirectCheck) {
  std::mt19937_64 rng(55);
  std::bernoulli_distribution coin(0.6);
  std::size_t positive = 0, negative = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const Graph g = testing::random_graph(18, 0.4, rng);
    const std::int64_t q = std::int64_t{1} << (trial % 3 + 1);
    const VertexSet a = modular_subset(g, q, rng);
    if (a.empty()) continue;
    const auto w = ModularWitness::make(g, a, q);
    std::vector<Vertex> sub;
    for (Vertex v : a)
      if (coin(rng)) sub.push_back(v);
    const VertexSet s(g.order(), sub);
    const bool expected = is_q_modular(g, s, 2 * q).modular;
    EXPECT_EQ(affine_lift_check(w, s), expected);
    (expected ? positive : negative)++;
  }
  EXPECT_GT(positive, 20u);
  EXPECT_GT(negative, 20u);
}

TEST(TopBitLabel, LiftInvariance) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_graph(16, 0.5, rng);
    const std::int64_t q = std::int64_t{1} << (trial % 3 + 1);
    const VertexSet a = modular_subset(g, q, rng);
    if (a.size() < 2) continue;
    const auto w = ModularWitness::make(g, a, q);
    const auto low = top_bit_label(w, a, w.residue());
    const auto high = top_bit_label(w, a, w.residue() + q);
    BitVector diff = low.labels ^ high.labels;
    EXPECT_EQ(diff.count(), a.size());
    EXPECT_EQ(quotient_class(low.labels), quotient_class(high.labels));
  }
}

}  // namespace
}  // namespace modcert
