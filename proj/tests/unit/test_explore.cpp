#include <doctest.h>

#include "clusterseed/errors.hpp"
#include "clusterseed/explore.hpp"
#include "clusterseed/presets.hpp"
#include "oracles.hpp"

using namespace clusterseed;

namespace {

oracle::Matrix to_oracle(const Quiver& q) {
  oracle::Matrix m(q.size(), std::vector<long>(q.size()));
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) m[i][j] = static_cast<long>(q.b(i, j));
  return m;
}

std::size_t distinct_quivers(const ExplorationReport& r) {
  std::set<std::vector<std::vector<Multiplicity>>> s;
  for (const auto& q : r.quivers) s.insert(q.quiver().matrix());
  return s.size();
}

}  // namespace

TEST_CASE("class sizes agree with an independent breadth-first count") {
  for (const char* name : {"A1", "A2", "A3-linear", "A2xA1", "A1xA1"}) {
    CAPTURE(name);
    const Quiver q = preset(name);
    const auto expected = oracle::count_class(to_oracle(q));
    REQUIRE(expected.closed);
    const auto seeds = explore_seeds(LabelledSeed::initial(q));
    const auto prints = explore_fingerprints(SeedFingerprint::initial(q));
    const auto quivers = explore_quivers(q);
    CHECK(seeds.closed());
    CHECK(seeds.size() == expected.seeds);
    CHECK(prints.size() == expected.seeds);
    CHECK(distinct_quivers(seeds) == expected.quivers);
    CHECK(quivers.size() == expected.quivers);
  }
}

TEST_CASE("known class sizes") {
  CHECK(explore_seeds(LabelledSeed::initial(preset("A1"))).size() == 2);
  CHECK(explore_seeds(LabelledSeed::initial(preset("A2"))).size() == 10);
  // 14 clusters times 3! labellings.
  CHECK(explore_seeds(LabelledSeed::initial(preset("A3-linear"))).size() == 84);
  CHECK(explore_quivers(preset("A2")).size() == 2);
  CHECK(explore_quivers(preset("A3-linear")).size() == 14);
  CHECK(explore_quivers(preset("A2tilde-noncyclic")).size() == 12);
  CHECK(explore_quivers(preset("kronecker2")).size() == 2);
}

TEST_CASE("fingerprint and seed exploration number vertices alike") {
  const Quiver q = preset("A3-linear");
  const auto seeds = explore_seeds(LabelledSeed::initial(q));
  const auto prints = explore_fingerprints(SeedFingerprint::initial(q));
  REQUIRE(seeds.size() == prints.size());
  CHECK(seeds.action == prints.action);
  for (std::size_t v = 0; v < seeds.size(); ++v) CHECK(SeedFingerprint::of(seeds.seeds[v]) == prints.fingerprints[v]);
}

TEST_CASE("action table is consistent") {
  const auto r = explore_seeds(LabelledSeed::initial(preset("A2xA1")));
  REQUIRE(r.closed());
  CHECK(r.generators.size() == 3 + 2);
  for (std::size_t v = 0; v < r.size(); ++v) {
    for (std::size_t g = 0; g < r.generators.size(); ++g) {
      const auto w = static_cast<std::size_t>(r.action[v][g]);
      CHECK(r.seeds[v].apply(r.generators[g]) == r.seeds[w]);
      // Every generator is an involution.
      CHECK(static_cast<std::size_t>(r.action[w][g]) == v);
    }
  }
  const GroupElement g = GroupElement::parse("m1 m3 (2 3) m2", 3);
  CHECK(r.seeds[r.act(0, g)] == r.seeds[0].apply(g));
  CHECK(r.find_seed(r.seeds[7]) == std::optional<std::size_t>(7));
  CHECK(r.find_quiver(IceQuiver(preset("A2xA1"))).has_value());
  CHECK(r.graph.is_label_regular());
}

TEST_CASE("budgets and open classes") {
  const auto markov = explore_quivers(preset("markov3"), 500);
  CHECK(markov.status == Status::BudgetExhausted);
  CHECK(markov.size() <= 500);
  CHECK_THROWS_AS(markov.require_closed("test"), NotClosed);

  // Non-cyclic A2-tilde: 12 quivers but infinitely many seeds.
  const auto prints = explore_fingerprints(SeedFingerprint::initial(preset("A2tilde-noncyclic")), 10000);
  CHECK_FALSE(prints.closed());
  const auto oracle_count = oracle::count_class(to_oracle(preset("A2tilde-noncyclic")), 2000);
  CHECK_FALSE(oracle_count.closed);

  // The A1xA1 quiver-level class is a single quiver.
  CHECK(explore_quivers(preset("A1xA1")).size() == 1);
}

TEST_CASE("frozen vertices are never mutated or moved") {
  const auto r = explore_seeds(LabelledSeed::initial(principal_coefficients(preset("A2"))));
  REQUIRE(r.closed());
  CHECK(r.mutable_vertices == std::vector<std::size_t>{0, 1});
  CHECK(r.generators.size() == 3);
  // With principal coefficients the labelled seeds are still 10 in number.
  CHECK(r.size() == 10);
}

TEST_CASE("smallness") {
  CHECK(is_small(preset("A3-linear")) == Smallness::Small);
  CHECK(is_small(preset("A2tilde-noncyclic")) == Smallness::Small);
  CHECK(is_small(preset("kronecker2")) == Smallness::Small);
  CHECK(is_small(preset("markov3")) == Smallness::NotSmall);
}

TEST_CASE("neighborhood balls") {
  const auto ball = explore_neighborhood(LabelledSeed::initial(preset("A3-linear")), 1);
  CHECK(ball.seeds.size() == 4);
  CHECK(ball.graph.edges.size() == 3);
  CHECK(explore_neighborhood(LabelledSeed::initial(preset("A2")), 0).seeds.size() == 1);
  // The A2 decagon is covered by radius 5.
  CHECK(explore_neighborhood(LabelledSeed::initial(preset("A2")), 5).seeds.size() == 10);
}
