#include <doctest.h>

#include <algorithm>

#include "clusterseed/errors.hpp"
#include "clusterseed/explore.hpp"
#include "clusterseed/presets.hpp"
#include "clusterseed/quotient.hpp"
#include "figures.hpp"
#include "oracles.hpp"

using namespace clusterseed;

namespace {

std::vector<oracle::Edge> edges_of(const LabelledGraph& g) {
  std::vector<oracle::Edge> out;
  for (const auto& e : g.edges) out.push_back({e.u, e.v, e.label + 1});
  return out;
}

ExplorationReport seeds_of(const char* name) {
  return explore_seeds(LabelledSeed::initial(preset(name)));
}

bool is_three_cycle(const Quiver& q) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j && std::abs(q.b(i, j)) != 1) return false;
  return q.b(0, 1) == q.b(1, 2) && q.b(1, 2) == q.b(2, 0);
}

}  // namespace

TEST_CASE("relation names") {
  CHECK(parse_relation("same-quiver") == RelationKind::SameQuiver);
  CHECK(parse_relation("similar") == RelationKind::SimilarQuiver);
  CHECK(parse_relation("similar-quiver") == RelationKind::SimilarQuiver);
  CHECK(parse_relation("same-stabilizer") == RelationKind::SameStabilizer);
  CHECK(to_string(RelationKind::SimilarQuiver) == "similar");
  CHECK_THROWS_AS(parse_relation("same"), InvalidArgument);
}

TEST_CASE("A2 quotients match the drawn graphs") {
  const auto r = seeds_of("A2");
  const auto same = quotient_graph(r, RelationKind::SameQuiver);
  const auto sim = quotient_graph(r, RelationKind::SimilarQuiver);
  CHECK(same.vertices.size() == 2);
  CHECK(sim.vertices.size() == 1);
  CHECK(oracle::isomorphism(2, edges_of(same), 2, oracle::from_figure(figures::a2_same_quiver)));
  CHECK(oracle::isomorphism(1, edges_of(sim), 1, oracle::from_figure(figures::a2_similar)));
}

TEST_CASE("A3 quotients match the drawn graphs") {
  const auto r = seeds_of("A3-linear");
  const auto classes = partition(r, RelationKind::SameQuiver);
  const auto same = quotient_graph(r, classes);
  const auto sim = quotient_graph(r, RelationKind::SimilarQuiver);
  CHECK(same.vertices.size() == 14);
  CHECK(sim.vertices.size() == 7);
  const auto phi = oracle::isomorphism(14, oracle::from_figure(figures::a3_same_quiver), 14, edges_of(same));
  REQUIRE(phi);
  // The extreme vertices of the figure are the two oriented 3-cycles.
  for (std::size_t fig : {0u, 13u}) CHECK(is_three_cycle(r.quivers[classes.members[(*phi)[fig]].front()].quiver()));
  CHECK(oracle::isomorphism(7, oracle::from_figure(figures::a3_similar), 7, edges_of(sim)));
}

TEST_CASE("non-cyclic A2-tilde quotients match the drawn graphs") {
  const auto r = explore_quivers(preset("A2tilde-noncyclic"));
  REQUIRE(r.closed());
  const auto same = quotient_graph(r, RelationKind::SameQuiver);
  const auto sim = quotient_graph(r, RelationKind::SimilarQuiver);
  CHECK(same.vertices.size() == 12);
  CHECK(sim.vertices.size() == 6);
  // Vertex 0 of the exploration is the initial quiver, drawn as vertex 1.
  CHECK(oracle::isomorphism(12, oracle::from_figure(figures::a2tilde_same_quiver), 12, edges_of(same),
                            std::pair<std::size_t, std::size_t>{0, 0}));
  CHECK(oracle::isomorphism(6, oracle::from_figure(figures::a2tilde_similar), 6, edges_of(sim)));
}

TEST_CASE("quotient graphs are label-regular and numbered by least member") {
  for (const char* name : {"A2", "A3-linear", "A2xA1", "A1xA1"}) {
    const auto r = seeds_of(name);
    for (auto rel : {RelationKind::SameQuiver, RelationKind::SimilarQuiver, RelationKind::SameStabilizer}) {
      const auto p = partition(r, rel);
      for (std::size_t c = 0; c + 1 < p.count(); ++c) CHECK(p.members[c].front() < p.members[c + 1].front());
      CHECK(quotient_graph(r, p).is_label_regular());
    }
  }
}

TEST_CASE("same stabilizer coincides with similar quivers on finite classes") {
  for (const char* name : {"A1", "A2", "A3-linear", "A2xA1", "A1xA1"}) {
    CAPTURE(name);
    const auto r = seeds_of(name);
    const auto stab = partition(r, RelationKind::SameStabilizer);
    const auto sim = partition(r, RelationKind::SimilarQuiver);
    CHECK(stab.class_of == sim.class_of);
  }
  const auto r = seeds_of("A2");
  const auto t = GroupElement::permutation(Permutation::parse_cycles("(1 2)", 2));
  CHECK(same_stabilizer(r, 0, r.act(0, GroupElement::mutation(2, 0))));
  CHECK(same_stabilizer(r, 0, r.act(0, t)));
}

TEST_CASE("same-stabilizer requires a closed seed-level class") {
  const auto q = explore_quivers(preset("A2"));
  CHECK_THROWS(partition(q, RelationKind::SameStabilizer));
  const auto open = explore_fingerprints(SeedFingerprint::initial(preset("kronecker2")), 100);
  CHECK_THROWS_AS(partition(open, RelationKind::SameStabilizer), NotClosed);
  CHECK_THROWS_AS(quotient_graph(open, RelationKind::SameQuiver), NotClosed);
}

TEST_CASE("automorphism groups") {
  const auto a2 = seeds_of("A2");
  const auto w_plus = compute_group(a2, RelationKind::SameQuiver);
  const auto w = compute_group(a2, RelationKind::SimilarQuiver);
  CHECK(w_plus.order() == 5);
  CHECK(w_plus.abelian);
  CHECK(w.order() == 10);
  CHECK_FALSE(w.abelian);
  // Dihedral of order 10: identity, five reflections, four rotations.
  CHECK(w.element_orders == std::map<std::size_t, std::size_t>{{1, 1}, {2, 5}, {5, 4}});
  CHECK(is_normal_subgroup(w_plus, w));
  CHECK(orbits(a2, w).count() == 1);
  CHECK(orbits(a2, w_plus).count() == 2);

  const auto a3 = seeds_of("A3-linear");
  CHECK(compute_group(a3, RelationKind::SameQuiver).order() == 6);
  CHECK(compute_group(a3, RelationKind::SimilarQuiver).order() == 12);
  CHECK(compute_group(seeds_of("A2xA1"), RelationKind::SimilarQuiver).order() == 20);
  CHECK(compute_group(seeds_of("A1xA1"), RelationKind::SimilarQuiver).order() == 8);
}

TEST_CASE("group order equals the class size divided by the number of classes") {
  for (const char* name : {"A2", "A3-linear", "A2xA1", "A1xA1"}) {
    const auto r = seeds_of(name);
    for (auto rel : {RelationKind::SameQuiver, RelationKind::SimilarQuiver}) {
      const auto g = compute_group(r, rel);
      CHECK(g.order() * partition(r, rel).count() == r.size());
      // Each element is a bijection commuting with every generator.
      for (const auto& phi : g.elements)
        for (std::size_t v = 0; v < r.size(); ++v)
          for (std::size_t k = 0; k < r.generators.size(); ++k)
            CHECK(phi[static_cast<std::size_t>(r.action[v][k])] == static_cast<std::size_t>(r.action[phi[v]][k]));
    }
  }
}

TEST_CASE("point groups and morphisms of the cluster modular groupoid") {
  // x -> 2/x is the only nontrivial automorphism for A1.
  CHECK(point_group(seeds_of("A1"), IceQuiver(preset("A1"))).order() == 2);
  const auto a2 = seeds_of("A2");
  CHECK(point_group(a2, IceQuiver(preset("A2"))).order() == 5);
  CHECK_THROWS_AS(point_group(a2, IceQuiver(preset("kronecker2"))), InvalidArgument);

  const Quiver q = preset("A2");
  const auto t = GroupElement::permutation(Permutation::parse_cycles("(1 2)", 2));
  CHECK(cmg_morphism_equal(q, word_element(2, {1, 2, 1, 2, 1}), t));
  CHECK(cmg_morphism_equal(q, word_element(2, {1, 2}).pow(5), GroupElement::identity(2)));
  CHECK(cmg_morphism_equal(q, word_element(2, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1}), word_element(2, {1})));
  CHECK_FALSE(cmg_morphism_equal(q, word_element(2, {1, 2}), word_element(2, {2, 1})));
  CHECK_THROWS_AS(cmg_morphism_equal(q, word_element(2, {1}), GroupElement::identity(2)), InvalidArgument);
}
