#include <doctest.h>

#include <random>

#include "clusterseed/errors.hpp"
#include "clusterseed/presets.hpp"
#include "clusterseed/quiver.hpp"
#include "oracles.hpp"

using namespace clusterseed;

namespace {

oracle::Matrix to_oracle(const Quiver& q) {
  oracle::Matrix m(q.size(), std::vector<long>(q.size()));
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) m[i][j] = static_cast<long>(q.b(i, j));
  return m;
}

Quiver random_quiver(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Quiver q(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) q.set_arrows(i, j, d(rng));
  return q;
}

}  // namespace

TEST_CASE("mutation matches the matrix mutation rule") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 500; ++round) {
    const Quiver q = random_quiver(rng, 2 + round % 4, 3);
    for (std::size_t k = 0; k < q.size(); ++k) CHECK(to_oracle(q.mutate(k)) == oracle::mutate(to_oracle(q), k));
  }
}

TEST_CASE("mutation is an involution and commutes with opposite") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    const Quiver q = random_quiver(rng, 3 + round % 3, 2);
    const std::size_t k = static_cast<std::size_t>(round) % q.size();
    CHECK(q.mutate(k).mutate(k) == q);
    CHECK(q.opposite().mutate(k) == q.mutate(k).opposite());
  }
}

TEST_CASE("A2 has two labelled quivers related by either mutation") {
  const Quiver a2 = preset("A2");
  CHECK(a2.b(0, 1) == 1);
  CHECK(a2.mutate(0) == a2.opposite());
  CHECK(a2.mutate(1) == a2.opposite());
}

TEST_CASE("permutation relabels vertices") {
  const Quiver q = preset("A3-linear");  // 1 -> 2 -> 3
  const Quiver p = q.permute(Permutation::parse_cycles("(1 3)", 3));
  // b'(i,j) = b(s(i), s(j)): the arrows become 3 -> 2 -> 1.
  CHECK(p.b(2, 1) == 1);
  CHECK(p.b(1, 0) == 1);
  CHECK(p == q.opposite());
}

TEST_CASE("components and similarity") {
  const Quiver q = preset("A2xA1");
  const auto comps = q.components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<std::size_t>{0, 1});
  CHECK(comps[1] == std::vector<std::size_t>{2});
  CHECK(similar(q, q.opposite()));
  CHECK(similar(preset("A2"), preset("A2").opposite()));
  CHECK_FALSE(similar(preset("A3-linear"), preset("A3-linear").mutate(1)));

  // Reversing one component only.
  Quiver two(4);
  two.set_arrows(0, 1, 1);
  two.set_arrows(2, 3, 2);
  Quiver flipped = two;
  flipped.set_arrows(2, 3, -2);
  CHECK(similar(two, flipped));
  flipped.set_arrows(2, 3, -1);
  CHECK_FALSE(similar(two, flipped));
}

TEST_CASE("matrix validation") {
  CHECK_THROWS_AS(Quiver::from_matrix({{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Quiver::from_matrix({{1, 0}, {0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Quiver::from_matrix({{0, 1}}), InvalidArgument);
  CHECK(Quiver::from_matrix({{0, 2}, {-2, 0}}) == preset("kronecker2"));
  CHECK_THROWS_AS(preset("E8"), InvalidArgument);
}

TEST_CASE("multiplicity overflow is reported") {
  Quiver q = Quiver::from_matrix({{0, 4000000000LL, 0}, {-4000000000LL, 0, 4000000000LL}, {0, -4000000000LL, 0}});
  CHECK_THROWS_AS(q.mutate(1), BudgetViolation);
}

TEST_CASE("ice quivers: frozen vertices and coefficient constructions") {
  const IceQuiver pc = principal_coefficients(preset("A2"));
  REQUIRE(pc.size() == 4);
  CHECK(pc.frozen_vertices() == std::vector<std::size_t>{2, 3});
  CHECK(pc.mutable_vertices() == std::vector<std::size_t>{0, 1});
  // j' -> j for every mutable j, and the mutable part untouched.
  CHECK(pc.quiver().b(2, 0) == 1);
  CHECK(pc.quiver().b(3, 1) == 1);
  CHECK(pc.quiver().b(0, 1) == 1);
  CHECK(trivial_coefficients(pc) == preset("A2"));

  CHECK_THROWS_AS(pc.mutate(2), FrozenVertex);
  CHECK_THROWS_AS(pc.check_permutation(Permutation::parse_cycles("(1 3)", 4)), FrozenVertex);
  CHECK_NOTHROW(pc.check_permutation(Permutation::parse_cycles("(1 2)", 4)));
  CHECK_THROWS_AS(pc.mutate(7), InvalidArgument);

  // Mutation never creates arrows between frozen vertices.
  IceQuiver q = pc;
  for (std::size_t k : {0, 1, 0, 1, 0}) q = q.mutate(k);
  CHECK(q.quiver().b(2, 3) == 0);

  Quiver bad(2);
  bad.set_arrows(0, 1, 1);
  CHECK_THROWS_AS(IceQuiver(bad, {true, true}), InvalidArgument);
}

TEST_CASE("rendering") {
  CHECK(preset("A2").to_string() == "[[0,1],[-1,0]]");
  CHECK(preset("A2").digest() != preset("A2").opposite().digest());
  CHECK(preset("markov3").max_multiplicity() == 3);
}
