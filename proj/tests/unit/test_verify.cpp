#include <doctest.h>

#include "clusterseed/errors.hpp"
#include "clusterseed/presets.hpp"
#include "clusterseed/verify.hpp"

using namespace clusterseed;

TEST_CASE("fixed-point checks on A2") {
  const LabelledSeed s = LabelledSeed::initial(preset("A2"));
  CHECK(check_fixed(s, word_element(2, {1, 2}).pow(5)));
  CHECK_FALSE(check_fixed(s, word_element(2, {1, 2}).pow(4)));
  CHECK(first_fixing_power(s, word_element(2, {1, 2}), 20) == 5);
  CHECK(first_fixing_power(s, word_element(2, {1}), 20) == 2);
  // The Kronecker seed is never fixed by a power of m1 m2.
  CHECK(first_fixing_power(LabelledSeed::initial(preset("kronecker2")), word_element(2, {1, 2}), 30) == 0);
}

TEST_CASE("quivers from arrow lists") {
  const Quiver q = quiver_from_arrows(3, {{1, 2}, {2, 3}});
  CHECK(q == preset("A3-linear"));
  CHECK(quiver_from_arrows(2, {{1, 2}, {1, 2}}) == preset("kronecker2"));
  CHECK_THROWS_AS(quiver_from_arrows(2, {{1, 3}}), InvalidArgument);
}

TEST_CASE("the lemma checklist passes") {
  const auto checks = lemma_checks();
  CHECK(checks.size() == 17);
  const auto report = run_lemma_suite(checks);
  for (const auto& r : report.results) {
    CAPTURE(r.name);
    CAPTURE(r.observed);
    CHECK(r.pass);
  }
  CHECK(report.all_passed());
}

TEST_CASE("a corrupted word is caught") {
  auto checks = lemma_checks();
  REQUIRE_FALSE(checks.empty());
  // The first check expects a fixed seed; dropping its last letter breaks it.
  LemmaCheck bad = checks.front();
  REQUIRE(bad.expect == Expectation::Fixed);
  auto gens = bad.word.generators();
  gens.pop_back();
  bad.word = GroupElement::normal_form(bad.quiver.size(), gens);
  CHECK_FALSE(run_check(bad).pass);

  // A word that fixes everything cannot pass a not-fixed expectation.
  LemmaCheck trivial{"identity", IceQuiver(preset("A2")), GroupElement::identity(2), Expectation::NotFixed, 0};
  CHECK_FALSE(run_check(trivial).pass);
  trivial.expect = Expectation::Fixed;
  CHECK(run_check(trivial).pass);
}

TEST_CASE("Markov walk") {
  const auto depth0 = check_markov(0);
  CHECK(depth0.all_passed());
  const auto report = check_markov(6);
  CHECK(report.results.size() == 5);
  CHECK(report.all_passed());
  CHECK_THROWS_AS(check_markov(13), InvalidArgument);
  CHECK(multiplicity_triple(preset("markov3")) == std::array<Multiplicity, 3>{3, 3, 3});
  CHECK(multiplicity_triple(preset("markov3").mutate(0)) == std::array<Multiplicity, 3>{3, 3, 6});
}

TEST_CASE("stabilizers determine similarity classes") {
  CHECK(check_stabilizer_equals_similarity("A2").all_passed());
  CHECK(check_stabilizer_determines_quiver("A3-linear").all_passed());
  CHECK(check_stabilizer_determines_quiver_on_quivers("A2tilde-noncyclic").all_passed());
  // An infinite seed class is reported as not closed, not as a pass.
  const auto open = check_stabilizer_equals_similarity("kronecker2", 200);
  CHECK_FALSE(open.all_passed());
}

TEST_CASE("property suite is reproducible") {
  const auto a = run_property_suite(50, 7);
  const auto b = run_property_suite(50, 7);
  CHECK(a.all_passed());
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) CHECK(a.results[i].observed == b.results[i].observed);
}
