#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "clusterseed/explore.hpp"
#include "clusterseed/group.hpp"
#include "clusterseed/quiver.hpp"
#include "clusterseed/seed.hpp"

namespace clusterseed {

/// True iff s.g == s, quiver and cluster. A difference of modular
/// fingerprints already proves s.g != s; the Laurent clusters are compared
/// only when the fingerprints agree.
bool check_fixed(const LabelledSeed& s, const GroupElement& g);

/// Smallest N in [1, max_power] with s.g^N == s, or 0 if there is none.
unsigned first_fixing_power(const LabelledSeed& s, const GroupElement& g, unsigned max_power);

enum class Expectation { Fixed, NotFixed, NotFixedUpToPower };

/// One stabilizer-membership check. The seed is (quiver, (x1..xn)).
struct LemmaCheck {
  std::string name;
  IceQuiver quiver;
  GroupElement word;
  Expectation expect = Expectation::Fixed;
  /// Bound on N for NotFixedUpToPower.
  unsigned max_power = 0;
};

struct CheckResult {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> results;
  bool all_passed() const;
  std::size_t failures() const;
};

/// Builds a quiver on n vertices from one-based arrows (tail, head).
Quiver quiver_from_arrows(std::size_t n, const std::vector<std::pair<int, int>>& arrows);

/// The stabilizer lemma checklist: principal-coefficient seeds that must be
/// fixed and trivial-coefficient seeds that must not be.
std::vector<LemmaCheck> lemma_checks(unsigned power_bound = 50);
CheckResult run_check(const LemmaCheck& c);
SuiteReport run_lemma_suite(const std::vector<LemmaCheck>& checks);
inline SuiteReport run_lemma_suite(unsigned power_bound = 50) { return run_lemma_suite(lemma_checks(power_bound)); }

/// Markov quiver walk over every reduced mutation word up to `depth`:
///   markov-equation    multiplicities (a, b, c) satisfy a^2 + b^2 + c^2 = abc
///   increasing         the largest multiplicity strictly grows at each step
///   no-repeat          all seeds reached are distinct
///   permuted-disjoint  no seed reached by a word and a nontrivial
///                      permutation equals a seed reached by a word alone
///   first-neighbour    mu_1 sends the multiplicities (3,3,3) to (3,3,6)
/// Throws InvalidArgument for depth > 12.
SuiteReport check_markov(unsigned depth = 6);

/// Multiplicities (|b12|, |b13|, |b23|) of a 3-vertex quiver.
std::array<Multiplicity, 3> multiplicity_triple(const Quiver& q);

/// Recovering the underlying weighted graph and the relative orientation of
/// adjacent arrows from the stabilizer, checked vertex pair by vertex pair
/// and arrow pair by arrow pair on every seed of a closed seed-level class.
SuiteReport check_stabilizer_determines_quiver(const std::string& preset_name, unsigned power_bound = 50);

/// Same checks on the seeds (Q, (x1..xn)) for every quiver Q of a class
/// that closes at quiver level (for example one whose seed class is
/// infinite).
SuiteReport check_stabilizer_determines_quiver_on_quivers(const std::string& preset_name,
                                                          unsigned power_bound = 50);

/// same_stabilizer(s1, s2) == similar(Q_s1, Q_s2) for every pair of seeds of
/// a preset whose seed class closes within the budget. A class that does not
/// close yields a single failing "not closed" result.
SuiteReport check_stabilizer_equals_similarity(const std::string& preset_name,
                                               std::size_t budget = kDefaultBudget);

/// Pairwise stabilizer/similarity comparison on every listed preset. A
/// preset whose seed class does not close is recorded as such and checked
/// instead through check_stabilizer_determines_quiver_on_quivers.
SuiteReport run_mainthm_suite(const std::vector<std::string>& presets, std::size_t budget = 10000);
std::vector<std::string> mainthm_presets();

/// Randomized invariants, `cases` instances each, reproducible from `seed`:
/// mutation is an involution, permutations commute past mutations, mutation
/// stays in the Laurent ring, normal forms are unique, and quotient graphs are
/// label-regular.
SuiteReport run_property_suite(std::size_t cases = 1000, std::uint64_t seed = 1);

}  // namespace clusterseed
