#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "clusterseed/group.hpp"
#include "clusterseed/laurent.hpp"
#include "clusterseed/quiver.hpp"
#include "clusterseed/seed.hpp"

namespace clusterseed {

/// Cluster variable evaluated at a fixed point modulo two primes.
using ModValue = std::array<std::uint64_t, 2>;

/// Homomorphic image of a labelled seed: the quiver, plus every cluster
/// variable evaluated at a fixed point (r_1, ..., r_m) modulo two large
/// primes. Mutation is computed directly in the prime fields, where the
/// exchange relation is exact.
///
/// Equal seeds always have equal fingerprints, so distinct fingerprints prove
/// distinct seeds. The converse holds only with overwhelming probability.
/// Cluster variables whose Laurent expansions are too large to hold are
/// still cheap to fingerprint.
class SeedFingerprint {
 public:
  static constexpr std::array<std::uint64_t, 2> kPrimes = {2305843009213693951ULL,   // 2^61 - 1
                                                          4611686018427387847ULL};  // 2^62 - 57

  SeedFingerprint() = default;
  /// Fingerprint of (q, (x1..xn)).
  static SeedFingerprint initial(const IceQuiver& q);
  static SeedFingerprint initial(const Quiver& q) { return initial(IceQuiver(q)); }
  /// Evaluates an exact seed at the same point.
  static SeedFingerprint of(const LabelledSeed& s);

  /// The evaluation point: value of x_{i+1} modulo each prime.
  static ModValue point(std::size_t i);
  static ModValue evaluate(const LaurentPoly& p);

  const IceQuiver& quiver() const { return quiver_; }
  const std::vector<ModValue>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  /// Throws Error if beta_i vanishes at the evaluation point.
  SeedFingerprint mutate(std::size_t i) const;
  SeedFingerprint permute(const Permutation& s) const;
  SeedFingerprint apply(const Generator& g) const;
  SeedFingerprint apply(const GroupElement& g) const;

  std::uint64_t digest() const;

  friend bool operator==(const SeedFingerprint&, const SeedFingerprint&) = default;

 private:
  IceQuiver quiver_;
  std::vector<ModValue> values_;
};

}  // namespace clusterseed
