#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "clusterseed/group.hpp"
#include "clusterseed/laurent.hpp"
#include "clusterseed/quiver.hpp"

namespace clusterseed {

/// A quiver together with a labelled cluster: cluster()[i] sits at vertex i.
/// Cluster variables live in the Laurent ring over the initial cluster.
class LabelledSeed {
 public:
  LabelledSeed() = default;
  /// Throws InvalidArgument on a size mismatch or a zero cluster entry.
  LabelledSeed(IceQuiver quiver, std::vector<LaurentPoly> cluster);

  /// (q, (x1, ..., xn)) in n ambient variables.
  static LabelledSeed initial(const IceQuiver& q);
  static LabelledSeed initial(const Quiver& q) { return initial(IceQuiver(q)); }

  const IceQuiver& quiver() const { return quiver_; }
  const std::vector<LaurentPoly>& cluster() const { return cluster_; }
  std::size_t size() const { return cluster_.size(); }
  std::size_t ambient() const;

  /// Mutation at i:
  ///   beta'_i = (prod_k beta_k^{a(k,i)} + prod_k beta_k^{a(i,k)}) / beta_i.
  /// Throws InexactDivision for seeds outside the Laurent ring.
  LabelledSeed mutate(std::size_t i) const;
  /// beta'_i = beta_{s(i)}, quiver permuted alongside.
  LabelledSeed permute(const Permutation& s) const;
  /// Right action of a mutation-group element, applied left to right along
  /// its normal form.
  LabelledSeed apply(const GroupElement& g) const;
  LabelledSeed apply(const Generator& g) const;

  /// The two monomial products whose sum is beta_i * beta'_i.
  LaurentPoly exchange_binomial(std::size_t i) const;

  std::uint64_t digest() const;

  friend bool operator==(const LabelledSeed&, const LabelledSeed&) = default;

 private:
  IceQuiver quiver_;
  std::vector<LaurentPoly> cluster_;
};

struct SeedHash {
  std::size_t operator()(const LabelledSeed& s) const { return static_cast<std::size_t>(s.digest()); }
};

/// Variable images of the automorphism alpha_g^Q: the cluster of
/// (Q, (x1..xn)) . g.
std::vector<LaurentPoly> alpha_tuple(const IceQuiver& q, const GroupElement& g);
inline std::vector<LaurentPoly> alpha_tuple(const Quiver& q, const GroupElement& g) {
  return alpha_tuple(IceQuiver(q), g);
}

/// Composition of ring maps given by variable images:
/// result[i] = substitute(inner[i], outer). With outer = alpha(Q, g) and
/// inner = alpha(Q.g, h) this is alpha(Q, gh).
std::vector<LaurentPoly> compose_images(const std::vector<LaurentPoly>& outer,
                                        const std::vector<LaurentPoly>& inner);

}  // namespace clusterseed
