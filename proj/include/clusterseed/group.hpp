#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "clusterseed/permutation.hpp"

namespace clusterseed {

/// One generator of the mutation group: a mutation (zero-based vertex) or a
/// permutation.
struct Mutation {
  std::size_t vertex;
  friend bool operator==(const Mutation&, const Mutation&) = default;
};
using Generator = std::variant<Mutation, Permutation>;

/// Element of M_n = S_n ⋉ <mu_1..mu_n | mu_i^2 = 1> in normal form w.s: a
/// reduced mutation word w (no letter repeated twice in a row) followed by a
/// permutation s. The relation s mu_i = mu_{s(i)} s moves permutations to the
/// right, so every element has exactly one such form.
///
/// Elements act on seeds from the right, reading left to right.
class GroupElement {
 public:
  GroupElement() = default;
  static GroupElement identity(std::size_t n);
  static GroupElement mutation(std::size_t n, std::size_t vertex);
  static GroupElement permutation(Permutation s);

  /// Normal form of the product of `gens`, read left to right.
  static GroupElement normal_form(std::size_t n, const std::vector<Generator>& gens);

  /// Parses "m1 m2 m1 | (1 2)". Tokens "mK" and cycle groups may also be
  /// interleaved freely ("m1 (1 2) m2"); the result is normalised. "id" and
  /// the empty string are the identity.
  static GroupElement parse(std::string_view text, std::size_t n);

  std::size_t rank() const { return n_; }
  const std::vector<std::size_t>& word() const { return word_; }
  const Permutation& perm() const { return perm_; }
  bool is_identity() const { return word_.empty() && perm_.is_identity(); }

  /// Right-multiply by a generator, keeping the normal form.
  void append(const Generator& g);
  void append_mutation(std::size_t vertex);
  void append_permutation(const Permutation& s);

  /// Generators of the normal form, mutations first.
  std::vector<Generator> generators() const;

  /// "m1 m2 | (1 2)"; the empty word renders as "id".
  std::string to_string() const;

  /// g^k for k >= 0.
  GroupElement pow(unsigned k) const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> word_;
  Permutation perm_;
};

GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement invert(const GroupElement& g);

inline GroupElement operator*(const GroupElement& g, const GroupElement& h) { return compose(g, h); }

/// Convenience: the element mu_{w_1} ... mu_{w_k} for one-based letters.
GroupElement word_element(std::size_t n, const std::vector<std::size_t>& one_based_letters);

}  // namespace clusterseed
