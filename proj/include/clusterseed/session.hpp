#pragma once

#include <cstddef>
#include <vector>

#include "clusterseed/group.hpp"
#include "clusterseed/quiver.hpp"
#include "clusterseed/seed.hpp"

namespace clusterseed {

/// Interactive walk through a mutation class: the initial seed, the current
/// seed, the generators applied so far and their product in normal form.
class Session {
 public:
  explicit Session(const IceQuiver& q);

  const LabelledSeed& initial() const { return initial_; }
  const LabelledSeed& current() const { return current_; }
  /// Normal form of the product of the history.
  const GroupElement& word() const { return word_; }
  const std::vector<Generator>& history() const { return history_; }

  /// Zero-based vertex. Throws FrozenVertex or InvalidArgument and leaves
  /// the session unchanged.
  void mutate(std::size_t vertex);
  void permute(const Permutation& s);
  /// Returns false when there is nothing to undo.
  bool undo();

  /// Replaying the history from the initial seed, and applying the normal
  /// form to it, both reproduce the current seed.
  bool consistent() const;

 private:
  void push(const Generator& g, LabelledSeed next);

  LabelledSeed initial_;
  LabelledSeed current_;
  GroupElement word_;
  std::vector<Generator> history_;
  std::vector<LabelledSeed> previous_;
};

}  // namespace clusterseed
