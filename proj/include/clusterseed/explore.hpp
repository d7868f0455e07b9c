#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "clusterseed/fingerprint.hpp"
#include "clusterseed/group.hpp"
#include "clusterseed/quiver.hpp"
#include "clusterseed/seed.hpp"

namespace clusterseed {

inline constexpr std::size_t kDefaultBudget = 100000;

/// Multigraph with loops whose edges carry a vertex label (zero-based).
/// Vertices are identified by payload digests.
struct LabelledEdge {
  std::size_t u;
  std::size_t v;
  std::size_t label;
  friend bool operator==(const LabelledEdge&, const LabelledEdge&) = default;
};

struct LabelledGraph {
  std::vector<std::uint64_t> vertices;
  std::vector<LabelledEdge> edges;
  /// Labels that occur, i.e. the mutable vertices.
  std::vector<std::size_t> labels;

  /// Number of edge ends with the given label at vertex v; a loop counts once.
  std::size_t label_degree(std::size_t v, std::size_t label) const;
  /// Every vertex has exactly one edge end per label.
  bool is_label_regular() const;
};

/// Seed: exact Laurent clusters. Fingerprint: clusters evaluated modulo
/// primes (see SeedFingerprint). Quiver: clusters dropped.
enum class Level { Seed, Fingerprint, Quiver };
enum class Status { Closed, BudgetExhausted };

/// Result of breadth-first exploration under the mutations at every mutable
/// vertex and the adjacent transpositions of mutable vertices. Vertex numbers
/// follow discovery order with generators tried in the order
/// mu_1 < ... < mu_n < (1 2) < (2 3) < ...
struct ExplorationReport {
  Level level = Level::Seed;
  Status status = Status::Closed;
  std::vector<std::size_t> mutable_vertices;
  /// Mutations first (one per mutable vertex), then transpositions.
  std::vector<Generator> generators;
  /// action[v][g] is the vertex reached from v by generators[g], or -1 when
  /// that step was never taken because the budget ran out.
  std::vector<std::vector<std::ptrdiff_t>> action;
  /// quivers[v] is the quiver of vertex v at either level.
  std::vector<IceQuiver> quivers;
  /// Seeds, present only at seed level.
  std::vector<LabelledSeed> seeds;
  /// Present only at fingerprint level.
  std::vector<SeedFingerprint> fingerprints;
  std::vector<std::size_t> depth;
  std::size_t max_depth = 0;
  Multiplicity max_multiplicity = 0;
  /// The mutation edges (transposition steps are not edges of this graph).
  LabelledGraph graph;
  /// Payload digest -> vertices with that digest.
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> index;

  bool closed() const { return status == Status::Closed; }
  std::size_t size() const { return quivers.size(); }
  std::size_t mutation_generator_count() const { return mutable_vertices.size(); }
  /// Throws NotClosed unless the class is fully enumerated.
  void require_closed(const char* what) const;
  std::optional<std::size_t> find_seed(const LabelledSeed& s) const;
  std::optional<std::size_t> find_quiver(const IceQuiver& q) const;
  /// Vertex reached from v by an arbitrary group element (closed classes).
  std::size_t act(std::size_t v, const GroupElement& g) const;
};

ExplorationReport explore_seeds(const LabelledSeed& start, std::size_t budget = kDefaultBudget);
/// Same walk on fingerprints. Vertices are pairwise distinct as fingerprints
/// and hence as seeds, so a budget-exhausted run certifies a class with more
/// than `budget` labelled seeds. On classes where both run, vertex numbering
/// agrees with explore_seeds unless two distinct seeds collide modulo both
/// primes.
ExplorationReport explore_fingerprints(const SeedFingerprint& start, std::size_t budget = kDefaultBudget);
ExplorationReport explore_quivers(const IceQuiver& start, std::size_t budget = kDefaultBudget);
inline ExplorationReport explore_quivers(const Quiver& start, std::size_t budget = kDefaultBudget) {
  return explore_quivers(IceQuiver(start), budget);
}

enum class Smallness { Small, NotSmall, Unknown };

/// Small means only finitely many quivers occur in the mutation class. Up to
/// two mutable vertices every class is small; with three or more, a class is
/// small iff no quiver in it has an arrow of multiplicity above 2.
Smallness is_small(const IceQuiver& start, std::size_t budget = kDefaultBudget);
inline Smallness is_small(const Quiver& start, std::size_t budget = kDefaultBudget) {
  return is_small(IceQuiver(start), budget);
}

/// Mutation-only ball of the given radius around a seed. Vertices at the
/// boundary are not expanded, so only edges touching interior vertices are
/// present.
struct Neighborhood {
  std::vector<LabelledSeed> seeds;
  LabelledGraph graph;
};
Neighborhood explore_neighborhood(const LabelledSeed& centre, std::size_t radius);

}  // namespace clusterseed
