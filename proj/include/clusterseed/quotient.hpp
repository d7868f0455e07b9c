#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "clusterseed/explore.hpp"
#include "clusterseed/group.hpp"
#include "clusterseed/quiver.hpp"

namespace clusterseed {

/// same-quiver: equal labelled quivers. similar-quiver: quivers agree up to
/// reversing all arrows in some set of components. same-stabilizer: equal
/// stabilizers in the mutation group.
enum class RelationKind { SameQuiver, SimilarQuiver, SameStabilizer };

std::string to_string(RelationKind k);
/// Accepts "same-quiver", "similar" / "similar-quiver", "same-stabilizer".
RelationKind parse_relation(std::string_view name);

/// Equivalence classes of the vertices of an exploration. Classes are
/// numbered by their least member.
struct Partition {
  std::vector<std::size_t> class_of;
  std::vector<std::vector<std::size_t>> members;
  std::size_t count() const { return members.size(); }
};

/// Quiver relations work at every level; same-stabilizer needs a closed
/// seed- or fingerprint-level class.
Partition partition(const ExplorationReport& report, RelationKind rel);

/// Quotient labelled graph: one vertex per class and, for every class [s] and
/// mutable vertex i, one i-edge between [s] and [s.mu_i]. Throws NotClosed
/// for an open class and Error if the relation is not homogeneous.
LabelledGraph quotient_graph(const ExplorationReport& report, const Partition& classes);
LabelledGraph quotient_graph(const ExplorationReport& report, RelationKind rel);

/// Product-automaton decision of Stab(s1) == Stab(s2): walk the pair
/// (s1, s2) under every generator; the stabilizers differ iff some reachable
/// pair has exactly one coordinate back at its start.
bool same_stabilizer(const ExplorationReport& report, std::size_t s1, std::size_t s2);

/// Bijection of the vertex set of a closed class, commuting with the action:
/// image[s.g] == image[s].g.
using SeedAutomorphism = std::vector<std::size_t>;

/// The group of automorphisms sending a base vertex to each vertex of its
/// class, as an explicit permutation group on the class's vertices.
struct AutomorphismGroup {
  std::size_t base = 0;
  /// Sorted by the image of `base`.
  std::vector<SeedAutomorphism> elements;
  /// table[a][b] is the index of elements[a] ∘ elements[b].
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;
  bool abelian = true;
  /// Element order -> number of elements of that order.
  std::map<std::size_t, std::size_t> element_orders;
  /// Indices of a greedily chosen generating set.
  std::vector<std::size_t> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(const SeedAutomorphism& phi) const;
};

/// For each y equivalent to `base`, builds the automorphism base -> y by
/// propagating phi(s.g) = phi(s).g. Throws PropagationConflict if the
/// relation is not regular on the class, NotClosed for an open class. Also
/// verifies closure under composition and that every automorphism maps each
/// vertex into its own class.
AutomorphismGroup compute_group(const ExplorationReport& report, RelationKind rel, std::size_t base = 0);

/// Orbits of the group's action on the vertex set.
Partition orbits(const ExplorationReport& report, const AutomorphismGroup& group);

bool is_subgroup(const AutomorphismGroup& sub, const AutomorphismGroup& group);
bool is_normal_subgroup(const AutomorphismGroup& sub, const AutomorphismGroup& group);

/// Point group of the cluster modular groupoid at q: the same-quiver group
/// based at any seed whose quiver is q. Throws InvalidArgument if q is absent.
AutomorphismGroup point_group(const ExplorationReport& report, const IceQuiver& q);

/// [Q, g] == [Q, h] in the cluster modular groupoid, decided by comparing the
/// variable images alpha_g^Q and alpha_h^Q. Throws InvalidArgument when g
/// and h send q to different quivers.
bool cmg_morphism_equal(const IceQuiver& q, const GroupElement& g, const GroupElement& h);
inline bool cmg_morphism_equal(const Quiver& q, const GroupElement& g, const GroupElement& h) {
  return cmg_morphism_equal(IceQuiver(q), g, h);
}

}  // namespace clusterseed
