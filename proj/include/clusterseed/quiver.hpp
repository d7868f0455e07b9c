#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "clusterseed/permutation.hpp"

namespace clusterseed {

using Multiplicity = std::int64_t;

/// A quiver without loops or 2-cycles on vertices {0..n-1}, stored as its
/// skew-symmetric exchange matrix b: b(i,j) > 0 means b(i,j) arrows i -> j.
///
/// Equality is literal matrix equality; vertex labels matter.
class Quiver {
 public:
  Quiver() = default;
  /// n vertices, no arrows.
  explicit Quiver(std::size_t n) : n_(n), b_(n * n, 0) {}

  /// Validates square shape, zero diagonal and skew-symmetry.
  static Quiver from_matrix(const std::vector<std::vector<Multiplicity>>& b);

  std::size_t size() const { return n_; }
  Multiplicity b(std::size_t i, std::size_t j) const { return b_[i * n_ + j]; }
  /// Number of arrows i -> j, i.e. max(b(i,j), 0).
  Multiplicity arrows(std::size_t i, std::size_t j) const;
  /// Sets b(i,j) = k and b(j,i) = -k.
  void set_arrows(std::size_t i, std::size_t j, Multiplicity k);

  std::vector<std::vector<Multiplicity>> matrix() const;

  /// Fomin-Zelevinsky mutation at k:
  ///   b'(i,j) = -b(i,j)                                    if k in {i,j}
  ///   b'(i,j) = b(i,j) + sgn(b(i,k)) max(b(i,k) b(k,j), 0) otherwise.
  Quiver mutate(std::size_t k) const;

  /// b'(i,j) = b(s(i), s(j)).
  Quiver permute(const Permutation& s) const;

  /// All arrows reversed.
  Quiver opposite() const;

  /// Connected components of the underlying graph (any nonzero b(i,j) is an
  /// edge). Each component is sorted; components are ordered by least vertex.
  std::vector<std::vector<std::size_t>> components() const;

  /// Full subquiver on `vertices`, relabelled 0..k-1 in the given order.
  Quiver restricted(const std::vector<std::size_t>& vertices) const;

  Multiplicity max_multiplicity() const;

  std::uint64_t digest() const;

  /// Row-major matrix text, e.g. "[[0,1],[-1,0]]".
  std::string to_string() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Multiplicity> b_;
};

/// True iff q1 and q2 have the same components and, on every component,
/// q1 agrees with q2 or with its opposite.
bool similar(const Quiver& q1, const Quiver& q2);

/// A quiver whose vertices are split into mutable and frozen ones. Mutations
/// happen only at mutable vertices and permutations must fix every frozen
/// vertex. Arrows between two frozen vertices are always zero.
class IceQuiver {
 public:
  IceQuiver() = default;
  /// Every vertex mutable.
  explicit IceQuiver(Quiver q);
  IceQuiver(Quiver q, std::vector<bool> frozen);

  const Quiver& quiver() const { return q_; }
  std::size_t size() const { return q_.size(); }
  bool is_frozen(std::size_t v) const { return frozen_[v]; }
  const std::vector<bool>& frozen_mask() const { return frozen_; }
  std::vector<std::size_t> mutable_vertices() const;
  std::vector<std::size_t> frozen_vertices() const;
  bool has_frozen() const;

  /// Throws InvalidArgument for an out-of-range vertex, FrozenVertex for a
  /// frozen one.
  void check_mutable(std::size_t k) const;
  /// Throws FrozenVertex if s moves a frozen vertex.
  void check_permutation(const Permutation& s) const;

  IceQuiver mutate(std::size_t k) const;
  IceQuiver permute(const Permutation& s) const;

  std::uint64_t digest() const;

  friend bool operator==(const IceQuiver&, const IceQuiver&) = default;

 private:
  Quiver q_;
  std::vector<bool> frozen_;
};

/// Frozen copy j' of every vertex j, placed at index n + j, with one arrow
/// j' -> j each.
IceQuiver principal_coefficients(const Quiver& q);
/// Full subquiver on the mutable vertices.
Quiver trivial_coefficients(const IceQuiver& q);

}  // namespace clusterseed
