#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace clusterseed {

/// Permutation of {0, ..., n-1}, stored as its image list: p(i) == image()[i].
///
/// Text forms are one-based cycle notation, "(1 2)(3 4)", with "()" for the
/// identity.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless `image` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(std::size_t n);
  /// Swaps zero-based a and b.
  static Permutation transposition(std::size_t n, int a, int b);
  /// Parses cycle notation such as "(1 2 3)(4 5)" on n points.
  static Permutation parse_cycles(std::string_view text, std::size_t n);

  std::size_t size() const { return image_.size(); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& image() const { return image_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Cycle notation, cycles led by their smallest point and sorted.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// (p * q)(i) = p(q(i)). This is the composition under which the right action
/// on seeds satisfies s.(pq) = (s.p).q.
Permutation operator*(const Permutation& p, const Permutation& q);

}  // namespace clusterseed
