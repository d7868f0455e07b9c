#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "clusterseed/quiver.hpp"

namespace clusterseed {

/// Named quivers used throughout the tests and the CLI:
///   A1                 one vertex
///   A2                 1 -> 2
///   A3-linear          1 -> 2 -> 3
///   A2tilde-noncyclic  1 -> 2, 1 -> 3, 2 -> 3
///   markov3            3-cycle 1 -> 2 -> 3 -> 1, every arrow tripled
///   kronecker2         1 => 2 (double arrow)
///   A1xA1              two vertices, no arrows
///   A2xA1              1 -> 2, isolated vertex 3
/// Throws InvalidArgument for an unknown name.
Quiver preset(std::string_view name);

std::vector<std::string> preset_names();

}  // namespace clusterseed
