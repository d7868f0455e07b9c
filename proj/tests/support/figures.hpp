#pragma once

// Labelled quotient graphs as drawn in the paper's figures: (u, v, label)
// with one-based vertices numbered as in the figure source.

#include "oracles.hpp"

namespace figures {

// A2: two vertices joined by edges 1 and 2; one vertex with loops 1 and 2.
inline const std::vector<oracle::Edge> a2_same_quiver = {{1, 2, 1}, {1, 2, 2}};
inline const std::vector<oracle::Edge> a2_similar = {{1, 1, 1}, {1, 1, 2}};

// A3, 14 and 7 vertices; the highest (1) and lowest (14) same-quiver
// vertices are the two 3-cycles.
inline const std::vector<oracle::Edge> a3_same_quiver = {
    {1, 2, 1},  {1, 3, 2},  {1, 4, 3},  {2, 5, 2},   {2, 6, 3},   {3, 7, 1},   {3, 8, 3},
    {4, 9, 1},  {4, 10, 2}, {5, 6, 1},  {7, 8, 2},   {9, 10, 3},  {5, 11, 3},  {6, 11, 2},
    {7, 12, 3}, {8, 12, 1}, {9, 13, 2}, {10, 13, 1}, {11, 14, 1}, {12, 14, 2}, {13, 14, 3}};
inline const std::vector<oracle::Edge> a3_similar = {
    {1, 2, 1}, {1, 3, 2}, {1, 4, 3}, {2, 5, 2}, {2, 5, 3}, {3, 6, 1},
    {3, 6, 3}, {4, 7, 1}, {4, 7, 2}, {5, 5, 1}, {6, 6, 2}, {7, 7, 3}};

// Non-cyclic A2-tilde, 12 and 6 vertices; vertex 1 of the same-quiver figure
// is the initial quiver 1->2, 1->3, 2->3.
inline const std::vector<oracle::Edge> a2tilde_same_quiver = {
    {1, 11, 1}, {1, 2, 2},  {1, 12, 3}, {2, 3, 1},  {2, 3, 3},   {3, 4, 2},   {4, 5, 1},   {4, 6, 3},   {5, 6, 2},
    {5, 7, 3},  {6, 8, 1},  {7, 9, 1},  {7, 9, 2},  {8, 10, 3},  {8, 10, 2},  {9, 11, 3},  {10, 12, 1}, {11, 12, 2}};
inline const std::vector<oracle::Edge> a2tilde_similar = {
    {1, 1, 1}, {1, 1, 3}, {1, 2, 2}, {2, 3, 1}, {2, 4, 3}, {3, 4, 2},
    {3, 5, 3}, {4, 6, 1}, {5, 5, 1}, {5, 5, 2}, {6, 6, 3}, {6, 6, 2}};

}  // namespace figures
