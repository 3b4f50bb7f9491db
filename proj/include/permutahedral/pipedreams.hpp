#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "permutahedral/perm.hpp"

namespace permutahedral {

/// Set of crossing tiles (row, column), 1-indexed from the north-west corner.
/// Every other tile is a pair of elbows.
struct PipeDream {
  std::set<std::pair<int, int>> crosses;

  bool has_cross(int row, int col) const { return crosses.count({row, col}) > 0; }
  std::size_t size() const { return crosses.size(); }
  friend auto operator<=>(const PipeDream&, const PipeDream&) = default;
};

/// Crosses in row i at columns 1..c_i, c = code(w).
PipeDream bottom_pipe_dream(const Permutation& w);

/// w_gamma: the strand entering row i on the west edge exits column w(i) on the north edge.
Permutation trace_permutation(const PipeDream& gamma);

/// |gamma| = l(w_gamma).
bool is_reduced(const PipeDream& gamma);

/// All reduced pipe dreams of w: closure of the bottom pipe dream under ladder moves.
std::vector<PipeDream> enumerate_pipe_dreams(const Permutation& w);

/// Ladder moves applicable to gamma (all rung counts k >= 0).
std::vector<PipeDream> ladder_moves(const PipeDream& gamma);

/// Number of crosses per row, n entries.
WeakComposition row_weight(const PipeDream& gamma, int n);

/// a_k = number of crosses with row + col = k + 1, n entries.
WeakComposition antidiagonal_weight(const PipeDream& gamma, int n);

/// Reflection across the main diagonal; a bijection PD(w) -> PD(w^{-1}).
PipeDream transpose(const PipeDream& gamma);

/// ASCII grid of the staircase for S_n: '+' for crosses, '.' for elbow tiles.
std::string render(const PipeDream& gamma, int n);

}  // namespace permutahedral
