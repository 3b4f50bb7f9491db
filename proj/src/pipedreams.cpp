#include "permutahedral/pipedreams.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace permutahedral {

PipeDream bottom_pipe_dream(const Permutation& w) {
  PipeDream gamma;
  auto c = code(w);
  for (int i = 1; i <= static_cast<int>(c.size()); ++i)
    for (int j = 1; j <= c[i - 1]; ++j) gamma.crosses.insert({i, j});
  return gamma;
}

Permutation trace_permutation(const PipeDream& gamma) {
  int n = 1;
  for (const auto& [r, c] : gamma.crosses) n = std::max(n, r + c);
  std::vector<int> w(n, 0);
  for (int start = 1; start <= n; ++start) {
    int r = start;
    int c = 1;
    bool east = true;
    // Strands only move north or east, so every trace leaves through the top edge.
    while (r >= 1) {
      if (gamma.has_cross(r, c)) {
        if (east) ++c;
        else --r;
      } else if (east) {
        --r;
        east = false;
      } else {
        ++c;
        east = true;
      }
    }
    w[start - 1] = c;
  }
  return Permutation(std::move(w));
}

bool is_reduced(const PipeDream& gamma) {
  return length(trace_permutation(gamma)) == static_cast<int>(gamma.size());
}

std::vector<PipeDream> ladder_moves(const PipeDream& gamma) {
  std::vector<PipeDream> out;
  for (const auto& [i, j] : gamma.crosses) {
    if (gamma.has_cross(i, j + 1)) continue;
    int r = i - 1;
    while (r >= 1 && gamma.has_cross(r, j) && gamma.has_cross(r, j + 1)) --r;
    if (r < 1 || gamma.has_cross(r, j) || gamma.has_cross(r, j + 1)) continue;
    PipeDream moved = gamma;
    moved.crosses.erase({i, j});
    moved.crosses.insert({r, j + 1});
    out.push_back(std::move(moved));
  }
  return out;
}

std::vector<PipeDream> enumerate_pipe_dreams(const Permutation& w) {
  std::set<PipeDream> seen{bottom_pipe_dream(w)};
  std::deque<PipeDream> queue{*seen.begin()};
  while (!queue.empty()) {
    PipeDream gamma = std::move(queue.front());
    queue.pop_front();
    for (auto& next : ladder_moves(gamma))
      if (seen.insert(next).second) queue.push_back(std::move(next));
  }
  return {seen.begin(), seen.end()};
}

WeakComposition row_weight(const PipeDream& gamma, int n) {
  WeakComposition c(n, 0);
  for (const auto& [r, col] : gamma.crosses) {
    if (r > n) throw std::invalid_argument("cross outside the requested rows");
    ++c[r - 1];
  }
  return c;
}

WeakComposition antidiagonal_weight(const PipeDream& gamma, int n) {
  WeakComposition a(n, 0);
  for (const auto& [r, c] : gamma.crosses) {
    int k = r + c - 1;
    if (k > n) throw std::invalid_argument("cross outside the requested antidiagonals");
    ++a[k - 1];
  }
  return a;
}

PipeDream transpose(const PipeDream& gamma) {
  PipeDream t;
  for (const auto& [r, c] : gamma.crosses) t.crosses.insert({c, r});
  return t;
}

std::string render(const PipeDream& gamma, int n) {
  std::string out;
  for (int r = 1; r < n; ++r) {
    for (int c = 1; c <= n - r; ++c) out += gamma.has_cross(r, c) ? '+' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace permutahedral
