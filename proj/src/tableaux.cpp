#include "permutahedral/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace permutahedral {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw std::invalid_argument("empty part in partition");
    std::size_t used = 0;
    int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad part in partition: " + token);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; j <= (*this)[1]; ++j) {
    int h = 0;
    while (h < length() && parts_[h] >= j) ++h;
    c.push_back(h);
  }
  return Partition(std::move(c));
}

int Partition::hook(int row, int col) const {
  if (!contains(row, col)) throw std::out_of_range("cell outside the partition");
  int below = 0;
  while (contains(row + below + 1, col)) ++below;
  return (*this)[row] - col + below + 1;
}

std::vector<std::pair<int, int>> Partition::blocks() const {
  std::vector<std::pair<int, int>> out;
  for (int p : parts_) {
    if (!out.empty() && out.back().first == p) ++out.back().second;
    else out.push_back({p, 1});
  }
  return out;
}

std::vector<int> Partition::block_ends() const {
  std::vector<int> ends;
  int total = 0;
  for (const auto& [p, m] : blocks()) ends.push_back(total += m);
  return ends;
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + std::to_string(parts_[i]);
  return out;
}

int Signature::E(int i) const {
  int s = 0;
  for (int k = 1; k < i; ++k) s += e.at(k - 1);
  return s;
}

int Signature::F(int j) const {
  int s = 0;
  for (int k = 1; k < j; ++k) s += f.at(k - 1);
  return s;
}

std::pair<Partition, Flag> shape_and_flag(const Permutation& w) {
  auto c = code(w);
  std::vector<int> parts;
  for (int x : c)
    if (x > 0) parts.push_back(x);
  std::sort(parts.rbegin(), parts.rend());
  Partition lambda(parts);
  Flag phi;
  for (const auto& [p, m] : lambda.blocks()) {
    int last = 0;
    for (int j = 1; j <= static_cast<int>(c.size()); ++j)
      if (c[j - 1] >= p) last = j;
    phi.insert(phi.end(), m, last);
  }
  return {lambda, phi};
}

std::vector<int> flag_block_values(const Partition& lambda, const Flag& phi) {
  if (static_cast<int>(phi.size()) != lambda.length()) throw std::invalid_argument("flag length differs from partition length");
  std::vector<int> out;
  for (int end : lambda.block_ends()) out.push_back(phi[end - 1]);
  return out;
}

bool satisfies_vexillary_inequalities(const Partition& lambda, const Flag& phi) {
  if (static_cast<int>(phi.size()) != lambda.length()) return false;
  auto blocks = lambda.blocks();
  auto ends = lambda.block_ends();
  // The flag must be constant on each block.
  int row = 0;
  for (const auto& [p, m] : blocks) {
    for (int k = 1; k < m; ++k)
      if (phi[row + k] != phi[row]) return false;
    row += m;
  }
  auto values = flag_block_values(lambda, phi);
  const int r = static_cast<int>(blocks.size());
  for (int q = 0; q < r; ++q)
    if (values[q] < ends[q]) return false;
  for (int q = 0; q + 1 < r; ++q) {
    int delta = values[q + 1] - values[q];
    if (delta < 0 || delta > blocks[q + 1].second + blocks[q].first - blocks[q + 1].first) return false;
  }
  return true;
}

namespace {

// Weakly increasing rows of the given length with row[j] >= lower[j] and row[j] <= upper.
// A row entry may also be forced strictly above its left neighbour (strict_after[j] = 1
// means row[j+1] > row[j]).
void each_row(int len, const std::vector<int>& lower, int upper, const std::vector<int>& strict_after,
              const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> row(len);
  std::function<void(int)> rec = [&](int j) {
    if (j == len) {
      visit(row);
      return;
    }
    int lo = lower[j];
    if (j > 0) lo = std::max(lo, row[j - 1] + strict_after[j - 1]);
    for (int v = lo; v <= upper; ++v) {
      row[j] = v;
      rec(j + 1);
    }
  };
  rec(0);
}

// Row-by-row transfer count of fillings: row i has entries in [1, upper[i]],
// lower bounds from the previous row plus col_step[i-1], horizontal steps from strict_after.
mpz_class count_fillings(const Partition& lambda, const std::vector<int>& upper, const std::vector<int>& col_step,
                         const std::vector<int>& strict_after) {
  std::map<std::vector<int>, mpz_class> layer{{{}, 1}};
  for (int i = 1; i <= lambda.length(); ++i) {
    const int len = lambda[i];
    std::map<std::vector<int>, mpz_class> next;
    for (const auto& [prev, count] : layer) {
      std::vector<int> lower(len, 1);
      if (i > 1)
        for (int j = 0; j < len; ++j) lower[j] = prev[j] + col_step[i - 2];
      each_row(len, lower, upper[i - 1], strict_after, [&](const std::vector<int>& row) { next[row] += count; });
    }
    layer = std::move(next);
  }
  mpz_class total = 0;
  for (const auto& [row, count] : layer) total += count;
  return total;
}

std::vector<Tableau> list_fillings(const Partition& lambda, const std::vector<int>& upper, const std::vector<int>& col_step,
                                   const std::vector<int>& strict_after) {
  std::vector<Tableau> out;
  Tableau t;
  std::function<void(int)> rec = [&](int i) {
    if (i > lambda.length()) {
      out.push_back(t);
      return;
    }
    const int len = lambda[i];
    std::vector<int> lower(len, 1);
    if (i > 1)
      for (int j = 0; j < len; ++j) lower[j] = t.back()[j] + col_step[i - 2];
    std::vector<std::vector<int>> rows;
    each_row(len, lower, upper[i - 1], strict_after, [&](const std::vector<int>& row) { rows.push_back(row); });
    for (auto& row : rows) {
      t.push_back(row);
      rec(i + 1);
      t.pop_back();
    }
  };
  rec(1);
  return out;
}

void check_flag(const Partition& lambda, const Flag& b) {
  if (static_cast<int>(b.size()) != lambda.length()) throw std::invalid_argument("flag needs one entry per row");
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] < 1 || (i > 0 && b[i] < b[i - 1])) throw std::invalid_argument("flag must be positive and weakly increasing");
}

}  // namespace

mpz_class flagged_ssyt_count(const Partition& lambda, const Flag& b) {
  check_flag(lambda, b);
  std::vector<int> col_step(std::max(0, lambda.length() - 1), 1);
  std::vector<int> strict_after(std::max(0, lambda[1] - 1), 0);
  return count_fillings(lambda, b, col_step, strict_after);
}

std::vector<Tableau> flagged_ssyt(const Partition& lambda, const Flag& b) {
  check_flag(lambda, b);
  std::vector<int> col_step(std::max(0, lambda.length() - 1), 1);
  std::vector<int> strict_after(std::max(0, lambda[1] - 1), 0);
  return list_fillings(lambda, b, col_step, strict_after);
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  const int total = lambda.size();
  const int l = lambda.length();
  std::vector<Tableau> out;
  Tableau t(l);
  std::function<void(int)> rec = [&](int k) {
    if (k > total) {
      out.push_back(t);
      return;
    }
    for (int r = 0; r < l; ++r) {
      const int len = static_cast<int>(t[r].size());
      if (len >= lambda[r + 1]) continue;
      if (r > 0 && static_cast<int>(t[r - 1].size()) <= len) continue;
      t[r].push_back(k);
      rec(k + 1);
      t[r].pop_back();
    }
  };
  rec(1);
  return out;
}

mpz_class hook_length_count(const Partition& lambda) {
  mpz_class denom = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[i]; ++j) denom *= lambda.hook(i, j);
  return factorial(lambda.size()) / denom;
}

namespace {

// Row of each entry 1..|T|, and the cell of each entry.
std::vector<std::pair<int, int>> cells_by_entry(const Tableau& t) {
  int total = 0;
  for (const auto& row : t) total += static_cast<int>(row.size());
  std::vector<std::pair<int, int>> where(total + 1, {0, 0});
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      int v = t[i][j];
      if (v < 1 || v > total || where[v].first != 0) throw std::invalid_argument("not a standard filling");
      where[v] = {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
    }
  return where;
}

}  // namespace

int syt_descents(const Tableau& t) {
  auto where = cells_by_entry(t);
  int d = 0;
  for (std::size_t k = 1; k + 1 < where.size(); ++k)
    if (where[k + 1].first > where[k].first) ++d;
  return d;
}

int n_min(const Partition& lambda, const Signature& eps) {
  int best = 0;
  auto blocks = lambda.blocks();
  auto ends = lambda.block_ends();
  for (std::size_t q = 0; q < blocks.size(); ++q) best = std::max(best, eps.F(blocks[q].first) + eps.E(ends[q]));
  return best;
}

bool is_valid_signature(const Partition& lambda, const Signature& eps) {
  auto binary = [](const std::vector<int>& v) { return std::all_of(v.begin(), v.end(), [](int x) { return x == 0 || x == 1; }); };
  return static_cast<int>(eps.e.size()) == std::max(0, lambda.length() - 1) &&
         static_cast<int>(eps.f.size()) == std::max(0, lambda[1] - 1) && binary(eps.e) && binary(eps.f);
}

Flag flag_from_signature(const Partition& lambda, const Signature& eps, int N) {
  if (!is_valid_signature(lambda, eps)) throw std::invalid_argument("signature does not match the partition");
  Flag phi;
  auto blocks = lambda.blocks();
  auto ends = lambda.block_ends();
  for (std::size_t q = 0; q < blocks.size(); ++q)
    phi.insert(phi.end(), blocks[q].second, N + 1 - eps.F(blocks[q].first) + eps.Ebar(ends[q]));
  return phi;
}

std::pair<Signature, int> vexillary_signature(const Permutation& u_in) {
  const Permutation u = u_in.normalized();
  if (u.size() < 2 || !is_indecomposable(u)) throw std::invalid_argument("signature needs an indecomposable permutation");
  if (!is_vexillary(u)) throw std::invalid_argument("signature needs a vexillary permutation");
  auto [lambda, phi] = shape_and_flag(u);
  auto blocks = lambda.blocks();
  auto ends = lambda.block_ends();
  auto values = flag_block_values(lambda, phi);
  Signature eps{std::vector<int>(std::max(0, lambda.length() - 1), 1), std::vector<int>(std::max(0, lambda[1] - 1), 0)};
  for (std::size_t q = 0; q + 1 < blocks.size(); ++q) {
    int need = values[q + 1] - values[q];
    // Columns p_{q+1} .. p_q - 1, then rows M_q .. M_{q+1} - 1.
    for (int j = blocks[q + 1].first; j <= blocks[q].first - 1 && need > 0; ++j, --need) eps.f[j - 1] = 1;
    for (int i = ends[q]; i <= ends[q + 1] - 1 && need > 0; ++i, --need) eps.e[i - 1] = 0;
    if (need != 0) throw std::logic_error("flag gap exceeds the available signature slots");
  }
  const int N = n_min(lambda, eps);
  if (flag_from_signature(lambda, eps, N) != phi) throw std::logic_error("signature does not reproduce the flag");
  return {eps, N};
}

namespace {

// Kahn's algorithm on the path 1..k with orientation from steps:
// step[i-1] = 1 puts i+1 before i, otherwise i before i+1.
std::vector<int> path_ranks(int k, const std::vector<int>& step) {
  std::vector<int> indegree(k + 1, 0);
  std::vector<std::vector<int>> next(k + 1);
  for (int i = 1; i < k; ++i) {
    if (step[i - 1]) {
      next[i + 1].push_back(i);
      ++indegree[i];
    } else {
      next[i].push_back(i + 1);
      ++indegree[i + 1];
    }
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int i = 1; i <= k; ++i)
    if (indegree[i] == 0) ready.push(i);
  std::vector<int> rank(k + 1, 0);
  int r = 0;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    rank[v] = r++;
    for (int x : next[v])
      if (--indegree[x] == 0) ready.push(x);
  }
  return rank;
}

}  // namespace

Labeling compatible_labeling(const Partition& lambda, const Signature& eps) {
  if (!is_valid_signature(lambda, eps)) throw std::invalid_argument("signature does not match the partition");
  auto row_rank = path_ranks(lambda.length(), eps.e);
  auto col_rank = path_ranks(lambda[1], eps.f);
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> keyed;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[i]; ++j) keyed.push_back({{row_rank[i], col_rank[j]}, {i, j}});
  std::sort(keyed.begin(), keyed.end());
  Labeling omega(lambda.length());
  for (int i = 1; i <= lambda.length(); ++i) omega[i - 1].assign(lambda[i], 0);
  int label = 0;
  for (const auto& [key, cell] : keyed) omega[cell.first - 1][cell.second - 1] = ++label;
  return omega;
}

bool is_compatible(const Partition& lambda, const Signature& eps, const Labeling& omega) {
  if (!is_valid_signature(lambda, eps) || static_cast<int>(omega.size()) != lambda.length()) return false;
  std::vector<bool> used(lambda.size() + 1, false);
  for (int i = 1; i <= lambda.length(); ++i) {
    if (static_cast<int>(omega[i - 1].size()) != lambda[i]) return false;
    for (int v : omega[i - 1]) {
      if (v < 1 || v > lambda.size() || used[v]) return false;
      used[v] = true;
    }
  }
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[i]; ++j) {
      int here = omega[i - 1][j - 1];
      if (lambda.contains(i + 1, j) && (here > omega[i][j - 1]) != (eps.e[i - 1] == 1)) return false;
      if (lambda.contains(i, j + 1) && (here > omega[i - 1][j]) != (eps.f[j - 1] == 1)) return false;
    }
  return true;
}

std::vector<Tableau> epsilon_tableaux(const Partition& lambda, const Signature& eps, int N) {
  if (!is_valid_signature(lambda, eps)) throw std::invalid_argument("signature does not match the partition");
  std::vector<int> upper(lambda.length(), N + 1);
  return list_fillings(lambda, upper, eps.e, eps.f);
}

mpz_class epsilon_partition_count(const Partition& lambda, const Signature& eps, int N) {
  if (!is_valid_signature(lambda, eps)) throw std::invalid_argument("signature does not match the partition");
  if (N < 0) return 0;
  std::vector<int> upper(lambda.length(), N + 1);
  return count_fillings(lambda, upper, eps.e, eps.f);
}

bool is_epsilon_tableau(const Tableau& t, const Signature& eps, int N) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      int v = t[i][j];
      if (v < 1 || v > N + 1) return false;
      if (j + 1 < t[i].size() && t[i][j + 1] < v + eps.f.at(j)) return false;
      if (i + 1 < t.size() && j < t[i + 1].size() && t[i + 1][j] < v + eps.e.at(i)) return false;
    }
  return true;
}

Tableau str_map(const Tableau& t, const Signature& eps) {
  Tableau out = t;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      if (j + 1 < t[i].size() && t[i][j + 1] < t[i][j] + eps.f.at(j)) throw std::invalid_argument("row violates the signature");
      if (i + 1 < t.size() && j < t[i + 1].size() && t[i + 1][j] < t[i][j] + eps.e.at(i))
        throw std::invalid_argument("column violates the signature");
      out[i][j] = t[i][j] - eps.F(static_cast<int>(j) + 1) + eps.Ebar(static_cast<int>(i) + 1);
    }
  return out;
}

Tableau str_inverse(const Tableau& u, const Signature& eps) {
  Tableau out = u;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u[i].size(); ++j)
      out[i][j] = u[i][j] + eps.F(static_cast<int>(j) + 1) - eps.Ebar(static_cast<int>(i) + 1);
  return out;
}

int omega_descents(const Tableau& t, const Labeling& omega) {
  auto where = cells_by_entry(t);
  int d = 0;
  for (std::size_t k = 1; k + 1 < where.size(); ++k) {
    auto [r1, c1] = where[k];
    auto [r2, c2] = where[k + 1];
    if (omega.at(r1 - 1).at(c1 - 1) > omega.at(r2 - 1).at(c2 - 1)) ++d;
  }
  return d;
}

std::vector<mpz_class> omega_descent_distribution(const Partition& lambda, const Labeling& omega) {
  std::vector<mpz_class> dist(std::max(1, lambda.size()), 0);
  for (const auto& t : standard_tableaux(lambda)) ++dist[omega_descents(t, omega)];
  return dist;
}

mpz_class syt_with_descent_count(const Partition& lambda, const Labeling& omega, int d) {
  auto dist = omega_descent_distribution(lambda, omega);
  return d >= 0 && d < static_cast<int>(dist.size()) ? dist[d] : mpz_class(0);
}

mpz_class aw_vexillary(const Permutation& w) {
  const int n = w.size();
  if (n < 2 || length(w) != n - 1) throw std::invalid_argument("aw needs l(w) = n-1");
  if (!is_vexillary(w)) throw std::invalid_argument("permutation is not vexillary");
  int m = 0;
  Permutation u;
  for (const auto& b : block_factorization(w)) {
    if (b.size() > 1) {
      u = b;
      break;
    }
    ++m;
  }
  auto [eps, N] = vexillary_signature(u);
  auto lambda = shape_and_flag(u).first;
  return syt_with_descent_count(lambda, compatible_labeling(lambda, eps), m + N);
}

std::string tableau_str(const Tableau& t) {
  std::string out;
  for (const auto& row : t) {
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + std::to_string(row[j]);
    out += '\n';
  }
  return out;
}

}  // namespace permutahedral
