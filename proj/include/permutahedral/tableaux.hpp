#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "permutahedral/perm.hpp"

namespace permutahedral {

/// Integer partition with strictly positive, weakly decreasing parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  /// "3,2,2,1".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  /// lambda_i for 1-based i; 0 past the last part.
  int operator[](int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  bool contains(int row, int col) const { return col >= 1 && col <= (*this)[row]; }

  Partition conjugate() const;
  int hook(int row, int col) const;
  int content(int row, int col) const { return col - row; }

  /// Distinct part sizes p_1 > ... > p_r with multiplicities m_q.
  std::vector<std::pair<int, int>> blocks() const;
  /// M_q = m_1 + ... + m_q, q = 1..r.
  std::vector<int> block_ends() const;

  std::string str() const;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Row bounds, one per part, weakly increasing.
using Flag = std::vector<int>;

/// Filling of a Young diagram, row by row (English notation).
using Tableau = std::vector<std::vector<int>>;

/// Bijection from cells to 1..|lambda|, stored like a tableau.
using Labeling = Tableau;

/// e_i = 1 forces a strict increase from row i to row i+1, f_j = 1 from column j to j+1.
struct Signature {
  std::vector<int> e;
  std::vector<int> f;

  /// E_i = e_1 + ... + e_{i-1}.
  int E(int i) const;
  /// F_j = f_1 + ... + f_{j-1}.
  int F(int j) const;
  int Ebar(int i) const { return i - 1 - E(i); }
  int Fbar(int j) const { return j - 1 - F(j); }

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// (lambda(w), phi(w)) read off the code.
std::pair<Partition, Flag> shape_and_flag(const Permutation& w);

/// phi_q >= M_q and 0 <= phi_{q+1} - phi_q <= m_{q+1} + p_q - p_{q+1}.
bool satisfies_vexillary_inequalities(const Partition& lambda, const Flag& phi);

/// One entry per block of lambda: phi_q.
std::vector<int> flag_block_values(const Partition& lambda, const Flag& phi);

/// |SSYT(lambda; b)|: row-by-row count, each row enumerated by backtracking.
mpz_class flagged_ssyt_count(const Partition& lambda, const Flag& b);
std::vector<Tableau> flagged_ssyt(const Partition& lambda, const Flag& b);

std::vector<Tableau> standard_tableaux(const Partition& lambda);
mpz_class hook_length_count(const Partition& lambda);
/// Number of i such that i+1 sits in a strictly lower row than i.
int syt_descents(const Tableau& t);

/// Signature with Sum (1 - e_i) + Sum f_j = phi_{q+1} - phi_q on each block gap,
/// columns filled before rows, lowest indices first; other e are 1, other f are 0.
/// Throws for decomposable or non-vexillary u.
std::pair<Signature, int> vexillary_signature(const Permutation& u);

/// max_q F_{p_q} + E_{M_q}: the least N with a nonempty set of epsilon-tableaux.
int n_min(const Partition& lambda, const Signature& eps);
/// phi_q = N + 1 - F_{p_q} + Ebar_{M_q}, expanded to one entry per row.
Flag flag_from_signature(const Partition& lambda, const Signature& eps, int N);
bool is_valid_signature(const Partition& lambda, const Signature& eps);

/// Rows ordered topologically by e, columns by f (smallest index first when free);
/// cells labeled in (row rank, column rank) order.
Labeling compatible_labeling(const Partition& lambda, const Signature& eps);
bool is_compatible(const Partition& lambda, const Signature& eps, const Labeling& omega);

/// Fillings with entries in 1..N+1, weakly increasing along rows and columns,
/// strictly where e or f asks for it.
std::vector<Tableau> epsilon_tableaux(const Partition& lambda, const Signature& eps, int N);
bool is_epsilon_tableau(const Tableau& t, const Signature& eps, int N);
/// Omega(lambda, eps, N) by direct enumeration.
mpz_class epsilon_partition_count(const Partition& lambda, const Signature& eps, int N);

/// T'_{ij} = T_{ij} - F_j + Ebar_i. Rejects fillings that break the eps constraints.
Tableau str_map(const Tableau& t, const Signature& eps);
/// U_{ij} + F_j - Ebar_i.
Tableau str_inverse(const Tableau& u, const Signature& eps);

/// Number of k < |lambda| with omega(T^{-1}(k)) > omega(T^{-1}(k+1)).
int omega_descents(const Tableau& t, const Labeling& omega);
mpz_class syt_with_descent_count(const Partition& lambda, const Labeling& omega, int d);
/// Entry d counts SYT with d omega-descents.
std::vector<mpz_class> omega_descent_distribution(const Partition& lambda, const Labeling& omega);

/// a_w for vexillary w in S'_n, n = w.size(): writes w = 1^m x u x 1^j and counts
/// SYT(lambda(u)) with m + N_u omega_u-descents.
mpz_class aw_vexillary(const Permutation& w);

std::string tableau_str(const Tableau& t);

}  // namespace permutahedral
