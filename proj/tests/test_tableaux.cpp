#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "permutahedral/aw.hpp"
#include "permutahedral/poly.hpp"
#include "permutahedral/tableaux.hpp"

using namespace permutahedral;

namespace {

std::vector<std::vector<int>> partitions(int n, int cap) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int p = std::min(n, cap); p >= 1; --p)
    for (auto rest : partitions(n - p, p)) {
      rest.insert(rest.begin(), p);
      out.push_back(rest);
    }
  return out;
}

}  // namespace

TEST_CASE("partition basics") {
  Partition l = Partition::parse("4,2,2,1");
  CHECK(l.size() == 9);
  CHECK(l.conjugate() == Partition({4, 3, 1, 1}));
  CHECK(l.hook(1, 1) == 7);
  CHECK(l.str() == "4,2,2,1");
  CHECK(l.blocks() == std::vector<std::pair<int, int>>{{4, 1}, {2, 2}, {1, 1}});
  CHECK(l.block_ends() == std::vector<int>{1, 3, 4});
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({2, 0}));
}

TEST_CASE("standard tableaux and hook lengths") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : partitions(n, n)) {
      Partition l(p);
      long expected = oracle::syt_count(p);
      CHECK(hook_length_count(l) == expected);
      CHECK(static_cast<long>(standard_tableaux(l).size()) == expected);
    }
}

TEST_CASE("flagged tableaux against the flagged Jacobi-Trudi determinant") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : partitions(n, n)) {
      const int r = static_cast<int>(p.size());
      // Every weakly increasing flag with entries in [1, r + 2].
      std::vector<int> b(r, 1);
      while (true) {
        CHECK(flagged_ssyt_count(Partition(p), b) == oracle::flagged_jacobi_trudi(p, b));
        int i = r - 1;
        while (i >= 0 && b[i] == r + 2) --i;
        if (i < 0) break;
        ++b[i];
        for (int j = i + 1; j < r; ++j) b[j] = b[i];
      }
    }
}

TEST_CASE("shape and flag of a vexillary permutation") {
  auto [lambda, phi] = shape_and_flag(Permutation::parse("812697354"));
  CHECK(lambda == Partition({7, 4, 3, 3, 1}));
  CHECK(phi == Flag{1, 5, 6, 6, 8});
}

TEST_CASE("flagged count is nu_w for vexillary w") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : oracle::perms(n)) {
      Permutation w(a);
      if (oracle::contains(a, {2, 1, 4, 3}) || length(w) == 0) continue;
      auto [lambda, phi] = shape_and_flag(w);
      CHECK(flagged_ssyt_count(lambda, phi) == principal_specialization(w));
      CHECK(satisfies_vexillary_inequalities(lambda, phi));
    }
}

TEST_CASE("deterministic signature and labeling") {
  auto [eps, N] = vexillary_signature(Permutation::parse("346215"));
  CHECK(eps.e == std::vector<int>{1, 1, 1});
  CHECK(eps.f == std::vector<int>{1, 0});
  CHECK(N == 3);
  CHECK_THROWS(vexillary_signature(Permutation::parse("2143")));
  CHECK_THROWS(vexillary_signature(Permutation::parse("1324")));

  Partition l({3, 2, 2, 1});
  Signature s{{1, 1, 0}, {0, 0}};
  Labeling omega = compatible_labeling(l, s);
  CHECK(omega == Labeling{{5, 6, 7}, {3, 4}, {1, 2}, {8}});
  CHECK(is_compatible(l, s, omega));
}

TEST_CASE("Str is a bijection onto flagged tableaux") {
  Partition l({3, 2, 1});
  for (unsigned mask = 0; mask < 16; ++mask) {
    Signature s{{int(mask & 1), int(mask >> 1 & 1)}, {int(mask >> 2 & 1), int(mask >> 3 & 1)}};
    const int N = n_min(l, s);
    CHECK(epsilon_partition_count(l, s, N - 1) == 0);
    auto source = epsilon_tableaux(l, s, N + 1);
    std::set<Tableau> image;
    for (const auto& t : source) {
      CHECK(is_epsilon_tableau(t, s, N + 1));
      Tableau u = str_map(t, s);
      CHECK(str_inverse(u, s) == t);
      image.insert(u);
    }
    auto target = flagged_ssyt(l, flag_from_signature(l, s, N + 1));
    CHECK(image == std::set<Tableau>(target.begin(), target.end()));
  }
}

TEST_CASE("a_w from SYT descents") {
  CHECK(aw_vexillary(Permutation::parse("346215789")) == 3);
  CHECK(aw_vexillary(Permutation::parse("351246")) == 2);
  CHECK(aw_vexillary(Permutation::parse("146235")) == 3);
  for (int n = 2; n <= 6; ++n)
    for (const auto& w : s_prime(n))
      if (is_vexillary(w)) CHECK(aw_vexillary(w) == aw_mixed(w));
}

TEST_CASE("SYT descent distribution sums to the SYT count") {
  Partition l({3, 2, 2, 1});
  auto omega = compatible_labeling(l, Signature{{1, 1, 0}, {0, 0}});
  mpz_class total = 0;
  for (const auto& x : omega_descent_distribution(l, omega)) total += x;
  CHECK(total == oracle::syt_count({3, 2, 2, 1}));
}
