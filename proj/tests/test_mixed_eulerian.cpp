#include "doctest.h"
#include "oracles.hpp"
#include "permutahedral/mixed_eulerian.hpp"
#include "permutahedral/tableaux.hpp"

using namespace permutahedral;

TEST_CASE("worked values") {
  CHECK(mixed_eulerian({2, 1, 0, 0}) == 2);
  CHECK(mixed_eulerian({0, 3, 0, 0}) == 4);
  CHECK(mixed_eulerian({1, 1, 1, 0}) == 6);
  CHECK(mixed_eulerian({0, 1, 1, 1}) == 0);
}

TEST_CASE("all ones gives (n-1)!") {
  for (int n = 2; n <= 8; ++n) {
    WeakComposition c(n, 1);
    c.back() = 0;
    CHECK(mixed_eulerian(c) == factorial(n - 1));
  }
}

TEST_CASE("single nonzero entry gives Eulerian numbers") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      WeakComposition c(n, 0);
      c[k - 1] = n - 1;
      CHECK(mixed_eulerian(c) == oracle::eulerian(n - 1, k - 1));
      CHECK(eulerian_number_tally(n - 1, k - 1) == oracle::eulerian(n - 1, k - 1));
    }
}

TEST_CASE("coin-move system agrees, values are bounded") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& c : weak_compositions(n)) {
      if (c.back() != 0) {
        CHECK(mixed_eulerian(c) == 0);
        continue;
      }
      mpz_class a = mixed_eulerian(c);
      CHECK(a == mixed_eulerian_petrov(c));
      CHECK(a > 0);
      CHECK(a <= factorial(n - 1));
    }
}

TEST_CASE("cyclic class sums to one") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& c : weak_compositions(n)) CHECK(cyclic_class_sum(c) == 1);
}

TEST_CASE("weak compositions count") {
  // Compositions of n-1 into n weak parts.
  for (int n = 1; n <= 7; ++n) CHECK(static_cast<long>(weak_compositions(n).size()) == oracle::choose(2 * n - 2, n - 1));
}

TEST_CASE("connected generating function") {
  CHECK(connected_gf({1}) == std::vector<mpz_class>{1});
  for (const auto& a : std::vector<std::vector<int>>{{2}, {1, 1}, {3, 1}, {1, 2, 1}, {2, 2, 1, 1}}) {
    auto gf = connected_gf(a);
    while (!gf.empty() && gf.back() == 0) gf.pop_back();
    CHECK(gf == connected_gf_series(a));
  }
}

TEST_CASE("Grassmannian values through hook lengths") {
  // For w Grassmannian with descent m and shape lambda, A_c = |SYT(lambda, m-1)| * prod hooks,
  // with c_i the number of cells of content i - m.
  for (int n = 2; n <= 6; ++n)
    for (const auto& w : s_prime(n)) {
      if (!is_grassmannian(w)) continue;
      const int m = descents(w).front();
      auto [lambda, phi] = shape_and_flag(w);
      WeakComposition c(n, 0);
      mpz_class hooks = 1;
      for (int r = 1; r <= lambda.length(); ++r)
        for (int col = 1; col <= lambda[r]; ++col) {
          int i = col - r + m;
          REQUIRE(i >= 1);
          REQUIRE(i <= n);
          ++c[i - 1];
          int arm = lambda[r] - col, leg = 0;
          while (lambda.contains(r + leg + 1, col)) ++leg;
          hooks *= arm + leg + 1;
        }
      long syt = 0;
      for (const auto& t : standard_tableaux(lambda)) syt += syt_descents(t) == m - 1;
      CHECK(mixed_eulerian(c) == syt * hooks);
    }
}
