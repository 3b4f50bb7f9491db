#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "permutahedral/pipedreams.hpp"
#include "permutahedral/poly.hpp"

using namespace permutahedral;

TEST_CASE("bottom pipe dream has weight code(w)") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : oracle::perms(n)) {
      Permutation w(a);
      PipeDream b = bottom_pipe_dream(w);
      CHECK(row_weight(b, n) == oracle::code(a));
      CHECK(trace_permutation(b) == w);
      CHECK(is_reduced(b));
    }
}

TEST_CASE("ladder moves enumerate every reduced pipe dream") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : oracle::perms(n)) {
      Permutation w(a);
      auto dreams = enumerate_pipe_dreams(w);
      CHECK(std::set<PipeDream>(dreams.begin(), dreams.end()).size() == dreams.size());
      std::map<std::vector<int>, long> poly;
      for (const auto& d : dreams) {
        CHECK(trace_permutation(d) == w);
        CHECK(is_reduced(d));
        for (const auto& [r, c] : d.crosses) CHECK(r + c <= n);
        ++poly[row_weight(d, n)];
      }
      CHECK(poly == oracle::schubert_bjs(a));
      CHECK(mpz_class(static_cast<long>(dreams.size())) == principal_specialization(w));
    }
}

TEST_CASE("transpose maps PD(w) onto PD(w^-1)") {
  for (const auto& a : oracle::perms(5)) {
    Permutation w(a);
    std::set<PipeDream> t;
    for (const auto& d : enumerate_pipe_dreams(w)) t.insert(transpose(d));
    auto inv = enumerate_pipe_dreams(w.inverse());
    CHECK(t == std::set<PipeDream>(inv.begin(), inv.end()));
  }
}

TEST_CASE("Coxeter pipe dreams have one cross per antidiagonal") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& w : s_prime(n)) {
      if (!is_coxeter(w)) continue;
      WeakComposition one_each(n, 1);
      one_each.back() = 0;
      for (const auto& d : enumerate_pipe_dreams(w)) CHECK(antidiagonal_weight(d, n) == one_each);
    }
}

TEST_CASE("Lukasiewicz pipe dreams have Lukasiewicz row weights") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& w : s_prime(n)) {
      if (!is_lukasiewicz(w)) continue;
      for (const auto& d : enumerate_pipe_dreams(w)) CHECK(is_lukasiewicz_composition(row_weight(d, n)));
    }
}

TEST_CASE("rendering") {
  PipeDream d = bottom_pipe_dream(Permutation::parse("312"));
  CHECK(render(d, 3) == "++\n.\n");
}
