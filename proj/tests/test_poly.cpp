#include "doctest.h"
#include "oracles.hpp"
#include "permutahedral/pipedreams.hpp"
#include "permutahedral/poly.hpp"

using namespace permutahedral;

namespace {

std::map<std::vector<int>, long> as_map(const SparsePoly& p) {
  std::map<std::vector<int>, long> out;
  for (const auto& [e, c] : p.terms()) {
    REQUIRE(c.get_den() == 1);
    out[e] = c.get_num().get_si();
  }
  return out;
}

}  // namespace

TEST_CASE("sparse polynomial arithmetic") {
  SparsePoly x1 = SparsePoly::variable(3, 1), x2 = SparsePoly::variable(3, 2);
  SparsePoly s = x1 + x2;
  CHECK((s * s).str() == "x1^2 + 2*x1*x2 + x2^2");
  CHECK((s - s).is_zero());
  CHECK((s * s).degree() == 2);
  CHECK((x1 * mpq_class(1, 2) - x2).str() == "1/2*x1 - x2");
  CHECK(SparsePoly(3).str() == "0");
  CHECK(s.swap_variables(2) == x1 + SparsePoly::variable(3, 3));
  std::vector<mpq_class> pt{2, 3, 5};
  CHECK((s * s).evaluate(pt) == 25);
}

TEST_CASE("exact division by x_i - x_j") {
  SparsePoly x1 = SparsePoly::variable(2, 1), x2 = SparsePoly::variable(2, 2);
  SparsePoly f = x1 * x1 - x2 * x2;
  CHECK(divide_by_difference(f, 1, 2) == x1 + x2);
  CHECK_THROWS_AS(divide_by_difference(x1, 1, 2), std::logic_error);
  CHECK(divided_difference(1, x1) == SparsePoly::constant(2, 1));
}

TEST_CASE("Schubert polynomials against compatible sequences") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : oracle::perms(n)) CHECK(as_map(schubert(Permutation(a))) == oracle::schubert_bjs(a));
  CHECK(schubert(Permutation::parse("132")).str() == "x1 + x2");
  CHECK(schubert(Permutation::parse("312")).str() == "x1^2");
}

TEST_CASE("principal specialization and Macdonald's identity") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : oracle::perms(n)) {
      if (n == 6 && oracle::inversions(a) > 6) continue;
      Permutation w(a);
      long at_ones = 0;
      if (n <= 5)
        for (const auto& [e, c] : oracle::schubert_bjs(a)) at_ones += c;
      else at_ones = schubert(w).evaluate(std::vector<mpq_class>(6, 1)).get_num().get_si();
      CHECK(principal_specialization(w) == at_ones);
      // Macdonald: sum over Red(w) of prod i_k equals l(w)! nu_w.
      CHECK(macdonald_sum(w) == factorial(length(w)) * at_ones);
    }
}

TEST_CASE("nu_shifted is nu of 1^m x u") {
  for (const auto& a : oracle::perms(4)) {
    Permutation u(a);
    for (int m = 0; m <= 3; ++m) CHECK(nu_shifted(u, m) == principal_specialization(shift_embed(u, m)));
  }
}

TEST_CASE("divided symmetrization: generic route equals monomial formula") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& w : s_prime(n)) {
      SparsePoly f = schubert(w, n);
      SparsePoly d = divided_symmetrization(f, n);
      REQUIRE(d.is_constant());
      CHECK(d.coefficient(Exponent(n, 0)) == ds_scalar(f, n));
    }
  WeakComposition top{2, 0, 0};
  CHECK(ds_monomial(top) == 1);
  // y-powers: <y_1 y_2> in 3 variables is the mixed Eulerian A_{110}.
  CHECK(ds_scalar(y_power({1, 1, 0}), 3) == 2);
}
