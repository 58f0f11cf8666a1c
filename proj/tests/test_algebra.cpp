#include <random>
#include <stdexcept>

#include "doctest.h"
#include "sbolab/poly_form.hpp"

using namespace sbolab;

namespace {

Poly random_poly(std::mt19937& rng, int vars, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> expo(0, max_deg);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  Poly p(vars);
  int t = nterms(rng);
  for (int s = 0; s < t; ++s) {
    Exponents e(vars);
    for (int v = 0; v < vars; ++v) e[v] = expo(rng);
    p.add_term(e, Rational(num(rng), den(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).den() == 2);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
  CHECK((Rational(5, 3) / Rational(5, 3)) == Rational(1));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(-7, 2).str() == "-7/2");
  CHECK(Rational(14, 7).str() == "2");
  CHECK(Rational::from_string("-7/2") == Rational(-7, 2));
  CHECK(Rational::from_string("42") == Rational(42));
  CHECK_THROWS_AS(Rational::from_string("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
}

TEST_CASE("multi index basics") {
  auto I = MultiIndex::from_axes({1, 3});
  CHECK(I.degree() == 2);
  CHECK(I.contains(3));
  CHECK(!I.contains(2));
  CHECK(I.axes() == std::vector<int>{1, 3});
  CHECK_THROWS_AS(MultiIndex::from_axes({3, 1}), std::invalid_argument);
  CHECK(all_multi_indices(4, 2).size() == 6);
  CHECK(all_multi_indices(5, 0).size() == 1);
}

TEST_CASE("wedge on basis forms") {
  PolyForm dx1 = PolyForm::basis(3, MultiIndex::from_axes({1}));
  PolyForm dx2 = PolyForm::basis(3, MultiIndex::from_axes({2}));
  PolyForm dx12 = PolyForm::basis(3, MultiIndex::from_axes({1, 2}));

  CHECK(wedge(dx1, dx2) == dx12);
  CHECK(wedge(dx2, dx1) == -dx12);
  CHECK(wedge(dx1, dx1).is_zero());

  PolyForm other_dim = PolyForm::basis(4, MultiIndex::from_axes({1}));
  CHECK_THROWS_WITH_AS(wedge(dx1, other_dim), "ambient mismatch",
                       std::invalid_argument);
}

TEST_CASE("wedge is graded antisymmetric on all basis pairs, m <= 6") {
  for (int m = 1; m <= 6; ++m) {
    for (int p = 0; p <= m; ++p) {
      for (int q = 0; p + q <= m; ++q) {
        for (auto A : all_multi_indices(m, p)) {
          for (auto B : all_multi_indices(m, q)) {
            PolyForm a = PolyForm::basis(m, A);
            PolyForm b = PolyForm::basis(m, B);
            PolyForm lhs = wedge(a, b);
            PolyForm rhs = wedge(b, a);
            if ((p * q) % 2 == 1) rhs *= Rational(-1);
            CHECK(lhs == rhs);
          }
        }
      }
    }
  }
}

TEST_CASE("wedge is associative on random triples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 4;
    std::uniform_int_distribution<int> deg(0, 2);
    int p = deg(rng), q = deg(rng), r = deg(rng);
    auto pick = [&](int d) {
      auto idx = all_multi_indices(m, d);
      std::uniform_int_distribution<std::size_t> which(0, idx.size() - 1);
      return PolyForm::monomial(m, idx[which(rng)], random_poly(rng, m, 2, 2));
    };
    PolyForm a = pick(p), b = pick(q), c = pick(r);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("interior multiplication") {
  int m = 4;
  PolyForm dxn = PolyForm::basis(m, MultiIndex::from_axes({4}));
  PolyForm one = PolyForm::from_poly(Poly::constant(m, Rational(1)));
  CHECK(interior(4, dxn) == one);
  CHECK(interior(4, PolyForm::basis(m, MultiIndex::from_axes({1}))).is_zero());

  PolyForm dx12 = PolyForm::basis(m, MultiIndex::from_axes({1, 2}));
  PolyForm dx1 = PolyForm::basis(m, MultiIndex::from_axes({1}));
  CHECK(interior(2, dx12) == -dx1);

  CHECK(interior(1, one).is_zero());  // degree-0 input gives the zero form
}

TEST_CASE("interior anticommutation relations, m <= 5") {
  for (int m = 2; m <= 5; ++m) {
    for (int p = 0; p <= m; ++p) {
      for (auto I : all_multi_indices(m, p)) {
        PolyForm a = PolyForm::basis(m, I);
        for (int x = 1; x <= m; ++x) {
          CHECK(interior(x, interior(x, a)).is_zero());
          for (int y = x + 1; y <= m; ++y) {
            PolyForm anti =
                interior(x, interior(y, a)) + interior(y, interior(x, a));
            CHECK(anti.is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("hodge star on basis forms") {
  PolyForm dx1_3 = PolyForm::basis(3, MultiIndex::from_axes({1}));
  CHECK(hodge_star(dx1_3) == PolyForm::basis(3, MultiIndex::from_axes({2, 3})));

  PolyForm dx1_2 = PolyForm::basis(2, MultiIndex::from_axes({1}));
  CHECK(hodge_star(hodge_star(dx1_2)) == -dx1_2);

  PolyForm one = PolyForm::from_poly(Poly::constant(4, Rational(1)));
  CHECK(hodge_star(one) ==
        PolyForm::basis(4, MultiIndex::from_axes({1, 2, 3, 4})));

  // Reversed orientation flips the sign once.
  CHECK(hodge_star(dx1_3, -1) ==
        -PolyForm::basis(3, MultiIndex::from_axes({2, 3})));
}

TEST_CASE("hodge star squares to (-1)^{j(m-j)}, m <= 6") {
  std::mt19937 rng(11);
  for (int m = 1; m <= 6; ++m) {
    for (int j = 0; j <= m; ++j) {
      for (auto I : all_multi_indices(m, j)) {
        PolyForm a = PolyForm::monomial(m, I, random_poly(rng, m, 2, 2));
        PolyForm twice = hodge_star(hodge_star(a));
        PolyForm expected = a;
        if ((j * (m - j)) % 2 == 1) expected *= Rational(-1);
        CHECK(twice == expected);
      }
    }
  }
}

TEST_CASE("poly arithmetic is a commutative ring on random triples") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    int vars = 1 + trial % 4;
    Poly a = random_poly(rng, vars, 3, 4);
    Poly b = random_poly(rng, vars, 3, 4);
    Poly c = random_poly(rng, vars, 3, 4);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("poly stores no zero coefficients") {
  Poly p(2);
  p.add_term({1, 0}, Rational(1, 2));
  p.add_term({1, 0}, Rational(-1, 2));
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  CHECK(p.degree() == -1);
}

TEST_CASE("textual dump format") {
  Poly f = Poly::monomial(3, {2, 0, 1}, Rational(3, 2));
  PolyForm a = PolyForm::monomial(3, MultiIndex::from_axes({1, 3}), f);
  CHECK(a.str() == "(3/2*x1^2*x3)  dx_{1,3}");
}
