#include <random>

#include "doctest.h"
#include "sbolab/covariance.hpp"
#include "sbolab/operators.hpp"

using namespace sbolab;

TEST_CASE("gegenbauer closed form matches frozen low orders") {
  auto c0 = gegenbauer(0, Rational(1, 3));
  CHECK(c0.values() == std::vector<Rational>{Rational(1)});

  Rational mu(5, 7);
  auto c2 = gegenbauer(2, mu);
  CHECK(c2.values() ==
        std::vector<Rational>{Rational(2) * mu * (mu + 1), -mu});

  auto c1 = gegenbauer(1, Rational(0));
  CHECK(c1.is_zero_family());  // C_1^0 = 0: renormalization territory
}

TEST_CASE("gegenbauer closed form vs recurrence, k <= 10") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  for (int trial = 0; trial < 20; ++trial) {
    Rational mu(num(rng), den(rng));
    for (int k = 0; k <= 10; ++k) {
      CHECK(gegenbauer(k, mu).values() == gegenbauer_recurrence(k, mu));
    }
  }
}

TEST_CASE("renormalization by the monic coefficient gcd") {
  auto k1 = renormalize(gegenbauer_symbolic(1));
  CHECK(k1.coeffs.size() == 1);
  CHECK(k1.coeffs[0] == UniPoly(Rational(2)));

  auto k2 = renormalize(gegenbauer_symbolic(2));
  // {2 mu (mu+1), -mu} / mu = {2 mu + 2, -1}
  CHECK(k2.coeffs[0] ==
        UniPoly::symbol() * Rational(2) + UniPoly(Rational(2)));
  CHECK(k2.coeffs[1] == UniPoly(Rational(-1)));

  auto k0 = renormalize(gegenbauer_symbolic(0));
  CHECK(k0.coeffs[0] == UniPoly(Rational(1)));

  GegenbauerCoeffs zero;
  zero.k = 1;
  zero.coeffs = {UniPoly()};
  CHECK_THROWS_AS(renormalize(zero), std::domain_error);
  CHECK_THROWS_AS(renormalize(gegenbauer(2, Rational(1))),
                  std::invalid_argument);
}

TEST_CASE("renormalized families are nonzero at degenerate mu") {
  for (int k = 1; k <= 6; ++k) {
    auto sym = gegenbauer_symbolic(k);
    auto ren = renormalize(sym);
    for (int num = -6; num <= 2; ++num) {
      Rational mu(num, 2);
      if (!gegenbauer(k, mu).is_zero_family()) continue;
      bool nonzero = false;
      for (const auto& v : ren.values_at(mu))
        if (!v.is_zero()) nonzero = true;
      CHECK(nonzero);
    }
  }
}

TEST_CASE("juhl operator structure") {
  int n = 4;
  SboOperator id0 = juhl_operator(0, Rational(2, 3), n);
  CHECK(id0.terms().size() == 1);
  CHECK(id0.terms()[0].deriv == Exponents(n, 0));
  CHECK(id0.terms()[0].coeff == Rational(1));

  Rational mu(5, 3);
  SboOperator d1 = juhl_operator(1, mu, n);
  CHECK(d1.terms().size() == 1);
  CHECK(d1.terms()[0].deriv == Exponents({0, 0, 0, 1}));
  CHECK(d1.terms()[0].coeff == Rational(2) * mu);

  // k=2 applied to x_n^2 gives 4 mu (mu + 1).
  SboOperator d2 = juhl_operator(2, mu, n);
  PolyForm xn2 = PolyForm::from_poly(
      Poly::monomial(n, {0, 0, 0, 2}, Rational(1)));
  PolyForm expected = PolyForm::from_poly(
      Poly::constant(n - 1, Rational(4) * mu * (mu + 1)));
  CHECK(d2.apply(xn2) == expected);
}

TEST_CASE("order-k family on 0-forms collapses to b times the scalar one") {
  for (int n : {3, 4, 5}) {
    for (int k = 0; k <= 4; ++k) {
      for (Rational lam : {Rational(1, 3), Rational(-2), Rational(7, 2)}) {
        SboOperator lhs = matrix_operator_ii(n, 0, lam, k);
        Rational b = (lam + Rational(k)) / Rational(2);
        SboOperator rhs =
            b * juhl_operator(k, lam - Rational(n - 1, 2), n);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("order-0 family is (lambda/2) times the restriction") {
  int n = 4, i = 2;
  Rational lam(3, 5);
  SboOperator T = matrix_operator_ii(n, i, lam, 0);
  for (const auto& t : T.terms()) {
    CHECK(t.from == t.to);
    CHECK(t.deriv == Exponents(n, 0));
    CHECK(t.coeff == lam / 2);
  }
  CHECK(T.terms().size() == all_multi_indices(n - 1, i).size());
}

TEST_CASE("family terms are homogeneous of order k") {
  for (int k = 0; k <= 4; ++k) {
    SboOperator T = matrix_operator_ii(4, 1, Rational(2, 5), k);
    REQUIRE(!T.is_zero());
    CHECK(T.homogeneous_order() == k);
  }
}

TEST_CASE("covariance of the constructed family, direct monomial route") {
  // The exhaustive grid runs in the acceptance suite; here one point per
  // shape through the evaluation route with real pullbacks.
  for (auto [i, k] : {std::pair{0, 2}, std::pair{1, 1}, std::pair{1, 2},
                      std::pair{2, 1}}) {
    SboOperator T = matrix_operator_ii(3, i, Rational(1, 3), k);
    REQUIRE(!T.is_zero());
    CovarianceReport rep = check_covariance(T, k + 3);
    CHECK(rep.ok);
  }
}

TEST_CASE("wrong codifferential sign breaks covariance") {
  SboOperator T = matrix_operator_ii(3, 1, Rational(1, 3), 2, +1);
  CHECK(!check_covariance_symbolic(T).ok);
}

TEST_CASE("restriction-of-d family") {
  SboOperator T = rest_d_operator(4, 1);
  CHECK(T.sig().lambda == Rational(0));
  CHECK(T.sig().nu == Rational(0));
  CHECK(check_covariance_symbolic(T).ok);

  // Vanishes on closed forms.
  PolyForm alpha = d(PolyForm::from_poly(
      Poly::monomial(4, {2, 1, 0, 1}, Rational(3))));
  CHECK(T.apply(alpha).is_zero());

  CHECK_THROWS_WITH_AS(rest_d_operator(4, 3), "not a covariant parameter",
                       std::invalid_argument);
  CHECK_NOTHROW(rest_d_operator(4, 3, /*force=*/true));
}

TEST_CASE("scalar-to-one-form family at nonpositive integer weights") {
  // lambda = 0 reduces to Rest o d.
  SboOperator T0 = d_juhl_operator(4, Rational(0));
  CHECK(T0.terms().size() == 3);
  for (const auto& t : T0.terms()) {
    CHECK(t.coeff == Rational(1));
    CHECK(total_degree(t.deriv) == 1);
  }
  for (Rational lam : {Rational(0), Rational(-1), Rational(-2)}) {
    SboOperator T = d_juhl_operator(4, lam);
    CHECK(!T.is_zero());
    CHECK(T.homogeneous_order() ==
          1 - static_cast<int>(lam.num().get_si()));
    CHECK(check_covariance_symbolic(T).ok);
  }
  CHECK_THROWS_WITH_AS(d_juhl_operator(4, Rational(1)),
                       "not a covariant parameter", std::invalid_argument);
  CHECK_THROWS_AS(d_juhl_operator(4, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("degenerate parameters yield the zero operator, renormalized "
          "family stays available") {
  // mu = lambda + i - (n-1)/2 = 0 kills every block for k >= 1.
  int n = 5, i = 2;
  Rational lam = Rational(n - 1, 2) - Rational(i);
  SboOperator T = matrix_operator_ii(n, i, lam, 2);
  CHECK(T.is_zero());
  auto ren = renormalize(gegenbauer_symbolic(2));
  bool nonzero = false;
  for (const auto& v : ren.values_at(Rational(0)))
    if (!v.is_zero()) nonzero = true;
  CHECK(nonzero);
}

TEST_CASE("hodge transfer bookkeeping and covariance") {
  SboOperator T = matrix_operator_ii(3, 1, Rational(2, 5), 2);
  SboOperator Ts = hodge_transfer(T, TransferSide::source);
  CHECK(Ts.sig().i == 2);
  CHECK(Ts.sig().lambda == Rational(2, 5) + Rational(2 * 1 - 3));
  CHECK(Ts.sig().delta == flip(T.sig().delta));
  CHECK(check_covariance_symbolic(Ts).ok);

  SboOperator Tt = hodge_transfer(T, TransferSide::target);
  CHECK(Tt.sig().j == 1);
  CHECK(Tt.sig().nu == T.sig().nu + Rational(2 * 1 - 2));
  CHECK(Tt.sig().eps == flip(T.sig().eps));
  CHECK(check_covariance_symbolic(Tt).ok);

  // Double transfer on one side is the original up to the star-squared
  // sign.
  SboOperator Tss = hodge_transfer(Ts, TransferSide::source);
  SboOperator expected = T;
  int sign = ((T.sig().i * (3 - T.sig().i)) % 2 == 1) ? -1 : 1;
  expected *= Rational(sign);
  CHECK(Tss == expected);

  SboOperator Ttt = hodge_transfer(Tt, TransferSide::target);
  SboOperator expected_t = T;
  int sign_t = ((T.sig().j * (2 - T.sig().j)) % 2 == 1) ? -1 : 1;
  expected_t *= Rational(sign_t);
  CHECK(Ttt == expected_t);
}

TEST_CASE("starred restriction-of-d lands at the dual parameter set") {
  for (int n : {3, 4, 5}) {
    for (int i = 1; i <= n - 2; ++i) {
      SboOperator T = hodge_transfer(
          hodge_transfer(rest_d_operator(n, i), TransferSide::source),
          TransferSide::target);
      int ip = n - i;
      CHECK(T.sig().i == ip);
      CHECK(T.sig().j == ip - 2);
      CHECK(T.sig().lambda == Rational(n - 2 * ip));
      CHECK(T.sig().nu == Rational(n - 2 * ip + 3));
      CHECK(T.sig().delta == Parity::odd);
      CHECK(T.sig().eps == Parity::odd);
      CHECK(!T.is_zero());
      CHECK(check_covariance_symbolic(T).ok);
    }
  }
}

TEST_CASE("serialization round trip is canonical") {
  SboOperator T = matrix_operator_ii(4, 2, Rational(-7, 3), 3);
  auto j = sbo_to_json(T);
  SboOperator back = sbo_from_json(j);
  CHECK(back == T);
  CHECK(sbo_to_json(back).dump() == j.dump());
}
