#include <stdexcept>

#include "doctest.h"
#include "toddzeta/bernoulli.hpp"

using namespace toddzeta::exactmath;

TEST_SUITE("bernoulli") {
  TEST_CASE("classical Bernoulli numbers") {
    CHECK(bernoulli_number(0) == 1);
    CHECK(bernoulli_number(1) == make_rat(-1, 2));
    CHECK(bernoulli_number(2) == make_rat(1, 6));
    CHECK(bernoulli_number(3) == 0);
    CHECK(bernoulli_number(4) == make_rat(-1, 30));
    CHECK(bernoulli_number(6) == make_rat(1, 42));
    CHECK(bernoulli_number(8) == make_rat(-1, 30));
    CHECK(bernoulli_number(10) == make_rat(5, 66));
    CHECK(bernoulli_number(12) == make_rat(-691, 2730));
    for (int m = 3; m <= 21; m += 2) CHECK(bernoulli_number(m) == 0);
  }

  TEST_CASE("defining recurrence") {
    // sum_{k=0}^{m} C(m+1, k) B_k == 0 for m >= 1.
    for (int m = 1; m <= 20; ++m) {
      Rat acc(0);
      for (int k = 0; k <= m; ++k)
        acc += Rat(binomial(static_cast<unsigned long>(m) + 1,
                            static_cast<unsigned long>(k))) *
               bernoulli_number(k);
      CHECK(acc == 0);
    }
  }

  TEST_CASE("lambda coefficients") {
    CHECK(lambda_coeff(0) == 1);
    CHECK(lambda_coeff(1) == make_rat(1, 2));
    CHECK(lambda_coeff(2) == make_rat(1, 12));
    CHECK(lambda_coeff(3) == 0);
    CHECK(lambda_coeff(4) == make_rat(-1, 720));
    CHECK(lambda_coeff(5) == 0);
    CHECK(lambda_coeff(6) == make_rat(1, 30240));
    CHECK(lambda_coeff(8) == make_rat(-1, 1209600));
  }

  TEST_CASE("polynomial coefficients and evaluation") {
    std::vector<Rat> b2 = bernoulli_poly(2);
    REQUIRE(b2.size() == 3);
    CHECK(b2[0] == make_rat(1, 6));
    CHECK(b2[1] == Rat(-1));
    CHECK(b2[2] == Rat(1));
    CHECK(bernoulli_poly_at(2, make_rat(1, 2)) == make_rat(-1, 12));
    CHECK(bernoulli_poly_at(3, make_rat(1, 4)) == make_rat(3, 64));
    CHECK(bernoulli_poly_at(0, Rat(9)) == 1);
    // Ber_m(0) == B_m, Ber_m(1) == B_m except for m == 1.
    for (int m = 0; m <= 12; ++m) {
      CHECK(bernoulli_poly_at(m, Rat(0)) == bernoulli_number(m));
      Rat at_one = bernoulli_poly_at(m, Rat(1));
      if (m == 1)
        CHECK(at_one == make_rat(1, 2));
      else
        CHECK(at_one == bernoulli_number(m));
    }
  }

  TEST_CASE("difference identity") {
    // Ber_m(x + 1) - Ber_m(x) == m x^{m-1}.
    for (int m = 1; m <= 10; ++m) {
      Rat x = make_rat(2, 5);
      Rat diff = bernoulli_poly_at(m, x + 1) - bernoulli_poly_at(m, x);
      CHECK(diff == Rat(m) * rat_pow(x, m - 1));
    }
  }

  TEST_CASE("ber_hat") {
    CHECK(ber_hat(1, Rat(1)) == 0);
    CHECK(ber_hat(2, Rat(1)) == make_rat(1, 6));
    CHECK(ber_hat(0, make_rat(1, 3)) == 1);
    CHECK(ber_hat(1, make_rat(1, 3)) == make_rat(-1, 6));
    CHECK(ber_hat(2, make_rat(1, 2)) == make_rat(-1, 12));
    CHECK_THROWS_AS(ber_hat(2, Rat(0)), std::domain_error);
    CHECK_THROWS_AS(ber_hat(2, make_rat(3, 2)), std::domain_error);
    CHECK_THROWS_AS(ber_hat(2, Rat(-1)), std::domain_error);
  }

  TEST_CASE("standalone table matches free functions") {
    BernoulliTable table(4);
    CHECK(table.number(14) == bernoulli_number(14));
    CHECK(table.lambda(10) == lambda_coeff(10));
    CHECK(table.poly(5) == bernoulli_poly(5));
    CHECK(table.poly_at(7, make_rat(2, 7)) ==
          bernoulli_poly_at(7, make_rat(2, 7)));
    CHECK_THROWS_AS(table.number(-1), std::domain_error);
  }
}
