#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "toddzeta/quadfield.hpp"
#include "toddzeta/zetavalues.hpp"

using namespace toddzeta;
using namespace toddzeta::zetavalues;
using cone2d::Vec2;
using exactmath::BiSeries;
using exactmath::factorial;
using exactmath::make_rat;
using quadfield::build_quadfield;
using quadfield::q_b_form;
using quadfield::QuadFieldData;
using quadfield::tau_cone;

namespace {

// Taylor series of e^{-Q} through an independent path (BiSeries::exp).
BiSeries exp_of_minus(const QuadForm& q, int degree) {
  BiSeries s = BiSeries::zero(degree);
  s.set_coeff(2, 0, -q.a);
  s.set_coeff(1, 1, -q.b);
  s.set_coeff(0, 2, -q.c);
  return s.exp();
}

// Series-and-integral oracle for gaussian_halfline: expand
// (d/dx)^{2n-1} e^{-(a x^2 + b x y)} |_{x=0} = sum_l f_l y^l e^{-c y^2}
// and integrate term by term with  int_0^inf y^{2s+1} e^{-c y^2} dy
// = s! / (2 c^{s+1}).  Only odd l contribute.
Rat halfline_series_oracle(int n, const QuadForm& q) {
  int top = 2 * n - 1;
  BiSeries s = BiSeries::zero(2 * top);
  s.set_coeff(2, 0, -q.a);
  s.set_coeff(1, 1, -q.b);
  BiSeries e = s.exp();
  Rat total(0);
  for (int l = 1; l <= top; l += 2) {
    Rat fl = Rat(factorial(top)) * e.coeff(top, l);
    int sdeg = (l - 1) / 2;
    total += fl * Rat(factorial(sdeg)) /
             (2 * exactmath::rat_pow(q.c, sdeg + 1));
  }
  return total;
}

std::vector<BSeq> small_b_list() {
  return {BSeq({3}),       BSeq({4}),       BSeq({5}),      BSeq({2, 3}),
          BSeq({3, 4}),    BSeq({2, 5}),    BSeq({5, 2}),   BSeq({2, 2, 3}),
          BSeq({3, 3, 4}), BSeq({2, 4, 3}), BSeq({4, 2, 5})};
}

}  // namespace

TEST_SUITE("zetavalues") {
  TEST_CASE("gaussian_partial basics") {
    QuadForm q{Rat(2), Rat(-3), Rat(5)};
    CHECK(gaussian_partial(0, 0, q) == 1);
    CHECK(gaussian_partial(1, 1, q) == 3);       // -b
    CHECK(gaussian_partial(2, 0, q) == -4);      // -2a
    CHECK(gaussian_partial(0, 2, q) == -10);     // -2c
    CHECK(gaussian_partial(2, 2, q) ==
          4 * q.a * q.c + 2 * q.b * q.b);        // 4ac + 2b^2
    CHECK(gaussian_partial(1, 0, q) == 0);
    CHECK(gaussian_partial(3, 2, q) == 0);
    CHECK_THROWS_AS(gaussian_partial(-1, 1, q), std::domain_error);
  }

  TEST_CASE("gaussian_partial three-route agreement") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 12; ++trial) {
      QuadForm q{Rat(coeff(rng)), Rat(coeff(rng)), Rat(coeff(rng))};
      BiSeries e = exp_of_minus(q, 12);
      for (int i = 0; i <= 12; ++i)
        for (int j = 0; i + j <= 12; ++j) {
          if ((i + j) % 2 != 0) continue;
          Rat primary = gaussian_partial(i, j, q);
          CHECK(primary == gaussian_partial_closed(i, j, q));
          CHECK(primary ==
                Rat(factorial(i) * factorial(j)) * e.coeff(i, j));
        }
    }
  }

  TEST_CASE("gaussian_halfline") {
    QuadForm q{Rat(1), Rat(1), Rat(1)};
    CHECK(gaussian_halfline(1, q) == make_rat(-1, 2));  // -b/(2c)
    CHECK(gaussian_halfline(2, q) == make_rat(5, 2));
    CHECK(gaussian_halfline(1, QuadForm{Rat(7), Rat(0), Rat(3)}) == 0);
    CHECK_THROWS_AS(gaussian_halfline(0, q), std::domain_error);
    CHECK_THROWS_AS(gaussian_halfline(1, QuadForm{Rat(1), Rat(1), Rat(0)}),
                    std::domain_error);
    CHECK_THROWS_AS(gaussian_halfline(1, QuadForm{Rat(1), Rat(1), Rat(-2)}),
                    std::domain_error);

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> pos(1, 4);
    for (int trial = 0; trial < 10; ++trial) {
      QuadForm f{Rat(coeff(rng)), Rat(coeff(rng)), Rat(pos(rng))};
      for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        CHECK(gaussian_halfline(n, f) == halfline_series_oracle(n, f));
      }
    }
  }

  TEST_CASE("apply_to_gaussian") {
    QuadForm q{Rat(1), Rat(1), Rat(2)};
    toddseries::HomoPoly r4 = toddseries::make_R(4);
    // X^2 - XY + Y^2 against (gp(2,0), gp(1,1), gp(0,2)) = (-2, -1, -4)
    CHECK(apply_to_gaussian(r4, q) == -5);
  }

  TEST_CASE("zeta_zero closed form") {
    CHECK(zeta_zero(BSeq({3})) == 0);
    CHECK(zeta_zero(BSeq({2, 3})) == make_rat(-1, 12));
    CHECK(zeta_zero(BSeq({5})) == make_rat(1, 6));
  }

  TEST_CASE("zeta_field at 0 equals the closed form") {
    for (const BSeq& b : small_b_list()) {
      CAPTURE(b.str());
      CHECK(zeta_field(b, 0) == zeta_zero(b));
    }
    CHECK(zeta_field(BSeq({2, 3}), 0) == make_rat(-1, 12));
  }

  TEST_CASE("zeta_field cyclic invariance") {
    for (const BSeq& b : {BSeq({2, 3}), BSeq({2, 2, 3}), BSeq({2, 3, 4})}) {
      for (int n = 0; n <= 2; ++n) {
        Rat base = zeta_field(b, n);
        for (int s = 1; s < b.r(); ++s) {
          CAPTURE(b.str());
          CAPTURE(n);
          CAPTURE(s);
          CHECK(zeta_field(b.rotated(s), n) == base);
        }
      }
    }
  }

  TEST_CASE("route equivalence field vs general") {
    for (const BSeq& b : {BSeq({3}), BSeq({2, 3}), BSeq({3, 4}),
                          BSeq({2, 2, 3})}) {
      QuadFieldData d = build_quadfield(b);
      Cone2D tau = tau_cone(d);
      QuadForm qb = q_b_form(d);
      for (int n = 0; n <= 2; ++n) {
        Rat field = zeta_field(b, n);
        CAPTURE(b.str());
        CAPTURE(n);
        CHECK(zeta_general(tau, qb, n, ToddMethod::cf) == field);
        CHECK(zeta_general(tau, qb, n, ToddMethod::ppd) == field);
      }
    }
  }

  TEST_CASE("error term vanishes") {
    for (const BSeq& b : small_b_list()) {
      for (int n = 0; n <= 3; ++n) {
        CAPTURE(b.str());
        CAPTURE(n);
        CHECK(error_term(b, n) == 0);
      }
    }
  }

  TEST_CASE("M-additivity on a subdivided quadrant") {
    QuadForm q{Rat(1), Rat(3), Rat(1)};
    Cone2D quad = cone2d::make_cone({Int(1), Int(0)}, {Int(0), Int(1)});
    Cone2D low = cone2d::make_cone({Int(1), Int(0)}, {Int(1), Int(1)});
    Cone2D high = cone2d::make_cone({Int(1), Int(1)}, {Int(0), Int(1)});
    for (int n = 0; n <= 2; ++n) {
      Rat whole = zeta_general(quad, q, n);
      Rat parts = zeta_general(low, q, n) + zeta_general(high, q, n);
      CAPTURE(n);
      CHECK(whole == parts);
    }
  }

  TEST_CASE("M-additivity on the field cone") {
    for (const BSeq& b : {BSeq({2, 3}), BSeq({3, 4})}) {
      QuadFieldData d = build_quadfield(b);
      QuadForm qb = q_b_form(d);
      Vec2 a0 = quadfield::a_vector(d, 0);
      Vec2 a1 = quadfield::a_vector(d, 1);
      Vec2 ar = quadfield::a_vector(d, b.r());
      Cone2D whole = cone2d::make_cone(a0, ar);
      Cone2D first = cone2d::make_cone(a0, a1);
      Cone2D second = cone2d::make_cone(a1, ar);
      for (int n = 0; n <= 2; ++n) {
        CAPTURE(b.str());
        CAPTURE(n);
        CHECK(zeta_general(whole, qb, n) ==
              zeta_general(first, qb, n) + zeta_general(second, qb, n));
      }
    }
  }

  TEST_CASE("positivity test") {
    Cone2D quad = cone2d::make_cone({Int(1), Int(0)}, {Int(0), Int(1)});
    CHECK(quadform_positive_on_cone(QuadForm{Rat(1), Rat(1), Rat(1)}, quad));
    CHECK(quadform_positive_on_cone(QuadForm{Rat(1), Rat(-3), Rat(3)}, quad));
    CHECK(!quadform_positive_on_cone(QuadForm{Rat(1), Rat(-3), Rat(1)},
                                     quad));
    // degenerate: zero along x = y inside the cone
    CHECK(!quadform_positive_on_cone(QuadForm{Rat(1), Rat(-2), Rat(1)},
                                     quad));
    // zero on a boundary ray
    CHECK(!quadform_positive_on_cone(QuadForm{Rat(0), Rat(1), Rat(1)}, quad));
    CHECK_THROWS_AS(
        zeta_general(quad, QuadForm{Rat(1), Rat(-3), Rat(1)}, 0),
        std::domain_error);
  }
}
