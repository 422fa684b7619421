#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "toddzeta/quadfield.hpp"

using namespace toddzeta;
using namespace toddzeta::quadfield;
using exactmath::make_rat;

TEST_SUITE("quadfield") {
  TEST_CASE("frozen data for b = (2,3)") {
    QuadFieldData d = build_quadfield(BSeq({2, 3}));
    CHECK(d.q == 3);
    CHECK(d.p == 1);
    CHECK(d.p_prime == 1);
    CHECK(d.quad.a == 3);
    CHECK(d.quad.b == -6);
    CHECK(d.quad.c == 2);
    CHECK(d.theta == 4);
    CHECK((d.epsilon == Mat2{Int(5), Int(-2), Int(3), Int(-1)}));
    CHECK(d.epsilon.det() == 1);

    CHECK((a_vector(d, -1) == Vec2{Int(1), Int(0)}));
    CHECK((a_vector(d, 0) == Vec2{Int(0), Int(1)}));
    CHECK((a_vector(d, 1) == Vec2{Int(-1), Int(2)}));
    CHECK((a_vector(d, 2) == Vec2{Int(-3), Int(5)}));
    CHECK((a_vector(d, 3) == Vec2{Int(-5), Int(8)}));
    CHECK((a_vector(d, -2) == Vec2{Int(3), Int(-1)}));

    QuadForm qb = q_b_form(d);
    CHECK((qb == QuadForm{Rat(2), Rat(6), Rat(3)}));
    CHECK(qb.eval(a_vector(d, 0)) == 3);
    CHECK(qb.eval(a_vector(d, -1)) == 2);

    CHECK((q_form_pair(d, 0, 1) == QuadForm{Rat(3), Rat(6), Rat(2)}));
    CHECK((q_form_pair(d, 2, 0) == QuadForm{Rat(3), Rat(12), Rat(3)}));
    CHECK((q_form_pair(d, 1, 3) == QuadForm{Rat(2), Rat(8), Rat(2)}));
  }

  TEST_CASE("discriminant identity") {
    for (const BSeq& b : {BSeq({3}), BSeq({2, 3}), BSeq({2, 2, 3}),
                          BSeq({4, 2, 5}), BSeq({2, 2, 2, 3})}) {
      QuadFieldData d = build_quadfield(b);
      CHECK(d.quad.disc == d.theta * d.theta - 4);
      CHECK(d.epsilon.det() == 1);
    }
  }

  TEST_CASE("unit acts by index shift") {
    for (const BSeq& b :
         {BSeq({3}), BSeq({2, 3}), BSeq({3, 4}), BSeq({2, 2, 3})}) {
      QuadFieldData d = build_quadfield(b);
      long r = b.r();
      for (long k = -3; k <= 5; ++k) {
        Vec2 lhs = cone2d::apply_row(a_vector(d, k), d.epsilon);
        Vec2 rhs = a_vector(d, k - r);
        CAPTURE(k);
        CHECK((lhs == rhs));
      }
    }
  }

  TEST_CASE("form is positive and unit-invariant on the orbit") {
    for (const BSeq& b : {BSeq({3}), BSeq({2, 3}), BSeq({2, 2, 3})}) {
      QuadFieldData d = build_quadfield(b);
      QuadForm qb = q_b_form(d);
      long r = b.r();
      for (long k = -3; k <= 5; ++k) {
        CHECK(qb.eval(a_vector(d, k)) > 0);
        CHECK(qb.eval(a_vector(d, k)) == qb.eval(a_vector(d, k - r)));
      }
    }
  }

  TEST_CASE("recursion matches continued-fraction convergents") {
    // A_k = -p_k A_{-1} + q_k A_0 with q_k / p_k = [b_0, ..., b_{k-1}]
    QuadFieldData d = build_quadfield(BSeq({2, 2, 3}));
    for (long k = 2; k <= 6; ++k) {
      Vec2 a = a_vector(d, k);
      std::vector<Int> prefix;
      for (long i = 0; i < k; ++i) prefix.push_back(d.b.at(i));
      Rat value = contfrac::ncf_eval(prefix);
      CHECK(Rat(a.y) / Rat(-a.x) == value);
    }
  }

  TEST_CASE("pair forms are integral and consistent") {
    for (const BSeq& b : {BSeq({2, 3}), BSeq({4, 2, 5}), BSeq({2, 2, 2, 3})}) {
      QuadFieldData d = build_quadfield(b);
      for (long l = -2; l <= 4; ++l)
        for (long m = -2; m <= 4; ++m) {
          if (l == m) continue;
          QuadForm f = q_form_pair(d, l, m);
          CHECK(f.a.get_den() == 1);
          CHECK(f.b.get_den() == 1);
          CHECK(f.c.get_den() == 1);
          CHECK(f.a == q_b_form(d).eval(a_vector(d, l)));
          CHECK(f.c == q_b_form(d).eval(a_vector(d, m)));
          QuadForm g = q_form_pair(d, m, l);
          CHECK((g == f.swapped()));
        }
    }
  }

  TEST_CASE("cyclic rotation shifts pair forms") {
    for (const BSeq& b : {BSeq({2, 3}), BSeq({2, 2, 3}), BSeq({3, 4})}) {
      QuadFieldData d = build_quadfield(b);
      for (int s = 1; s < b.r() + 1; ++s) {
        QuadFieldData ds = build_quadfield(b.rotated(s));
        CHECK(ds.theta == d.theta);
        for (long l = 0; l <= 2; ++l)
          for (long m = l + 1; m <= 3; ++m)
            CHECK((q_form_pair(ds, l, m) == q_form_pair(d, l + s, m + s)));
      }
    }
  }

  TEST_CASE("tau cone and its type") {
    QuadFieldData d23 = build_quadfield(BSeq({2, 3}));
    Cone2D tau = tau_cone(d23);
    CHECK((tau.ray1 == Vec2{Int(0), Int(1)}));
    CHECK((tau.ray2 == Vec2{Int(-3), Int(5)}));
    ConeType t = cone_type_of_tau(d23);
    CHECK(t.p == 2);
    CHECK(t.q == 3);

    ConeType t3 = cone_type_of_tau(build_quadfield(BSeq({3})));
    CHECK(t3.p == 0);
    CHECK(t3.q == 1);

    ConeType t7 = cone_type_of_tau(build_quadfield(BSeq({2, 2, 2, 3})));
    CHECK(t7.p == 2);  // -p mod q with p = 5, q = 7
    CHECK(t7.q == 7);
  }

  TEST_CASE("quadform basics") {
    QuadForm f{Rat(2), Rat(-3), Rat(5)};
    CHECK(f.eval(Rat(1), Rat(1)) == 4);
    CHECK(f.eval(make_rat(1, 2), Rat(0)) == make_rat(1, 2));
    CHECK((f.swapped() == QuadForm{Rat(5), Rat(-3), Rat(2)}));
    QuadForm composed =
        compose_on_rays(f, Vec2{Int(1), Int(0)}, Vec2{Int(0), Int(1)});
    CHECK((composed == f));
    // composing on (v, v+w) shears the form
    QuadForm sheared =
        compose_on_rays(f, Vec2{Int(1), Int(0)}, Vec2{Int(1), Int(1)});
    CHECK(sheared.a == 2);
    CHECK(sheared.b == 2 * 2 + (-3));  // 2a + b
    CHECK(sheared.c == f.eval(Rat(1), Rat(1)));
  }
}
