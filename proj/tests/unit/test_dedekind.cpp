#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "toddzeta/dedekind.hpp"
#include "toddzeta/rational.hpp"

using namespace toddzeta;
using namespace toddzeta::dedekind;
using exactmath::Int;
using exactmath::make_rat;
using exactmath::Rat;

namespace {

bool coprime(const Int& p, const Int& q) {
  Int g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return g == 1;
}

Int modular_inverse(const Int& p, const Int& q) {
  Int g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t(),
             q.get_mpz_t());
  return exactmath::mod_floor(u, q);
}

// Sawtooth-sum form of the classical Dedekind sum,
//   s(p, q) = sum_{a=1}^{q-1} ((a/q)) ((a p / q)),
// with ((x)) = x - floor(x) - 1/2 off the integers and 0 on them. Fully
// independent of the library's Bernoulli machinery.
Rat sawtooth_dedekind(const Int& p, const Int& q) {
  auto saw = [](const Rat& x) -> Rat {
    if (x.get_den() == 1) return Rat(0);
    return x - Rat(exactmath::floor_rat(x)) - make_rat(1, 2);
  };
  Rat total(0);
  for (Int a = 1; a < q; ++a)
    total += saw(Rat(a) / Rat(q)) * saw(Rat(a * p) / Rat(q));
  return total;
}

}  // namespace

TEST_SUITE("dedekind") {
  TEST_CASE("frozen values") {
    CHECK(dedekind_direct(1, 1, Int(2), Int(3)) == make_rat(1, 18));
    CHECK(dedekind_via_todd(1, 1, Int(2), Int(3)) == make_rat(1, 18));
    CHECK(f_coeff(1, 1, Int(2), Int(3)) == make_rat(7, 12));
    CHECK(f_coeff(1, 1, Int(2), Int(3), ToddMethod::ppd) == make_rat(7, 12));
    CHECK(dedekind_direct(2, 2, Int(1), Int(2)) == make_rat(5, 576));
    CHECK(classical_dedekind(Int(2), Int(5)) == 0);
    CHECK(classical_dedekind(Int(3), Int(7)) == make_rat(-1, 14));
    CHECK(classical_dedekind(Int(1), Int(3)) == make_rat(1, 18));
    for (int q = 1; q <= 12; ++q) {
      Int qq(q);
      CHECK(classical_dedekind(Int(1), qq) ==
            make_rat(Int((q - 1) * (q - 2)), Int(12 * q)));
    }
  }

  TEST_CASE("bridge correction") {
    CHECK(bridge_correction(1, 1, Int(3)) == make_rat(3, 4));
    CHECK(bridge_correction(1, 2, Int(2)) == make_rat(1, 6));
    CHECK(bridge_correction(2, 1, Int(2)) == make_rat(1, 6));
    CHECK(bridge_correction(2, 2, Int(9)) == 0);
    CHECK(bridge_correction(1, 3, Int(5)) == 0);  // B_3 = 0
  }

  TEST_CASE("bridge equals direct sum") {
    std::vector<int> qs{1, 2, 3, 5, 7, 12, 30, 61};
    for (int q : qs) {
      Int qq(q);
      for (Int p(0); p < qq; ++p) {
        if (q > 1 && (p == 0 || !coprime(p, qq))) continue;
        // trim the large-q sweeps to a few representative residues
        if (q >= 30 && p > 7 && p != q - 1) continue;
        for (int i = 1; i <= 4; ++i)
          for (int j = 1; i + j <= 6; ++j) {
            CAPTURE(q);
            CAPTURE(i);
            CAPTURE(j);
            CHECK(dedekind_via_todd(i, j, p, qq) ==
                  dedekind_direct(i, j, p, qq));
          }
      }
    }
  }

  TEST_CASE("periodicity in p") {
    Int q(14);
    for (Int p : {Int(3), Int(5), Int(9)}) {
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
          Rat base = dedekind_direct(i, j, p, q);
          CHECK(dedekind_direct(i, j, p + q, q) == base);
          CHECK(dedekind_direct(i, j, p - 3 * q, q) == base);
        }
    }
  }

  TEST_CASE("order swap inverts p") {
    // s_{i,j}(p, q) = s_{j,i}(p', q) with p p' = 1 (mod q)
    Int q(13);
    for (Int p(1); p < q; ++p) {
      Int pinv = modular_inverse(p, q);
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
          CHECK(dedekind_direct(i, j, p, q) ==
                dedekind_direct(j, i, pinv, q));
    }
  }

  TEST_CASE("classical matches sawtooth sum") {
    for (int q = 1; q <= 30; ++q) {
      Int qq(q);
      for (Int p(1); p <= qq; ++p) {
        if (!coprime(p, qq)) continue;
        CAPTURE(q);
        CHECK(classical_dedekind(p, qq) == sawtooth_dedekind(p, qq));
      }
    }
  }

  TEST_CASE("classical reciprocity") {
    for (int q = 2; q <= 40; ++q)
      for (int p = 1; p < q; ++p) {
        Int pp(p), qq(q);
        if (!coprime(pp, qq)) continue;
        Rat lhs = classical_dedekind(pp, qq) + classical_dedekind(qq, pp);
        Rat rhs = make_rat(-1, 4) +
                  (Rat(pp) / Rat(qq) + Rat(qq) / Rat(pp) +
                   Rat(1) / Rat(pp * qq)) /
                      12;
        CAPTURE(p);
        CAPTURE(q);
        CHECK(lhs == rhs);
      }
  }

  TEST_CASE("integerized table") {
    Int q(60);
    DedekindTable table(q, 4);
    CHECK(table.q() == 60);
    for (Int p : {Int(1), Int(7), Int(49), Int(-11), Int(77)}) {
      for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
          CAPTURE(i);
          CAPTURE(j);
          CHECK(table.sum(i, j, p) == dedekind_direct(i, j, p, q));
        }
    }
    DedekindTable one(Int(1), 2);
    CHECK(one.sum(1, 1, Int(0)) == dedekind_direct(1, 1, Int(0), Int(1)));
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(dedekind_direct(1, 1, Int(1), Int(0)), std::domain_error);
    CHECK_THROWS_AS(dedekind_direct(1, 1, Int(2), Int(4)), std::domain_error);
    CHECK_THROWS_AS(dedekind_direct(-1, 1, Int(1), Int(3)),
                    std::domain_error);
    CHECK_THROWS_AS(dedekind_via_todd(0, 1, Int(1), Int(3)),
                    std::domain_error);
    CHECK_THROWS_AS(DedekindTable(Int(0), 2), std::domain_error);
  }
}
