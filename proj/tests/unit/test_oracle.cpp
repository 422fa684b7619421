#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "toddzeta/oracle.hpp"
#include "toddzeta/quadfield.hpp"
#include "toddzeta/toddseries.hpp"
#include "toddzeta/zetavalues.hpp"

using namespace toddzeta;
using namespace toddzeta::oracle;
using cone2d::Vec2;
using exactmath::Int;
using exactmath::Rat;

namespace {

long det2(long ax, long ay, long bx, long by) { return ax * by - ay * bx; }

// Independent evaluation of the weighted theta sum by a plain rectangular
// scan: membership in the cone <A_0, A_r> is decided with determinant signs,
// boundary rays get weight 1/2, the origin is skipped.
ZPoint box_scan(const BSeq& b, double t, double q_radius, long box) {
  quadfield::QuadFieldData d = quadfield::build_quadfield(b);
  Vec2 u = quadfield::a_vector(d, 0);
  Vec2 v = quadfield::a_vector(d, b.r());
  QuadForm qb = quadfield::q_b_form(d);
  long ux = u.x.get_si(), uy = u.y.get_si();
  long vx = v.x.get_si(), vy = v.y.get_si();
  REQUIRE(det2(ux, uy, vx, vy) > 0);
  long double value = 0;
  std::size_t points = 0;
  for (long x = -box; x <= box; ++x)
    for (long y = -box; y <= box; ++y) {
      if (x == 0 && y == 0) continue;
      long du = det2(ux, uy, x, y);
      long dv = det2(x, y, vx, vy);
      if (du < 0 || dv < 0) continue;
      Rat qv = qb.eval(Vec2{Int(x), Int(y)});
      long double qd = static_cast<long double>(exactmath::to_double(qv));
      if (qd > static_cast<long double>(q_radius)) continue;
      long double w = (du == 0 || dv == 0) ? 0.5L : 1.0L;
      value += w * std::exp(-static_cast<long double>(t) * qd);
      ++points;
    }
  ZPoint out;
  out.t = t;
  out.value = static_cast<double>(value);
  out.points = points;
  return out;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("rational closed form at the quadrant") {
    double got = s_rational_eval(Int(0), Int(1), 1.0, 1.0);
    double want = 1.0 / ((1.0 - std::exp(-1.0)) * (1.0 - std::exp(-1.0)));
    CHECK(got == doctest::Approx(want).epsilon(1e-14));
  }

  TEST_CASE("brute sum matches the rational closed form") {
    struct Case {
      long p, q;
      double x0, y0;
    };
    std::vector<Case> cases = {{0, 1, 1.0, 1.0}, {1, 2, 0.9, 1.3},
                               {2, 3, 1.1, 0.8}, {3, 5, 1.0, 1.0},
                               {5, 7, 0.8, 0.9}, {7, 12, 1.2, 1.0}};
    for (const Case& c : cases) {
      CAPTURE(c.p);
      CAPTURE(c.q);
      double brute =
          brute_cone_exp_sum(Int(c.p), Int(c.q), Int(80), c.x0, c.y0);
      // The closed form carries the 1/q multiplicity normalization that the
      // raw lattice sum does not, so the two differ by a factor of q.
      double closed =
          static_cast<double>(c.q) * s_rational_eval(Int(c.p), Int(c.q), c.x0, c.y0);
      CHECK(brute == doctest::Approx(closed).epsilon(1e-11));
    }

    // Convergence: doubling the truncation bound moves the result by less
    // than a crude tail estimate for the discarded antidiagonals.
    double at80 = brute_cone_exp_sum(Int(2), Int(3), Int(80), 0.9, 1.1);
    double at160 = brute_cone_exp_sum(Int(2), Int(3), Int(160), 0.9, 1.1);
    double tail = 160.0 * std::exp(-0.9 * 80.0);
    CHECK(std::fabs(at160 - at80) < tail);
  }

  TEST_CASE("argument swap inverts the type parameter") {
    // 3 * 5 = 15 = 1 (mod 7)
    CHECK(s_rational_eval(Int(3), Int(7), 0.9, 1.4) ==
          doctest::Approx(s_rational_eval(Int(5), Int(7), 1.4, 0.9))
              .epsilon(1e-14));
  }

  TEST_CASE("lattice-residue rederivation matches the series") {
    for (auto [p, q] : std::vector<std::pair<long, long>>{
             {0, 1}, {1, 2}, {2, 3}, {2, 5}, {3, 7}, {7, 12}}) {
      CAPTURE(p);
      CAPTURE(q);
      toddseries::ToddSeries t = toddseries::todd_ppd(Int(p), Int(q), 8);
      CHECK((todd_from_lattice_residues(Int(p), Int(q), 8) == t.series));
    }
  }

  TEST_CASE("theta sum matches an independent box scan") {
    for (const BSeq& b : {BSeq({2, 3}), BSeq({2, 2, 3})}) {
      CAPTURE(b.str());
      double t = 0.5;
      double radius = 92.3;  // non-integral: no lattice point on the edge
      ZPoint fast = z_of_t(b, t, radius);
      ZPoint slow = box_scan(b, t, radius, 200);
      CHECK(fast.points == slow.points);
      CHECK(fast.value == doctest::Approx(slow.value).epsilon(1e-12));
      CHECK(fast.tail_bound ==
            doctest::Approx(std::exp(-t * radius) * (2.0 + fast.points)));
    }
    CHECK_THROWS_AS(z_of_t(BSeq({2, 3}), 0.0, 10.0), std::domain_error);
    CHECK_THROWS_AS(z_of_t(BSeq({2, 3}), 0.5, -1.0), std::domain_error);
  }

  TEST_CASE("defaults") {
    CHECK(default_radius(0.5) == doctest::Approx(92.0));
    CHECK_THROWS_AS(default_radius(0.0), std::domain_error);
    std::vector<double> sched = default_t_schedule();
    REQUIRE(sched.size() == 14);
    CHECK(sched[0] == doctest::Approx(0.5));
    for (std::size_t k = 1; k < sched.size(); ++k)
      CHECK(sched[k] == doctest::Approx(0.7 * sched[k - 1]));
  }

  TEST_CASE("theta sum decreases in t") {
    BSeq b({2, 3});
    double prev = z_of_t(b, 0.3, 92.3).value;
    for (double t : {0.4, 0.5, 0.7, 1.0}) {
      double cur = z_of_t(b, t, 92.3).value;
      CHECK(cur < prev);
      prev = cur;
    }
  }

  TEST_CASE("fit recovers exact zeta values") {
    for (const BSeq& b : {BSeq({3}), BSeq({2, 3}), BSeq({4})}) {
      CAPTURE(b.str());
      FitResult fit = fit_zeta(b, 1);
      CHECK(fit.well_conditioned);
      CHECK(fit.residual_rms < 1e-4);
      double exact0 = exactmath::to_double(zetavalues::zeta_field(b, 0));
      CHECK(std::fabs(fit.zeta_hat(0) - exact0) < 1e-3);
      double exact1 = exactmath::to_double(zetavalues::zeta_field(b, 1));
      double err1 = std::fabs(fit.zeta_hat(1) - exact1);
      if (exact1 != 0)
        CHECK(err1 / std::fabs(exact1) < 1e-2);
      else
        CHECK(err1 < 1e-2);
    }
  }

  TEST_CASE("fit argument validation") {
    BSeq b({3});
    FitResult fit = fit_zeta(b, 1, {}, 2);
    // coefficients c_{-1} .. c_{n_max + extra_orders}
    CHECK(fit.coeff.size() == 5);
    CHECK_NOTHROW(fit.zeta_hat(3));
    CHECK_THROWS_AS(fit.zeta_hat(4), std::out_of_range);
    CHECK_THROWS_AS(fit.zeta_hat(-1), std::out_of_range);
    CHECK_THROWS_AS(fit_zeta(b, -1), std::domain_error);
    CHECK_THROWS_AS(fit_zeta(b, 0, {0.5}, 0), std::invalid_argument);
    CHECK_NOTHROW(fit_zeta(b, 0, {0.5, 0.4, 0.35}, 0));
  }
}
