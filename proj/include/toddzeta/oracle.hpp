#pragma once

#include <cstddef>
#include <vector>

#include "toddzeta/biseries.hpp"
#include "toddzeta/bseq.hpp"
#include "toddzeta/rational.hpp"

namespace toddzeta::oracle {

using exactmath::BiSeries;
using exactmath::Int;

// Floating-point cross-checks. Nothing in this module feeds back into the
// exact routines; it only corroborates them.

// Theta-like weighted lattice sum Z(t) = sum wt(tau_b, a) e^{-t Q_b(a)} over
// tau_b cap M_b, truncated to Q_b(a) <= q_radius. As t -> 0+,
// Z(t) ~ c_{-1}/t + c_0 + c_1 t + ... with zeta(-n) = (-1)^n n! c_n.
struct ZPoint {
  double t = 0.0;
  double value = 0.0;
  double tail_bound = 0.0;  // crude geometric-tail estimate
  std::size_t points = 0;   // lattice points inside the radius
};

ZPoint z_of_t(const BSeq& b, double t, double q_radius);

// Radius making the truncation tail negligible at scale t.
double default_radius(double t);

// Default sample schedule t_k = 0.5 * 0.7^k, k = 0..7.
std::vector<double> default_t_schedule();

// Least-squares fit of Z(t) by sum_{m=-1}^{n_max+extra_orders} c_m t^m on a
// t-schedule; zeta_hat(n) = (-1)^n n! c_n estimates zeta(-n).
struct FitResult {
  std::vector<double> t;
  std::vector<double> z;
  std::vector<double> coeff;  // c_{-1}, c_0, c_1, ...
  double residual_rms = 0.0;
  bool well_conditioned = true;
  double zeta_hat(int n) const;
};

FitResult fit_zeta(const BSeq& b, int n_max,
                   std::vector<double> t_schedule = {}, int extra_orders = 2);

// Brute-force numeric evaluation of the dual-cone exponential sum
//   s_sigma(x0, y0) = sum_{m in dual cone cap M} e^{-<m,rho1> x0 - <m,rho2> y0}
// for sigma = <(1,0),(p,q)>, truncated to <m,rho1> + <m,rho2> <= bound.
double brute_cone_exp_sum(const Int& p, const Int& q, const Int& pairing_bound,
                          double x0, double y0);

// The same sum from the closed rational form
//   (1/q) sum_{k=0}^{q-1} e^{-k x0 - (k p mod q) y0}
//     / ((1 - e^{-q x0})(1 - e^{-q y0})),
// for comparison with brute_cone_exp_sum.
double s_rational_eval(const Int& p, const Int& q, double x0, double y0);

// Independent exact re-derivation of the parallelepiped formula: enumerates
// the residues mu of the dual cone's semi-open fundamental parallelepiped by
// brute-force lattice scan (no closed-form residue formula) and assembles
//   (1/q) g(qx) g(qy) sum_mu e^{-<mu,rho1> x - <mu,rho2> y}.
BiSeries todd_from_lattice_residues(const Int& p, const Int& q,
                                    int max_total_degree);

}  // namespace toddzeta::oracle
