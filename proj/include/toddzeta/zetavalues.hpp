#pragma once

#include "toddzeta/bseq.hpp"
#include "toddzeta/cone2d.hpp"
#include "toddzeta/dedekind.hpp"
#include "toddzeta/quadfield.hpp"
#include "toddzeta/quadform.hpp"
#include "toddzeta/toddseries.hpp"

namespace toddzeta::zetavalues {

using cone2d::Cone2D;
using dedekind::ToddMethod;
using exactmath::Int;
using exactmath::Rat;
using toddseries::HomoPoly;

// Zeta function of a cone tau and a quadratic form Q positive on tau:
//     zeta_{Q,tau}(s) = sum_{a in tau cap M} wt(tau, a) / Q(a)^s,
// wt = 1 in the interior, 1/2 on the boundary away from 0, 0 at 0.
// This module evaluates zeta_{Q,tau}(-n), n >= 0, exactly, by independent
// routes that must agree.

// d/dx^i d/dy^j of e^{-(a x^2 + b xy + c y^2)} at (0, 0); zero unless i + j
// is even. Primary route: Taylor extraction i! j! [x^i y^j] e^{-Q}.
Rat gaussian_partial(int i, int j, const QuadForm& q);
// Closed-form route (sum over the even lattice of pairings); must agree with
// gaussian_partial, kept as an independent cross-check.
Rat gaussian_partial_closed(int i, int j, const QuadForm& q);

// integral_0^inf [d/dx^{2n-1} e^{-(a x^2 + b xy + c y^2)}]|_{x=0} dy,
// n >= 1, requires c > 0:
//   -( (2n-1)! / (2 c^n) ) sum_{r=0}^{n-1} (-1)^r ((n-1-r)!/(r!(2n-1-2r)!))
//                                          a^r b^{2n-1-2r} c^r.
Rat gaussian_halfline(int n, const QuadForm& q);

// P(d/dx, d/dy) applied to e^{-Q} at 0.
Rat apply_to_gaussian(const HomoPoly& p, const QuadForm& q);

// Closed formula on the quadratic-field cone tau_b (both sums cyclic, i = 1..r,
// with b_r = b_0 and A-indices beyond r extended by the recursion):
//   zeta(-n) = (-1)^n n! { sum_i P_{2n+2}(dx, dy) . e^{-Q_b(x A_{i-1} + y A_i)}
//            + lambda_{2n+2} sum_i b_i R_{2n+2}(dx, dy)
//                              . e^{-Q_b(x A_{i-1} + y A_{i+1})} }.
Rat zeta_field(const BSeq& b, int n);

// zeta(0) = (1/12) sum_{i=0}^{r-1} (b_i - 3).
Rat zeta_zero(const BSeq& b);

// General route: Todd operator of the dual cone applied to the cone integral,
//   zeta(-n) = (-1)^n n! { (t_sigma)_{2n+2}(d/dh1, d/dh2)
//                          - [n==0] (q/2) d^2/dh1 dh2 } . F,
//   F(h) = integral over {m : <u_i, m> >= -h_i} of e^{-Q},
// reduced to gaussian_partial / gaussian_halfline against
// Q~(t1, t2) = Q(t1 w1 + t2 w2). Requires Q positive on tau.
Rat zeta_general(const Cone2D& tau, const QuadForm& q, int n,
                 ToddMethod method = ToddMethod::cf);

// Wrap-around defect between the cone-level Todd formula and the cyclic
// field formula; identically zero:
//   E_{2n+2}(b) = lambda_{2n+2} { -b_0 R_{2n+2}(dx,dy) . e^{-(L x^2 + M xy
//                 + N y^2)/q} - (1/q^{n+1}) integral_0^inf [((dx + p dy)^{2n+1}
//                 + (dx + p' dy)^{2n+1})|_{x=0}] e^{-Q_Theta} dy },
// L = q p' b_0 + 1 - p p', M = q b_0 Theta + 2(p p' - 1),
// N = q p b_0 + 1 - p p', Q_Theta = x^2 + Theta xy + y^2.
Rat error_term(const BSeq& b, int n);

// Exact test that Q > 0 on tau minus the origin (endpoints and interior
// minimum of the edge parametrization).
bool quadform_positive_on_cone(const QuadForm& q, const Cone2D& tau);

}  // namespace toddzeta::zetavalues
